//! π-negation and Gödel transforms of nand-free formulas.

use std::fmt;

use super::Formula;
use crate::error::{Error, Result};

/// The fixed formula `π` a transform is relative to: a fresh atom or the
/// constant 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Pi {
    Zero,
    Atom(String),
}

impl Pi {
    pub fn formula(&self) -> Formula {
        match self {
            Pi::Zero => Formula::Zero,
            Pi::Atom(n) => Formula::atom(n.clone()),
        }
    }

    /// `x ⇒ π`.
    pub fn neg(&self, x: Formula) -> Formula {
        Formula::implies(x, self.formula())
    }
}

impl fmt::Display for Pi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pi::Zero => f.write_str("0"),
            Pi::Atom(n) => f.write_str(n),
        }
    }
}

impl std::str::FromStr for Pi {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "0" {
            return Ok(Pi::Zero);
        }
        if super::is_atom_name(s) {
            return Ok(Pi::Atom(s.to_string()));
        }
        Err(Error::Parse(crate::error::ParseError {
            position: 0,
            expected: vec!["0".into(), "atom".into()],
            found: format!("`{s}`"),
        }))
    }
}

fn check(f: &Formula, pi: &Pi) -> Result<()> {
    if let Some(op) = f.first_derived() {
        return Err(Error::NotDesugared(op));
    }
    if f.contains_nand() {
        return Err(Error::NandPresent);
    }
    if let Pi::Atom(n) = pi {
        if f.atoms().contains(n) {
            return Err(Error::AtomCollision(n.clone()));
        }
    }
    Ok(())
}

fn map_atoms(f: &Formula, pi: &Pi, atom: &dyn Fn(Formula) -> Formula) -> Formula {
    let r = |x: &Formula| map_atoms(x, pi, atom);
    match f {
        Formula::Atom(_) => atom(f.clone()),
        Formula::Zero => pi.formula(),
        Formula::One => Formula::One,
        Formula::Join(a, b) => Formula::join(r(a), r(b)),
        Formula::Meet(a, b) => Formula::meet(r(a), r(b)),
        Formula::Impl(a, b) => Formula::implies(r(a), r(b)),
        _ => unreachable!("checked nand-free and desugared"),
    }
}

/// Replaces each atom `σ` by `σ⇒π` and 0 by `π`.
pub fn single_pi_neg_transform(f: &Formula, pi: &Pi) -> Result<Formula> {
    check(f, pi)?;
    Ok(map_atoms(f, pi, &|a| pi.neg(a)))
}

/// Replaces each atom `σ` by `(σ⇒π)⇒π` and 0 by `π`.
pub fn double_pi_neg_transform(f: &Formula, pi: &Pi) -> Result<Formula> {
    check(f, pi)?;
    Ok(map_atoms(f, pi, &|a| pi.neg(pi.neg(a))))
}

/// Gödel transform: atoms `σ ↦ σ∨π`, `0 ↦ π`, `σ∧τ ↦ ¬¬σ^g ∧ ¬¬τ^g` with
/// π-negations, and componentwise on `∨` and `⇒`. With `π = 0` atoms are left
/// as they are rather than joined with 0.
pub fn godel_transform(f: &Formula, pi: &Pi) -> Result<Formula> {
    check(f, pi)?;
    Ok(godel(f, pi))
}

fn godel(f: &Formula, pi: &Pi) -> Formula {
    let nn = |x: Formula| pi.neg(pi.neg(x));
    match f {
        Formula::Atom(_) => match pi {
            Pi::Zero => f.clone(),
            Pi::Atom(_) => Formula::join(f.clone(), pi.formula()),
        },
        Formula::Zero => pi.formula(),
        Formula::One => Formula::One,
        Formula::Join(a, b) => Formula::join(godel(a, pi), godel(b, pi)),
        Formula::Impl(a, b) => Formula::implies(godel(a, pi), godel(b, pi)),
        Formula::Meet(a, b) => Formula::meet(nn(godel(a, pi)), nn(godel(b, pi))),
        _ => unreachable!("checked nand-free and desugared"),
    }
}
