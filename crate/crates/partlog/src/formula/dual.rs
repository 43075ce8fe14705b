//! Formulas of the dual logic of equivalence relations.

use std::fmt;

use serde_json::{json, Value};

use super::Formula;
use crate::error::{Error, Result};

/// A formula whose atoms denote `indit` relations. The primitives are meet
/// (`/\`), join (`\/`), difference (`-`) and nor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum DualFormula {
    DAtom(String),
    /// The full relation `U×U`, dual of the partition 0.
    Top,
    /// The diagonal, dual of the partition 1.
    Bottom,
    DMeet(Box<DualFormula>, Box<DualFormula>),
    DJoin(Box<DualFormula>, Box<DualFormula>),
    /// `DDiff(a, b)` is `a − b`, the closure of `a ∩ bᶜ`.
    DDiff(Box<DualFormula>, Box<DualFormula>),
    /// Closure of `(a ∪ b)ᶜ`.
    DNor(Box<DualFormula>, Box<DualFormula>),
}

use DualFormula::*;

impl DualFormula {
    pub fn atom(name: impl Into<String>) -> Self {
        DAtom(name.into())
    }

    pub fn meet(a: DualFormula, b: DualFormula) -> Self {
        DMeet(Box::new(a), Box::new(b))
    }

    pub fn join(a: DualFormula, b: DualFormula) -> Self {
        DJoin(Box::new(a), Box::new(b))
    }

    pub fn diff(a: DualFormula, b: DualFormula) -> Self {
        DDiff(Box::new(a), Box::new(b))
    }

    pub fn nor(a: DualFormula, b: DualFormula) -> Self {
        DNor(Box::new(a), Box::new(b))
    }

    pub fn op_name(&self) -> &'static str {
        match self {
            DAtom(_) => "atom",
            Top => "top",
            Bottom => "bottom",
            DMeet(..) => "meet",
            DJoin(..) => "join",
            DDiff(..) => "diff",
            DNor(..) => "nor",
        }
    }

    pub fn children(&self) -> Vec<&DualFormula> {
        match self {
            DAtom(_) | Top | Bottom => vec![],
            DMeet(a, b) | DJoin(a, b) | DDiff(a, b) | DNor(a, b) => vec![a, b],
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            DAtom(n) => json!({"op": "atom", "args": [n]}),
            _ => json!({
                "op": self.op_name(),
                "args": self.children().into_iter().map(DualFormula::to_json).collect::<Vec<_>>(),
            }),
        }
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    fn prec(&self) -> u8 {
        match self {
            DNor(..) => 1,
            DDiff(..) => 2,
            DJoin(..) => 3,
            DMeet(..) => 4,
            DAtom(_) | Top | Bottom => 5,
        }
    }
}

/// Maps a desugared formula to its dual: atoms gain `^d`, 0 and 1 swap,
/// `∧`/`∨` swap, `σ⇒π` becomes `π^d − σ^d` and `|` becomes nor.
pub fn dualize(f: &Formula) -> Result<DualFormula> {
    let d = |x: &Formula| dualize(x).map(Box::new);
    Ok(match f {
        Formula::Atom(n) => DAtom(n.clone()),
        Formula::Zero => Top,
        Formula::One => Bottom,
        Formula::Join(a, b) => DMeet(d(a)?, d(b)?),
        Formula::Meet(a, b) => DJoin(d(a)?, d(b)?),
        Formula::Impl(a, b) => DDiff(d(b)?, d(a)?),
        Formula::Nand(a, b) => DNor(d(a)?, d(b)?),
        other => return Err(Error::NotDesugared(other.op_name())),
    })
}

/// Inverse of [`dualize`].
pub fn dualize_back(d: &DualFormula) -> Formula {
    let b = |x: &DualFormula| Box::new(dualize_back(x));
    match d {
        DAtom(n) => Formula::Atom(n.clone()),
        Top => Formula::Zero,
        Bottom => Formula::One,
        DMeet(x, y) => Formula::Join(b(x), b(y)),
        DJoin(x, y) => Formula::Meet(b(x), b(y)),
        DDiff(x, y) => Formula::Impl(b(y), b(x)),
        DNor(x, y) => Formula::Nand(b(x), b(y)),
    }
}

impl fmt::Display for DualFormula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, sym, b) = match self {
            DAtom(n) => return write!(out, "{n}^d"),
            Top => return out.write_str("0^d"),
            Bottom => return out.write_str("1^d"),
            DMeet(a, b) => (a, "/\\", b),
            DJoin(a, b) => (a, "\\/", b),
            DDiff(a, b) => (a, "-", b),
            DNor(a, b) => (a, "nor", b),
        };
        let level = self.prec();
        if a.prec() < level {
            write!(out, "({a})")?;
        } else {
            write!(out, "{a}")?;
        }
        write!(out, " {sym} ")?;
        if b.prec() <= level {
            write!(out, "({b})")
        } else {
            write!(out, "{b}")
        }
    }
}

impl fmt::Debug for DualFormula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    #[test]
    fn modus_ponens_dual() {
        let f = parse("(s /\\ (s => t)) => t").unwrap();
        let (s, t) = (DualFormula::atom("s"), DualFormula::atom("t"));
        let expected = DualFormula::diff(
            t.clone(),
            DualFormula::join(s.clone(), DualFormula::diff(t.clone(), s.clone())),
        );
        let d = dualize(&f).unwrap();
        assert_eq!(d, expected);
        assert_eq!(d.to_text(), "t^d - s^d \\/ (t^d - s^d)");
        assert_eq!(dualize_back(&d), f);
    }

    #[test]
    fn primitive_partners() {
        assert_eq!(dualize(&Formula::Zero).unwrap(), Top);
        assert_eq!(dualize(&Formula::One).unwrap(), Bottom);
        let f = parse("(a \\/ b) | (a /\\ 1)").unwrap();
        let d = dualize(&f).unwrap();
        assert_eq!(d.to_text(), "a^d /\\ b^d nor a^d \\/ 1^d");
        assert_eq!(dualize_back(&d), f);
    }

    #[test]
    fn surface_forms_rejected() {
        assert!(matches!(
            dualize(&parse("~s").unwrap()),
            Err(Error::NotDesugared("not"))
        ));
    }
}
