//! Distributivity and decomposition identities relative to a partition `π`.
//!
//! Each function evaluates both sides on concrete partitions and reports
//! whether they coincide. `¬x` below is the π-negation `x⇒π` and `∂x` is
//! `x ∨ ¬x`.

use crate::error::Result;
use crate::ops::{implies_unchecked as imp, join_unchecked as join, meet_unchecked as meet};
use crate::partition::Partition;

fn same_universe(ps: &[&Partition]) -> Result<()> {
    ps.windows(2)
        .try_for_each(|w| w[0].universe().check_same(w[1].universe()))
}

fn coboundary(s: &Partition, p: &Partition) -> Partition {
    join(s, &imp(s, p))
}

/// `φ ∨ (¬σ ∧ ¬τ) = (φ ∨ ¬σ) ∧ (φ ∨ ¬τ)`.
pub fn ore(phi: &Partition, s: &Partition, t: &Partition, p: &Partition) -> Result<bool> {
    same_universe(&[phi, s, t, p])?;
    let (ns, nt) = (imp(s, p), imp(t, p));
    Ok(join(phi, &meet(&ns, &nt)) == meet(&join(phi, &ns), &join(phi, &nt)))
}

/// With `φ' = φ ∨ π`: `φ' ∧ (¬σ ∨ ¬τ) = (φ' ∧ ¬σ) ∨ (φ' ∧ ¬τ)`.
pub fn dual_ore(phi: &Partition, s: &Partition, t: &Partition, p: &Partition) -> Result<bool> {
    same_universe(&[phi, s, t, p])?;
    let phi = join(phi, p);
    let (ns, nt) = (imp(s, p), imp(t, p));
    Ok(meet(&phi, &join(&ns, &nt)) == join(&meet(&phi, &ns), &meet(&phi, &nt)))
}

/// `∂σ ∧ ¬¬σ = σ ∨ π`.
pub fn boundary_core(s: &Partition, p: &Partition) -> Result<bool> {
    same_universe(&[s, p])?;
    let nn = imp(&imp(s, p), p);
    Ok(meet(&coboundary(s, p), &nn) == join(s, p))
}

/// `∂(σ ∨ τ) = (∂σ ∨ τ) ∧ (σ ∨ ∂τ)`.
pub fn co_leibniz(s: &Partition, t: &Partition, p: &Partition) -> Result<bool> {
    same_universe(&[s, t, p])?;
    let lhs = coboundary(&join(s, t), p);
    let rhs = meet(&join(&coboundary(s, p), t), &join(s, &coboundary(t, p)));
    Ok(lhs == rhs)
}

/// The four literal pairs `(¬¬σ or ¬σ, ¬¬τ or ¬τ)`.
fn literal_pairs(s: &Partition, t: &Partition, p: &Partition) -> [(Partition, Partition); 4] {
    let (ns, nt) = (imp(s, p), imp(t, p));
    let (nns, nnt) = (imp(&ns, p), imp(&nt, p));
    [
        (nns.clone(), nnt.clone()),
        (nns, nt.clone()),
        (ns.clone(), nnt),
        (ns, nt),
    ]
}

/// With `φ' = φ ∨ π`, `φ'` is the meet of the four joins `a ∨ b ∨ φ'`.
pub fn cnf_decomposition(phi: &Partition, s: &Partition, t: &Partition, p: &Partition) -> Result<bool> {
    same_universe(&[phi, s, t, p])?;
    let phi = join(phi, p);
    let rhs = literal_pairs(s, t, p)
        .iter()
        .map(|(a, b)| join(&join(a, b), &phi))
        .reduce(|x, y| meet(&x, &y))
        .expect("four factors");
    Ok(rhs == phi)
}

/// With `φ' = φ ∨ π`, `φ'` is the join of the four meets `a ∧ b ∧ φ'`.
pub fn dnf_decomposition(phi: &Partition, s: &Partition, t: &Partition, p: &Partition) -> Result<bool> {
    same_universe(&[phi, s, t, p])?;
    let phi = join(phi, p);
    let rhs = literal_pairs(s, t, p)
        .iter()
        .map(|(a, b)| meet(&meet(a, b), &phi))
        .reduce(|x, y| join(&x, &y))
        .expect("four terms");
    Ok(rhs == phi)
}

/// The identities by name, for table-driven checking.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Ore,
    DualOre,
    BoundaryCore,
    CoLeibniz,
    CnfDecomposition,
    DnfDecomposition,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Ore,
        Identity::DualOre,
        Identity::BoundaryCore,
        Identity::CoLeibniz,
        Identity::CnfDecomposition,
        Identity::DnfDecomposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Ore => "ore",
            Identity::DualOre => "dual-ore",
            Identity::BoundaryCore => "boundary-core",
            Identity::CoLeibniz => "co-leibniz",
            Identity::CnfDecomposition => "cnf-decomposition",
            Identity::DnfDecomposition => "dnf-decomposition",
        }
    }

    /// Number of partition arguments; `π` is always last.
    pub fn arity(self) -> usize {
        match self {
            Identity::BoundaryCore => 2,
            Identity::CoLeibniz => 3,
            _ => 4,
        }
    }

    /// # Panics
    /// If `args.len() != self.arity()`.
    pub fn holds(self, args: &[&Partition]) -> Result<bool> {
        assert_eq!(
            args.len(),
            self.arity(),
            "{} takes {} partitions",
            self.name(),
            self.arity()
        );
        match self {
            Identity::Ore => ore(args[0], args[1], args[2], args[3]),
            Identity::DualOre => dual_ore(args[0], args[1], args[2], args[3]),
            Identity::BoundaryCore => boundary_core(args[0], args[1]),
            Identity::CoLeibniz => co_leibniz(args[0], args[1], args[2]),
            Identity::CnfDecomposition => cnf_decomposition(args[0], args[1], args[2], args[3]),
            Identity::DnfDecomposition => dnf_decomposition(args[0], args[1], args[2], args[3]),
        }
    }
}
