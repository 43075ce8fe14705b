//! The partition operations and their duals on equivalence relations.
//!
//! Each primitive has a fast graph-based path. The dit-set definitions are
//! kept in [`oracle`] and debug builds assert that both paths agree.

use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::error::Result;
use crate::partition::{Partition, Universe};
use crate::relation::{from_equivalence, PairRelation, RelationKind};

/// A binary Boolean operation given by its outputs on the sign combinations
/// `(T,T)`, `(T,F)`, `(F,T)`, `(F,F)` in that order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoolOpTable {
    bits: [bool; 4],
}

impl BoolOpTable {
    pub const MEET: Self = Self::new([true, false, false, false]);
    pub const JOIN: Self = Self::new([true, true, true, false]);
    pub const IMPLIES: Self = Self::new([true, false, true, true]);
    pub const NAND: Self = Self::new([false, true, true, true]);

    pub const fn new(bits: [bool; 4]) -> Self {
        BoolOpTable { bits }
    }

    /// Reads the table from the low four bits of `code`, `(T,T)` being bit 3.
    pub const fn from_code(code: u8) -> Self {
        Self::new([code & 8 != 0, code & 4 != 0, code & 2 != 0, code & 1 != 0])
    }

    pub const fn code(self) -> u8 {
        (self.bits[0] as u8) << 3 | (self.bits[1] as u8) << 2 | (self.bits[2] as u8) << 1 | self.bits[3] as u8
    }

    pub const fn bits(self) -> [bool; 4] {
        self.bits
    }

    pub const fn eval(self, a: bool, b: bool) -> bool {
        self.bits[(!a as usize) * 2 + !b as usize]
    }

    /// All sixteen tables, by code.
    pub fn all() -> impl Iterator<Item = Self> {
        (0..16u8).map(Self::from_code)
    }

    /// `(a, b) ↦ ¬f(¬a, ¬b)`.
    pub fn de_morgan_dual(self) -> Self {
        let f = |a: bool, b: bool| !self.eval(!a, !b);
        Self::new([f(true, true), f(true, false), f(false, true), f(false, false)])
    }
}

impl fmt::Debug for BoolOpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.bits.map(u8::from);
        write!(f, "BoolOpTable({a}{b}{c}{d})")
    }
}

fn same_universe(s: &Partition, t: &Partition) -> Result<()> {
    s.universe().check_same(t.universe())
}

/// Blocks are the connected components of the pairs `(i, j)`, `i < j`, with `arc(i, j)`.
fn components(universe: &Universe, mut arc: impl FnMut(usize, usize) -> bool) -> Partition {
    let n = universe.len();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if arc(i, j) {
                uf.union(i, j);
            }
        }
    }
    Partition::from_keys(universe, (0..n).map(|i| uf.find(i)))
}

pub(crate) fn join_unchecked(s: &Partition, p: &Partition) -> Partition {
    let (a, b) = (s.rgs(), p.rgs());
    Partition::from_keys(s.universe(), a.iter().zip(b))
}

pub(crate) fn meet_unchecked(s: &Partition, p: &Partition) -> Partition {
    let n = s.universe().len();
    let mut uf = UnionFind::new(n);
    for q in [s, p] {
        let mut first = vec![usize::MAX; q.num_blocks()];
        for i in 0..n {
            let b = q.block_of(i);
            if first[b] == usize::MAX {
                first[b] = i;
            } else {
                uf.union(first[b], i);
            }
        }
    }
    Partition::from_keys(s.universe(), (0..n).map(|i| uf.find(i)))
}

/// Discretizes each block of `p` that lies inside a block of `s`.
pub(crate) fn implies_unchecked(s: &Partition, p: &Partition) -> Partition {
    let n = s.universe().len();
    let mut host = vec![None::<usize>; p.num_blocks()];
    let mut inside = vec![true; p.num_blocks()];
    for i in 0..n {
        let b = p.block_of(i);
        match host[b] {
            None => host[b] = Some(s.block_of(i)),
            Some(h) if h != s.block_of(i) => inside[b] = false,
            _ => {}
        }
    }
    Partition::from_keys(
        s.universe(),
        (0..n).map(|i| {
            let b = p.block_of(i);
            if inside[b] {
                (usize::MAX, i)
            } else {
                (b, 0)
            }
        }),
    )
}

pub(crate) fn nand_unchecked(s: &Partition, t: &Partition) -> Partition {
    components(s.universe(), |i, j| !s.same_block(i, j) && !t.same_block(i, j))
}

/// Join: the blocks are the non-empty intersections of blocks.
pub fn join(s: &Partition, p: &Partition) -> Result<Partition> {
    same_universe(s, p)?;
    let out = join_unchecked(s, p);
    debug_assert_eq!(out, oracle::join(s, p));
    Ok(out)
}

/// Meet: the interior of the intersection of the dit sets.
pub fn meet(s: &Partition, p: &Partition) -> Result<Partition> {
    same_universe(s, p)?;
    let out = meet_unchecked(s, p);
    debug_assert_eq!(out, oracle::meet(s, p));
    Ok(out)
}

/// Implication `s ⇒ p`: the interior of `dit(s)ᶜ ∪ dit(p)`.
pub fn implies(s: &Partition, p: &Partition) -> Result<Partition> {
    same_universe(s, p)?;
    let out = implies_unchecked(s, p);
    debug_assert_eq!(out, oracle::implies(s, p));
    Ok(out)
}

/// Nand `s | t`: the interior of `indit(s) ∪ indit(t)`.
pub fn nand(s: &Partition, t: &Partition) -> Result<Partition> {
    same_universe(s, t)?;
    let out = nand_unchecked(s, t);
    debug_assert_eq!(out, oracle::nand(s, t));
    Ok(out)
}

/// Components of the graph whose arcs are the pairs where `table` gives `F`
/// for the signs (distinguished or not) of the pair under `s` and `t`.
pub fn graph_op(table: BoolOpTable, s: &Partition, t: &Partition) -> Result<Partition> {
    same_universe(s, t)?;
    Ok(graph_op_unchecked(table, s, t))
}

pub(crate) fn graph_op_unchecked(table: BoolOpTable, s: &Partition, t: &Partition) -> Partition {
    components(s.universe(), |i, j| {
        !table.eval(!s.same_block(i, j), !t.same_block(i, j))
    })
}

/// `¬s = s ⇒ 0`.
pub fn neg(s: &Partition) -> Partition {
    implies_unchecked(s, &Partition::bottom(s.universe()))
}

/// `s ⇒ p`.
pub fn pi_neg(s: &Partition, p: &Partition) -> Result<Partition> {
    implies(s, p)
}

/// Relative nand: the interior of `indit(s) ∪ indit(t) ∪ dit(p)`.
pub fn pi_nand(s: &Partition, t: &Partition, p: &Partition) -> Result<Partition> {
    same_universe(s, t)?;
    same_universe(s, p)?;
    Ok(components(s.universe(), |i, j| {
        !s.same_block(i, j) && !t.same_block(i, j) && p.same_block(i, j)
    }))
}

/// The falsifying arcs of a table: pairs `(i, j)`, `i ≠ j`, where it gives `F`.
pub fn falsifying_arcs(table: BoolOpTable, s: &Partition, t: &Partition) -> Result<PairRelation> {
    same_universe(s, t)?;
    let n = s.universe().len();
    Ok(PairRelation::from_pairs(
        s.universe(),
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && !table.eval(!s.same_block(i, j), !t.same_block(i, j))),
    ))
}

/// Operations of the opposite lattice of equivalence relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DualOp {
    /// Intersection.
    Meet,
    /// Closure of the union.
    Join,
    /// `e1 − e2`: closure of `e1 ∩ e2ᶜ`.
    Diff,
    /// Closure of `(e1 ∪ e2)ᶜ`.
    Nor,
}

/// Applies a dual operation to two equivalence relations.
pub fn dual_op(op: DualOp, e1: &PairRelation, e2: &PairRelation) -> Result<PairRelation> {
    let e1 = e1.clone().with_kind(RelationKind::Equivalence)?;
    let e2 = e2.clone().with_kind(RelationKind::Equivalence)?;
    e1.universe().check_same(e2.universe())?;
    Ok(dual_op_unchecked(op, &e1, &e2))
}

pub(crate) fn dual_op_unchecked(op: DualOp, e1: &PairRelation, e2: &PairRelation) -> PairRelation {
    let r = match op {
        DualOp::Meet => e1.intersection(e2),
        DualOp::Join => e1.union(e2),
        DualOp::Diff => e1.difference(e2),
        DualOp::Nor => e1.union(e2).map(|u| u.complement()),
    }
    .expect("operands share a universe");
    r.closure()
}

/// Partition view of [`dual_op`].
pub fn dual_op_partition(op: DualOp, e1: &PairRelation, e2: &PairRelation) -> Result<Partition> {
    from_equivalence(&dual_op(op, e1, e2)?)
}

/// The dit-set definitions, evaluated literally with closure and interior.
pub mod oracle {
    use super::*;

    fn from_dits(universe: &Universe, dits: &PairRelation) -> Partition {
        from_equivalence(&dits.complement())
            .expect("interior is a partition relation")
            .relabel(universe)
            .expect("same universe")
    }

    pub fn join(s: &Partition, p: &Partition) -> Partition {
        let dits = s.dit().union(&p.dit()).unwrap();
        from_dits(s.universe(), &dits)
    }

    pub fn meet(s: &Partition, p: &Partition) -> Partition {
        let dits = s.dit().intersection(&p.dit()).unwrap().interior();
        from_dits(s.universe(), &dits)
    }

    pub fn implies(s: &Partition, p: &Partition) -> Partition {
        let dits = s.dit().complement().union(&p.dit()).unwrap().interior();
        from_dits(s.universe(), &dits)
    }

    pub fn nand(s: &Partition, t: &Partition) -> Partition {
        let dits = s.indit().union(&t.indit()).unwrap().interior();
        from_dits(s.universe(), &dits)
    }

    pub fn pi_nand(s: &Partition, t: &Partition, p: &Partition) -> Partition {
        let dits = s
            .indit()
            .union(&t.indit())
            .and_then(|r| r.union(&p.dit()))
            .unwrap()
            .interior();
        from_dits(s.universe(), &dits)
    }
}

/// Indit set of `s ⇒ p` when falsifying chains are capped at `hops` links.
pub fn implies_indit_capped(s: &Partition, p: &Partition, hops: usize) -> Result<PairRelation> {
    Ok(falsifying_arcs(BoolOpTable::IMPLIES, s, p)?.bounded_closure(hops))
}

/// Indit set of `s | t` when falsifying chains are capped at `hops` links.
pub fn nand_indit_capped(s: &Partition, t: &Partition, hops: usize) -> Result<PairRelation> {
    Ok(falsifying_arcs(BoolOpTable::NAND, s, t)?.bounded_closure(hops))
}

/// Refinement check returning an error on mismatched universes.
pub fn refines(s: &Partition, p: &Partition) -> Result<bool> {
    s.refines(p)
}
