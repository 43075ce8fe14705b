//! Binary relations on a universe and the closure space on `U×U`.

use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::partition::{Partition, Universe};

/// What a relation is known to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    Arbitrary,
    /// Reflexive, symmetric and transitive.
    Equivalence,
    /// Irreflexive, symmetric, with a transitive complement.
    PartitionRelation,
}

/// A set of ordered pairs stored as a dense boolean matrix.
///
/// Equality compares the pair sets; the kind tag is ignored.
#[derive(Clone)]
pub struct PairRelation {
    universe: Universe,
    bits: Vec<bool>,
    kind: RelationKind,
}

impl PartialEq for PairRelation {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.bits == other.bits
    }
}

impl Eq for PairRelation {}

impl PairRelation {
    pub(crate) fn from_fn(universe: &Universe, kind: RelationKind, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let n = universe.len();
        let mut bits = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                bits.push(f(i, j));
            }
        }
        PairRelation {
            universe: universe.clone(),
            bits,
            kind,
        }
    }

    pub fn empty(universe: &Universe) -> Self {
        Self::from_fn(universe, RelationKind::Arbitrary, |_, _| false)
    }

    pub fn full(universe: &Universe) -> Self {
        Self::from_fn(universe, RelationKind::Equivalence, |_, _| true)
    }

    /// The diagonal Δ.
    pub fn diagonal(universe: &Universe) -> Self {
        Self::from_fn(universe, RelationKind::Equivalence, |i, j| i == j)
    }

    /// An arbitrary relation from index pairs.
    pub fn from_pairs(universe: &Universe, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Self::empty(universe);
        let n = universe.len();
        for (i, j) in pairs {
            r.bits[i * n + j] = true;
        }
        r
    }

    /// An arbitrary relation from label pairs.
    pub fn from_label_pairs<S: AsRef<str>>(universe: &Universe, pairs: &[(S, S)]) -> Result<Self> {
        let idx = pairs
            .iter()
            .map(|(a, b)| Ok((universe.require(a.as_ref())?, universe.require(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_pairs(universe, idx))
    }

    /// Re-tags the relation after checking the invariants of `kind`.
    pub fn with_kind(mut self, kind: RelationKind) -> Result<Self> {
        match kind {
            RelationKind::Arbitrary => {}
            RelationKind::Equivalence => self.check_equivalence()?,
            RelationKind::PartitionRelation => {
                if let Some(i) = (0..self.n()).find(|&i| self.contains(i, i)) {
                    return Err(Error::NotPartitionRelation(format!(
                        "contains the diagonal pair of `{}`",
                        self.universe.label(i)
                    )));
                }
                self.complement().check_equivalence().map_err(|e| match e {
                    Error::NotEquivalence(why) => Error::NotPartitionRelation(format!("complement {why}")),
                    other => other,
                })?;
            }
        }
        self.kind = kind;
        Ok(self)
    }

    fn check_equivalence(&self) -> Result<()> {
        let n = self.n();
        let label = |i: usize| self.universe.label(i);
        if let Some(i) = (0..n).find(|&i| !self.contains(i, i)) {
            return Err(Error::NotEquivalence(format!("misses ({0},{0})", label(i))));
        }
        for i in 0..n {
            for j in 0..n {
                if self.contains(i, j) && !self.contains(j, i) {
                    return Err(Error::NotEquivalence(format!(
                        "has ({},{}) but not its mirror",
                        label(i),
                        label(j)
                    )));
                }
                for k in 0..n {
                    if self.contains(i, j) && self.contains(j, k) && !self.contains(i, k) {
                        return Err(Error::NotEquivalence(format!(
                            "has ({a},{b}) and ({b},{c}) but not ({a},{c})",
                            a = label(i),
                            b = label(j),
                            c = label(k)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn kind(&self) -> RelationKind {
        self.kind
    }

    fn n(&self) -> usize {
        self.universe.len()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n() + j]
    }

    /// Number of ordered pairs.
    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    /// The pairs in row-major (universe) order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n * n).filter(|&k| self.bits[k]).map(|k| (k / n, k % n)).collect()
    }

    pub fn complement(&self) -> Self {
        PairRelation {
            universe: self.universe.clone(),
            bits: self.bits.iter().map(|b| !b).collect(),
            kind: RelationKind::Arbitrary,
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(bool, bool) -> bool) -> Result<Self> {
        self.universe.check_same(&other.universe)?;
        Ok(PairRelation {
            universe: self.universe.clone(),
            bits: self.bits.iter().zip(&other.bits).map(|(&a, &b)| f(a, b)).collect(),
            kind: RelationKind::Arbitrary,
        })
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a && !b)
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.universe.check_same(&other.universe)?;
        Ok(self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b))
    }

    /// Connected components of the relation read as an undirected graph.
    fn components(&self) -> Vec<usize> {
        let n = self.n();
        let mut uf = UnionFind::new(n);
        for (i, j) in self.pairs() {
            uf.union(i, j);
        }
        (0..n).map(|i| uf.find(i)).collect()
    }

    /// Smallest equivalence relation containing the relation.
    pub fn closure(&self) -> Self {
        let comp = self.components();
        Self::from_fn(&self.universe, RelationKind::Equivalence, |i, j| comp[i] == comp[j])
    }

    /// Complement of the closure of the complement; always a partition relation.
    pub fn interior(&self) -> Self {
        let mut r = self.complement().closure().complement();
        r.kind = RelationKind::PartitionRelation;
        r
    }

    /// Pairs joined by a path of at most `hops` steps (diagonal included).
    pub fn bounded_closure(&self, hops: usize) -> Self {
        let n = self.n();
        let sym = Self::from_fn(&self.universe, RelationKind::Arbitrary, |i, j| {
            self.contains(i, j) || self.contains(j, i)
        });
        let mut reach = Self::diagonal(&self.universe);
        reach.kind = RelationKind::Arbitrary;
        for _ in 0..hops {
            let prev = reach.clone();
            for i in 0..n {
                for k in 0..n {
                    if prev.contains(i, k) {
                        for j in 0..n {
                            if sym.contains(k, j) {
                                reach.bits[i * n + j] = true;
                            }
                        }
                    }
                }
            }
        }
        reach
    }
}

impl fmt::Debug for PairRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = |i: usize| self.universe.label(i);
        f.debug_set()
            .entries(self.pairs().into_iter().map(|(i, j)| (l(i), l(j))))
            .finish()
    }
}

impl Serialize for PairRelation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let l = |i: usize| self.universe.label(i);
        let pairs: Vec<[&str; 2]> = self.pairs().into_iter().map(|(i, j)| [l(i), l(j)]).collect();
        let mut st = s.serialize_struct("PairRelation", 3)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("pairs", &pairs)?;
        st.serialize_field("universe", &self.universe)?;
        st.end()
    }
}

/// The partition whose blocks are the classes of an equivalence relation.
pub fn from_equivalence(r: &PairRelation) -> Result<Partition> {
    r.check_equivalence()?;
    Ok(Partition::from_keys(r.universe(), r.components()))
}
