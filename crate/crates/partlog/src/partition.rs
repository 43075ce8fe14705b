//! Finite universes and canonical set partitions.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_rational::Ratio;
use serde::de::{self, Deserialize, Deserializer};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::relation::{PairRelation, RelationKind};

/// An ordered set of at least two distinct labels.
///
/// Cloning is cheap; the labels are shared.
#[derive(Clone)]
pub struct Universe {
    inner: Arc<UniverseInner>,
}

struct UniverseInner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() < 2 {
            return Err(Error::UniverseTooSmall(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Universe {
            inner: Arc::new(UniverseInner { labels, index }),
        })
    }

    /// Labels `0`, `1`, ..., `n-1`.
    pub fn range(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()))
    }

    /// Labels `{prefix}0`, `{prefix}1`, ...
    pub fn with_prefix(prefix: &str, n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    /// Always false; universes have at least two elements.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.index.get(label).copied()
    }

    pub(crate) fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub(crate) fn check_same(&self, other: &Universe) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.labels == other.inner.labels
    }
}

impl Eq for Universe {}

impl Hash for Universe {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.labels.hash(state);
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels()).finish()
    }
}

impl Serialize for Universe {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Universe {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<String>::deserialize(d)?;
        Universe::new(labels).map_err(de::Error::custom)
    }
}

/// A partition of a [`Universe`] in restricted-growth normal form: block
/// indices are numbered in order of first appearance, so structural equality
/// is partition equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    universe: Universe,
    rgs: Vec<u32>,
    blocks: u32,
}

/// Renumbers arbitrary block keys into restricted-growth form.
pub(crate) fn canonical<K, I>(keys: I) -> (Vec<u32>, u32)
where
    K: Eq + Hash,
    I: IntoIterator<Item = K>,
{
    let mut seen = HashMap::new();
    let rgs = keys
        .into_iter()
        .map(|k| {
            let next = seen.len() as u32;
            *seen.entry(k).or_insert(next)
        })
        .collect();
    (rgs, seen.len() as u32)
}

impl Partition {
    /// Builds a partition from blocks of element labels.
    pub fn new<B, S>(universe: &Universe, blocks: &[B]) -> Result<Self>
    where
        B: AsRef<[S]>,
        S: AsRef<str>,
    {
        let idx = blocks
            .iter()
            .map(|b| {
                b.as_ref()
                    .iter()
                    .map(|l| universe.require(l.as_ref()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_index_blocks(universe, &idx)
    }

    /// Builds a partition from blocks of element indices.
    pub fn from_index_blocks<B: AsRef<[usize]>>(universe: &Universe, blocks: &[B]) -> Result<Self> {
        let n = universe.len();
        let mut owner: Vec<Option<usize>> = vec![None; n];
        for (b, block) in blocks.iter().enumerate() {
            let block = block.as_ref();
            if block.is_empty() {
                return Err(Error::EmptyBlock(b));
            }
            for &e in block {
                if e >= n {
                    return Err(Error::UnknownElement(e.to_string()));
                }
                if let Some(first) = owner[e] {
                    return Err(Error::OverlappingBlocks {
                        element: universe.label(e).to_string(),
                        first,
                        second: b,
                    });
                }
                owner[e] = Some(b);
            }
        }
        let missing: Vec<String> = owner
            .iter()
            .enumerate()
            .filter(|(_, o)| o.is_none())
            .map(|(i, _)| universe.label(i).to_string())
            .collect();
        if !missing.is_empty() {
            return Err(Error::MissingElements(missing));
        }
        Ok(Self::from_keys(universe, owner.into_iter().map(Option::unwrap)))
    }

    /// Builds a partition where two elements share a block iff their keys are equal.
    pub fn from_keys<K, I>(universe: &Universe, keys: I) -> Self
    where
        K: Eq + Hash,
        I: IntoIterator<Item = K>,
    {
        let (rgs, blocks) = canonical(keys);
        assert_eq!(rgs.len(), universe.len(), "one key per element");
        Partition {
            universe: universe.clone(),
            rgs,
            blocks,
        }
    }

    /// Parses a restricted growth string such as `[0, 0, 1]`.
    pub fn from_rgs(universe: &Universe, rgs: &[u32]) -> Result<Self> {
        if rgs.len() != universe.len() {
            return Err(Error::UniverseMismatch);
        }
        Ok(Self::from_keys(universe, rgs.iter().copied()))
    }

    /// The indiscrete partition 0 with a single block.
    pub fn bottom(universe: &Universe) -> Self {
        Self::from_keys(universe, std::iter::repeat(0u8).take(universe.len()))
    }

    /// The discrete partition 1 of singletons.
    pub fn top(universe: &Universe) -> Self {
        Self::from_keys(universe, 0..universe.len())
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn rgs(&self) -> &[u32] {
        &self.rgs
    }

    pub fn block_of(&self, element: usize) -> usize {
        self.rgs[element] as usize
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks as usize
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.rgs[i] == self.rgs[j]
    }

    pub fn is_bottom(&self) -> bool {
        self.blocks == 1
    }

    pub fn is_top(&self) -> bool {
        self.blocks as usize == self.rgs.len()
    }

    /// Blocks as element indices, in canonical order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.rgs.iter().enumerate() {
            out[b as usize].push(i);
        }
        out
    }

    /// Blocks as labels, in canonical order.
    pub fn block_labels(&self) -> Vec<Vec<String>> {
        self.blocks()
            .into_iter()
            .map(|b| b.into_iter().map(|i| self.universe.label(i).to_string()).collect())
            .collect()
    }

    /// Blocks with two or more elements, in canonical order.
    pub fn non_singleton_blocks(&self) -> Vec<Vec<usize>> {
        self.blocks().into_iter().filter(|b| b.len() > 1).collect()
    }

    pub fn singleton_count(&self) -> usize {
        self.blocks().iter().filter(|b| b.len() == 1).count()
    }

    /// Replaces every block for which `pick` returns true by singletons.
    pub fn discretize_where(&self, mut pick: impl FnMut(&[usize]) -> bool) -> Self {
        let blocks = self.blocks();
        let chosen: Vec<bool> = blocks.iter().map(|b| pick(b)).collect();
        Self::from_keys(
            &self.universe,
            (0..self.rgs.len()).map(|i| {
                let b = self.rgs[i] as usize;
                if chosen[b] {
                    (usize::MAX, i)
                } else {
                    (b, 0)
                }
            }),
        )
    }

    /// The ordered pairs in different blocks.
    pub fn dit(&self) -> PairRelation {
        PairRelation::from_fn(&self.universe, RelationKind::PartitionRelation, |i, j| {
            self.rgs[i] != self.rgs[j]
        })
    }

    /// The ordered pairs in the same block, diagonal included.
    pub fn indit(&self) -> PairRelation {
        PairRelation::from_fn(&self.universe, RelationKind::Equivalence, |i, j| {
            self.rgs[i] == self.rgs[j]
        })
    }

    pub fn dit_count(&self) -> usize {
        let sizes = self.blocks().into_iter().map(|b| b.len());
        let n = self.rgs.len();
        sizes.map(|s| s * (n - s)).sum()
    }

    /// `self ⪯ other`: every dit of `self` is a dit of `other`.
    pub fn refines(&self, other: &Partition) -> Result<bool> {
        self.universe.check_same(&other.universe)?;
        let by_dits = self.dit().is_subset(&other.dit())?;
        debug_assert_eq!(by_dits, self.refines_by_blocks(other));
        Ok(by_dits)
    }

    /// Block formulation of refinement: each block of `other` sits inside a block of `self`.
    pub fn refines_by_blocks(&self, other: &Partition) -> bool {
        other
            .blocks()
            .iter()
            .all(|b| b.iter().all(|&e| self.rgs[e] == self.rgs[b[0]]))
    }

    /// Probability that a random ordered pair is distinguished: `|dit| / |U|²`.
    pub fn logical_entropy(&self) -> Ratio<u64> {
        let n = self.rgs.len() as u64;
        Ratio::new(self.dit_count() as u64, n * n)
    }

    /// Maps the partition onto a universe with the same size but other labels.
    pub fn relabel(&self, universe: &Universe) -> Result<Self> {
        if universe.len() != self.universe.len() {
            return Err(Error::UniverseMismatch);
        }
        Ok(Partition {
            universe: universe.clone(),
            rgs: self.rgs.clone(),
            blocks: self.blocks,
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, block) in self.block_labels().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{{}}}", block.join(","))?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Partition", 2)?;
        st.serialize_field("blocks", &self.block_labels())?;
        st.serialize_field("universe", &self.universe)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            universe: Universe,
            blocks: Vec<Vec<String>>,
        }
        let raw = Raw::deserialize(d)?;
        Partition::new(&raw.universe, &raw.blocks).map_err(de::Error::custom)
    }
}

/// All partitions of a universe in lexicographic restricted-growth order.
pub fn enumerate_partitions(universe: &Universe) -> Partitions {
    Partitions {
        universe: universe.clone(),
        next: Some(vec![0; universe.len()]),
    }
}

/// Iterator returned by [`enumerate_partitions`].
pub struct Partitions {
    universe: Universe,
    next: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition::from_keys(&self.universe, current.iter().copied()))
    }
}

fn successor(rgs: &[u32]) -> Option<Vec<u32>> {
    // prefix_max[i] = max(rgs[0..i])
    let mut prefix_max = vec![0u32; rgs.len()];
    for i in 1..rgs.len() {
        prefix_max[i] = prefix_max[i - 1].max(rgs[i - 1]);
    }
    let i = (1..rgs.len()).rev().find(|&i| rgs[i] <= prefix_max[i])?;
    let mut out = rgs.to_vec();
    out[i] += 1;
    out[i + 1..].iter_mut().for_each(|x| *x = 0);
    Some(out)
}

/// The Bell number `B_n`, via the Bell triangle.
///
/// # Panics
/// If the value does not fit in a `u128` (n > 42).
pub fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let v = next.last().unwrap().checked_add(x).expect("Bell number overflows u128");
            next.push(v);
        }
        row = next;
    }
    row[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abcde() -> Universe {
        Universe::new(["a", "b", "c", "d", "e"]).unwrap()
    }

    #[test]
    fn rejects_tiny_and_duplicate_universes() {
        assert_eq!(Universe::new(["a"]).unwrap_err(), Error::UniverseTooSmall(1));
        assert_eq!(
            Universe::new(["a", "a"]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn canonical_form_ignores_block_order() {
        let u = abcde();
        let p = Partition::new(&u, &[vec!["d", "e"], vec!["c", "a", "b"]]).unwrap();
        let q = Partition::new(&u, &[vec!["a", "b", "c"], vec!["e", "d"]]).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.rgs(), &[0, 0, 0, 1, 1]);
        assert_eq!(p.to_string(), "{{a,b,c},{d,e}}");
    }

    #[test]
    fn construction_errors_name_the_culprit() {
        let u = abcde();
        let empty: Vec<&str> = vec![];
        assert_eq!(
            Partition::new(&u, &[vec!["a", "b", "c", "d", "e"], empty]).unwrap_err(),
            Error::EmptyBlock(1)
        );
        assert_eq!(
            Partition::new(&u, &[vec!["a", "b", "c"], vec!["c", "d", "e"]]).unwrap_err(),
            Error::OverlappingBlocks {
                element: "c".into(),
                first: 0,
                second: 1
            }
        );
        assert_eq!(
            Partition::new(&u, &[vec!["a", "b"], vec!["d"]]).unwrap_err(),
            Error::MissingElements(vec!["c".into(), "e".into()])
        );
        assert_eq!(
            Partition::new(&u, &[vec!["a", "b", "c", "d", "e", "z"]]).unwrap_err(),
            Error::UnknownElement("z".into())
        );
    }

    #[test]
    fn bottom_and_top() {
        let u = abcde();
        assert!(Partition::bottom(&u).is_bottom());
        assert!(Partition::top(&u).is_top());
        assert_eq!(Partition::bottom(&u).dit().len(), 0);
        assert_eq!(Partition::top(&u).dit().len(), 20);
    }

    #[test]
    fn dit_count_of_two_block_example() {
        let u = abcde();
        let s = Partition::new(&u, &[vec!["a", "b", "c"], vec!["d", "e"]]).unwrap();
        assert_eq!(s.dit().len(), 12);
        assert_eq!(s.dit_count(), 12);
        assert_eq!(s.indit().len(), 13);
        assert_eq!(s.logical_entropy(), Ratio::new(12, 25));
    }

    #[test]
    fn entropy_edge_cases() {
        let u = Universe::range(2).unwrap();
        assert_eq!(Partition::bottom(&u).logical_entropy(), Ratio::new(0, 1));
        assert_eq!(Partition::top(&u).logical_entropy(), Ratio::new(1, 2));
    }

    #[test]
    fn enumeration_counts_match_bell() {
        for n in 2..=7 {
            let u = Universe::range(n).unwrap();
            let all: Vec<_> = enumerate_partitions(&u).collect();
            assert_eq!(all.len() as u128, bell(n));
            let distinct: std::collections::HashSet<_> = all.iter().cloned().collect();
            assert_eq!(distinct.len(), all.len());
            // lexicographic order of the growth strings
            assert!(all.windows(2).all(|w| w[0].rgs() < w[1].rgs()));
            assert!(all[0].is_bottom());
            assert!(all.last().unwrap().is_top());
        }
    }

    #[test]
    fn bell_numbers() {
        let expect = [1u128, 1, 2, 5, 15, 52, 203, 877, 4140, 21147];
        for (n, &b) in expect.iter().enumerate() {
            assert_eq!(bell(n), b);
        }
    }

    #[test]
    fn refinement_examples() {
        let u = abcde();
        let coarse = Partition::new(&u, &[vec!["a", "b", "c"], vec!["d", "e"]]).unwrap();
        let fine = Partition::new(&u, &[vec!["a", "b"], vec!["c"], vec!["d", "e"]]).unwrap();
        assert!(coarse.refines(&fine).unwrap());
        assert!(!fine.refines(&coarse).unwrap());
        assert!(Partition::bottom(&u).refines(&fine).unwrap());
        assert!(fine.refines(&Partition::top(&u)).unwrap());
    }

    #[test]
    fn serde_round_trip() {
        let u = abcde();
        let s = Partition::new(&u, &[vec!["d", "e"], vec!["a", "b", "c"]]).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(
            text,
            r#"{"blocks":[["a","b","c"],["d","e"]],"universe":["a","b","c","d","e"]}"#
        );
        let back: Partition = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }
}
