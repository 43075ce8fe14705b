//! The Boolean core `B_π = {σ⇒π}` of the interval `[π, 1]`.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest number of non-singleton blocks [`boolean_core`] materializes.
pub const MAX_CORE_BLOCKS: usize = 20;

/// `p` with the non-singleton blocks selected by `bits` discretized.
pub fn from_chi(p: &Partition, bits: &[bool]) -> Partition {
    let mut k = 0;
    p.discretize_where(|block| {
        if block.len() < 2 {
            return false;
        }
        let pick = bits[k];
        k += 1;
        pick
    })
}

fn candidate_bits(r: &Partition, p: &Partition) -> Vec<bool> {
    p.non_singleton_blocks()
        .iter()
        .map(|b| r.blocks()[r.block_of(b[0])].len() == 1)
        .collect()
}

/// Whether `r` is `p` with some of its blocks discretized, i.e. `r = σ⇒p` for some `σ`.
pub fn is_pi_regular(r: &Partition, p: &Partition) -> Result<bool> {
    r.universe().check_same(p.universe())?;
    Ok(from_chi(p, &candidate_bits(r, p)) == *r)
}

/// For each non-singleton block of `p` (in canonical order), whether `r` discretizes it.
pub fn chi(r: &Partition, p: &Partition) -> Result<Vec<bool>> {
    if !is_pi_regular(r, p)? {
        return Err(Error::NotPiRegular);
    }
    Ok(candidate_bits(r, p))
}

/// All `2^|π_ns|` elements of `B_π`, ordered by the bitmask of discretized
/// blocks (bit `i` is the `i`-th non-singleton block).
pub fn boolean_core(p: &Partition) -> Result<Vec<Partition>> {
    let ns = p.non_singleton_blocks().len();
    if ns > MAX_CORE_BLOCKS {
        return Err(Error::TooLarge(format!("{ns} non-singleton blocks")));
    }
    Ok((0u32..1 << ns)
        .map(|mask| {
            let bits: Vec<bool> = (0..ns).map(|i| mask >> i & 1 == 1).collect();
            from_chi(p, &bits)
        })
        .collect())
}

/// Whether the subset (given as element indices) is a union of blocks of `p`.
pub fn is_block_union(subset: &[usize], p: &Partition) -> bool {
    let n = p.universe().len();
    let mut member = vec![false; n];
    for &i in subset {
        member[i] = true;
    }
    (0..n).all(|i| (0..n).all(|j| !p.same_block(i, j) || member[i] == member[j]))
}

/// `|B(π)|`, the number of block-union subsets: `2^|π_ns| · 2^(#singletons)`.
pub fn b_pi_cardinality(p: &Partition) -> u128 {
    let ns = p.non_singleton_blocks().len() as u32;
    let singles = p.singleton_count() as u32;
    2u128.pow(ns) * 2u128.pow(singles)
}
