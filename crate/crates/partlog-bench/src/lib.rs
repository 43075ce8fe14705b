//! Shared fixtures for the benchmarks.

use partlog::semantics::corpus::{random_partition, rng};
use partlog::{enumerate_partitions, Partition, Universe};

/// All partitions of an `n`-element universe.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    enumerate_partitions(&Universe::range(n).expect("valid size")).collect()
}

/// `count` seeded random pairs of partitions on `n` elements.
pub fn random_pairs(n: usize, count: usize, seed: u64) -> Vec<(Partition, Partition)> {
    let u = Universe::range(n).expect("valid size");
    let mut r = rng(seed);
    (0..count)
        .map(|_| (random_partition(&mut r, &u), random_partition(&mut r, &u)))
        .collect()
}
