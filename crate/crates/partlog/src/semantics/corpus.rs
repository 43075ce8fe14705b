//! Seeded random formulas and partitions for statistical checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::is_truth_table_tautology;
use crate::formula::Formula;
use crate::partition::{Partition, Universe};

/// Deterministic generator used throughout the test suites.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of generated formulas.
#[derive(Clone, Debug)]
pub struct FormulaGen {
    pub max_depth: usize,
    pub atoms: Vec<String>,
    pub nand: bool,
    pub constants: bool,
    /// Also produce `~`, `<=>`, `<~>`, `nor` and `diff`.
    pub derived: bool,
}

impl FormulaGen {
    pub fn new(max_depth: usize, atoms: &[&str]) -> Self {
        FormulaGen {
            max_depth,
            atoms: atoms.iter().map(|a| a.to_string()).collect(),
            nand: true,
            constants: true,
            derived: false,
        }
    }

    pub fn without_nand(mut self) -> Self {
        self.nand = false;
        self
    }

    pub fn with_derived(mut self) -> Self {
        self.derived = true;
        self
    }

    pub fn without_constants(mut self) -> Self {
        self.constants = false;
        self
    }

    pub fn generate(&self, rng: &mut impl Rng) -> Formula {
        self.node(rng, self.max_depth)
    }

    fn leaf(&self, rng: &mut impl Rng) -> Formula {
        if self.constants && rng.random_bool(0.1) {
            return if rng.random_bool(0.5) {
                Formula::Zero
            } else {
                Formula::One
            };
        }
        Formula::atom(self.atoms[rng.random_range(0..self.atoms.len())].clone())
    }

    fn node(&self, rng: &mut impl Rng, depth: usize) -> Formula {
        if depth == 0 || rng.random_bool(0.25) {
            return self.leaf(rng);
        }
        let mut builders: Vec<fn(Formula, Formula) -> Formula> = vec![Formula::join, Formula::meet, Formula::implies];
        if self.nand {
            builders.push(Formula::nand);
        }
        if self.derived {
            builders.extend([Formula::equiv as fn(_, _) -> _, Formula::inequiv, Formula::diff]);
            if self.nand {
                builders.push(Formula::nor);
            }
            if rng.random_bool(0.15) {
                return Formula::not(self.node(rng, depth - 1));
            }
        }
        let build = builders[rng.random_range(0..builders.len())];
        build(self.node(rng, depth - 1), self.node(rng, depth - 1))
    }
}

/// `count` formulas from the generator seeded with `seed`.
pub fn formulas(seed: u64, count: usize, gen: &FormulaGen) -> Vec<Formula> {
    let mut r = rng(seed);
    (0..count).map(|_| gen.generate(&mut r)).collect()
}

/// The first `count` generated formulas that are (or are not) truth-table
/// tautologies, skipping constant-only formulas.
pub fn filtered(seed: u64, count: usize, gen: &FormulaGen, tautologies: bool) -> Vec<Formula> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let f = gen.generate(&mut r);
        if !f.atoms().is_empty() && is_truth_table_tautology(&f) == tautologies && !out.contains(&f) {
            out.push(f);
        }
    }
    out
}

/// A partition from independently drawn block labels.
pub fn random_partition(rng: &mut impl Rng, universe: &Universe) -> Partition {
    let n = universe.len();
    Partition::from_keys(universe, (0..n).map(|_| rng.random_range(0..n)))
}
