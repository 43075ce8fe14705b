//! Evaluation in partition algebras, exhaustive countermodel search, the
//! `ω_n` formulas and the Boolean core of an upper interval.

mod assignment;
pub mod core;
pub mod corpus;
pub mod identities;
mod omega;
mod space;

use std::collections::BTreeMap;

use serde_json::{json, Value};

pub use self::assignment::Assignment;
pub use self::core::{b_pi_cardinality, boolean_core, chi, from_chi, is_block_union, is_pi_regular};
pub use self::omega::{omega, omega_countermodel};
pub use self::space::{PartitionSpace, Program};

use crate::error::{Error, Result};
use crate::formula::{DualFormula, Formula};
use crate::ops::{self, DualOp};
use crate::partition::{bell, Partition, Universe};
use crate::relation::PairRelation;

/// Evaluates a formula; derived connectives are evaluated through their desugaring.
pub fn eval(f: &Formula, a: &Assignment) -> Result<Partition> {
    let u = a.universe();
    Ok(match f {
        Formula::Atom(n) => a.get(n).ok_or_else(|| Error::UnboundAtom(n.clone()))?.clone(),
        Formula::Zero => Partition::bottom(u),
        Formula::One => Partition::top(u),
        Formula::Join(x, y) => ops::join_unchecked(&eval(x, a)?, &eval(y, a)?),
        Formula::Meet(x, y) => ops::meet_unchecked(&eval(x, a)?, &eval(y, a)?),
        Formula::Impl(x, y) => ops::implies_unchecked(&eval(x, a)?, &eval(y, a)?),
        Formula::Nand(x, y) => ops::nand_unchecked(&eval(x, a)?, &eval(y, a)?),
        derived => eval(&derived.desugar(), a)?,
    })
}

/// Evaluates a dual formula on the `indit` relations of the bound partitions.
pub fn eval_dual(d: &DualFormula, a: &Assignment) -> Result<PairRelation> {
    let u = a.universe();
    let bin = |op, x: &DualFormula, y: &DualFormula| -> Result<PairRelation> {
        Ok(ops::dual_op_unchecked(op, &eval_dual(x, a)?, &eval_dual(y, a)?))
    };
    match d {
        DualFormula::DAtom(n) => Ok(a.get(n).ok_or_else(|| Error::UnboundAtom(n.clone()))?.indit()),
        DualFormula::Top => Ok(PairRelation::full(u)),
        DualFormula::Bottom => Ok(PairRelation::diagonal(u)),
        DualFormula::DMeet(x, y) => bin(DualOp::Meet, x, y),
        DualFormula::DJoin(x, y) => bin(DualOp::Join, x, y),
        DualFormula::DDiff(x, y) => bin(DualOp::Diff, x, y),
        DualFormula::DNor(x, y) => bin(DualOp::Nor, x, y),
    }
}

/// Boolean evaluation; `true` plays the role of 1.
pub fn eval_bool(f: &Formula, values: &BTreeMap<String, bool>) -> Result<bool> {
    let e = |x: &Formula| eval_bool(x, values);
    Ok(match f {
        Formula::Atom(n) => *values.get(n).ok_or_else(|| Error::UnboundAtom(n.clone()))?,
        Formula::Zero => false,
        Formula::One => true,
        Formula::Join(x, y) => e(x)? || e(y)?,
        Formula::Meet(x, y) => e(x)? && e(y)?,
        Formula::Impl(x, y) => !e(x)? || e(y)?,
        Formula::Nand(x, y) => !(e(x)? && e(y)?),
        derived => e(&derived.desugar())?,
    })
}

fn boolean_rows(atoms: &[String]) -> impl Iterator<Item = BTreeMap<String, bool>> + '_ {
    (0u64..1 << atoms.len()).map(move |mask| {
        atoms
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), mask >> (atoms.len() - 1 - i) & 1 == 1))
            .collect()
    })
}

/// Truth-table check through Boolean evaluation.
pub fn is_truth_table_tautology_bool(f: &Formula) -> bool {
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    let holds = boolean_rows(&atoms).all(|row| eval_bool(f, &row).expect("all atoms bound"));
    holds
}

/// Truth-table check through evaluation on `{0, 1} ⊂ Π(2)`.
pub fn is_truth_table_tautology_pi2(f: &Formula) -> bool {
    let u = Universe::with_prefix("u", 2).expect("two labels");
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    let holds = boolean_rows(&atoms).all(|row| {
        let mut a = Assignment::new(&u);
        for (name, v) in row {
            let p = if v { Partition::top(&u) } else { Partition::bottom(&u) };
            a.bind(name, p).expect("same universe");
        }
        eval(f, &a).expect("all atoms bound").is_top()
    });
    holds
}

/// Whether `f` is a subset (truth-table) tautology. Both the Boolean and the
/// `Π(2)` evaluation are run and must agree.
pub fn is_truth_table_tautology(f: &Formula) -> bool {
    let by_bool = is_truth_table_tautology_bool(f);
    let by_pi2 = is_truth_table_tautology_pi2(f);
    assert_eq!(by_bool, by_pi2, "Boolean and Π(2) truth tables disagree on {f}");
    by_bool
}

/// Limits for exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub max_n: usize,
    /// Maximum number of assignments evaluated over all universe sizes.
    pub budget: u64,
}

impl CheckConfig {
    pub const DEFAULT_BUDGET: u64 = 10_000_000;

    pub fn new(max_n: usize) -> Self {
        CheckConfig {
            max_n,
            budget: Self::DEFAULT_BUDGET,
        }
    }
}

/// Outcome of an exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckResult {
    /// Evaluates to 1 under every assignment on universes of size 2 to `n`.
    TautologyUpTo(usize),
    /// Never evaluates to 0 on universes of size 2 to `n`.
    WeakTautologyUpTo(usize),
    Countermodel {
        assignment: Assignment,
        evaluated: Partition,
        /// The first pair `i < j` that the value fails to distinguish.
        pair: (usize, usize),
    },
}

impl CheckResult {
    pub fn is_countermodel(&self) -> bool {
        matches!(self, CheckResult::Countermodel { .. })
    }

    pub fn to_json(&self) -> Value {
        match self {
            CheckResult::TautologyUpTo(n) => {
                json!({"schema": crate::SCHEMA, "verdict": "tautology_up_to", "max_n": n})
            }
            CheckResult::WeakTautologyUpTo(n) => {
                json!({"schema": crate::SCHEMA, "verdict": "weak_tautology_up_to", "max_n": n})
            }
            CheckResult::Countermodel {
                assignment,
                evaluated,
                pair,
            } => {
                let u = assignment.universe();
                json!({
                    "schema": crate::SCHEMA,
                    "verdict": "countermodel",
                    "universe": u.labels(),
                    "bindings": assignment.bindings_json(),
                    "evaluated": evaluated.block_labels(),
                    "pair": [u.label(pair.0), u.label(pair.1)],
                })
            }
        }
    }
}

/// Number of assignments an exhaustive search up to `max_n` visits.
pub fn assignments_needed(atoms: usize, max_n: usize) -> u128 {
    (2..=max_n)
        .map(|n| bell(n).saturating_pow(atoms as u32))
        .fold(0u128, u128::saturating_add)
}

fn search(f: &Formula, cfg: CheckConfig, weak: bool) -> Result<CheckResult> {
    if cfg.max_n < 2 {
        return Err(Error::UniverseTooSmall(cfg.max_n));
    }
    let f = f.desugar();
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    let needed = assignments_needed(atoms.len(), cfg.max_n);
    if needed > cfg.budget as u128 {
        return Err(Error::BudgetExceeded {
            needed,
            budget: cfg.budget,
        });
    }
    let prog = Program::compile(&f, &atoms)?;
    for n in 2..=cfg.max_n {
        let space = PartitionSpace::new(&Universe::with_prefix("u", n)?);
        let bad = |p: &Partition| if weak { p.is_bottom() } else { !p.is_top() };
        if let Some((choice, value)) = space.find(&prog, bad) {
            let assignment = space.assignment(&atoms, &choice);
            let pair = first_indit_pair(&value);
            return Ok(CheckResult::Countermodel {
                assignment,
                evaluated: value,
                pair,
            });
        }
    }
    Ok(if weak {
        CheckResult::WeakTautologyUpTo(cfg.max_n)
    } else {
        CheckResult::TautologyUpTo(cfg.max_n)
    })
}

fn first_indit_pair(p: &Partition) -> (usize, usize) {
    let n = p.universe().len();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| p.same_block(i, j))
        .expect("a non-top partition has an indistinction")
}

/// Searches universes `u0..u{n-1}` for `n = 2..=max_n` for an assignment
/// where `f` is not 1. Atoms are enumerated in sorted order with the last
/// one varying fastest, each over partitions in restricted-growth order.
pub fn check_partition_tautology(f: &Formula, max_n: usize) -> Result<CheckResult> {
    check_partition_tautology_with(f, CheckConfig::new(max_n))
}

pub fn check_partition_tautology_with(f: &Formula, cfg: CheckConfig) -> Result<CheckResult> {
    search(f, cfg, false)
}

/// Like [`check_partition_tautology`] but looks for an assignment where `f` is 0.
pub fn check_weak(f: &Formula, max_n: usize) -> Result<CheckResult> {
    check_weak_with(f, CheckConfig::new(max_n))
}

pub fn check_weak_with(f: &Formula, cfg: CheckConfig) -> Result<CheckResult> {
    search(f, cfg, true)
}
