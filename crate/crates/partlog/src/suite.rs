//! Every library invariant as a named, countable check. `partlog identities`
//! runs the whole list.
//!
//! Exhaustive items cover universes of 2 to `max_n` elements; sampled items
//! draw from seeded generators, on universes of `max_n + 1` elements where a
//! sample extends an exhaustive pass.

use std::time::{Duration, Instant};

use rand::Rng;
use serde_json::{json, Value};

use crate::error::Result;
use crate::formula::{
    cnf_of, dnf_dual_of, double_pi_neg_transform, dualize, dualize_back, godel_transform, parse,
    single_pi_neg_transform, Formula, OpCode, Pi, SIGMA, TAU,
};
use crate::ops::{self, oracle, BoolOpTable};
use crate::partition::{enumerate_partitions, Partition, Universe};
use crate::relation::PairRelation;
use crate::semantics::corpus::{filtered, formulas, random_partition, rng, FormulaGen};
use crate::semantics::identities::Identity;
use crate::semantics::{
    b_pi_cardinality, boolean_core, check_partition_tautology, check_weak, chi, eval, eval_dual, is_block_union,
    is_truth_table_tautology, omega, omega_countermodel, Assignment, CheckResult,
};
use crate::tableau::{probe, prove, verify_outcome, ProverConfig, ProverOutcome, Rule, Sign, Trace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest universe for exhaustive items; at least 2.
    pub max_n: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_n: 4, seed: 1 }
    }
}

/// Counts cases and keeps the first failure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn check_result(&mut self, r: Result<bool>, describe: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, describe),
            Err(e) => self.check(false, || format!("{}: {e}", describe())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItemReport {
    pub name: &'static str,
    pub module: &'static str,
    pub tally: Tally,
    pub elapsed: Duration,
}

impl ItemReport {
    pub fn passed(&self) -> bool {
        self.tally.failures == 0 && self.tally.cases > 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "module": self.module,
            "cases": self.tally.cases,
            "failures": self.tally.failures,
            "passed": self.passed(),
            "first_failure": self.tally.first_failure,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub items: Vec<ItemReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.items.iter().filter(|i| i.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.items.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": crate::SCHEMA,
            "max_n": self.config.max_n,
            "seed": self.config.seed,
            "passed": self.passed(),
            "failed": self.failed(),
            "items": self.items.iter().map(ItemReport::to_json).collect::<Vec<_>>(),
        })
    }
}

/// A suite entry.
#[derive(Clone, Copy)]
pub struct Item {
    pub name: &'static str,
    pub module: &'static str,
    run: fn(&SuiteConfig) -> Tally,
}

impl Item {
    pub fn run(&self, cfg: &SuiteConfig) -> ItemReport {
        let start = Instant::now();
        let tally = (self.run)(cfg);
        ItemReport {
            name: self.name,
            module: self.module,
            tally,
            elapsed: start.elapsed(),
        }
    }
}

macro_rules! items {
    ($($module:literal: $($name:literal => $f:ident),+;)+) => {
        pub const ITEMS: &[Item] = &[$($(Item { name: $name, module: $module, run: $f }),+),+];
    };
}

items! {
    "partition":
        "dit-indit-complement" => dit_indit_complement,
        "interior-lemma" => interior_lemma,
        "join-dits-union" => join_dits_union,
        "common-dits" => common_dits,
        "implication-equivalence" => implication_equivalence,
        "adjunction" => adjunction,
        "chain-lengths" => chain_lengths,
        "orthogonality" => orthogonality,
        "refinement-sandwich" => refinement_sandwich,
        "weak-de-morgan" => weak_de_morgan,
        "modular-atom-nand" => modular_atom_nand,
        "graph-op-primitives" => graph_op_primitives;
    "formula":
        "parse-print-round-trip" => parse_print_round_trip,
        "desugar" => desugar,
        "dualize-involution" => dualize_involution,
        "cnf-tables" => cnf_tables,
        "dnf-dual-tables" => dnf_dual_tables;
    "semantics":
        "duality-principle" => duality_principle,
        "reduction-principle" => reduction_principle,
        "weak-tautologies-are-subset" => weak_tautologies_are_subset,
        "transforms" => transforms,
        "godel-non-tautologies" => godel_non_tautologies,
        "ore" => ore,
        "dual-ore" => dual_ore,
        "boundary-core" => boundary_core,
        "co-leibniz" => co_leibniz,
        "cnf-decomposition" => cnf_decomposition,
        "dnf-decomposition" => dnf_decomposition,
        "core-homomorphism" => core_homomorphism,
        "b-pi-cardinality" => b_pi_card,
        "omega-2" => omega_2;
    "tableau":
        "prover-soundness" => prover_soundness,
        "prune-invariance" => prune_invariance,
        "rule-local-soundness" => rule_local_soundness,
        "chain-length-discipline" => chain_length_discipline,
        "derived-negation" => derived_negation,
        "stage-monotonicity" => stage_monotonicity;
}

pub fn item(name: &str) -> Option<&'static Item> {
    ITEMS.iter().find(|i| i.name == name)
}

/// Runs every item in order.
///
/// # Panics
/// If `cfg.max_n < 2`.
pub fn run(cfg: &SuiteConfig) -> SuiteReport {
    assert!(cfg.max_n >= 2, "max_n must be at least 2");
    SuiteReport {
        config: *cfg,
        items: ITEMS.iter().map(|i| i.run(cfg)).collect(),
    }
}

// ---- helpers ----

fn universe(n: usize) -> Universe {
    Universe::range(n).expect("n >= 2")
}

fn all(u: &Universe) -> Vec<Partition> {
    enumerate_partitions(u).collect()
}

/// Every universe size from 2 to `max_n` with its partitions.
fn spaces(max_n: usize) -> impl Iterator<Item = (Universe, Vec<Partition>)> {
    (2..=max_n).map(|n| {
        let u = universe(n);
        let ps = all(&u);
        (u, ps)
    })
}

/// Calls `f` on every `k`-tuple of `ps`.
fn tuples(ps: &[Partition], k: usize, mut f: impl FnMut(&[&Partition])) {
    let total = ps.len().pow(k as u32);
    let mut args = Vec::with_capacity(k);
    for code in 0..total {
        args.clear();
        let mut c = code;
        for _ in 0..k {
            args.push(&ps[c % ps.len()]);
            c /= ps.len();
        }
        f(&args);
    }
}

fn show(ps: &[&Partition]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

fn random_relation(r: &mut impl Rng, u: &Universe) -> PairRelation {
    let n = u.len();
    let density = r.random_range(0.1..0.9);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .collect();
    PairRelation::from_pairs(u, pairs.into_iter().filter(|_| r.random_bool(density)))
}

const TABLEAU_ATOMS: [&str; 3] = ["s", "p", "t"];

fn tableau_corpus(cfg: &SuiteConfig, derived: bool) -> Vec<Formula> {
    let mut gen = FormulaGen::new(3, &TABLEAU_ATOMS);
    if derived {
        gen = gen.with_derived();
    }
    let mut out: Vec<Formula> = [
        "(s /\\ (s => p)) => p",
        "p => (s => p)",
        "(s /\\ (s => p)) => (s /\\ p)",
        "(s => p) \\/ ((s => p) => p)",
        "~s \\/ ~~s",
        "(s | t) | (s /\\ t)",
        "((s => p) => s) => s",
        "s => (p => (s /\\ p))",
        "((p \\/ s) /\\ (p \\/ t)) => (p \\/ (s /\\ t))",
        "s \\/ ~s",
    ]
    .iter()
    .map(|t| parse(t).expect("fixed corpus parses"))
    .filter(|f| !derived || f.is_derived() || f.to_text().contains('~'))
    .collect();
    out.extend(formulas(cfg.seed, 40, &gen));
    out
}

/// A bounded prover configuration that keeps each item to seconds.
fn suite_prover() -> ProverConfig {
    ProverConfig::default().with_max_steps(50_000)
}

// ---- partition ----

fn dit_indit_complement(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (u, ps) in spaces(cfg.max_n) {
        for p in &ps {
            let (d, i) = (p.dit(), p.indit());
            let ok = d.interior() == d
                && i.closure() == i
                && d.intersection(&i).map(|x| x.is_empty()).unwrap_or(false)
                && d.union(&i).map(|x| x == PairRelation::full(&u)).unwrap_or(false);
            t.check(ok, || format!("{p}"));
        }
    }
    t
}

fn interior_lemma(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    let mut r = rng(cfg.seed);
    for n in 2..=cfg.max_n + 1 {
        let u = universe(n);
        for _ in 0..200 {
            let (a, b) = (random_relation(&mut r, &u), random_relation(&mut r, &u));
            let lhs = a.intersection(&b).expect("same universe").interior();
            let rhs = a
                .interior()
                .intersection(&b.interior())
                .expect("same universe")
                .interior();
            t.check(lhs == rhs, || format!("A = {:?}, B = {:?}", a.pairs(), b.pairs()));
        }
    }
    t
}

fn join_dits_union(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (_, ps) in spaces(cfg.max_n) {
        tuples(&ps, 2, |a| {
            let j = ops::join_unchecked(a[0], a[1]);
            t.check(Ok(j.dit()) == a[0].dit().union(&a[1].dit()), || show(a));
        });
    }
    t
}

fn common_dits(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (_, ps) in spaces(cfg.max_n) {
        tuples(&ps, 2, |a| {
            if a[0].is_bottom() || a[1].is_bottom() {
                return;
            }
            let shared = a[0].dit().intersection(&a[1].dit()).map(|x| !x.is_empty());
            t.check_result(shared, || show(a));
        });
    }
    t
}

fn implication_equivalence(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (_, ps) in spaces(cfg.max_n) {
        tuples(&ps, 2, |a| {
            t.check(
                ops::implies_unchecked(a[0], a[1]) == oracle::implies(a[0], a[1]),
                || show(a),
            );
        });
    }
    t
}

/// `dit(τ) ∩ dit(σ) ⊆ dit(π)` iff `τ ⪯ σ⇒π`.
fn adjunction(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (_, ps) in spaces(cfg.max_n) {
        tuples(&ps, 3, |a| {
            let (tau, s, p) = (a[0], a[1], a[2]);
            let left = tau.dit().intersection(&s.dit()).and_then(|x| x.is_subset(&p.dit()));
            let right = tau.refines(&ops::implies_unchecked(s, p));
            t.check_result(left.and_then(|l| right.map(|r| l == r)), || show(a));
        });
    }
    t
}

fn chain_lengths(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (_, ps) in spaces(cfg.max_n) {
        tuples(&ps, 2, |a| {
            let imp = ops::implies_indit_capped(a[0], a[1], 2).map(|r| r == ops::implies_unchecked(a[0], a[1]).indit());
            t.check_result(imp, || format!("implies at {}", show(a)));
            let nand = ops::nand_indit_capped(a[0], a[1], 4).map(|r| r == ops::nand_unchecked(a[0], a[1]).indit());
            t.check_result(nand, || format!("nand at {}", show(a)));
        });
    }
    t
}

fn orthogonality(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (_, ps) in spaces(cfg.max_n) {
        tuples(&ps, 2, |a| {
            let lhs = ops::join_unchecked(&ops::neg(a[0]), &ops::neg(a[1])).is_top();
            let rhs = ops::nand_unchecked(a[0], a[1]).is_top();
            t.check(lhs == rhs, || show(a));
        });
    }
    t
}

/// `¬σ∨¬τ ⪯ σ|τ ⪯ ¬(σ∧τ)`.
fn refinement_sandwich(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (_, ps) in spaces(cfg.max_n) {
        tuples(&ps, 2, |a| {
            let low = ops::join_unchecked(&ops::neg(a[0]), &ops::neg(a[1]));
            let mid = ops::nand_unchecked(a[0], a[1]);
            let high = ops::neg(&ops::meet_unchecked(a[0], a[1]));
            t.check(low.refines_by_blocks(&mid) && mid.refines_by_blocks(&high), || show(a));
        });
    }
    t
}

/// `¬^π(σ∨τ) = ¬^πσ ∧ ¬^πτ`.
fn weak_de_morgan(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (_, ps) in spaces(cfg.max_n) {
        tuples(&ps, 3, |a| {
            let (s, tau, p) = (a[0], a[1], a[2]);
            let lhs = ops::implies_unchecked(&ops::join_unchecked(s, tau), p);
            let rhs = ops::meet_unchecked(&ops::implies_unchecked(s, p), &ops::implies_unchecked(tau, p));
            t.check(lhs == rhs, || show(a));
        });
    }
    t
}

/// `{{u}, U−u} | {U−u', {u'}}` is the coatom pairing `u` and `u'`.
fn modular_atom_nand(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for n in 3..=cfg.max_n.max(3) {
        let u = universe(n);
        let atom = |x: usize| Partition::from_keys(&u, (0..n).map(|i| i == x));
        for x in 0..n {
            for y in (0..n).filter(|&y| y != x) {
                let v = ops::nand_unchecked(&atom(x), &atom(y));
                let coatom = v.num_blocks() == n - 1 && v.same_block(x, y);
                t.check(coatom, || format!("|U| = {n}, u = {x}, u' = {y}: {v}"));
            }
        }
    }
    t
}

fn graph_op_primitives(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    let named: [(BoolOpTable, fn(&Partition, &Partition) -> Partition); 4] = [
        (BoolOpTable::JOIN, ops::join_unchecked),
        (BoolOpTable::MEET, ops::meet_unchecked),
        (BoolOpTable::IMPLIES, ops::implies_unchecked),
        (BoolOpTable::NAND, ops::nand_unchecked),
    ];
    for (_, ps) in spaces(cfg.max_n) {
        tuples(&ps, 2, |a| {
            for (table, op) in named {
                t.check(ops::graph_op_unchecked(table, a[0], a[1]) == op(a[0], a[1]), || {
                    format!("{table:?} at {}", show(a))
                });
            }
        });
    }
    t
}

// ---- formula ----

fn round_trip_gen() -> FormulaGen {
    FormulaGen::new(5, &["s", "p", "t", "q1", "nor", "diff"]).with_derived()
}

fn parse_print_round_trip(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for f in formulas(cfg.seed, 500, &round_trip_gen()) {
        let text = f.to_text();
        t.check(parse(&text).as_ref() == Ok(&f), || text.clone());
    }
    t
}

fn desugar(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for f in formulas(cfg.seed, 500, &round_trip_gen()) {
        let d = f.desugar();
        t.check(d.is_desugared() && d.desugar() == d, || f.to_text());
    }
    t
}

fn dualize_involution(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for f in formulas(cfg.seed, 500, &FormulaGen::new(5, &TABLEAU_ATOMS)) {
        let back = dualize(&f).map(|d| dualize_back(&d) == f);
        t.check_result(back, || f.to_text());
    }
    t
}

fn sigma_tau(s: &Partition, t: &Partition) -> Assignment {
    Assignment::new(s.universe())
        .with(SIGMA, s.clone())
        .and_then(|a| a.with(TAU, t.clone()))
        .expect("same universe")
}

fn cnf_tables(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (_, ps) in spaces(cfg.max_n) {
        for op in OpCode::ALL.into_iter().filter(|&op| op != OpCode::One) {
            let f = cnf_of(op);
            tuples(&ps, 2, |a| {
                let v = eval(&f, &sigma_tau(a[0], a[1])).map(|v| v == ops::graph_op_unchecked(op.table(), a[0], a[1]));
                t.check_result(v, || format!("{op:?} at {}", show(a)));
            });
        }
    }
    t
}

fn dnf_dual_tables(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (_, ps) in spaces(cfg.max_n.min(3)) {
        for op in OpCode::ALL {
            let d = dnf_dual_of(op);
            let dual_table = op.table().de_morgan_dual();
            tuples(&ps, 2, |a| {
                let v = eval_dual(&d, &sigma_tau(a[0], a[1]))
                    .map(|v| v == ops::graph_op_unchecked(dual_table, a[0], a[1]).indit());
                t.check_result(v, || format!("{op:?} at {}", show(a)));
            });
        }
    }
    t
}

// ---- semantics ----

/// Calls `f` on every assignment of `atoms` over `ps`.
fn assignments(u: &Universe, ps: &[Partition], atoms: &[String], mut f: impl FnMut(&Assignment)) {
    tuples(ps, atoms.len(), |choice| {
        let mut a = Assignment::new(u);
        for (name, p) in atoms.iter().zip(choice) {
            a.bind(name.clone(), (*p).clone()).expect("same universe");
        }
        f(&a);
    });
}

/// `eval_dual(dualize(f)) = indit(eval(f))`, for 200 formulas on `|U| = 3`.
fn duality_principle(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    let u = universe(3);
    let ps = all(&u);
    for f in formulas(cfg.seed, 200, &FormulaGen::new(4, &TABLEAU_ATOMS)) {
        let Ok(d) = dualize(&f) else {
            t.check(false, || format!("dualize {f}"));
            continue;
        };
        let atoms: Vec<String> = f.atoms().into_iter().collect();
        let mut ok = true;
        assignments(&u, &ps, &atoms, |a| {
            ok &= matches!((eval(&f, a), eval_dual(&d, a)), (Ok(v), Ok(w)) if v.indit() == w);
        });
        t.check(ok, || f.to_text());
    }
    t
}

/// On `{0, 1} ⊂ Π(2)` the four primitives are the Boolean operations.
fn reduction_principle(_: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    let u = universe(2);
    let bit = |b: bool| if b { Partition::top(&u) } else { Partition::bottom(&u) };
    let named: [(BoolOpTable, fn(&Partition, &Partition) -> Partition); 4] = [
        (BoolOpTable::JOIN, ops::join_unchecked),
        (BoolOpTable::MEET, ops::meet_unchecked),
        (BoolOpTable::IMPLIES, ops::implies_unchecked),
        (BoolOpTable::NAND, ops::nand_unchecked),
    ];
    for (table, op) in named {
        for (a, b) in [(true, true), (true, false), (false, true), (false, false)] {
            let v = op(&bit(a), &bit(b));
            t.check(v == bit(table.eval(a, b)), || format!("{table:?} at ({a}, {b})"));
        }
    }
    t
}

fn weak_tautologies_are_subset(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for f in formulas(cfg.seed, 200, &FormulaGen::new(3, &["s", "p"])) {
        match check_weak(&f, cfg.max_n.min(3)) {
            Ok(CheckResult::Countermodel { .. }) => {}
            Ok(_) => t.check(is_truth_table_tautology(&f), || f.to_text()),
            Err(e) => t.check(false, || format!("{f}: {e}")),
        }
    }
    t
}

fn transform_gen() -> FormulaGen {
    FormulaGen::new(3, &TABLEAU_ATOMS).without_nand()
}

const PI: &str = "q";

fn godel_double(f: &Formula, pi: &Pi) -> Result<Formula> {
    Ok(pi.neg(pi.neg(godel_transform(f, pi)?)))
}

/// The single, double and Gödel transforms of 50 subset tautologies survive
/// exhaustive search up to `max_n`.
fn transforms(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    let pi = Pi::Atom(PI.into());
    let kinds: [(&str, fn(&Formula, &Pi) -> Result<Formula>); 3] = [
        ("single", single_pi_neg_transform),
        ("double", double_pi_neg_transform),
        ("godel", godel_double),
    ];
    for f in filtered(cfg.seed, 50, &transform_gen(), true) {
        for (kind, tr) in kinds {
            let ok = tr(&f, &pi)
                .and_then(|g| check_partition_tautology(&g, cfg.max_n))
                .map(|r| !r.is_countermodel());
            t.check_result(ok, || format!("{kind} transform of {f}"));
        }
    }
    t
}

/// The Gödel route refutes 20 non-tautologies on universes of at most 3.
fn godel_non_tautologies(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    let pi = Pi::Atom(PI.into());
    for f in filtered(cfg.seed, 20, &transform_gen(), false) {
        let found = godel_double(&f, &pi)
            .and_then(|g| check_partition_tautology(&g, 3))
            .map(|r| r.is_countermodel());
        t.check_result(found, || f.to_text());
    }
    t
}

/// Exhaustive on `|U| = max_n`, then 500 samples on `max_n + 1`.
fn identity(cfg: &SuiteConfig, id: Identity) -> Tally {
    let mut t = Tally::default();
    let u = universe(cfg.max_n);
    let ps = all(&u);
    tuples(&ps, id.arity(), |a| t.check_result(id.holds(a), || show(a)));
    let v = universe(cfg.max_n + 1);
    let mut r = rng(cfg.seed);
    for _ in 0..500 {
        let sample: Vec<Partition> = (0..id.arity()).map(|_| random_partition(&mut r, &v)).collect();
        let refs: Vec<&Partition> = sample.iter().collect();
        t.check_result(id.holds(&refs), || show(&refs));
    }
    t
}

fn ore(cfg: &SuiteConfig) -> Tally {
    identity(cfg, Identity::Ore)
}

fn dual_ore(cfg: &SuiteConfig) -> Tally {
    identity(cfg, Identity::DualOre)
}

fn boundary_core(cfg: &SuiteConfig) -> Tally {
    identity(cfg, Identity::BoundaryCore)
}

fn co_leibniz(cfg: &SuiteConfig) -> Tally {
    identity(cfg, Identity::CoLeibniz)
}

fn cnf_decomposition(cfg: &SuiteConfig) -> Tally {
    identity(cfg, Identity::CnfDecomposition)
}

fn dnf_decomposition(cfg: &SuiteConfig) -> Tally {
    identity(cfg, Identity::DnfDecomposition)
}

/// `χ` turns `∧`, `∨`, `⇒` into bitwise or, and, implication-on-discretized
/// bits, and `x⇒π` into complement; the core has `2^|π_ns|` elements.
fn core_homomorphism(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (_, ps) in spaces(cfg.max_n) {
        for p in &ps {
            let core = match boolean_core(p) {
                Ok(c) => c,
                Err(e) => {
                    t.check(false, || format!("{p}: {e}"));
                    continue;
                }
            };
            let ns = p.non_singleton_blocks().len();
            t.check(core.len() == 1 << ns, || format!("|B| at {p}"));
            let bits = |x: &Partition| chi(x, p).expect("core element");
            for x in &core {
                let flipped = bits(x).iter().map(|b| !b).collect::<Vec<_>>();
                let neg = ops::implies_unchecked(x, p);
                t.check(chi(&neg, p).as_ref() == Ok(&flipped), || format!("flip at {x} in {p}"));
                for y in &core {
                    let (bx, by) = (bits(x), bits(y));
                    let zip =
                        |f: fn(bool, bool) -> bool| bx.iter().zip(&by).map(|(&a, &b)| f(a, b)).collect::<Vec<_>>();
                    let laws = [
                        (ops::meet_unchecked(x, y), zip(|a, b| a && b), "meet"),
                        (ops::join_unchecked(x, y), zip(|a, b| a || b), "join"),
                        (ops::implies_unchecked(x, y), zip(|a, b| !a || b), "implies"),
                    ];
                    for (v, want, name) in laws {
                        t.check(chi(&v, p).as_ref() == Ok(&want), || {
                            format!("{name} at {x}, {y} in {p}")
                        });
                    }
                }
            }
        }
    }
    t
}

/// Counts the block-union subsets of each `π` directly.
fn b_pi_card(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (u, ps) in spaces(cfg.max_n) {
        let n = u.len();
        for p in &ps {
            let count = (0u32..1 << n)
                .filter(|mask| {
                    let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                    is_block_union(&subset, p)
                })
                .count() as u128;
            t.check(count == b_pi_cardinality(p), || format!("{p}: {count}"));
        }
    }
    t
}

fn omega_2(_: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    let w = omega(2).expect("n = 2 is valid");
    let u = universe(2);
    let ps = all(&u);
    let atoms: Vec<String> = w.atoms().into_iter().collect();
    assignments(&u, &ps, &atoms, |a| {
        t.check(eval(&w, a).map(|v| v.is_top()) == Ok(true), || {
            format!("{:?}", a.bindings())
        });
    });
    let zero = omega_countermodel(2).and_then(|a| eval(&w, &a)).map(|v| v.is_bottom());
    t.check_result(zero, || "the three-element model".into());
    t
}

// ---- tableau ----

fn prover_soundness(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for f in tableau_corpus(cfg, false) {
        let o = prove(&f, suite_prover());
        t.check_result(verify_outcome(&f, &o).map(|_| true), || f.to_text());
    }
    t
}

fn prune_invariance(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for f in tableau_corpus(cfg, false) {
        let on = prove(&f, suite_prover());
        let off = prove(&f, suite_prover().without_pruning());
        // A step budget can run out on one side only.
        let budget = |o: &ProverOutcome| matches!(o, ProverOutcome::Unknown(_));
        if budget(&on) || budget(&off) {
            continue;
        }
        t.check(on.verdict() == off.verdict(), || {
            format!("{f}: {} with pruning, {} without", on.verdict(), off.verdict())
        });
    }
    t
}

/// Guides single branches with random models that leave some pair
/// undistinguished; no rule may leave the model.
fn rule_local_soundness(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    let mut r = rng(cfg.seed);
    let corpus = tableau_corpus(cfg, false);
    for n in 3..=cfg.max_n.max(3) {
        let u = Universe::with_prefix("u", n).expect("n >= 3");
        for f in &corpus {
            for _ in 0..3 {
                let mut a = Assignment::new(&u);
                for x in TABLEAU_ATOMS {
                    a.bind(x, random_partition(&mut r, &u)).expect("same universe");
                }
                let Ok(v) = eval(f, &a) else { continue };
                let pair = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| v.same_block(i, j));
                if let Some(pair) = pair {
                    let res = probe(f, &a, pair, suite_prover());
                    t.check_result(res.map(|_| true), || format!("{f} under {:?}", a.bindings()));
                }
            }
        }
    }
    t
}

fn proofs(cfg: &SuiteConfig, derived: bool) -> Vec<(Formula, Trace)> {
    tableau_corpus(cfg, derived)
        .into_iter()
        .filter_map(|f| match prove(&f, suite_prover()) {
            ProverOutcome::Proved(trace) => Some((f, trace)),
            _ => None,
        })
        .collect()
}

/// F⇒ adds at most 1 element, F| at most 3, F∧ fewer than the number of
/// distinct subformulas.
fn chain_length_discipline(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (f, trace) in proofs(cfg, false) {
        let links = f.desugar().subformulas().len().max(2);
        for step in &trace.steps {
            let cap = match step.rule {
                Rule::FImp => 1,
                Rule::FNand => 3,
                Rule::FAnd => links - 1,
                _ => 0,
            };
            t.check(step.new_elements.len() <= cap, || {
                format!("{f}: {} added {} elements", step.rule, step.new_elements.len())
            });
        }
    }
    t
}

/// With `¬σ = σ⇒0`, T¬ concludes Fσ on the same pair and F¬ builds a chain
/// of one or two links carrying Tσ.
fn derived_negation(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (f, trace) in proofs(cfg, true) {
        for step in &trace.steps {
            let Some(target) = step.target.map(|i| &trace.statements[i]) else {
                continue;
            };
            let Formula::Impl(body, zero) = &target.formula else {
                continue;
            };
            if **zero != Formula::Zero {
                continue;
            }
            let concl = step.conclusions.iter().map(|&c| &trace.statements[c]);
            let ok = match step.rule {
                Rule::TImp => concl
                    .clone()
                    .all(|c| c.sign == Sign::F && c.formula == **body && c.pair == target.pair),
                Rule::FImp => {
                    step.new_elements.len() <= 1 && concl.clone().all(|c| c.sign == Sign::T && c.formula == **body)
                }
                _ => true,
            };
            t.check(ok, || format!("{f}: {} on {}", step.rule, target.formula));
        }
    }
    t
}

/// Fresh elements are numbered after every element already on the branch.
fn stage_monotonicity(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    for (f, trace) in proofs(cfg, false) {
        for step in trace.steps.iter().filter(|s| !s.new_elements.is_empty()) {
            let first = step.conclusions.iter().min().copied().unwrap_or(trace.statements.len());
            let used = (0..first)
                .filter(|&s| trace.on_branch(s, step.branch))
                .map(|s| trace.statements[s].pair.1)
                .max()
                .unwrap_or(1);
            let expected: Vec<usize> = (used + 1..used + 1 + step.new_elements.len()).collect();
            t.check(step.new_elements == expected, || {
                format!("{f}: {} introduced {:?} after u{used}", step.rule, step.new_elements)
            });
        }
    }
    t
}
