//! Signed tableaus over pairs of elements: `(u,u'):Tφ` says the value of `φ`
//! distinguishes `u` and `u'`, `(u,u'):Fφ` says it does not.
//!
//! [`prove`] starts from `(u0,u1):Fφ` and searches depth-first. A closed
//! tableau yields [`ProverOutcome::Proved`] with a replayable [`Trace`]; a
//! branch whose atomic F-statements already refute `φ` yields a
//! countermodel. Branches can be infinite, so the search is bounded.

mod branch;
mod engine;
mod probe;
mod trace;

use std::fmt;

use serde_json::{json, Value};

pub use branch::{extract_model, Branch, Statement};
pub use probe::{probe, ProbeReport};
pub use trace::{BranchInfo, Step, Trace, TraceStatement};

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::partition::Universe;
use crate::semantics::{check_partition_tautology, eval, Assignment};
use engine::{Action, Alt, Recorder, State, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    T,
    F,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::T => Sign::F,
            Sign::F => Sign::T,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::T => "T",
            Sign::F => "F",
        })
    }
}

/// Tableau rules as they appear in traces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Root,
    FOr,
    TAnd,
    TOr,
    TImp,
    TNand,
    TAntiTrans,
    FTrans,
    FImp,
    FAnd,
    FNand,
    Close,
    BranchClosingLemma,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Root => "root",
            Rule::FOr => "F-or",
            Rule::TAnd => "T-and",
            Rule::TOr => "T-or",
            Rule::TImp => "T-imp",
            Rule::TNand => "T-nand",
            Rule::TAntiTrans => "T-anti-trans",
            Rule::FTrans => "F-trans",
            Rule::FImp => "F-imp",
            Rule::FAnd => "F-and",
            Rule::FNand => "F-nand",
            Rule::Close => "close",
            Rule::BranchClosingLemma => "branch-closing-lemma",
        }
    }

    pub fn closes(self) -> bool {
        matches!(self, Rule::Close | Rule::BranchClosingLemma)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProverConfig {
    /// Largest universe a branch may grow to; at least 2.
    pub max_elements: usize,
    /// Budget of rule applications over the whole search.
    pub max_steps: usize,
    /// Close branches early with the branch-closing lemma.
    pub prune: bool,
}

impl Default for ProverConfig {
    fn default() -> Self {
        ProverConfig {
            max_elements: 8,
            max_steps: 200_000,
            prune: true,
        }
    }
}

impl ProverConfig {
    pub fn with_max_elements(mut self, max_elements: usize) -> Self {
        self.max_elements = max_elements;
        self
    }

    pub fn with_max_steps(mut self, max_steps: usize) -> Self {
        self.max_steps = max_steps;
        self
    }

    pub fn without_pruning(mut self) -> Self {
        self.prune = false;
        self
    }
}

/// Why a search ended without a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnknownReason {
    MaxElements,
    MaxSteps,
    /// Every rule was applied but the atomic model does not refute the root.
    Saturated,
}

impl UnknownReason {
    pub fn as_str(self) -> &'static str {
        match self {
            UnknownReason::MaxElements => "max_elements",
            UnknownReason::MaxSteps => "max_steps",
            UnknownReason::Saturated => "saturated",
        }
    }
}

impl fmt::Display for UnknownReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ProverOutcome {
    Proved(Trace),
    /// `pair` is the root pair, which `assignment` fails to distinguish.
    Countermodel {
        assignment: Assignment,
        pair: (String, String),
    },
    Unknown(UnknownReason),
}

impl ProverOutcome {
    pub fn verdict(&self) -> &'static str {
        match self {
            ProverOutcome::Proved(_) => "proved",
            ProverOutcome::Countermodel { .. } => "countermodel",
            ProverOutcome::Unknown(_) => "unknown",
        }
    }

    pub fn is_proved(&self) -> bool {
        matches!(self, ProverOutcome::Proved(_))
    }

    pub fn is_countermodel(&self) -> bool {
        matches!(self, ProverOutcome::Countermodel { .. })
    }

    /// With `with_trace` false a proof reports only its step count.
    pub fn to_json(&self, with_trace: bool) -> Value {
        match self {
            ProverOutcome::Proved(trace) if with_trace => json!({
                "schema": crate::SCHEMA,
                "verdict": "proved",
                "trace": trace.steps_json(),
                "branches": trace.branches_json(),
            }),
            ProverOutcome::Proved(trace) => json!({
                "schema": crate::SCHEMA,
                "verdict": "proved",
                "steps": trace.steps.len(),
            }),
            ProverOutcome::Countermodel { assignment, pair } => json!({
                "schema": crate::SCHEMA,
                "verdict": "countermodel",
                "model": assignment.to_json(),
                "pair": [pair.0, pair.1],
            }),
            ProverOutcome::Unknown(reason) => json!({
                "schema": crate::SCHEMA,
                "verdict": "unknown",
                "reason": reason.as_str(),
            }),
        }
    }
}

enum Verdict {
    Closed,
    Open(State, Vec<crate::partition::Partition>),
    Unknown(UnknownReason),
    Abort,
}

struct Search<'a> {
    table: &'a Table,
    cfg: ProverConfig,
    rec: Recorder,
}

impl Search<'_> {
    fn explore(&mut self, mut st: State) -> Verdict {
        let verdict = match st.run(self.table, &mut self.rec) {
            Action::Closed => Verdict::Closed,
            Action::Open(model) => return Verdict::Open(st, model),
            Action::MaxSteps => return Verdict::Abort,
            Action::Saturated => Verdict::Unknown(UnknownReason::Saturated),
            Action::Split(alts) => self.split(&st, alts),
        };
        if matches!(verdict, Verdict::Closed) {
            self.rec.branches[st.branch].closed = true;
        }
        verdict
    }

    fn split(&mut self, st: &State, alts: Vec<Alt>) -> Verdict {
        let mut unknown = None;
        for alt in alts {
            if st.n + alt.fresh > self.cfg.max_elements {
                if alt.essential {
                    unknown.get_or_insert(UnknownReason::MaxElements);
                }
                continue;
            }
            let mut child = st.clone();
            child.branch = self.rec.open_branch(Some(st.branch), alt.essential);
            child.apply(self.table, &mut self.rec, &alt);
            match self.explore(child) {
                Verdict::Closed => {}
                Verdict::Unknown(r) => {
                    if alt.essential {
                        unknown.get_or_insert(r);
                    }
                }
                done @ (Verdict::Open(..) | Verdict::Abort) => return done,
            }
        }
        match unknown {
            Some(r) => Verdict::Unknown(r),
            None => Verdict::Closed,
        }
    }
}

/// Runs the tableau for `(u0,u1):F f`. Derived connectives are desugared first.
///
/// The element bound is raised one at a time from 2 to `cfg.max_elements`,
/// so the first countermodel found is a smallest one the search reaches;
/// all rounds share the step budget.
///
/// # Panics
/// If `cfg.max_elements < 2`.
pub fn prove(f: &Formula, cfg: ProverConfig) -> ProverOutcome {
    assert!(cfg.max_elements >= 2, "max_elements must be at least 2");
    let root = f.desugar();
    let table = Table::new(&root);
    let mut spent = 0;
    for bound in 2..=cfg.max_elements {
        let mut search = Search {
            table: &table,
            cfg: cfg.with_max_elements(bound),
            rec: Recorder::new(cfg.max_steps - spent),
        };
        let mut st = State::new(&table, bound, cfg.prune);
        st.branch = search.rec.open_branch(None, true);
        st.add_root(&table, &mut search.rec);
        let v = search.explore(st);
        match v {
            Verdict::Closed => return ProverOutcome::Proved(Trace::from_recorder(&table, search.rec)),
            Verdict::Open(st, model) => {
                let u = Universe::with_prefix("u", st.n).expect("at least two elements");
                let mut assignment = Assignment::new(&u);
                for (name, p) in table.atoms.iter().zip(model) {
                    assignment.bind(name.clone(), p).expect("same universe");
                }
                return ProverOutcome::Countermodel {
                    assignment,
                    pair: ("u0".into(), "u1".into()),
                };
            }
            Verdict::Unknown(UnknownReason::MaxElements) => spent += search.rec.steps_taken,
            Verdict::Unknown(r) => return ProverOutcome::Unknown(r),
            Verdict::Abort => return ProverOutcome::Unknown(UnknownReason::MaxSteps),
        }
        if spent >= cfg.max_steps {
            return ProverOutcome::Unknown(UnknownReason::MaxSteps);
        }
    }
    ProverOutcome::Unknown(UnknownReason::MaxElements)
}

/// Cross-checks an outcome against the semantics. A countermodel must leave
/// its pair undistinguished; a proof must replay and survive exhaustive
/// search on universes of up to 3 elements.
pub fn verify_outcome(f: &Formula, o: &ProverOutcome) -> Result<()> {
    match o {
        ProverOutcome::Countermodel { assignment, pair } => {
            let u = assignment.universe();
            let idx = |l: &str| u.index_of(l).ok_or_else(|| Error::UnknownElement(l.to_string()));
            let (i, j) = (idx(&pair.0)?, idx(&pair.1)?);
            let value = eval(f, assignment)?;
            if i == j || !value.same_block(i, j) {
                return Err(Error::VerificationFailed(format!(
                    "the model distinguishes ({}, {})",
                    pair.0, pair.1
                )));
            }
            Ok(())
        }
        ProverOutcome::Proved(trace) => {
            trace.replay()?;
            if let Some(root) = trace.statements.first() {
                if root.formula != f.desugar() || root.sign != Sign::F || root.pair != (0, 1) {
                    return Err(Error::VerificationFailed("trace root is not (u0,u1):F f".into()));
                }
            }
            let check = check_partition_tautology(f, 3)?;
            if check.is_countermodel() {
                return Err(Error::VerificationFailed(
                    "proved, but exhaustive search finds a countermodel".into(),
                ));
            }
            Ok(())
        }
        ProverOutcome::Unknown(_) => Ok(()),
    }
}

#[cfg(test)]
mod tests;
