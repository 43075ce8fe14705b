use serde_json::{json, Value};

use super::engine::{Recorder, Table};
use super::{Rule, Sign};
use crate::error::{Error, Result};
use crate::formula::Formula;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStatement {
    pub id: usize,
    pub branch: usize,
    /// Element indices with `pair.0 < pair.1`; element `k` is labelled `uk`.
    pub pair: (usize, usize),
    pub sign: Sign,
    pub formula: Formula,
}

impl TraceStatement {
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "pair": [format!("u{}", self.pair.0), format!("u{}", self.pair.1)],
            "sign": self.sign.to_string(),
            "formula": self.formula.to_text(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    pub branch: usize,
    /// The statement the rule was applied to, if any.
    pub target: Option<usize>,
    pub premises: Vec<usize>,
    pub conclusions: Vec<usize>,
    pub new_elements: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchInfo {
    pub id: usize,
    pub parent: Option<usize>,
    /// Non-essential branches (back-chains, mixed chains) only serve to find
    /// small countermodels; a proof does not depend on them.
    pub essential: bool,
    /// Id of the first statement created on this branch.
    pub start: usize,
    pub closed: bool,
}

/// Every statement, rule application and branch of a search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub statements: Vec<TraceStatement>,
    pub steps: Vec<Step>,
    pub branches: Vec<BranchInfo>,
}

impl Trace {
    pub(crate) fn from_recorder(t: &Table, rec: Recorder) -> Trace {
        let statements = rec
            .stmts
            .into_iter()
            .enumerate()
            .map(|(id, s)| TraceStatement {
                id,
                branch: s.branch,
                pair: (s.key.i, s.key.j),
                sign: s.key.sign,
                formula: t.formulas[s.key.fid].clone(),
            })
            .collect();
        let steps = rec
            .steps
            .into_iter()
            .map(|s| Step {
                rule: s.rule,
                branch: s.branch,
                target: s.target,
                premises: s.premises,
                conclusions: s.conclusions,
                new_elements: s.new_elements,
            })
            .collect();
        let branches = rec
            .branches
            .into_iter()
            .enumerate()
            .map(|(id, b)| BranchInfo {
                id,
                parent: b.parent,
                essential: b.essential,
                start: b.start,
                closed: b.closed,
            })
            .collect();
        Trace {
            statements,
            steps,
            branches,
        }
    }

    pub fn steps_json(&self) -> Value {
        let label = |e: &usize| format!("u{e}");
        Value::Array(
            self.steps
                .iter()
                .map(|s| {
                    json!({
                        "rule": s.rule.name(),
                        "branch": s.branch,
                        "target": s.target,
                        "premises": s.premises,
                        "conclusions": s.conclusions.iter().map(|&c| self.statements[c].to_json()).collect::<Vec<_>>(),
                        "new_elements": s.new_elements.iter().map(label).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }

    pub fn branches_json(&self) -> Value {
        Value::Array(
            self.branches
                .iter()
                .map(|b| json!({"id": b.id, "parent": b.parent, "essential": b.essential, "closed": b.closed}))
                .collect(),
        )
    }

    /// Whether statement `s` is on branch `b`: created on `b`, or on an
    /// ancestor before the path to `b` forked off.
    pub fn on_branch(&self, s: usize, b: usize) -> bool {
        let owner = self.statements[s].branch;
        let mut cur = b;
        let mut limit = usize::MAX;
        loop {
            if cur == owner {
                return s < limit;
            }
            limit = self.branches[cur].start;
            match self.branches[cur].parent {
                Some(p) => cur = p,
                None => return false,
            }
        }
    }

    fn fail(msg: String) -> Result<()> {
        Err(Error::VerificationFailed(msg))
    }

    /// Checks that every premise exists on the step's branch before its
    /// conclusions, and that the root branch is closed: every branch either
    /// ends in a closing step or has all its essential children closed.
    pub fn replay(&self) -> Result<()> {
        for (id, s) in self.statements.iter().enumerate() {
            if s.id != id || s.branch >= self.branches.len() || s.pair.0 >= s.pair.1 {
                return Self::fail(format!("malformed statement {id}"));
            }
        }
        for (n, step) in self.steps.iter().enumerate() {
            let first = step.conclusions.iter().min().copied().unwrap_or(usize::MAX);
            for &c in &step.conclusions {
                if c >= self.statements.len() || self.statements[c].branch != step.branch {
                    return Self::fail(format!("step {n} ({}) concludes a foreign statement {c}", step.rule));
                }
            }
            for &p in step.premises.iter().chain(&step.target) {
                if p >= self.statements.len() || p >= first || !self.on_branch(p, step.branch) {
                    return Self::fail(format!(
                        "step {n} ({}) uses statement {p} that is not on branch {} before its conclusions",
                        step.rule, step.branch
                    ));
                }
            }
        }
        let mut closes = vec![false; self.branches.len()];
        for step in &self.steps {
            if step.rule.closes() {
                closes[step.branch] = true;
            }
        }
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); self.branches.len()];
        for b in &self.branches {
            if let Some(p) = b.parent {
                children[p].push(b.id);
            }
        }
        // Children have larger ids than their parents.
        let mut proved = vec![false; self.branches.len()];
        for b in (0..self.branches.len()).rev() {
            let essential: Vec<usize> = children[b]
                .iter()
                .copied()
                .filter(|&c| self.branches[c].essential)
                .collect();
            proved[b] = closes[b] || (!essential.is_empty() && essential.iter().all(|&c| proved[c]));
        }
        match proved.first() {
            Some(true) => Ok(()),
            Some(false) => Self::fail("the root branch is not closed".into()),
            None => Self::fail("empty trace".into()),
        }
    }
}
