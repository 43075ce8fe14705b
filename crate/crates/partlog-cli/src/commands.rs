use std::fs;
use std::path::Path;

use anyhow::anyhow;
use partlog::formula::{double_pi_neg_transform, dualize, godel_transform, parse, single_pi_neg_transform};
use partlog::semantics::{check_partition_tautology, check_weak, eval};
use partlog::suite::{self, SuiteConfig};
use partlog::tableau::{prove, verify_outcome};
use partlog::{Assignment, Error, Formula, Pi, ProverConfig, ProverOutcome};
use serde_json::{json, Value};

use crate::cli::{Command, TransformKind};

pub mod exit {
    pub const OK: u8 = 0;
    pub const COUNTERMODEL: u8 = 1;
    pub const UNKNOWN: u8 = 2;
    pub const USAGE: u8 = 64;
    pub const BAD_MODEL: u8 = 65;
    pub const SOFTWARE: u8 = 70;
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    fn new(code: u8, error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code,
            error: error.into(),
        }
    }

    fn usage(error: impl Into<anyhow::Error>) -> Self {
        Failure::new(exit::USAGE, error)
    }

    fn model(error: impl Into<anyhow::Error>) -> Self {
        Failure::new(exit::BAD_MODEL, error)
    }

    fn internal(error: impl Into<anyhow::Error>) -> Self {
        Failure::new(exit::SOFTWARE, error)
    }
}

/// Standard output and exit code.
pub type Output = Result<(String, u8), Failure>;

const SEED_VAR: &str = "PARTLOG_SEED";

pub fn run(command: Command) -> Output {
    match command {
        Command::Parse { formula, desugar } => {
            let mut f = formula_arg(&formula)?;
            if desugar {
                f = f.desugar();
            }
            ok_json(json!({"schema": partlog::SCHEMA, "formula": f.to_text(), "ast": f.to_json()}))
        }
        Command::Eval { formula, model } => {
            let f = formula_arg(&formula)?;
            let a = load_model(&model)?;
            let v = eval(&f, &a).map_err(Failure::model)?;
            ok_json(json!({
                "schema": partlog::SCHEMA,
                "formula": f.to_text(),
                "universe": a.universe().labels(),
                "value": v.block_labels(),
            }))
        }
        Command::Check { formula, max_n, weak } => {
            let f = formula_arg(&formula)?;
            if max_n < 2 {
                return Err(Failure::usage(anyhow!("--max-n must be at least 2")));
            }
            let r = if weak {
                check_weak(&f, max_n)
            } else {
                check_partition_tautology(&f, max_n)
            };
            let r = r.map_err(library)?;
            let code = if r.is_countermodel() {
                exit::COUNTERMODEL
            } else {
                exit::OK
            };
            Ok((pretty(&r.to_json()), code))
        }
        Command::Prove {
            formula,
            max_elements,
            max_steps,
            trace,
            no_prune,
        } => {
            let f = formula_arg(&formula)?;
            let mut cfg = ProverConfig::default()
                .with_max_elements(max_elements as usize)
                .with_max_steps(max_steps);
            if no_prune {
                cfg = cfg.without_pruning();
            }
            let o = prove(&f, cfg);
            verify_outcome(&f, &o).map_err(Failure::internal)?;
            let code = match o {
                ProverOutcome::Proved(_) => exit::OK,
                ProverOutcome::Countermodel { .. } => exit::COUNTERMODEL,
                ProverOutcome::Unknown(_) => exit::UNKNOWN,
            };
            Ok((pretty(&o.to_json(trace)), code))
        }
        Command::Dual { formula } => {
            let f = formula_arg(&formula)?;
            let d = dualize(&f.desugar()).map_err(Failure::internal)?;
            Ok((d.to_text(), exit::OK))
        }
        Command::Transform { formula, kind, pi } => {
            let f = formula_arg(&formula)?.desugar();
            let pi: Pi = pi.parse().map_err(Failure::usage)?;
            let g = match kind {
                TransformKind::SinglePi => single_pi_neg_transform(&f, &pi),
                TransformKind::DoublePi => double_pi_neg_transform(&f, &pi),
                TransformKind::Godel => godel_transform(&f, &pi),
            }
            .map_err(Failure::usage)?;
            Ok((g.to_text(), exit::OK))
        }
        Command::Identities { max_n, seed, only } => {
            let seed = match std::env::var(SEED_VAR) {
                Ok(s) => s
                    .trim()
                    .parse()
                    .map_err(|_| Failure::usage(anyhow!("{SEED_VAR} must be an unsigned integer, got `{s}`")))?,
                Err(_) => seed,
            };
            let cfg = SuiteConfig {
                max_n: max_n as usize,
                seed,
            };
            let report = if only.is_empty() {
                suite::run(&cfg)
            } else {
                let items = only
                    .iter()
                    .map(|name| suite::item(name).ok_or_else(|| Failure::usage(anyhow!("no suite item `{name}`"))))
                    .collect::<Result<Vec<_>, _>>()?;
                suite::SuiteReport {
                    config: cfg,
                    items: items.iter().map(|i| i.run(&cfg)).collect(),
                }
            };
            let code = if report.all_passed() { exit::OK } else { exit::SOFTWARE };
            Ok((pretty(&report.to_json()), code))
        }
        Command::Entropy { model, atom } => {
            if !partlog::formula::is_atom_name(&atom) {
                return Err(Failure::usage(anyhow!("`{atom}` is not an atom name")));
            }
            let a = load_model(&model)?;
            let p = a
                .get(&atom)
                .ok_or_else(|| Failure::model(Error::UnboundAtom(atom.clone())))?;
            let h = p.logical_entropy();
            ok_json(json!({
                "schema": partlog::SCHEMA,
                "atom": atom,
                "partition": p.block_labels(),
                "dits": p.dit_count(),
                "entropy": h.to_string(),
            }))
        }
    }
}

fn formula_arg(text: &str) -> Result<Formula, Failure> {
    parse(text).map_err(Failure::usage)
}

fn load_model(path: &Path) -> Result<Assignment, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::model(anyhow!("cannot read {}: {e}", path.display())))?;
    Assignment::from_json_str(&text).map_err(Failure::model)
}

/// Errors from a search: a blown budget is a usage problem, anything else a bug.
fn library(e: Error) -> Failure {
    match e {
        Error::BudgetExceeded { .. } | Error::TooLarge(_) => Failure::usage(e),
        other => Failure::internal(other),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values serialize")
}

fn ok_json(v: Value) -> Output {
    Ok((pretty(&v), exit::OK))
}
