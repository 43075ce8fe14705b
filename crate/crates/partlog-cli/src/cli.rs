use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Partition logic: evaluation, exhaustive tautology checks and a tableau prover.
///
/// Exit codes: 0 success (tautology up to the bound, or proved), 1
/// countermodel, 2 prover gave up, 64 usage or parse error, 65 bad model
/// file, 70 internal invariant violation.
#[derive(Debug, Parser)]
#[command(name = "partlog", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the syntax tree of a formula as JSON.
    Parse {
        formula: String,
        /// Replace derived connectives by primitives first.
        #[arg(long)]
        desugar: bool,
    },
    /// Evaluate a formula under a model file.
    Eval {
        formula: String,
        #[arg(long)]
        model: PathBuf,
    },
    /// Search all assignments on universes of 2 to max-n elements.
    Check {
        formula: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Only look for assignments that evaluate to 0.
        #[arg(long)]
        weak: bool,
    },
    /// Run the tableau prover.
    Prove {
        formula: String,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(2..=64))]
        max_elements: u64,
        #[arg(long, default_value_t = 200_000)]
        max_steps: usize,
        /// Include every rule application in the output.
        #[arg(long)]
        trace: bool,
        /// Do not close branches early with the branch-closing lemma.
        #[arg(long)]
        no_prune: bool,
    },
    /// Print the dual formula on equivalence relations.
    Dual { formula: String },
    /// Apply a π-negation or Gödel transform to a nand-free formula.
    Transform {
        formula: String,
        #[arg(long, value_enum)]
        kind: TransformKind,
        /// A fresh atom, or 0.
        #[arg(long)]
        pi: String,
    },
    /// Run every invariant check of the library.
    Identities {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(2..=5))]
        max_n: u64,
        /// Overridden by the PARTLOG_SEED environment variable.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Run only the named item; may be repeated.
        #[arg(long)]
        only: Vec<String>,
    },
    /// Logical entropy of an atom's partition in a model file.
    Entropy {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        atom: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TransformKind {
    SinglePi,
    DoublePi,
    Godel,
}
