//! Partition logic on finite universes.
//!
//! Partitions of a finite set form a lattice with an implication, dual to the
//! Boolean algebra of subsets. This crate implements that algebra
//! ([`partition`], [`relation`], [`ops`]), a formula language ([`formula`]),
//! evaluation and brute-force countermodel search ([`semantics`]) and a
//! semantic tableau prover with countermodel extraction ([`tableau`]).

pub mod error;
pub mod formula;
pub mod ops;
pub mod partition;
pub mod relation;
pub mod semantics;
pub mod suite;
pub mod tableau;

pub use error::{Error, ParseError, Result};
pub use formula::{DualFormula, Formula, OpCode, Pi};
pub use ops::{BoolOpTable, DualOp};
pub use partition::{bell, enumerate_partitions, Partition, Universe};
pub use relation::{from_equivalence, PairRelation, RelationKind};
pub use semantics::{Assignment, CheckResult};
pub use tableau::{ProverConfig, ProverOutcome};

/// Version tag carried by every JSON document this crate emits.
pub const SCHEMA: &str = "partlog/1";
