//! The sixteen binary operations and their normal forms in the primitives.

use std::fmt;

use super::{DualFormula, Formula};
use crate::ops::BoolOpTable;

/// Atom names used by the normal-form tables.
pub const SIGMA: &str = "s";
pub const TAU: &str = "t";

/// One of the 16 binary logical operations, named by its subset form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpCode {
    Zero,
    Nor,
    /// `σ∧¬τ`
    SigmaAndNotTau,
    NotTau,
    /// `¬σ∧τ`
    NotSigmaAndTau,
    NotSigma,
    Inequiv,
    Nand,
    Meet,
    Equiv,
    Sigma,
    /// `τ⇒σ`
    ConverseImpl,
    Tau,
    Impl,
    Join,
    One,
}

impl OpCode {
    pub const ALL: [OpCode; 16] = [
        OpCode::Zero,
        OpCode::Nor,
        OpCode::SigmaAndNotTau,
        OpCode::NotTau,
        OpCode::NotSigmaAndTau,
        OpCode::NotSigma,
        OpCode::Inequiv,
        OpCode::Nand,
        OpCode::Meet,
        OpCode::Equiv,
        OpCode::Sigma,
        OpCode::ConverseImpl,
        OpCode::Tau,
        OpCode::Impl,
        OpCode::Join,
        OpCode::One,
    ];

    /// Truth table in `(TT, TF, FT, FF)` order.
    pub fn table(self) -> BoolOpTable {
        let bits = match self {
            OpCode::Zero => [false, false, false, false],
            OpCode::Nor => [false, false, false, true],
            OpCode::SigmaAndNotTau => [false, true, false, false],
            OpCode::NotTau => [false, true, false, true],
            OpCode::NotSigmaAndTau => [false, false, true, false],
            OpCode::NotSigma => [false, false, true, true],
            OpCode::Inequiv => [false, true, true, false],
            OpCode::Nand => [false, true, true, true],
            OpCode::Meet => [true, false, false, false],
            OpCode::Equiv => [true, false, false, true],
            OpCode::Sigma => [true, true, false, false],
            OpCode::ConverseImpl => [true, true, false, true],
            OpCode::Tau => [true, false, true, false],
            OpCode::Impl => [true, false, true, true],
            OpCode::Join => [true, true, true, false],
            OpCode::One => [true, true, true, true],
        };
        BoolOpTable::new(bits)
    }

    pub fn from_table(table: BoolOpTable) -> OpCode {
        *Self::ALL
            .iter()
            .find(|op| op.table() == table)
            .expect("every table has an opcode")
    }

    /// Symbolic name, e.g. `σ⇒τ`.
    pub fn symbol(self) -> &'static str {
        match self {
            OpCode::Zero => "0",
            OpCode::Nor => "nor",
            OpCode::SigmaAndNotTau => "τ⇍σ",
            OpCode::NotTau => "¬τ",
            OpCode::NotSigmaAndTau => "σ⇍τ",
            OpCode::NotSigma => "¬σ",
            OpCode::Inequiv => "≢",
            OpCode::Nand => "|",
            OpCode::Meet => "∧",
            OpCode::Equiv => "≡",
            OpCode::Sigma => "σ",
            OpCode::ConverseImpl => "τ⇒σ",
            OpCode::Tau => "τ",
            OpCode::Impl => "σ⇒τ",
            OpCode::Join => "∨",
            OpCode::One => "1",
        }
    }
}

impl fmt::Display for OpCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

fn s() -> Formula {
    Formula::atom(SIGMA)
}

fn t() -> Formula {
    Formula::atom(TAU)
}

fn all_of(parts: Vec<Formula>) -> Formula {
    parts.into_iter().reduce(Formula::meet).expect("non-empty row")
}

/// The partition CNF of `op` over the atoms [`SIGMA`] and [`TAU`], built
/// from the clauses `σ∨τ`, `σ⇒τ`, `τ⇒σ` and `σ|τ`. The constant 1 has no
/// clauses and is given as `σ⇒σ`.
pub fn cnf_of(op: OpCode) -> Formula {
    let or = || Formula::join(s(), t());
    let st = || Formula::implies(s(), t());
    let ts = || Formula::implies(t(), s());
    let nand = || Formula::nand(s(), t());
    match op {
        OpCode::Zero => all_of(vec![or(), st(), ts(), nand()]),
        OpCode::Nor => all_of(vec![st(), ts(), nand()]),
        OpCode::SigmaAndNotTau => all_of(vec![or(), ts(), nand()]),
        OpCode::NotTau => all_of(vec![ts(), nand()]),
        OpCode::NotSigmaAndTau => all_of(vec![or(), st(), nand()]),
        OpCode::NotSigma => all_of(vec![st(), nand()]),
        OpCode::Inequiv => all_of(vec![or(), nand()]),
        OpCode::Nand => nand(),
        OpCode::Meet => all_of(vec![or(), st(), ts()]),
        OpCode::Equiv => all_of(vec![st(), ts()]),
        OpCode::Sigma => all_of(vec![or(), ts()]),
        OpCode::ConverseImpl => ts(),
        OpCode::Tau => all_of(vec![or(), st()]),
        OpCode::Impl => st(),
        OpCode::Join => or(),
        OpCode::One => Formula::implies(s(), s()),
    }
}

/// The equivalence-relation DNF of the dual operation with the same truth
/// table as `op`, read on `indit` relations. Its value is the closure of the
/// union of the minterms `σ^d∧τ^d`, `σ^d−τ^d`, `τ^d−σ^d` and `σ^d nor τ^d`
/// selected by the table. The empty row is given as `σ^d−σ^d`.
pub fn dnf_dual_of(op: OpCode) -> DualFormula {
    let sd = || DualFormula::atom(SIGMA);
    let td = || DualFormula::atom(TAU);
    let and = || DualFormula::meet(sd(), td());
    let s_t = || DualFormula::diff(sd(), td());
    let t_s = || DualFormula::diff(td(), sd());
    let nor = || DualFormula::nor(sd(), td());
    let any_of = |parts: Vec<DualFormula>| parts.into_iter().reduce(DualFormula::join).expect("non-empty row");
    match op {
        OpCode::Zero => DualFormula::diff(sd(), sd()),
        OpCode::Nor => nor(),
        OpCode::SigmaAndNotTau => s_t(),
        OpCode::NotTau => any_of(vec![s_t(), nor()]),
        OpCode::NotSigmaAndTau => t_s(),
        OpCode::NotSigma => any_of(vec![t_s(), nor()]),
        OpCode::Inequiv => any_of(vec![t_s(), s_t()]),
        OpCode::Nand => any_of(vec![t_s(), nor(), s_t()]),
        OpCode::Meet => and(),
        OpCode::Equiv => any_of(vec![and(), nor()]),
        OpCode::Sigma => any_of(vec![and(), s_t()]),
        OpCode::ConverseImpl => any_of(vec![and(), s_t(), nor()]),
        OpCode::Tau => any_of(vec![and(), t_s()]),
        OpCode::Impl => any_of(vec![and(), t_s(), nor()]),
        OpCode::Join => any_of(vec![and(), s_t(), t_s()]),
        OpCode::One => any_of(vec![and(), s_t(), t_s(), nor()]),
    }
}
