use std::fmt;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("a universe needs at least two elements, got {0}")]
    UniverseTooSmall(usize),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("block {0} is empty")]
    EmptyBlock(usize),
    #[error("element `{element}` appears in blocks {first} and {second}")]
    OverlappingBlocks {
        element: String,
        first: usize,
        second: usize,
    },
    #[error("elements not covered by any block: {}", .0.join(", "))]
    MissingElements(Vec<String>),
    #[error("relation is not an equivalence: {0}")]
    NotEquivalence(String),
    #[error("relation is not a partition relation: {0}")]
    NotPartitionRelation(String),
    #[error("operands live on different universes")]
    UniverseMismatch,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("atom `{0}` is not bound")]
    UnboundAtom(String),
    #[error("`{0}` is a derived connective; desugar the formula first")]
    NotDesugared(&'static str),
    #[error("atom `{0}` already occurs in the formula")]
    AtomCollision(String),
    #[error("the formula contains a nand")]
    NandPresent,
    #[error("{needed} evaluations exceed the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("partition is not regular relative to the reference partition")]
    NotPiRegular,
    #[error("the branch is closed")]
    BranchClosed,
    #[error("the branch still has pending rule applications")]
    BranchIncomplete,
    #[error("formula is not a subformula of the branch root: {0}")]
    ForeignFormula(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A syntax error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: expected ", self.position)?;
        match self.expected.as_slice() {
            [] => write!(f, "nothing")?,
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for ParseError {}
