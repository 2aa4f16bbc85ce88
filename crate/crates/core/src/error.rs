use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label must be a positive integer, got {0}")]
    InvalidLabel(u64),
    #[error("duplicate label {0}")]
    DuplicateLabel(u32),
    #[error("operands share labels {0:?}")]
    OverlappingLabels(Vec<u32>),
    #[error("{what} = {value} is outside the supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("basis kind mismatch: expected {expected}, found {found}")]
    BasisKindMismatch { expected: String, found: String },
    #[error("generator labels must be present on every internal node or on none")]
    MixedGenerators,
    #[error("dendriform operand is the empty tree")]
    EmptyOperand,
    #[error("term {0} is not in normalized writing")]
    NotNormalized(String),
    #[error("tree {0} is not in A[S]")]
    NotTypeA(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("power series has nonzero constant term")]
    NonzeroConstantTerm,
    #[error("power series has zero linear coefficient, no compositional inverse")]
    NotInvertible,
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("generating series kinds differ: {0} vs {1}")]
    SeriesKindMismatch(String, String),
    #[error("invalid number {0:?}")]
    InvalidNumber(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}
