use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cyclotomic fields do not match: r={0} vs r={1}")]
    FieldMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("parameters d must sum to zero (sum is {0})")]
    SumNonZero(String),
    #[error("expected {expected} values for d, got {got}")]
    BadArity { expected: usize, got: usize },
    #[error("invalid rational literal: {0:?}")]
    BadRational(String),
    #[error("invalid label: {0}")]
    BadLabel(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("divided difference left a nonzero remainder")]
    NonZeroRemainder,
    #[error("case {0} does not apply to the given label and parameters")]
    InapplicableCase(String),
    #[error("recursive system is inconsistent: {0}")]
    InconsistentSystem(String),
    #[error("composite morphism is zero")]
    ZeroComposite,
    #[error("label mismatch: {0}")]
    LabelMismatch(String),
    #[error("subspace is not stable under the group")]
    NotStable,
    #[error("no rule assignment produces {0}")]
    NoAssignment(String),
}

pub type Result<T> = std::result::Result<T, Error>;
