use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("the family is defined for k >= 1, got k = {0}")]
    InvalidK(i64),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("Freeman sequence did not stabilize within {max_steps} steps")]
    NotStabilized { max_steps: usize },

    #[error("Levi form order {order} out of range 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },

    #[error("partial complex structure: {0}")]
    ComplexStructure(String),

    #[error("k mismatch between vector fields: {0} vs {1}")]
    KMismatch(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),
}
