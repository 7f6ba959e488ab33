use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("d = {0} is not a squarefree integer >= 2")]
    InvalidField(u64),

    #[error("field context mismatch: d = {0} vs d = {1}")]
    ContextMismatch(u32, u32),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("columns are linearly dependent")]
    DependentColumns,

    #[error("matrix is not idempotent")]
    NotIdempotent,

    #[error("matrix is not Hermitian")]
    NotHermitian,

    #[error("matrix is not unitary")]
    NotUnitary,

    #[error("zero vector")]
    ZeroVector,

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),

    #[error("empty projection tuple")]
    EmptyTuple,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("images of an orthogonal decomposition are not mutually orthogonal")]
    NotOrthogonalityPreserving,

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("malformed input: {0}")]
    Format(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
