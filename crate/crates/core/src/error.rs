use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("group order exceeds cap of {cap} elements")]
    OrderExceedsCap { cap: usize },
    #[error("element order exceeds {0}; input is not a finite-order matrix")]
    OrderBoundExceeded(u64),
    #[error("subspace is not invariant under {0}")]
    NotInvariant(String),
    #[error("not a complement: {0}")]
    NotAComplement(String),
    #[error("unexpected group shape: {0}")]
    UnexpectedShape(String),
    #[error("polynomial is not invariant: {0}")]
    NotInvariantPolynomial(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
