use thiserror::Error;

use crate::liealg::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: A is {a_rows}x{a_cols} but B is {b_rows}x{b_cols}")]
    ShapeMismatch {
        a_rows: usize,
        a_cols: usize,
        b_rows: usize,
        b_cols: usize,
    },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("the zero form has no factorization")]
    ZeroForm,

    #[error("gcd of an all-zero family is undefined")]
    AllZero,

    #[error("invalid rational `{0}`")]
    ParseRational(String),

    #[error("malformed input at {context}: {message}")]
    Input { context: String, message: String },

    #[error("axiom violation: {0}")]
    Violation(Violation),

    #[error(
        "symbolic path unavailable: {minors} minors exceed the ceiling of {ceiling}; \
         use the pencil-based semi-invariant degree instead"
    )]
    SymbolicCeiling { minors: u128, ceiling: u128 },

    #[error("span(x, a) lies in the singular set: pencil rank {rank} < regular rank {regular}")]
    DegenerateSpan { rank: usize, regular: usize },

    #[error("point is not regular: rank {rank} < regular rank {regular}")]
    NotRegular { rank: usize, regular: usize },

    #[error("polynomial is not invariant: generator e{generator} gives residual {residual}")]
    NotInvariant { generator: usize, residual: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown zoo entry `{0}`")]
    UnknownZoo(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn input(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Input {
            context: context.into(),
            message: message.into(),
        }
    }
}
