use thiserror::Error;

/// Errors raised by the algebra engine, the instance builders and the
/// expression parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{what} is only defined for nonnegative arguments, got {value}")]
    NegativeArgument { what: &'static str, value: i64 },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("matrix must be square with {rank} rows, got {detail}")]
    NotSquare { rank: usize, detail: String },

    #[error("label `{label}` does not belong to `{space}`")]
    ForeignLabel { label: String, space: String },

    #[error("dual pair is not compatible: chi' != -(gamma')^T")]
    Incompatible,

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("matrix ([k<i,j>]) is singular at k = {k}")]
    SingularForm { k: u32 },

    #[error("no Heisenberg double: {0}")]
    NoDouble(String),

    #[error("malformed presentation: {0}")]
    Presentation(String),

    #[error("image reaches degree {needed} but the output window stops at {window}")]
    WindowTooSmall { needed: u64, window: u64 },

    #[error("syntax error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid instance config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
