use thiserror::Error;

/// Errors raised by the arithmetic, curve and checker layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("operands live in different number fields")]
    FieldMismatch,

    #[error("level mismatch: expected `{expected}`, found `{found}`")]
    LevelMismatch { expected: String, found: String },

    #[error("point {point} does not lie on level `{level}`")]
    NotOnCurve { level: String, point: String },

    #[error("fiber is not rational over the working field: a root of {polynomial} (in `{variable}`) is needed")]
    FiberNotRational { variable: char, polynomial: String },

    #[error("the zero function has no valuation or divisor")]
    ZeroFunction,

    #[error("series precision exhausted at {cap} terms")]
    PrecisionExhausted { cap: usize },

    #[error("level `{level}` is not supported here: {reason}")]
    UnsupportedLevel { level: String, reason: String },

    #[error("function is not regular on the affine level (it has a pole)")]
    NotRegular,

    #[error("divisor is not effective")]
    NotEffective,

    #[error("the zero ideal has no radical in the finite Boolean ideal")]
    ZeroIdeal,

    #[error("interpolation degree cap {cap} exceeded")]
    InterpolationCap { cap: usize },

    #[error("invalid cover `{source_level} -> {target_level}`: {reason}")]
    InvalidCover {
        source_level: String,
        target_level: String,
        reason: String,
    },

    #[error("invalid level `{level}`: {reason}")]
    InvalidLevel { level: String, reason: String },

    #[error("invalid number field: {0}")]
    InvalidField(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("group action not well defined: {0}")]
    ActionNotWellDefined(String),

    #[error("basis classes are not certified independent within bound {bound}")]
    IndependenceNotCertified { bound: u32 },

    #[error("support on level `{0}` cannot be related to the working level")]
    UnrepresentableSupport(String),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse_at(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line: 1,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn unsupported(level: impl ToString, reason: impl Into<String>) -> Self {
        Error::UnsupportedLevel {
            level: level.to_string(),
            reason: reason.into(),
        }
    }
}
