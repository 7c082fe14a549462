use thiserror::Error;

/// Errors produced by the numeric core and the coding machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cell ({row}, {col}) is not a cell of {partition}")]
    InvalidCell {
        row: usize,
        col: usize,
        partition: String,
    },

    #[error("modulus must be positive")]
    NonPositiveModulus,

    #[error("modulus {0} must be an odd integer >= 3")]
    EvenOrSmallModulus(usize),

    #[error("{partition} is not a {t}-core")]
    NotTCore { partition: String, t: usize },

    #[error("invalid coding: {0}")]
    InvalidCoding(String),

    #[error("series precondition violated: {0}")]
    SeriesDomain(&'static str),

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    #[error("bad parameter: {0}")]
    BadParam(String),
}

pub type Result<T> = std::result::Result<T, Error>;
