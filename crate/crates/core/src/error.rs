use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("rings with up to {max} variables are supported, got {got}")]
    TooManyVariables { got: usize, max: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("relation column {column} is not homogeneous: found degrees {first} and {second}")]
    NonHomogeneousRelation { column: usize, first: i64, second: i64 },

    #[error("ring mismatch")]
    RingMismatch,

    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    #[error("degree limit {cap} exceeded (reached degree {reached})")]
    DegreeLimitExceeded { cap: u32, reached: u32 },

    #[error("degree {degree} lies outside the oracle window [-{window}, {window}]")]
    WindowExceeded { degree: i64, window: i64 },

    #[error("operation is undefined on the zero module")]
    ZeroModule,

    #[error("element must be nonzero")]
    ZeroElement,

    #[error("element must be homogeneous of positive degree")]
    NotPositiveDegree,

    #[error("no filter-regular element of degree {degree} found after {retries} draws")]
    RetriesExhausted { degree: u32, retries: u32 },

    #[error("degree list has length {got} but the module has dimension {expected}")]
    ChainLength { expected: i64, got: usize },

    #[error("element is not filter regular on the module")]
    NotFilterRegular,

    #[error("not a complex: {0}")]
    NotAComplex(String),

    #[error("{line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, column, message: message.into() }
    }
}
