use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("constant at offset {offset} must be strictly positive")]
    NonPositiveConstant { offset: usize },

    #[error("numeric literal at offset {offset} does not fit a 64-bit rational")]
    LiteralOverflow { offset: usize },

    #[error("log10(n) = {x} is below the domain floor n >= 2")]
    Domain { x: f64 },

    #[error("expression overflows the log10 representation at log10(n) = {x}")]
    Overflow { x: f64 },

    #[error("asymptotic comparison did not reach a stable verdict")]
    Inconclusive,

    #[error("overhead constant must be >= 1 (got 10^{log10})")]
    InvalidConstant { log10: f64 },

    #[error("no crossover found below log10(n) = {cap}")]
    BracketFailed { cap: f64 },

    #[error("invalid scenario `{name}`: {message}")]
    InvalidScenario { name: String, message: String },

    #[error("roadmap fit needs at least 2 usable points (got {0})")]
    InsufficientData(usize),

    #[error("roadmap points all share the same year")]
    DegenerateData,

    #[error("fitted qubit growth is not increasing (slope {0})")]
    NonIncreasingGrowth(f64),

    #[error("invalid roadmap point: {0}")]
    InvalidRoadmapPoint(String),

    #[error("qubit requirement `{0}` is not nondecreasing in n")]
    NonMonotoneQubitRequirement(String),

    #[error("catalog row {row}: {message}")]
    Schema { row: usize, message: String },

    #[error("catalog row {row}, field `{field}`: {source}")]
    Expression {
        row: usize,
        field: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("catalog row {row}: label `{label}` is not asymptotically equal to the classical runtime")]
    LabelMismatch { row: usize, label: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("unknown roadmap provider `{0}`")]
    UnknownProvider(String),

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error("invalid parameter `{name}`: {message}")]
    InvalidParameter { name: &'static str, message: String },

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Character offset into the offending expression text, when known.
    pub fn offset(&self) -> Option<usize> {
        match self {
            Error::Syntax { offset, .. }
            | Error::NonPositiveConstant { offset }
            | Error::LiteralOverflow { offset } => Some(*offset),
            Error::Expression { source, .. } => source.offset(),
            _ => None,
        }
    }

    /// True when the error names something that does not exist (HTTP 404).
    pub fn is_not_found(&self) -> bool {
        matches!(
            self,
            Error::UnknownEntry(_) | Error::UnknownProvider(_) | Error::UnknownScenario(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
