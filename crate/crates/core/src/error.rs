use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {0} is outside 1..={max}", max = crate::cube::MAX_DIMENSION)]
    InvalidDimension(usize),

    #[error("coordinate {index} is outside 1..={dimension}")]
    CoordinateOutOfRange { index: usize, dimension: usize },

    #[error("a profile needs at least one entry")]
    EmptyProfile,

    #[error("exponent p = {0} must be finite and at least 1")]
    InvalidExponent(f64),

    #[error("invalid vertex string {text:?}: {reason}")]
    InvalidVertex { text: String, reason: String },

    #[error("dimension {dimension} exceeds the scan limit {limit} (raise it with --max-scan-n)")]
    ScanLimit { dimension: usize, limit: usize },

    #[error(
        "{ties} tied coordinates would expand to 2^{ties} winners, above the limit 2^{limit} \
         (raise it with --max-tie-expansion)"
    )]
    TieExpansionLimit { ties: usize, limit: usize },

    #[error("consensus function {name:?} returned an empty winner set")]
    EmptyOutput { name: String },

    #[error("consensus function {name:?} does not accept dimension {dimension}")]
    UnsupportedDimension { name: String, dimension: usize },

    #[error("{0}")]
    Parse(#[from] crate::ballot::ParseError),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("internal invariant breached: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ScanLimit { .. } | Error::TieExpansionLimit { .. } => 3,
            Error::Invariant(_) | Error::EmptyOutput { .. } => 4,
            _ => 2,
        }
    }
}
