use thiserror::Error;

/// Errors raised when inputs fall outside an operation's domain or a
/// resource limit is hit. Property failures (a family that is not disjoint,
/// a design that is not balanced, ...) are reported through the dedicated
/// violation types of each module instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape (m={m}, n={n}): need m > n >= 2")]
    InvalidShape { m: usize, n: usize },

    #[error("pair ordering: expected i < j, got i={i}, j={j}")]
    PairOrder { i: usize, j: usize },

    #[error("point {point} out of range for m={m}")]
    PointOutOfRange { point: usize, m: usize },

    #[error("color function has length {len}, expected {m}")]
    LengthMismatch { len: usize, m: usize },

    #[error("color {color} at point {point} is not below n={n}")]
    ColorOutOfRange { point: usize, color: usize, n: usize },

    #[error("family is empty")]
    EmptyFamily,

    #[error("family members disagree on shape: ({m0},{n0}) vs ({m1},{n1})")]
    MixedShapes {
        m0: usize,
        n0: usize,
        m1: usize,
        n1: usize,
    },

    #[error("enumeration of {what} needs {needed} items, above the limit {limit}")]
    Budget {
        what: String,
        needed: u128,
        limit: u128,
    },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not constructed: {0}")]
    Unsupported(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Malformed(e.to_string())
    }
}
