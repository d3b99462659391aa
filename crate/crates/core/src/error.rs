use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the enumeration engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The entries are not exactly `1..=n`.
    NotAPermutation,
    /// Two sequences that must line up have different lengths.
    LengthMismatch { expected: usize, found: usize },
    /// Vector operations on different dimensions.
    DimensionMismatch { left: usize, right: usize },
    /// Vector coordinates must be positive.
    ZeroCoordinate { index: usize },
    /// A dotted peg entry can only be inflated by a single point.
    DottedInflation { index: usize, length: u32 },
    /// The operation requires a compact peg permutation.
    NotCompact,
    /// A brute-force check was asked for a size above its configured limit.
    LimitExceeded { n: usize, limit: usize },
    /// Text could not be parsed.
    Parse { token: String, reason: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAPermutation => f.write_str("entries do not form a permutation of 1..n"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::ZeroCoordinate { index } => {
                write!(f, "coordinate {index} is zero; vectors are positive")
            }
            Error::DottedInflation { index, length } => write!(
                f,
                "dotted entry {index} cannot be inflated by a run of length {length}"
            ),
            Error::NotCompact => f.write_str("peg permutation is not compact"),
            Error::LimitExceeded { n, limit } => {
                write!(f, "size {n} exceeds the brute-force limit {limit}")
            }
            Error::Parse { token, reason } => write!(f, "cannot parse {token:?}: {reason}"),
        }
    }
}

impl core::error::Error for Error {}
