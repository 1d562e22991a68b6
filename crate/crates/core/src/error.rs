use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live in symmetric groups of different degree.
    DegreeMismatch { left: usize, right: usize },
    /// Degree outside the supported range.
    DegreeOutOfRange { degree: usize, max: usize },
    /// The image sequence is not a bijection of `1..=n`.
    NotABijection,
    /// Parts do not describe a partition of the stated degree.
    InvalidCycleType,
    /// Textual input could not be parsed.
    Parse(String),
    /// An `A_n` label or element was requested for an odd permutation or type.
    OddParity,
    /// Labels belong to different groups.
    GroupMismatch,
    /// A label is malformed for its group (spin on a non-split class, etc).
    InvalidLabel(String),
    /// An operation was called outside its stated precondition.
    Precondition(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::DegreeOutOfRange { degree, max } => {
                write!(f, "degree {degree} outside supported range 1..={max}")
            }
            Error::NotABijection => f.write_str("image sequence is not a bijection"),
            Error::InvalidCycleType => f.write_str("parts do not form a partition of the degree"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::OddParity => f.write_str("odd permutation or cycle type has no class in A_n"),
            Error::GroupMismatch => f.write_str("class labels belong to different groups"),
            Error::InvalidLabel(msg) => write!(f, "invalid class label: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
