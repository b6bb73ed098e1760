use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `a` and `b` must be distinct positive integers.
    InvalidParams { a: u64, b: u64 },
    /// An index or bound outside the documented domain of an operation.
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },
    /// A materialization or iteration cap was hit.
    ResourceLimit { what: &'static str, limit: u64 },
    /// Interval comparison still overlapping after the escalation budget.
    Undecidable { what: &'static str },
    /// A table row could not be decided, so constants cannot be fitted.
    UndecidedRow { i: usize },
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidParams { a, b } => {
                write!(f, "parameters must be distinct positive integers (a={a}, b={b})")
            }
            Self::OutOfRange {
                what,
                value,
                min,
                max,
            } => write!(f, "{what} = {value} outside [{min}, {max}]"),
            Self::ResourceLimit { what, limit } => {
                write!(f, "resource limit exceeded: {what} (limit {limit})")
            }
            Self::Undecidable { what } => {
                write!(f, "undecidable at resource limit: {what}")
            }
            Self::UndecidedRow { i } => write!(f, "row i={i} is undecided"),
            Self::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
