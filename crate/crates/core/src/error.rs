use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    UnsupportedType(String),
    RankOutOfRange { kind: char, rank: usize, max: usize },
    NonIntegralCoroot,
    WeylBoundExceeded { bound: usize },
    /// A computation needed a Nichols degree beyond the constructed truncation.
    DegreeOverflow { requested: usize, built: usize },
    InhomogeneousInput,
    /// A Demazure numerator was not divisible by its root; always a convention bug.
    NotDivisible(String),
    InvalidConstants(String),
    Parse(String),
    CoordinateMismatch,
    NoMatching(String),
    KernelSearchFailed(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedType(s) => write!(f, "unsupported root system type `{s}`"),
            Error::RankOutOfRange { kind, rank, max } => {
                write!(f, "rank {rank} out of range for type {kind} (max {max})")
            }
            Error::NonIntegralCoroot => f.write_str("coroot has non-integral simple-coroot coordinates"),
            Error::WeylBoundExceeded { bound } => write!(f, "Weyl group larger than bound {bound}"),
            Error::DegreeOverflow { requested, built } => write!(
                f,
                "degree {requested} requested but the Nichols basis is truncated at degree {built}"
            ),
            Error::InhomogeneousInput => f.write_str("input is not homogeneous of the required degree"),
            Error::NotDivisible(s) => write!(f, "invariant violation: Demazure numerator not divisible ({s})"),
            Error::InvalidConstants(s) => write!(f, "invalid root constants: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::CoordinateMismatch => f.write_str("polynomials use different coordinate bases"),
            Error::NoMatching(s) => write!(f, "no bijection found: {s}"),
            Error::KernelSearchFailed(s) => write!(f, "quantum invariant search failed: {s}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
