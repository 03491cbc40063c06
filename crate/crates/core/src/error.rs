use alloc::string::String;
use core::fmt;

use crate::perm::Letter;

/// Everything that can go wrong when feeding values into this crate.
///
/// All variants except [`Error::ContractViolation`] describe bad input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A permutation was built from a letter list containing a repeat.
    DuplicateLetter(Letter),
    /// A permutation string could not be parsed.
    Parse(String),
    /// Two permutations that must be disjoint share a letter.
    NotDisjoint(Letter),
    /// The letter to insert is already present in the permutation.
    LetterPresent(Letter),
    /// An index (position, space or prefix length) outside its allowed range.
    OutOfRange { what: &'static str, value: usize, min: usize, max: usize },
    /// `alpha` is not a shuffle of `sigma` and `pi`.
    NotAShuffle(String),
    /// A sequence that is not a partition.
    InvalidPartition(String),
    /// A partition pair violating the bounds required by the inverse map.
    InvalidPair(String),
    /// An internal invariant failed. Unreachable for valid input.
    ContractViolation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DuplicateLetter(l) => write!(f, "letter {l} occurs more than once"),
            Error::Parse(msg) => write!(f, "cannot parse permutation: {msg}"),
            Error::NotDisjoint(l) => write!(f, "permutations are not disjoint: letter {l} occurs in both"),
            Error::LetterPresent(l) => write!(f, "letter {l} is already in the permutation"),
            Error::OutOfRange { what, value, min, max } => {
                write!(f, "{what} {value} out of range {min}..={max}")
            }
            Error::NotAShuffle(msg) => write!(f, "not a shuffle: {msg}"),
            Error::InvalidPartition(msg) => write!(f, "invalid partition: {msg}"),
            Error::InvalidPair(msg) => write!(f, "invalid partition pair: {msg}"),
            Error::ContractViolation(msg) => write!(f, "internal contract violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

impl Error {
    /// True for errors caused by malformed or inconsistent input.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::ContractViolation(_))
    }
}
