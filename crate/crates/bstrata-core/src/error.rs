use core::fmt;

use alloc::string::String;

/// Error type shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rank outside the supported range `1..=MAX_RANK`.
    InvalidRank(usize),
    /// Two values of different ranks were combined.
    RankMismatch { left: usize, right: usize },
    /// A simple-reflection index outside `1..=n`.
    IndexOutOfRange { index: usize, rank: usize },
    /// A window that is not a valid signed permutation.
    InvalidWindow(String),
    /// A word position outside `1..=t`.
    PositionOutOfRange { position: usize, len: usize },
    /// A diagram bitmask with bits beyond the word length.
    InvalidBitmask { len: usize },
    /// A bitmask string that does not parse as lowercase hex.
    InvalidHex(String),
    /// A grid that is not mirror symmetric.
    AsymmetricGrid,
    /// A diagram that fails the Cauchon scan; `step` is the first failing
    /// scan step (counted from the end of the word), `position` the word
    /// position tested there.
    NotCauchon { step: usize, position: usize, letter: usize },
    /// Stirling index pair with `j > n`.
    StirlingIndex { n: usize, j: usize },
    /// `exp` of a series whose constant term is not zero.
    ConstantTermNotZero,
    /// `log` of a series whose constant term is not one.
    ConstantTermNotOne,
    /// Arithmetic on series of different truncation orders.
    OrderMismatch { left: usize, right: usize },
    /// A coefficient index beyond the truncation order.
    OrderTooSmall { needed: usize, order: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRank(n) => write!(f, "invalid rank {n}"),
            Error::RankMismatch { left, right } => {
                write!(f, "rank mismatch: {left} vs {right}")
            }
            Error::IndexOutOfRange { index, rank } => {
                write!(f, "index {index} out of range for rank {rank}")
            }
            Error::InvalidWindow(msg) => write!(f, "invalid window: {msg}"),
            Error::PositionOutOfRange { position, len } => {
                write!(f, "position {position} out of range for word of length {len}")
            }
            Error::InvalidBitmask { len } => {
                write!(f, "bitmask has bits beyond word length {len}")
            }
            Error::InvalidHex(s) => write!(f, "invalid hex bitmask {s:?}"),
            Error::AsymmetricGrid => write!(f, "grid is not mirror symmetric"),
            Error::NotCauchon { step, position, letter } => write!(
                f,
                "not a Cauchon diagram: ascent fails at step {step} (word position {position}, letter {letter})"
            ),
            Error::StirlingIndex { n, j } => write!(f, "Stirling index j={j} exceeds n={n}"),
            Error::ConstantTermNotZero => write!(f, "series must have constant term 0"),
            Error::ConstantTermNotOne => write!(f, "series must have constant term 1"),
            Error::OrderMismatch { left, right } => {
                write!(f, "series order mismatch: {left} vs {right}")
            }
            Error::OrderTooSmall { needed, order } => {
                write!(f, "coefficient {needed} beyond truncation order {order}")
            }
        }
    }
}

impl core::error::Error for Error {}
