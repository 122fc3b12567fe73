use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A checked 64-bit operation left the representable range.
    #[error("arithmetic overflow in 64-bit coefficient ring")]
    Overflow,
    #[error("modulus {0} is not a prime number")]
    NotPrime(u64),
    #[error("cannot parse coefficient {0:?}")]
    ParseCoeff(String),
    /// Operands belong to different ring instances (e.g. two moduli).
    #[error("coefficient rings of the operands differ")]
    RingMismatch,
    #[error("series lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("{len} coefficients do not fit in a series of length {n}")]
    TooManyCoefficients { len: usize, n: usize },
    #[error("shift {shift} is out of range for series length {len}")]
    ShiftOutOfRange { shift: usize, len: usize },
    #[error("index {index} is out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("triangle column {k} exceeds row {n}")]
    ColumnPastRow { n: u64, k: u64 },
    #[error("mask entry {0} is outside {{-1, 0, 1}}")]
    BadMaskEntry(i8),
}
