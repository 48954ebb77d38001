use alloc::string::String;

/// Errors raised by field, matrix and code operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{m} exceeds the supported bound 2^20")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("element code {code} is outside the field of order {q}")]
    BadElement { code: u32, q: u32 },
    #[error("{r} does not divide the extension degree {m}")]
    NotADivisor { r: u32, m: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("enumeration of {size} codewords exceeds the capacity bound 2^24")]
    Capacity { size: u128 },
    #[error("repeated evaluation point {0}")]
    RepeatedPoint(u32),
    #[error("column multiplier at position {0} is zero")]
    ZeroMultiplier(usize),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("duplicate index {0}")]
    DuplicateIndex(usize),
    #[error("indices must be given in increasing order")]
    UnsortedIndices,
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("outside the range covered by the theorem: {0}")]
    OutOfTheoremRange(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("search budget of {budget} candidates exceeded ({needed} required)")]
    BudgetExceeded { budget: u128, needed: u128 },
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::error::Error::InvalidParameters(alloc::format!($($arg)*))
    };
}
pub(crate) use invalid;
