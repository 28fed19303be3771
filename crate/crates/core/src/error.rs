use thiserror::Error;

/// Errors produced by ring, algebra, code and PIR operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime (or not a prime power where one is required)")]
    NonPrime(u64),
    #[error("modulus is reducible modulo the characteristic prime")]
    ReducibleModulus,
    #[error("modulus has degree {got}, expected a monic polynomial of degree {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("element code {code} is not a member of a ring of size {size}")]
    RingMismatch { code: u64, size: u64 },
    #[error("element is not a unit")]
    NotAUnit,
    #[error("index {index} is out of range (allowed {lo}..={hi})")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },
    #[error("enumeration of {size} items exceeds the cap of {cap}")]
    TooLarge { size: u128, cap: u64 },
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("shift constant is invertible; this operation requires a non-invertible constant")]
    NotNie,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("component mismatch: {0}")]
    ComponentMismatch(String),
    #[error("the code is the zero code")]
    ZeroCode,
    #[error("the code is the full space, its dual is zero")]
    FullCode,
    #[error("generators do not span a constacyclic code")]
    NotAnIdeal,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable tag, used in CLI error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonPrime(_) => "NonPrime",
            Error::ReducibleModulus => "ReducibleModulus",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::RingMismatch { .. } => "RingMismatch",
            Error::NotAUnit => "NotAUnit",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::TooLarge { .. } => "TooLarge",
            Error::AlgebraMismatch => "AlgebraMismatch",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NotNie => "NotNIE",
            Error::BadParameters(_) => "BadParameters",
            Error::ComponentMismatch(_) => "ComponentMismatch",
            Error::ZeroCode => "ZeroCode",
            Error::FullCode => "FullCode",
            Error::NotAnIdeal => "NotAnIdeal",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Default cap on the number of items any exhaustive enumeration may visit.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 20;

/// Enumeration cap, overridable through the `NIE_MAX_ENUM` environment variable.
pub fn enumeration_cap() -> u64 {
    static CAP: std::sync::OnceLock<u64> = std::sync::OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("NIE_MAX_ENUM").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_ENUM_CAP)
    })
}

pub(crate) fn check_cap(size: u128) -> Result<()> {
    let cap = enumeration_cap();
    if size > cap as u128 {
        Err(Error::TooLarge { size, cap })
    } else {
        Ok(())
    }
}
