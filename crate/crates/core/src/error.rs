use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in fraction field")]
    DivisionByZero,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("non-invertible: {0}")]
    NonInvertible(String),
    #[error("sqrt requires constant term 1")]
    SqrtConstantTerm,
    #[error("phi not constant: u^{s} h^{l} coefficient is nonzero")]
    PhiNotConstant { s: i64, l: usize },
    #[error("basis insufficient at h^{0}")]
    BasisInsufficient(usize),
    #[error("invalid slot: {0}")]
    InvalidSlot(String),
    #[error("slot mismatch: {0}")]
    SlotMismatch(String),
    #[error("zero input has no highest component")]
    ZeroInput,
    #[error("non-integer level {0} is not representable in the exact ring")]
    NonIntegerLevel(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("serialization: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
