use thiserror::Error;

/// Errors shared across the whole kernel and experiment layer.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: operands live in different rings ({0} vs {1})")]
    RingMismatch(String, String),

    #[error("variable count mismatch: expected {expected}, got {got}")]
    VariableCountMismatch { expected: usize, got: usize },

    #[error("not divisible: term {divisor} does not divide {term}")]
    NotDivisible { term: String, divisor: String },

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("characteristic {0} is not supported (must fit in 31 bits)")]
    CharacteristicTooLarge(u64),

    #[error("characteristic 3 is rejected for curve experiments")]
    CharacteristicThree,

    #[error("denominator {0} vanishes in characteristic {1}")]
    DenominatorVanishes(String, u64),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("ideal power with exponent 0 is not supported")]
    ZeroPower,

    #[error("saturation did not stabilize within {0} rounds")]
    SaturationDiverged(usize),

    #[error("no presentation found for curve ({0}, {1}, {2}) within the search bound")]
    NoPresentationFound(u64, u64, u64),

    #[error("curve ({0}, {1}, {2}) is a complete intersection; no Herzog presentation data")]
    CompleteIntersection(u64, u64, u64),

    #[error("negative exponent in {entry}: {value}")]
    NegativeExponent { entry: String, value: i64 },

    #[error("certificate prerequisite failed: {0}")]
    CertificatePrereqFailed(String),

    #[error("closed form unavailable: {0}")]
    ClosedFormUnavailable(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
