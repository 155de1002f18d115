use std::time::Duration;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("extension exponent must be positive")]
    InvalidExponent,
    #[error("field of size {0} exceeds the supported bound of 2^16 elements")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element encoding {0} is outside the field")]
    ElementOutOfRange(u32),

    #[error("operands belong to different polynomial rings")]
    MixedRings,
    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,
    #[error("monomial involves parameter variables")]
    ParameterVariables,
    #[error("ring needs {0} variables, at most {max} are supported", max = crate::poly::MAX_VARS)]
    TooManyVariables(usize),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),

    #[error("ideal is not zero-dimensional: no pure power of `{0}` in the initial ideal")]
    InfiniteStaircase(String),
    #[error("reduction produced a leading coefficient involving parameter variables")]
    ParametricLeadingCoefficient,

    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),
    #[error("x-degree {degree} exceeds q = {q}")]
    XDegreeTooLarge { degree: u32, q: u32 },
    #[error("m = {m} has no decomposition m = mu*q + beta*(q+1) with 0 <= mu <= q (q = {q})")]
    NoDecomposition { q: u32, m: u32 },
    #[error("invalid m = {m} for q = {q}: {reason}")]
    InvalidM { q: u32, m: u32, reason: String },
    #[error("operation needs a phase-3 or phase-4 code, m = {m} is in phase {phase}")]
    UnsupportedPhase { m: u32, phase: u8 },
    #[error("support kernel has dimension {0}, expected exactly 1")]
    KernelDimension(usize),
    #[error("no admissible line configuration for seed {seed} ({available} available)")]
    Unsatisfiable { seed: u64, available: u128 },

    #[error("budget exceeded during {stage} after {elapsed:?}: {detail}")]
    BudgetExceeded {
        stage: String,
        elapsed: Duration,
        detail: String,
    },
}
