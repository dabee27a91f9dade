use thiserror::Error;

use crate::families::Combination;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow")]
    OverflowDetected,
    #[error("arguments are not coprime")]
    NotACoprimePair,
    #[error("{value} is not a perfect {exponent}-th power")]
    NotAPerfectPower { value: u128, exponent: u32 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("sides ({0}, {1}, {2}) violate the triangle inequalities")]
    InvalidTriangle(u128, u128, u128),
    #[error("({0}, {1}, {2}) is not a right triangle with hypotenuse {0}")]
    NotRightTriangle(u128, u128, u128),
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("range violation: {0}")]
    RangeViolation(String),

    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("triple is not primitive")]
    NotPrimitive,
    #[error("sides do not satisfy the Pythagorean relation")]
    NotPythagorean,

    #[error("the exceptional solution (1, 1, 1) has no chord parameters")]
    ExceptionalSolution,
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),

    #[error("counterexample found: ({alpha}, {beta}, {gamma}) realizes combination {combination}")]
    CounterexampleFound {
        alpha: u128,
        beta: u128,
        gamma: u128,
        combination: Combination,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
