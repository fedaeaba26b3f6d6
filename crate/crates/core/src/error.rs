use thiserror::Error;

/// Errors raised by the library. Offending values are carried as decimal
/// strings so the error type does not depend on the scalar type.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicand e must be positive, got {0}")]
    NonPositiveRadicand(String),
    #[error("the half form requires e ≡ 3 (mod 4), got e = {0}")]
    HalfFormResidue(String),
    #[error("the zero class has no primitivity")]
    ZeroClass,
    #[error("class has a negative standard coefficient; the cone formula needs all coefficients ≥ 0")]
    NegativeCoefficient,
    #[error("class is not ample")]
    NotAmple,
    #[error("2d = {0} is a perfect square, so ℓ² − 2dk² = 1 has no positive solution")]
    NotPellSolvable(String),
    #[error("brute-force search exceeded the cutoff ℓ ≤ {0}")]
    CutoffExceeded(String),
    #[error("principal polarizations are constructed for e ≡ 2, 3 (mod 4), got e = {0}")]
    WrongResidue(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
