use num_bigint::BigInt;
use thiserror::Error;

use crate::ratcore::Rat;

/// Errors raised by the library.
///
/// Everything except [`Error::ScaleExceeded`] is a domain error: the input
/// violates a precondition of the requested operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("{minuend} - {subtrahend} is negative")]
    NegativeDifference { minuend: Rat, subtrahend: Rat },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),

    #[error("{element} is not in {monoid}")]
    NotInMonoid { element: Rat, monoid: String },

    #[error("{0} requires a finitely generated monoid")]
    NotFinitelyGenerated(String),

    #[error("{0} is undefined for a non-atomic monoid")]
    NotAtomic(String),

    #[error("coefficient {coeff} is not in {ring}")]
    CoefficientNotInRing { coeff: String, ring: String },

    #[error("operands differ: {0}")]
    Mismatch(String),

    #[error("zero polynomial expression")]
    ZeroPolynomial,

    #[error("not primitive (content {0})")]
    NotPrimitive(BigInt),

    #[error("{0}")]
    Precondition(String),

    #[error("oracle scale exceeded: {0}")]
    ScaleExceeded(String),
}

impl Error {
    pub fn is_scale_exceeded(&self) -> bool {
        matches!(self, Error::ScaleExceeded(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
