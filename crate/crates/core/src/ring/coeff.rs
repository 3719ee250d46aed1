use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ratcore::{inv_mod, is_prime};

/// A prime number, validated on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// Coefficient ring of a polynomial expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffRing {
    /// ℤ
    Int,
    /// ℚ
    Rational,
    /// 𝔽_p
    PrimeField(Prime),
}

impl CoeffRing {
    pub fn prime_field(p: u64) -> Result<Self> {
        Ok(CoeffRing::PrimeField(Prime::new(p)?))
    }

    pub fn is_field(self) -> bool {
        !matches!(self, CoeffRing::Int)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            CoeffRing::PrimeField(p) => p.get(),
            _ => 0,
        }
    }

    /// Maps a rational value into the ring. Elements of 𝔽_p are represented
    /// by their residue in `[0, p)`; `a/b` is read as `a·b⁻¹` there.
    pub fn coerce(self, c: &BigRational) -> Result<BigRational> {
        let not_in = || Error::CoefficientNotInRing {
            coeff: c.to_string(),
            ring: self.to_string(),
        };
        match self {
            CoeffRing::Int if c.is_integer() => Ok(c.clone()),
            CoeffRing::Int => Err(not_in()),
            CoeffRing::Rational => Ok(c.clone()),
            CoeffRing::PrimeField(p) => {
                let p = p.get();
                let num = residue(c.numer(), p);
                let den = residue(c.denom(), p);
                let inv = inv_mod(den, p).ok_or_else(not_in)?;
                let v = (num as u128 * inv as u128 % p as u128) as u64;
                Ok(BigRational::from_integer(v.into()))
            }
        }
    }

    /// Reduces an already-valid ring element after arithmetic.
    pub(crate) fn reduce(self, c: BigRational) -> BigRational {
        match self {
            CoeffRing::PrimeField(p) => {
                let p = p.get();
                debug_assert!(c.is_integer());
                BigRational::from_integer(residue(c.numer(), p).into())
            }
            _ => c,
        }
    }

    /// Units: ±1 in ℤ, every nonzero element in a field.
    pub fn is_unit(self, c: &BigRational) -> bool {
        match self {
            CoeffRing::Int => c.abs().is_one(),
            _ => !c.is_zero(),
        }
    }
}

pub(crate) fn residue(n: &BigInt, p: u64) -> u64 {
    let r = n % BigInt::from(p);
    let r = if r.sign() == Sign::Minus { r + BigInt::from(p) } else { r };
    r.to_u64().expect("residue below p")
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Int => write!(f, "int"),
            CoeffRing::Rational => write!(f, "rat"),
            CoeffRing::PrimeField(p) => write!(f, "fp:{}", p.get()),
        }
    }
}

impl FromStr for CoeffRing {
    type Err = Error;

    /// `int`, `rat` or `fp:p`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "int" => Ok(CoeffRing::Int),
            "rat" => Ok(CoeffRing::Rational),
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .and_then(|p| p.trim().parse::<u64>().ok())
                    .ok_or_else(|| {
                        Error::Precondition(format!("unknown coefficient ring {other:?}"))
                    })?;
                CoeffRing::prime_field(p)
            }
        }
    }
}
