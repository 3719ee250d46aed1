use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::monoid::PuiseuxMonoid;
use crate::ratcore::Rat;
use crate::ring::{CoeffRing, PolyExpr};

/// Largest image degree the dense representation will allocate.
pub const MAX_IMAGE_DEGREE: usize = 1 << 20;

/// Image of a polynomial expression under `X^q ↦ Y^{Lq}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridImage {
    ring: CoeffRing,
    scale: BigUint,
    /// Coefficient of `Y^i` at index `i`; no trailing zeros.
    coeffs: Vec<BigRational>,
}

/// Maps `f` into the univariate ring. `l` must clear every exponent
/// denominator of `f`.
pub fn embed(f: &PolyExpr, l: &BigUint) -> Result<GridImage> {
    if l.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let mut coeffs = Vec::new();
    for (e, c) in f.terms() {
        let scaled = e.scale(l);
        let i = scaled
            .to_integer()
            .ok_or_else(|| {
                Error::Precondition(format!("{l} does not clear the denominator of exponent {e}"))
            })?
            .to_usize()
            .filter(|&i| i <= MAX_IMAGE_DEGREE)
            .ok_or_else(|| Error::ScaleExceeded(format!("image degree {scaled}")))?;
        if coeffs.len() <= i {
            coeffs.resize(i + 1, BigRational::zero());
        }
        coeffs[i] = c.clone();
    }
    Ok(GridImage {
        ring: f.ring(),
        scale: l.clone(),
        coeffs,
    })
}

impl GridImage {
    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn scale(&self) -> &BigUint {
        &self.scale
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn mul(&self, other: &GridImage) -> Result<GridImage> {
        if self.ring != other.ring || self.scale != other.scale {
            return Err(Error::Mismatch("grid images".into()));
        }
        let coeffs = convolve(self.ring, &self.coeffs, &other.coeffs);
        Ok(GridImage {
            ring: self.ring,
            scale: self.scale.clone(),
            coeffs,
        })
    }

    pub fn add(&self, other: &GridImage) -> Result<GridImage> {
        if self.ring != other.ring || self.scale != other.scale {
            return Err(Error::Mismatch("grid images".into()));
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(self.coeffs.len().max(other.coeffs.len()), BigRational::zero());
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] = self.ring.reduce(&coeffs[i] + c);
        }
        trim(&mut coeffs);
        Ok(GridImage {
            ring: self.ring,
            scale: self.scale.clone(),
            coeffs,
        })
    }

    /// Maps back through `Y^i ↦ X^{i/L}` into `monoid`.
    pub fn to_poly(&self, monoid: &PuiseuxMonoid) -> Result<PolyExpr> {
        dense_to_poly(self.ring, monoid, &self.scale, &self.coeffs)
    }
}

fn trim(c: &mut Vec<BigRational>) {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
}

fn convolve(ring: CoeffRing, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = ring.reduce(&out[i + j] + x * y);
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn dense_to_poly(
    ring: CoeffRing,
    monoid: &PuiseuxMonoid,
    l: &BigUint,
    coeffs: &[BigRational],
) -> Result<PolyExpr> {
    let terms = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let e = Rat::new(BigUint::from(i), l.clone()).expect("nonzero scale");
            (e, c.clone())
        });
    PolyExpr::new(ring, monoid.clone(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn exponent_scaling() {
        let m = PuiseuxMonoid::grid(6).unwrap();
        let f = PolyExpr::from_ints(
            CoeffRing::Int,
            m.clone(),
            [(Rat::ratio(5, 6), 3), (Rat::ratio(1, 2), -1), (Rat::zero(), 7)],
        )
        .unwrap();
        let img = embed(&f, &BigUint::from(6u32)).unwrap();
        assert_eq!(img.coeffs(), &[q(7), q(0), q(0), q(-1), q(0), q(3)]);
        assert_eq!(img.to_poly(&m).unwrap(), f);
    }

    #[test]
    fn over_f2() {
        let m = PuiseuxMonoid::p_power(2).unwrap();
        let f2 = CoeffRing::prime_field(2).unwrap();
        let f = PolyExpr::from_ints(f2, m, [(Rat::ratio(1, 2), 1), (Rat::zero(), 1)]).unwrap();
        let img = embed(&f, &BigUint::from(4u32)).unwrap();
        assert_eq!(img.coeffs(), &[q(1), q(0), q(1)]);
    }

    #[test]
    fn rejects_uncleared_denominator() {
        let m = PuiseuxMonoid::grid(6).unwrap();
        let f = PolyExpr::from_ints(CoeffRing::Int, m, [(Rat::ratio(1, 3), 1)]).unwrap();
        assert!(embed(&f, &BigUint::from(2u32)).is_err());
    }
}
