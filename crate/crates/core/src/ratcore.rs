//! Exact nonnegative rationals and the small number-theoretic helpers the
//! rest of the crate leans on.
//!
//! A [`Rat`] is always stored in lowest terms with a positive denominator, so
//! structural equality is numeric equality and `num()`/`den()` are the
//! coprime numerator and denominator of the value.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact nonnegative rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rat {
    num: BigUint,
    den: BigUint,
}

impl Rat {
    /// Builds `n/d` reduced to lowest terms. Rejects `d = 0`.
    pub fn new(n: impl Into<BigUint>, d: impl Into<BigUint>) -> Result<Self> {
        let (n, d) = (n.into(), d.into());
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduced(n, d))
    }

    fn reduced(n: BigUint, d: BigUint) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        let g = n.gcd(&d);
        Rat {
            num: n / &g,
            den: d / g,
        }
    }

    /// Convenience constructor for small literals; panics on a zero denominator.
    pub fn ratio(n: u64, d: u64) -> Self {
        Self::new(n, d).expect("nonzero denominator")
    }

    pub fn integer(n: impl Into<BigUint>) -> Self {
        Rat {
            num: n.into(),
            den: BigUint::one(),
        }
    }

    pub fn zero() -> Self {
        Rat {
            num: BigUint::zero(),
            den: BigUint::one(),
        }
    }

    pub fn one() -> Self {
        Self::integer(1u32)
    }

    pub fn num(&self) -> &BigUint {
        &self.num
    }

    pub fn den(&self) -> &BigUint {
        &self.den
    }

    /// The pair (n(q), d(q)); `(0, 1)` for zero.
    pub fn num_den(&self) -> (BigUint, BigUint) {
        (self.num.clone(), self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<&BigUint> {
        self.is_integer().then_some(&self.num)
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.to_integer().and_then(|n| n.to_u64())
    }

    /// `self - other`, rejected when the result would be negative.
    pub fn checked_sub(&self, other: &Rat) -> Result<Rat> {
        if self < other {
            return Err(Error::NegativeDifference {
                minuend: self.clone(),
                subtrahend: other.clone(),
            });
        }
        let n = &self.num * &other.den - &other.num * &self.den;
        Ok(Self::reduced(n, &self.den * &other.den))
    }

    /// Division by a nonzero rational.
    pub fn checked_div(&self, other: &Rat) -> Result<Rat> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduced(&self.num * &other.den, &self.den * &other.num))
    }

    pub fn scale(&self, k: &BigUint) -> Rat {
        Self::reduced(&self.num * k, self.den.clone())
    }

    pub fn div_int(&self, k: &BigUint) -> Result<Rat> {
        if k.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduced(self.num.clone(), &self.den * k))
    }
}

impl Add for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        Rat::reduced(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        &self + &rhs
    }
}

impl Mul for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        Rat::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        &self * &rhs
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Rat {
    fn from(n: u64) -> Self {
        Rat::integer(n)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error returned when parsing a rational literal fails.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRatError(pub String);

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `a` or `a/b` with nonnegative decimal integers.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bad = || ParseRatError(s.to_string());
        let digits = |t: &str| -> std::result::Result<BigUint, ParseRatError> {
            let t = t.trim();
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigUint>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rat::integer(digits(s)?)),
            Some((n, d)) => Rat::new(digits(n)?, digits(d)?).map_err(|_| bad()),
        }
    }
}

/// lcm of the denominators of `qs`; 1 for an empty list.
pub fn lcm_of_denominators<'a>(qs: impl IntoIterator<Item = &'a Rat>) -> BigUint {
    qs.into_iter()
        .fold(BigUint::one(), |acc, q| acc.lcm(q.den()))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes in ascending order, starting at 2.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(n))
}

/// True when `n` is a positive power of `p` (including `p^0 = 1`).
pub fn is_power_of(n: &BigUint, p: u64) -> bool {
    if n.is_zero() {
        return false;
    }
    let p = BigUint::from(p);
    let mut n = n.clone();
    while !n.is_one() {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return false;
        }
        n = q;
    }
    true
}

/// Modular inverse of `a` modulo a prime `p`.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    Some(pow_mod(a, p - 2, p))
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc = 1u128 % m128;
    let mut b = base as u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}
