use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Certificate, CoeffRing, EisensteinCert, PolyExpr, Verdict};
use crate::error::{Error, Result};
use crate::oracle::{decide_irreducible_in_fm, OracleConfig};
use crate::ratcore::{is_prime, primes};

/// Result of testing Eisenstein's conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EisensteinOutcome {
    Certified(EisensteinCert),
    Inapplicable(String),
}

/// Result of extracting a p-th root over 𝔽_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrobeniusOutcome {
    Root(PolyExpr),
    Inapplicable(String),
}

fn require_int(f: &PolyExpr, what: &str) -> Result<()> {
    if f.ring() != CoeffRing::Int {
        return Err(Error::Precondition(format!(
            "{what} needs integer coefficients, got {}",
            f.ring()
        )));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(())
}

/// Nonnegative gcd of the coefficients of a nonzero expression over ℤ.
pub fn content(f: &PolyExpr) -> Result<BigInt> {
    require_int(f, "content")?;
    Ok(f.int_coeffs().fold(BigInt::zero(), |g, c| g.gcd(&c)))
}

/// Content 1 over ℤ; always true over a field.
pub fn is_primitive(f: &PolyExpr) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.ring().is_field() {
        return Ok(true);
    }
    Ok(content(f)?.is_one())
}

/// `f / content(f)` over ℤ; `f` itself over a field.
pub fn primitive_part(f: &PolyExpr) -> Result<PolyExpr> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.ring().is_field() {
        return Ok(f.clone());
    }
    let c = BigRational::from_integer(content(f)?);
    PolyExpr::new(
        f.ring(),
        f.monoid().clone(),
        f.terms().iter().map(|(e, a)| (e.clone(), a / &c)),
    )
}

impl EisensteinCert {
    /// Re-checks the three conditions for `f` with this prime.
    pub fn holds_for(&self, f: &PolyExpr) -> bool {
        f.ring() == CoeffRing::Int
            && !f.is_constant()
            && f.terms().last().is_some_and(|(e, _)| e.is_zero())
            && conditions(f, &BigInt::from(self.prime)).is_none()
    }
}

// `None` when every condition holds, otherwise the failing one.
fn conditions(f: &PolyExpr, p: &BigInt) -> Option<String> {
    let terms = f.terms();
    let lead = &terms[0].1.to_integer();
    if (lead % p).is_zero() {
        return Some(format!("{p} divides the leading coefficient {lead}"));
    }
    for (e, c) in &terms[1..] {
        if !(c.to_integer() % p).is_zero() {
            return Some(format!("{p} does not divide the coefficient {c} of X^({e})"));
        }
    }
    let a0 = terms.last().expect("nonzero").1.to_integer();
    if (&a0 % (p * p)).is_zero() {
        return Some(format!("{} divides the constant coefficient {a0}", p * p));
    }
    None
}

// Shared preconditions; `Some(reason)` when the criterion cannot apply.
fn eisenstein_shape(f: &PolyExpr) -> Result<Option<String>> {
    require_int(f, "Eisenstein's criterion")?;
    let c = content(f)?;
    if !c.is_one() {
        return Err(Error::NotPrimitive(c));
    }
    if f.is_constant() {
        return Err(Error::Precondition("Eisenstein's criterion needs positive degree".into()));
    }
    if !f.terms().last().is_some_and(|(e, _)| e.is_zero()) {
        return Ok(Some("no constant term".into()));
    }
    Ok(None)
}

/// Tests Eisenstein's conditions at the prime `p` for a primitive `f` over ℤ
/// of positive degree. A certificate implies `f` is irreducible in `ℤ[M]`.
pub fn eisenstein_check(f: &PolyExpr, p: u64) -> Result<EisensteinOutcome> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if let Some(reason) = eisenstein_shape(f)? {
        return Ok(EisensteinOutcome::Inapplicable(reason));
    }
    Ok(match conditions(f, &BigInt::from(p)) {
        None => EisensteinOutcome::Certified(EisensteinCert { prime: p }),
        Some(reason) => EisensteinOutcome::Inapplicable(reason),
    })
}

/// The least prime `p ≤ prime_bound` certifying `f`, if any.
pub fn eisenstein_search(f: &PolyExpr, prime_bound: u64) -> Result<EisensteinOutcome> {
    if let Some(reason) = eisenstein_shape(f)? {
        return Ok(EisensteinOutcome::Inapplicable(reason));
    }
    let a0 = f.constant_coeff()?.to_integer();
    for p in primes().take_while(|&p| p <= prime_bound) {
        let pb = BigInt::from(p);
        if !(&a0 % &pb).is_zero() {
            continue;
        }
        if conditions(f, &pb).is_none() {
            return Ok(EisensteinOutcome::Certified(EisensteinCert { prime: p }));
        }
    }
    Ok(EisensteinOutcome::Inapplicable(format!(
        "no prime up to {prime_bound} satisfies the conditions"
    )))
}

// Scales an expression over ℚ to a primitive expression over ℤ.
fn clear_to_int(g: &PolyExpr) -> Result<PolyExpr> {
    let den = g
        .terms()
        .iter()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = g
        .terms()
        .iter()
        .map(|(_, c)| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    PolyExpr::new(
        CoeffRing::Int,
        g.monoid().clone(),
        g.terms()
            .iter()
            .zip(ints)
            .map(|((e, _), c)| (e.clone(), BigRational::from_integer(c / &gcd))),
    )
}

/// Irreducibility in `ℤ[M]` as primitivity together with irreducibility in
/// `ℚ[M]`. Splits over ℚ are cleared to splits over ℤ.
pub fn gauss_irreducible_over_int(f: &PolyExpr, config: &OracleConfig) -> Result<Verdict> {
    if f.ring() != CoeffRing::Int {
        return Err(Error::Precondition(format!(
            "the Gauss pipeline needs integer coefficients, got {}",
            f.ring()
        )));
    }
    if f.is_zero() {
        return Ok(Verdict::Zero);
    }
    if f.is_constant() {
        return Ok(if f.leading_coeff()?.abs().is_one() {
            Verdict::Unit
        } else {
            Verdict::Inapplicable("constant expression".into())
        });
    }
    let c = content(f)?;
    if !c.is_one() {
        return Ok(Verdict::Reducible {
            left: PolyExpr::constant(CoeffRing::Int, f.monoid().clone(), BigRational::from_integer(c))?,
            right: primitive_part(f)?,
        });
    }
    match decide_irreducible_in_fm(&f.over_ring(CoeffRing::Rational)?, config)? {
        Verdict::Irreducible(_) => Ok(Verdict::Irreducible(Certificate::GaussPipeline)),
        Verdict::Reducible { left, right } => {
            let mut left = clear_to_int(&left)?;
            let right = clear_to_int(&right)?;
            if &left.mul(&right)? != f {
                left = left.neg();
            }
            debug_assert_eq!(&left.mul(&right)?, f);
            Ok(Verdict::Reducible { left, right })
        }
        other => Ok(other),
    }
}

fn require_prime_field(f: &PolyExpr) -> Result<u64> {
    match f.ring() {
        CoeffRing::PrimeField(p) => Ok(p.get()),
        other => Err(Error::Precondition(format!(
            "Frobenius roots need a prime field, got {other}"
        ))),
    }
}

/// `g` with `g^p = f` over 𝔽_p: exponents divided by `p`, coefficients kept
/// (every element of 𝔽_p is its own p-th power).
pub fn frobenius_root(f: &PolyExpr) -> Result<FrobeniusOutcome> {
    let p = require_prime_field(f)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let pb = p.into();
    let mut terms = Vec::with_capacity(f.terms().len());
    for (e, c) in f.terms() {
        let e = e.div_int(&pb)?;
        if !f.monoid().member(&e) {
            return Ok(FrobeniusOutcome::Inapplicable(format!(
                "{e} is not in {}",
                f.monoid()
            )));
        }
        terms.push((e, c.clone()));
    }
    Ok(FrobeniusOutcome::Root(PolyExpr::new(
        f.ring(),
        f.monoid().clone(),
        terms,
    )?))
}

/// The split `f = g · g^{p-1}` with `g` the Frobenius root, when it exists.
pub fn frobenius_split(f: &PolyExpr) -> Result<Verdict> {
    let p = require_prime_field(f)?;
    if f.is_zero() {
        return Ok(Verdict::Zero);
    }
    if f.is_constant() {
        return Ok(Verdict::Unit);
    }
    Ok(match frobenius_root(f)? {
        FrobeniusOutcome::Root(g) => {
            let right = g.pow((p - 1) as u32);
            Verdict::Reducible { left: g, right }
        }
        FrobeniusOutcome::Inapplicable(reason) => Verdict::Inapplicable(reason),
    })
}
