//! Irreducibility decisions in `F[M]` and `ℤ[M]` for finitely generated `M`,
//! by distributing the irreducible factors of the grid image over two blocks.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::fp::{self, FpPoly};
use super::grid::{dense_to_poly, embed, GridImage};
use super::zpoly::{self, IntPoly};
use super::OracleConfig;
use crate::error::{Error, Result};
use crate::monoid::PuiseuxMonoid;
use crate::ratcore::Rat;
use crate::ring::{Certificate, CoeffRing, PolyExpr, Verdict};

const CONSTANT_FACTOR_LIMIT: u64 = 1_000_000_000_000;

fn grid_scale(m: &PuiseuxMonoid) -> Result<BigUint> {
    m.denominator_lcm()
        .ok_or_else(|| Error::NotFinitelyGenerated(format!("deciding irreducibility in {m}")))
}

fn membership_table(m: &PuiseuxMonoid, l: &BigUint, top: usize) -> Vec<bool> {
    (0..=top)
        .map(|i| m.member(&Rat::new(BigUint::from(i), l.clone()).expect("nonzero scale")))
        .collect()
}

fn support_in(p: &[BigInt], member: &[bool]) -> bool {
    p.iter().enumerate().all(|(i, c)| c.is_zero() || member[i])
}

fn mul_in(a: &[BigInt], b: &[BigInt], modulus: Option<u64>) -> IntPoly {
    let prod = zpoly::mul(a, b);
    match modulus {
        None => prod,
        Some(p) => {
            let p = BigInt::from(p);
            let mut out: IntPoly = prod.iter().map(|c| c.mod_floor(&p)).collect();
            zpoly::trim(&mut out);
            out
        }
    }
}

// First distribution, in odometer order with the last piece fastest, that
// gives two nonunit blocks with every exponent in M.
fn first_split(
    pieces: &[(IntPoly, u32)],
    modulus: Option<u64>,
    member: &[bool],
    bound: u64,
    nonunit: impl Fn(&[BigInt]) -> bool,
) -> Result<Option<(IntPoly, IntPoly)>> {
    let fits = pieces
        .iter()
        .try_fold(1u64, |acc, (_, e)| acc.checked_mul(u64::from(*e) + 1))
        .is_some_and(|t| t <= bound);
    if !fits {
        return Err(Error::ScaleExceeded("too many factor distributions".into()));
    }
    let powers: Vec<Vec<IntPoly>> = pieces
        .iter()
        .map(|(g, e)| {
            let mut v = vec![vec![BigInt::one()]];
            for k in 0..*e as usize {
                let next = mul_in(&v[k], g, modulus);
                v.push(next);
            }
            v
        })
        .collect();
    let degs: Vec<usize> = pieces.iter().map(|(g, _)| zpoly::degree(g)).collect();
    let full: usize = pieces
        .iter()
        .zip(&degs)
        .map(|((_, e), d)| *e as usize * d)
        .sum();
    let mut idx = vec![0u32; pieces.len()];
    loop {
        let da: usize = idx.iter().zip(&degs).map(|(a, d)| *a as usize * d).sum();
        let db = full - da;
        if member[da] && member[db] {
            let block = |pick: &dyn Fn(usize) -> usize| {
                (0..pieces.len()).fold(vec![BigInt::one()], |acc, i| {
                    mul_in(&acc, &powers[i][pick(i)], modulus)
                })
            };
            let a = block(&|i| idx[i] as usize);
            let b = block(&|i| (pieces[i].1 - idx[i]) as usize);
            if nonunit(&a) && nonunit(&b) && support_in(&a, member) && support_in(&b, member) {
                return Ok(Some((a, b)));
            }
        }
        let mut k = pieces.len();
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] <= pieces[k].1 {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn to_rationals(p: &[BigInt]) -> Vec<BigRational> {
    p.iter().cloned().map(BigRational::from_integer).collect()
}

fn int_image(img: &GridImage) -> IntPoly {
    img.coeffs().iter().map(|c| c.to_integer()).collect()
}

fn fp_image(img: &GridImage) -> FpPoly {
    img.coeffs()
        .iter()
        .map(|c| c.to_integer().to_u64().expect("reduced residue"))
        .collect()
}

/// Decides irreducibility of `f` in `F[M]` for `F` = ℚ or 𝔽_p and `M`
/// finitely generated. A split is returned as an explicit factor pair.
pub fn decide_irreducible_in_fm(f: &PolyExpr, config: &OracleConfig) -> Result<Verdict> {
    let ring = f.ring();
    if !ring.is_field() {
        return Err(Error::Precondition(format!(
            "deciding irreducibility in F[M] needs a field, got {ring}"
        )));
    }
    let l = grid_scale(f.monoid())?;
    if f.is_zero() {
        return Ok(Verdict::Zero);
    }
    if f.is_constant() {
        return Ok(Verdict::Unit);
    }
    let img = embed(f, &l)?;
    let member = membership_table(f.monoid(), &l, img.degree());
    let nonconstant = |p: &[BigInt]| zpoly::degree(p) >= 1;
    let (left, right) = match ring {
        CoeffRing::PrimeField(p) => {
            let p = p.get();
            let fac = fp::factor_fp_univariate(
                &fp_image(&img),
                p,
                config.fp_prime_bound,
                config.fp_degree_bound,
            )?;
            let pieces: Vec<(IntPoly, u32)> = fac
                .factors
                .iter()
                .map(|(g, e)| (g.iter().map(|&c| BigInt::from(c)).collect(), *e))
                .collect();
            let Some((a, b)) =
                first_split(&pieces, Some(p), &member, config.distribution_bound, nonconstant)?
            else {
                return Ok(Verdict::Irreducible(Certificate::OracleExhaustion));
            };
            let a = mul_in(&a, &[BigInt::from(fac.unit)], Some(p));
            (to_rationals(&a), to_rationals(&b))
        }
        _ => {
            let den = img
                .coeffs()
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let ints: IntPoly = img
                .coeffs()
                .iter()
                .map(|c| (c * &den).to_integer())
                .collect();
            let fac = zpoly::factor_int_univariate(&ints, config.degree_bound)?;
            let Some((a, b)) =
                first_split(&fac.factors, None, &member, config.distribution_bound, nonconstant)?
            else {
                return Ok(Verdict::Irreducible(Certificate::OracleExhaustion));
            };
            let lc = img.coeffs().last().expect("nonzero image");
            let kappa = lc / BigRational::from_integer(zpoly::leading(&a) * zpoly::leading(&b));
            let a: Vec<BigRational> = to_rationals(&a).into_iter().map(|c| c * &kappa).collect();
            (a, to_rationals(&b))
        }
    };
    Ok(Verdict::Reducible {
        left: dense_to_poly(ring, f.monoid(), &l, &left)?,
        right: dense_to_poly(ring, f.monoid(), &l, &right)?,
    })
}

fn constant_verdict(f: &PolyExpr, c: &BigInt) -> Result<Verdict> {
    let n = c
        .abs()
        .to_u64()
        .filter(|&n| n <= CONSTANT_FACTOR_LIMIT)
        .ok_or_else(|| Error::ScaleExceeded(format!("factoring the integer {c}")))?;
    let q = (2..)
        .take_while(|q| q * q <= n)
        .find(|q| n % q == 0)
        .unwrap_or(n);
    if q == n {
        return Ok(Verdict::Irreducible(Certificate::OracleExhaustion));
    }
    let sign = if c.is_negative() { -1 } else { 1 };
    let k = |v: i64| PolyExpr::constant(CoeffRing::Int, f.monoid().clone(), BigRational::from_integer(v.into()));
    Ok(Verdict::Reducible {
        left: k(sign * q as i64)?,
        right: k((n / q) as i64)?,
    })
}

/// Decides irreducibility of `f` in `ℤ[M]` directly from the complete
/// factorization of its grid image in `ℤ[Y]`.
pub fn decide_irreducible_in_zm(f: &PolyExpr, config: &OracleConfig) -> Result<Verdict> {
    if f.ring() != CoeffRing::Int {
        return Err(Error::Precondition(format!(
            "deciding irreducibility in Z[M] needs integer coefficients, got {}",
            f.ring()
        )));
    }
    let l = grid_scale(f.monoid())?;
    if f.is_zero() {
        return Ok(Verdict::Zero);
    }
    if f.is_constant() {
        let c = f.leading_coeff()?.to_integer();
        if c.abs().is_one() {
            return Ok(Verdict::Unit);
        }
        return constant_verdict(f, &c);
    }
    let img = embed(f, &l)?;
    let member = membership_table(f.monoid(), &l, img.degree());
    let fac = zpoly::factor_int_univariate(&int_image(&img), config.degree_bound)?;
    let mut pieces = fac.factors.clone();
    let c = fac.content.abs();
    if !c.is_one() {
        pieces.push((vec![c], 1));
    }
    let nonunit = |p: &[BigInt]| zpoly::degree(p) >= 1 || !zpoly::leading(p).abs().is_one();
    let Some((a, b)) = first_split(&pieces, None, &member, config.distribution_bound, nonunit)?
    else {
        return Ok(Verdict::Irreducible(Certificate::OracleExhaustion));
    };
    let a = if fac.content.is_negative() { zpoly::scale(&a, &BigInt::from(-1)) } else { a };
    Ok(Verdict::Reducible {
        left: dense_to_poly(CoeffRing::Int, f.monoid(), &l, &to_rationals(&a))?,
        right: dense_to_poly(CoeffRing::Int, f.monoid(), &l, &to_rationals(&b))?,
    })
}

/// Searches every monic candidate divisor with exponents in `M` of degree at
/// most half that of `f`, over 𝔽_p. Independent of the factorization code.
pub fn brute_force_irreducible_fpm(f: &PolyExpr, config: &OracleConfig) -> Result<Verdict> {
    let p = match f.ring() {
        CoeffRing::PrimeField(p) => p.get(),
        other => {
            return Err(Error::Precondition(format!(
                "brute-force search needs a prime field, got {other}"
            )))
        }
    };
    if p > config.fp_prime_bound {
        return Err(Error::ScaleExceeded(format!(
            "prime {p} exceeds the bound {}",
            config.fp_prime_bound
        )));
    }
    let l = grid_scale(f.monoid())?;
    if f.is_zero() {
        return Ok(Verdict::Zero);
    }
    if f.is_constant() {
        return Ok(Verdict::Unit);
    }
    let img = fp_image(&embed(f, &l)?);
    let top = fp::degree(&img);
    let member = membership_table(f.monoid(), &l, top);
    let mut count: u64 = 0;
    for e in (1..=top / 2).filter(|&e| member[e]) {
        let free = (0..e).filter(|&i| member[i]).count() as u32;
        count = p
            .checked_pow(free)
            .and_then(|c| count.checked_add(c))
            .filter(|&c| c <= config.candidate_bound)
            .ok_or_else(|| Error::ScaleExceeded("too many candidate divisors".into()))?;
    }
    for e in (1..=top / 2).filter(|&e| member[e]) {
        let slots: Vec<usize> = (0..e).filter(|&i| member[i]).collect();
        let mut digits = vec![0u64; slots.len()];
        loop {
            let mut g = vec![0u64; e + 1];
            g[e] = 1;
            for (s, d) in slots.iter().zip(&digits) {
                g[*s] = *d;
            }
            let (q, r) = fp::divrem(&img, &g, p);
            if r.is_empty() && q.iter().enumerate().all(|(i, c)| *c == 0 || member[i]) {
                let back = |v: &[u64]| {
                    let cs: Vec<BigRational> =
                        v.iter().map(|&c| BigRational::from_integer(c.into())).collect();
                    dense_to_poly(f.ring(), f.monoid(), &l, &cs)
                };
                return Ok(Verdict::Reducible {
                    left: back(&g)?,
                    right: back(&q)?,
                });
            }
            let mut k = digits.len();
            let advanced = loop {
                if k == 0 {
                    break false;
                }
                k -= 1;
                digits[k] += 1;
                if digits[k] < p {
                    break true;
                }
                digits[k] = 0;
            };
            if !advanced {
                break;
            }
        }
    }
    Ok(Verdict::Irreducible(Certificate::OracleExhaustion))
}
