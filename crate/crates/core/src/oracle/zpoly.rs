//! Dense integer polynomials in one variable and their complete
//! factorization over ℤ.
//!
//! Coefficients are stored in ascending order of degree with no trailing
//! zeros; the empty vector is the zero polynomial.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::fp::{self, FpPoly};
use crate::error::{Error, Result};
use crate::ratcore::{is_prime, primes};

pub type IntPoly = Vec<BigInt>;

/// Above this degree a squarefree part goes straight to Zassenhaus.
pub const KRONECKER_MAX_DEGREE: usize = 8;
const KRONECKER_VALUE_LIMIT: u64 = 1_000_000_000_000;
const KRONECKER_TUPLE_LIMIT: u128 = 1 << 22;
const ZASSENHAUS_PRIME_CANDIDATES: usize = 8;
const ZASSENHAUS_PRIME_LIMIT: u64 = 10_000;
const RECOMBINATION_LIMIT: u64 = 1 << 22;

pub fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn from_i64(cs: &[i64]) -> IntPoly {
    let mut p: IntPoly = cs.iter().map(|&c| BigInt::from(c)).collect();
    trim(&mut p);
    p
}

/// Degree of a nonzero polynomial.
pub fn degree(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

pub fn leading(p: &[BigInt]) -> &BigInt {
    p.last().expect("nonzero polynomial")
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &[BigInt], c: &BigInt) -> IntPoly {
    let mut out: IntPoly = a.iter().map(|x| x * c).collect();
    trim(&mut out);
    out
}

pub fn pow(a: &[BigInt], k: u32) -> IntPoly {
    let mut acc = vec![BigInt::one()];
    for _ in 0..k {
        acc = mul(&acc, a);
    }
    acc
}

pub fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

pub fn derivative(p: &[BigInt]) -> IntPoly {
    let mut out: IntPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    trim(&mut out);
    out
}

/// Nonnegative gcd of the coefficients.
pub fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// `p / content(p)`, with a positive leading coefficient.
pub fn primitive_part(p: &[BigInt]) -> IntPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut c = content(p);
    if leading(p).is_negative() {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

/// `a / b` when `b` divides `a` in `ℤ[Y]`.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lb = leading(b);
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = &r[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= &c * y;
        }
        q[k] = c;
    }
    if r.iter().all(Zero::is_zero) {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

// lc(b)^(deg a - deg b + 1) · a  mod  b
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let lb = leading(b).clone();
    let mut r = a.to_vec();
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let lr = leading(&r).clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &lr * y;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd with a positive leading coefficient; content is ignored.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    primitive_part(&x)
}

/// Yun's decomposition of a primitive `f` with positive leading coefficient
/// into pairwise coprime squarefree parts `(a_i, i)` with `f = ∏ a_i^i`.
pub fn squarefree_decomposition(f: &[BigInt]) -> Vec<(IntPoly, u32)> {
    let df = derivative(f);
    if df.is_empty() {
        return Vec::new();
    }
    let g = gcd(f, &df);
    let mut c = div_exact(f, &g).expect("gcd divides");
    let mut d = sub(&div_exact(&df, &g).expect("gcd divides"), &derivative(&c));
    let mut out = Vec::new();
    let mut i = 1;
    while degree(&c) > 0 {
        let a = gcd(&c, &d);
        c = div_exact(&c, &a).expect("gcd divides");
        d = sub(&div_exact(&d, &a).expect("gcd divides"), &derivative(&c));
        if degree(&a) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Complete factorization `content · ∏ factor^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntFactorization {
    /// Signed, so that every factor has a positive leading coefficient.
    pub content: BigInt,
    /// Primitive irreducibles, ascending degree then lexicographic.
    pub factors: Vec<(IntPoly, u32)>,
}

impl IntFactorization {
    pub fn expand(&self) -> IntPoly {
        let mut acc = vec![self.content.clone()];
        for (g, e) in &self.factors {
            acc = mul(&acc, &pow(g, *e));
        }
        trim(&mut acc);
        acc
    }
}

/// Factors a nonzero integer polynomial. The degree bound applies to what is
/// left after the content and the power of `Y` have been split off.
pub fn factor_int_univariate(p: &[BigInt], degree_bound: usize) -> Result<IntFactorization> {
    if p.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let mut c = content(p);
    if leading(p).is_negative() {
        c = -c;
    }
    let mut f: IntPoly = p.iter().map(|x| x / &c).collect();
    let k = f.iter().take_while(|x| x.is_zero()).count();
    f.drain(..k);
    if degree(&f) > degree_bound {
        return Err(Error::ScaleExceeded(format!(
            "integer polynomial of degree {} exceeds the bound {degree_bound}",
            degree(&f)
        )));
    }
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();
    if k > 0 {
        factors.push((from_i64(&[0, 1]), k as u32));
    }
    for (part, e) in squarefree_decomposition(&f) {
        for g in factor_squarefree(&part)? {
            factors.push((g, e));
        }
    }
    factors.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(IntFactorization { content: c, factors })
}

fn factor_squarefree(f: &[BigInt]) -> Result<Vec<IntPoly>> {
    if degree(f) <= KRONECKER_MAX_DEGREE {
        match kronecker_factor(f) {
            Err(Error::ScaleExceeded(_)) => {}
            other => return other,
        }
    }
    zassenhaus_factor(f)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let r = n.sqrt();
    for d in 1..=r {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
    }
    small.extend(large.into_iter().rev());
    small
}

fn kronecker_points() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..).flat_map(|k| [k, -k]))
}

fn overflow() -> Error {
    Error::ScaleExceeded("interpolation overflow".into())
}

// Newton interpolation through (xs[i], ys[i]); `None` when some divided
// difference is not an integer, which rules out integer candidates.
fn interpolate(xs: &[i128], ys: &[i128]) -> Result<Option<Vec<i128>>> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = dd[i].checked_sub(dd[i - 1]).ok_or_else(overflow)?;
            let den = xs[i] - xs[i - level];
            if num % den != 0 {
                return Ok(None);
            }
            dd[i] = num / den;
        }
    }
    // Horner on the Newton form.
    let mut poly = vec![dd[n - 1]];
    for i in (0..n - 1).rev() {
        let mut next = vec![0i128; poly.len() + 1];
        for (j, c) in poly.iter().enumerate() {
            next[j + 1] = next[j + 1].checked_add(*c).ok_or_else(overflow)?;
            let t = c.checked_mul(xs[i]).ok_or_else(overflow)?;
            next[j] = next[j].checked_sub(t).ok_or_else(overflow)?;
        }
        next[0] = next[0].checked_add(dd[i]).ok_or_else(overflow)?;
        poly = next;
    }
    Ok(Some(poly))
}

fn eval_i128(p: &[i128], x: i128) -> Option<i128> {
    p.iter()
        .rev()
        .try_fold(0i128, |acc, c| acc.checked_mul(x)?.checked_add(*c))
}

// A factor of `f` of exact degree `d`, or a linear factor from a root met
// along the way.
fn kronecker_find(f: &[BigInt], d: usize) -> Result<Option<IntPoly>> {
    let n = degree(f);
    let mut usable: Vec<(i64, u64, Vec<u64>)> = Vec::new();
    for x in kronecker_points().take(2 * n + 6) {
        let v = eval(f, &BigInt::from(x));
        if v.is_zero() {
            return Ok(Some(from_i64(&[-x, 1])));
        }
        match v.abs().to_u64() {
            Some(a) if a <= KRONECKER_VALUE_LIMIT => usable.push((x, a, divisors(a))),
            _ => {}
        }
    }
    if usable.len() < d + 1 {
        return Err(Error::ScaleExceeded(
            "values too large for interpolation".into(),
        ));
    }
    usable.sort_by_key(|(x, _, ds)| (ds.len(), x.unsigned_abs()));
    let (nodes, filters) = usable.split_at(d + 1);
    let mut total: u128 = 1;
    for (i, (_, _, ds)) in nodes.iter().enumerate() {
        let choices = if i == 0 { ds.len() } else { 2 * ds.len() } as u128;
        total = total.saturating_mul(choices);
    }
    if total > KRONECKER_TUPLE_LIMIT {
        return Err(Error::ScaleExceeded(format!(
            "{total} interpolation tuples"
        )));
    }
    let xs: Vec<i128> = nodes.iter().map(|(x, _, _)| *x as i128).collect();
    let signed: Vec<Vec<i128>> = nodes
        .iter()
        .enumerate()
        .map(|(i, (_, _, ds))| {
            let mut v: Vec<i128> = ds.iter().map(|&q| q as i128).collect();
            if i > 0 {
                v.extend(ds.iter().map(|&q| -(q as i128)));
            }
            v
        })
        .collect();
    let lc_f = leading(f).clone();
    let c0_f = f[0].clone();
    let mut idx = vec![0usize; d + 1];
    let mut ys = vec![0i128; d + 1];
    'tuples: loop {
        for i in 0..=d {
            ys[i] = signed[i][idx[i]];
        }
        if let Some(g) = interpolate(&xs, &ys)? {
            let lc = g[d];
            if lc != 0
                && (&lc_f % BigInt::from(lc)).is_zero()
                && g[0] != 0
                && (&c0_f % BigInt::from(g[0])).is_zero()
                && filters.iter().all(|(x, a, _)| {
                    eval_i128(&g, *x as i128)
                        .is_some_and(|v| v != 0 && (*a as i128) % v == 0)
                })
            {
                let g: IntPoly = g.iter().map(|&c| BigInt::from(c)).collect();
                if div_exact(f, &g).is_some() {
                    return Ok(Some(primitive_part(&g)));
                }
            }
        }
        // Odometer, last coordinate fastest.
        let mut k = d + 1;
        loop {
            if k == 0 {
                break 'tuples;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < signed[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
    Ok(None)
}

/// Kronecker's method on a primitive `f` with positive leading coefficient.
/// Returns irreducible factors whose product is `f`.
pub fn kronecker_factor(f: &[BigInt]) -> Result<Vec<IntPoly>> {
    let mut f = f.to_vec();
    let mut out = Vec::new();
    let mut d = 1;
    while degree(&f) > 1 && 2 * d <= degree(&f) {
        match kronecker_find(&f, d)? {
            Some(g) => {
                f = div_exact(&f, &g).expect("verified factor");
                out.push(g);
            }
            None => d += 1,
        }
    }
    if degree(&f) > 0 {
        out.push(f);
    }
    Ok(out)
}

fn to_fp(f: &[BigInt], l: u64) -> FpPoly {
    let m = BigInt::from(l);
    let mut out: FpPoly = f
        .iter()
        .map(|c| c.mod_floor(&m).to_u64().expect("below modulus"))
        .collect();
    fp::trim(&mut out);
    out
}

fn from_fp(f: &[u64]) -> IntPoly {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

fn reduce_mod(f: &[BigInt], m: &BigInt) -> IntPoly {
    let mut out: IntPoly = f.iter().map(|c| c.mod_floor(m)).collect();
    trim(&mut out);
    out
}

fn symmetric(f: &[BigInt], m: &BigInt) -> IntPoly {
    let half: BigInt = m >> 1;
    let mut out: IntPoly = f
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    trim(&mut out);
    out
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

// Lifts f ≡ g·h (mod ℓ), g monic, to f ≡ g·h (mod ℓ^k).
fn hensel_step(
    f: &[BigInt],
    g0: &[u64],
    h0: &[u64],
    l: u64,
    k: u32,
) -> (IntPoly, IntPoly) {
    let (one, s, t) = fp::ext_gcd(g0, h0, l);
    debug_assert_eq!(one, vec![1]);
    let lb = BigInt::from(l);
    let mut g = from_fp(g0);
    let mut h = from_fp(h0);
    let mut lk = lb.clone();
    for _ in 1..k {
        let next = &lk * &lb;
        let diff = reduce_mod(&sub(f, &mul(&g, &h)), &next);
        let e: IntPoly = diff.iter().map(|c| c / &lk).collect();
        let e = to_fp(&e, l);
        let te = fp::mul(&t, &e, l);
        let (q, a) = fp::divrem(&te, g0, l);
        let b = fp::add(&fp::mul(&s, &e, l), &fp::mul(&q, h0, l), l);
        g = add(&g, &scale(&from_fp(&a), &lk));
        h = add(&h, &scale(&from_fp(&b), &lk));
        lk = next;
    }
    (reduce_mod(&g, &lk), reduce_mod(&h, &lk))
}

// Monic lifts modulo ℓ^k of the monic factors of f/lc mod ℓ.
fn hensel_lift(f: &[BigInt], factors: &[FpPoly], l: u64, k: u32) -> Vec<IntPoly> {
    let m = BigInt::from(l).pow(k);
    if factors.len() == 1 {
        let inv = inverse_mod(leading(f), &m);
        return vec![reduce_mod(&scale(f, &inv), &m)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let g0 = left
        .iter()
        .fold(vec![1u64], |acc, u| fp::mul(&acc, u, l));
    let lc = leading(f).mod_floor(&BigInt::from(l)).to_u64().expect("below ℓ");
    let h0 = right
        .iter()
        .fold(vec![lc], |acc, u| fp::mul(&acc, u, l));
    let (g, h) = hensel_step(f, &g0, &h0, l, k);
    let mut out = hensel_lift(&g, left, l, k);
    out.extend(hensel_lift(&h, right, l, k));
    out
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let s = c.len();
    let mut i = s;
    while i > 0 {
        i -= 1;
        if c[i] < n - s + i {
            c[i] += 1;
            for j in i + 1..s {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| {
        acc.saturating_mul((n - i) as u64) / (i as u64 + 1)
    })
}

/// Zassenhaus factorization of a primitive squarefree `f` with positive
/// leading coefficient: Berlekamp modulo a small prime, Hensel lifting and
/// recombination of modular factors by trial division.
pub fn zassenhaus_factor(f: &[BigInt]) -> Result<Vec<IntPoly>> {
    let n = degree(f);
    if n <= 1 {
        return Ok(vec![f.to_vec()]);
    }
    let lc = leading(f).clone();
    let mut best: Option<(usize, u64)> = None;
    let mut tried = 0;
    for l in primes().skip(1).take_while(|&l| l < ZASSENHAUS_PRIME_LIMIT) {
        if (&lc % BigInt::from(l)).is_zero() {
            continue;
        }
        let fl = to_fp(f, l);
        if !fp::is_squarefree(&fl, l) {
            continue;
        }
        let count = fp::ddf_count(&fp::monic(&fl, l), l);
        if best.is_none_or(|(c, _)| count < c) {
            best = Some((count, l));
        }
        tried += 1;
        if count == 1 || tried == ZASSENHAUS_PRIME_CANDIDATES {
            break;
        }
    }
    let (count, l) = best.ok_or_else(|| {
        Error::ScaleExceeded("no suitable prime for modular factorization".into())
    })?;
    if count == 1 {
        return Ok(vec![f.to_vec()]);
    }
    debug_assert!(is_prime(l));
    let modular = fp::berlekamp(&fp::monic(&to_fp(f, l), l), l);

    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm = BigInt::from_biguint(Sign::Plus, norm_sq.magnitude().sqrt() + BigUint::one());
    let bound = norm * (BigInt::one() << n) * lc.abs() * 2;
    let lb = BigInt::from(l);
    let mut k = 1u32;
    let mut m = lb.clone();
    while m <= bound {
        m *= &lb;
        k += 1;
    }
    let mut lifted = hensel_lift(f, &modular, l, k);

    let mut f = f.to_vec();
    let mut out = Vec::new();
    let mut s = 1;
    let mut work = 0u64;
    while 2 * s <= lifted.len() {
        work = work.saturating_add(binomial(lifted.len(), s));
        if work > RECOMBINATION_LIMIT {
            return Err(Error::ScaleExceeded(format!(
                "{} modular factors to recombine",
                lifted.len()
            )));
        }
        let mut comb: Vec<usize> = (0..s).collect();
        let mut found = None;
        loop {
            let lcf = leading(&f).clone();
            let prod = comb
                .iter()
                .fold(vec![lcf.clone()], |acc, &i| reduce_mod(&mul(&acc, &lifted[i]), &m));
            let cand = primitive_part(&symmetric(&prod, &m));
            if cand[0].is_zero() || (&f[0] % &cand[0]).is_zero() {
                if let Some(q) = div_exact(&f, &cand) {
                    found = Some((cand, q));
                    break;
                }
            }
            if !next_combination(&mut comb, lifted.len()) {
                break;
            }
        }
        match found {
            Some((g, q)) => {
                out.push(g);
                f = q;
                for &i in comb.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if degree(&f) > 0 {
        out.push(primitive_part(&f));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(cs: &[i64]) -> IntFactorization {
        factor_int_univariate(&from_i64(cs), 64).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = fac(&[-1, 0, 1]);
        assert_eq!(r.content, BigInt::one());
        assert_eq!(
            r.factors,
            vec![(from_i64(&[-1, 1]), 1), (from_i64(&[1, 1]), 1)]
        );
    }

    #[test]
    fn content_split() {
        let r = fac(&[2, 2]);
        assert_eq!(r.content, BigInt::from(2));
        assert_eq!(r.factors, vec![(from_i64(&[1, 1]), 1)]);
    }

    #[test]
    fn y5_plus_2_is_irreducible() {
        let f = from_i64(&[2, 0, 0, 0, 0, 1]);
        assert_eq!(kronecker_factor(&f).unwrap(), vec![f.clone()]);
        assert_eq!(zassenhaus_factor(&f).unwrap(), vec![f.clone()]);
        assert_eq!(fac(&[2, 0, 0, 0, 0, 1]).factors, vec![(f, 1)]);
    }

    #[test]
    fn powers_and_y_factor() {
        // -3 Y^2 (Y+1)^2 (Y^2+1)
        let f = mul(
            &scale(&mul(&from_i64(&[0, 0, 1]), &pow(&from_i64(&[1, 1]), 2)), &BigInt::from(-3)),
            &from_i64(&[1, 0, 1]),
        );
        let r = fac(&f.iter().map(|c| c.to_i64().unwrap()).collect::<Vec<_>>());
        assert_eq!(r.content, BigInt::from(-3));
        assert_eq!(
            r.factors,
            vec![
                (from_i64(&[0, 1]), 2),
                (from_i64(&[1, 1]), 2),
                (from_i64(&[1, 0, 1]), 1)
            ]
        );
        assert_eq!(r.expand(), f);
    }

    #[test]
    fn y_cubed_minus_one() {
        let r = fac(&[-1, 0, 0, 1]);
        assert_eq!(
            r.factors,
            vec![(from_i64(&[-1, 1]), 1), (from_i64(&[1, 1, 1]), 1)]
        );
    }

    #[test]
    fn swinnerton_dyer_style_high_degree() {
        // (Y^12 + 3)(Y^10 - Y + 1), both irreducible
        let a = from_i64(&[3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let b = from_i64(&[1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let mut got = zassenhaus_factor(&mul(&a, &b)).unwrap();
        got.sort();
        let mut want = vec![a, b];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn degree_bound_is_enforced() {
        let f = from_i64(&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
        assert!(factor_int_univariate(&f, 8).unwrap_err().is_scale_exceeded());
        // A bare power of Y does not count against the bound.
        assert!(factor_int_univariate(&from_i64(&[0; 20].iter().copied().chain([5]).collect::<Vec<_>>()), 8).is_ok());
    }

    #[test]
    fn squarefree_parts() {
        // (Y+1)^3 (Y-2)
        let f = mul(&pow(&from_i64(&[1, 1]), 3), &from_i64(&[-2, 1]));
        let parts = squarefree_decomposition(&f);
        assert_eq!(
            parts,
            vec![(from_i64(&[-2, 1]), 1), (from_i64(&[1, 1]), 3)]
        );
    }
}
