//! Dense polynomials over 𝔽_p, coefficients ascending, no trailing zeros.

use crate::error::{Error, Result};
use crate::ratcore::inv_mod;

pub type FpPoly = Vec<u64>;

pub fn trim(p: &mut FpPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv(a: u64, p: u64) -> u64 {
    inv_mod(a, p).expect("nonzero residue")
}

pub fn degree(p: &[u64]) -> usize {
    p.len().saturating_sub(1)
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = *c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = (out[i] + c) % p;
    }
    trim(&mut out);
    out
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = *c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = (out[i] + p - c) % p;
    }
    trim(&mut out);
    out
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(*x, *y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &[u64], c: u64, p: u64) -> FpPoly {
    let mut out: FpPoly = a.iter().map(|x| mulmod(*x, c, p)).collect();
    trim(&mut out);
    out
}

pub fn monic(a: &[u64], p: u64) -> FpPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, inv(lc, p), p),
    }
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let lc_inv = inv(*b.last().unwrap(), p);
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = r[k + b.len() - 1];
        if top == 0 {
            continue;
        }
        let c = mulmod(top, lc_inv, p);
        for (j, y) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - mulmod(c, *y, p)) % p;
        }
        q[k] = c;
    }
    trim(&mut q);
    trim(&mut r);
    (q, r)
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    divrem(a, b, p).1
}

/// Monic gcd (zero when both inputs are zero).
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

/// `(g, s, t)` with `s·a + t·b = g`, `g` the monic gcd.
pub fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let c = inv(*r0.last().expect("not both zero"), p);
    (scale(&r0, c, p), scale(&s0, c, p), scale(&t0, c, p))
}

pub fn derivative(a: &[u64], p: u64) -> FpPoly {
    let mut out: FpPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| mulmod(*c, i as u64 % p, p))
        .collect();
    trim(&mut out);
    out
}

pub fn is_squarefree(a: &[u64], p: u64) -> bool {
    let d = derivative(a, p);
    !d.is_empty() && degree(&gcd(a, &d, p)) == 0
}

// base^e mod m for e ≥ 0.
fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> FpPoly {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

/// Number of irreducible factors of a monic squarefree polynomial, by
/// distinct-degree factorization.
pub fn ddf_count(f: &[u64], p: u64) -> usize {
    let mut f = f.to_vec();
    let mut count = 0;
    let mut h = vec![0, 1];
    let mut d = 1;
    while 2 * d <= degree(&f) {
        h = powmod(&h, p, &f, p);
        let g = gcd(&f, &sub(&h, &[0, 1], p), p);
        if degree(&g) > 0 {
            count += degree(&g) / d;
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
        }
        d += 1;
    }
    if degree(&f) > 0 {
        count += 1;
    }
    count
}

// Basis of the null space of a square matrix over 𝔽_p.
fn null_space(mut a: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut pivot_of_col = vec![None; n];
    let mut row = 0;
    for col in 0..n {
        let Some(r) = (row..n).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, r);
        let c = inv(a[row][col], p);
        for x in a[row].iter_mut() {
            *x = mulmod(*x, c, p);
        }
        for r in 0..n {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for k in 0..n {
                    let t = mulmod(f, a[row][k], p);
                    a[r][k] = (a[r][k] + p - t) % p;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for col in 0..n {
            if let Some(r) = pivot_of_col[col] {
                v[col] = (p - a[r][free]) % p;
            }
        }
        basis.push(v);
    }
    basis
}

/// Berlekamp's algorithm: the monic irreducible factors of a monic
/// squarefree polynomial, sorted.
pub fn berlekamp(f: &[u64], p: u64) -> Vec<FpPoly> {
    let n = degree(f);
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let xp = powmod(&[0, 1], p, f, p);
    let mut q_rows = Vec::with_capacity(n);
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut padded = row.clone();
        padded.resize(n, 0);
        q_rows.push(padded);
        row = rem(&mul(&row, &xp, p), f, p);
    }
    // v is in the kernel iff v(x)^p ≡ v(x), i.e. (Qᵀ - I) v = 0.
    let mut a = vec![vec![0u64; n]; n];
    for (j, qrow) in q_rows.iter().enumerate() {
        for k in 0..n {
            a[k][j] = qrow[k];
        }
    }
    for (k, r) in a.iter_mut().enumerate() {
        r[k] = (r[k] + p - 1) % p;
    }
    let basis = null_space(a, p);
    let r = basis.len();
    let mut factors = vec![f.to_vec()];
    for v in &basis {
        if factors.len() == r {
            break;
        }
        let mut v = v.clone();
        trim(&mut v);
        if degree(&v) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for u in factors {
            if degree(&u) <= 1 {
                next.push(u);
                continue;
            }
            for c in 0..p {
                let g = gcd(&u, &sub(&v, &[c], p), p);
                if degree(&g) > 0 {
                    next.push(g);
                }
            }
        }
        factors = next;
    }
    factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    factors
}

/// Complete factorization `unit · ∏ factor^multiplicity` over 𝔽_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpFactorization {
    pub unit: u64,
    /// Monic irreducibles, ascending degree then lexicographic.
    pub factors: Vec<(FpPoly, u32)>,
}

impl FpFactorization {
    pub fn expand(&self, p: u64) -> FpPoly {
        let mut acc = vec![self.unit];
        for (g, e) in &self.factors {
            for _ in 0..*e {
                acc = mul(&acc, g, p);
            }
        }
        acc
    }
}

// Next monic polynomial of the same degree, lower coefficients counting
// upward from the constant term's most significant position.
fn next_monic(g: &mut [u64], p: u64) -> bool {
    let d = g.len() - 1;
    let mut i = d;
    while i > 0 {
        i -= 1;
        g[i] += 1;
        if g[i] < p {
            return true;
        }
        g[i] = 0;
    }
    false
}

/// Factors a nonzero polynomial over 𝔽_p by trial division with every monic
/// polynomial of degree up to half the remaining degree, in ascending order.
pub fn factor_fp_univariate(
    f: &[u64],
    p: u64,
    prime_bound: u64,
    degree_bound: usize,
) -> Result<FpFactorization> {
    if f.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    if p > prime_bound {
        return Err(Error::ScaleExceeded(format!(
            "prime {p} exceeds the bound {prime_bound}"
        )));
    }
    let unit = *f.last().unwrap();
    let mut f = monic(f, p);
    let mut factors: Vec<(FpPoly, u32)> = Vec::new();
    let k = f.iter().take_while(|&&c| c == 0).count();
    f.drain(..k);
    if k > 0 {
        factors.push((vec![0, 1], k as u32));
    }
    if degree(&f) > degree_bound {
        return Err(Error::ScaleExceeded(format!(
            "polynomial of degree {} over F_{p} exceeds the bound {degree_bound}",
            degree(&f)
        )));
    }
    let mut d = 1;
    while 2 * d <= degree(&f) {
        let mut g = vec![0u64; d + 1];
        g[d] = 1;
        loop {
            let mut e = 0;
            loop {
                let (q, r) = divrem(&f, &g, p);
                if !r.is_empty() {
                    break;
                }
                f = q;
                e += 1;
            }
            if e > 0 {
                factors.push((g.clone(), e));
            }
            if 2 * d > degree(&f) || !next_monic(&mut g, p) {
                break;
            }
        }
        d += 1;
    }
    if degree(&f) > 0 {
        factors.push((f, 1));
    }
    factors.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(FpFactorization { unit, factors })
}
