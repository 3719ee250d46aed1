//! Factorizations in atomic Puiseux monoids.
//!
//! Everything is computed on the numerical-semigroup image of the monoid and
//! mapped back, so atoms and elements are exact rationals throughout.
//!
//! [`is_hf`] and [`is_ohf`] answer from the atom count alone: a nontrivial
//! atomic Puiseux monoid is half-factorial exactly when it has one atom, and
//! other-half-factorial exactly when it has at most two. The
//! `brute_check_*` functions answer the same questions by exhaustive
//! counting up to a bound and serve as the independent check.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::monoid::{NormalizationMap, NumericalSemigroup, PuiseuxMonoid};
use crate::ratcore::Rat;

/// One factorization: a multiset of atoms, stored as `(atom, multiplicity)`
/// with atoms ascending and multiplicities positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    parts: Vec<(Rat, u64)>,
}

impl Factorization {
    /// Builds a factorization from `(atom, multiplicity)` pairs, merging
    /// repeated atoms and dropping zero multiplicities.
    pub fn new(parts: impl IntoIterator<Item = (Rat, u64)>) -> Self {
        let mut parts: Vec<(Rat, u64)> = parts.into_iter().filter(|(_, m)| *m > 0).collect();
        parts.sort();
        let mut merged: Vec<(Rat, u64)> = Vec::with_capacity(parts.len());
        for (a, m) in parts {
            match merged.last_mut() {
                Some((b, k)) if *b == a => *k += m,
                _ => merged.push((a, m)),
            }
        }
        Factorization { parts: merged }
    }

    pub fn parts(&self) -> &[(Rat, u64)] {
        &self.parts
    }

    /// `|z|`, the number of atoms counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.parts.iter().map(|(_, m)| m).sum()
    }

    /// The element this factorization multiplies out to.
    pub fn value(&self) -> Rat {
        self.parts
            .iter()
            .fold(Rat::zero(), |acc, (a, m)| &acc + &a.scale(&BigUint::from(*m)))
    }
}

impl fmt::Display for Factorization {
    /// `a1^m1 + a2^m2 + ...`; non-integral atoms are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, m)) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if a.is_integer() {
                write!(f, "{a}^{m}")?;
            } else {
                write!(f, "({a})^{m}")?;
            }
        }
        Ok(())
    }
}

/// Two factorizations of one element with different lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HfWitness {
    pub element: Rat,
    pub z1: Factorization,
    pub z2: Factorization,
}

/// Two distinct factorizations of one element with equal length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OhfWitness {
    pub element: Rat,
    pub z1: Factorization,
    pub z2: Factorization,
    pub m: BigUint,
    pub n: BigUint,
}

impl OhfWitness {
    /// Checks the witness invariants: equal lengths, distinct multisets,
    /// both evaluating to `element`.
    pub fn validate(&self) -> bool {
        self.z1 != self.z2
            && self.z1.length() == self.z2.length()
            && self.z1.value() == self.element
            && self.z2.value() == self.element
    }
}

fn atomic_normalization(m: &PuiseuxMonoid) -> Result<(&NumericalSemigroup, &NormalizationMap)> {
    if !m.is_atomic() {
        return Err(Error::NotAtomic(format!("factorization in {m}")));
    }
    m.normalize()
}

fn semigroup_element(m: &PuiseuxMonoid, x: &Rat) -> Result<u64> {
    let (s, map) = atomic_normalization(m)?;
    if x.is_zero() {
        return Err(Error::Precondition("the identity has no factorizations".into()));
    }
    let not_member = || Error::NotInMonoid {
        element: x.clone(),
        monoid: m.to_string(),
    };
    let n = map.to_semigroup(x).ok_or_else(not_member)?;
    let n = n
        .to_u64()
        .ok_or_else(|| Error::ScaleExceeded(format!("element {x} too large to enumerate")))?;
    if !s.contains(n) {
        return Err(not_member());
    }
    Ok(n)
}

/// Every coefficient vector `c ≥ 0` with `Σ cᵢ·atomsᵢ = target`, first
/// coordinate descending (lexicographically greatest vector first).
fn solutions(atoms: &[u64], target: u64) -> Vec<Vec<u64>> {
    // suffix gcds prune branches whose remainder cannot be hit
    let mut suffix_gcd = vec![0u64; atoms.len() + 1];
    for i in (0..atoms.len()).rev() {
        suffix_gcd[i] = suffix_gcd[i + 1].gcd(&atoms[i]);
    }
    let mut out = Vec::new();
    let mut cur = vec![0u64; atoms.len()];
    fn go(
        i: usize,
        rest: u64,
        atoms: &[u64],
        sg: &[u64],
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if i == atoms.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if !rest.is_multiple_of(sg[i]) {
            return;
        }
        if i + 1 == atoms.len() {
            cur[i] = rest / atoms[i];
            out.push(cur.clone());
            cur[i] = 0;
            return;
        }
        for c in (0..=rest / atoms[i]).rev() {
            cur[i] = c;
            go(i + 1, rest - c * atoms[i], atoms, sg, cur, out);
        }
        cur[i] = 0;
    }
    go(0, target, atoms, &suffix_gcd, &mut cur, &mut out);
    out
}

/// The full factorization set `Z(x)` in a finitely generated monoid, in
/// lexicographically descending order of coefficient vectors over the atoms
/// (ascending).
pub fn factorizations(m: &PuiseuxMonoid, x: &Rat) -> Result<Vec<Factorization>> {
    let n = semigroup_element(m, x)?;
    let (s, map) = m.normalize()?;
    let atoms: Vec<Rat> = s
        .generators()
        .iter()
        .map(|&g| map.from_semigroup(&BigUint::from(g)))
        .collect();
    Ok(solutions(s.generators(), n)
        .into_iter()
        .map(|c| Factorization::new(atoms.iter().cloned().zip(c)))
        .collect())
}

/// `{|z| : z ∈ Z(x)}`, ascending.
pub fn length_set(m: &PuiseuxMonoid, x: &Rat) -> Result<Vec<u64>> {
    let lens: BTreeSet<u64> = factorizations(m, x)?.iter().map(Factorization::length).collect();
    Ok(lens.into_iter().collect())
}

fn atomic_atoms(m: &PuiseuxMonoid, what: &str) -> Result<Vec<Rat>> {
    if !m.is_atomic() {
        return Err(Error::NotAtomic(what.into()));
    }
    Ok(m.atoms())
}

/// Half-factoriality, decided by counting atoms.
pub fn is_hf(m: &PuiseuxMonoid) -> Result<bool> {
    Ok(atomic_atoms(m, "half-factoriality")?.len() == 1)
}

/// Other-half-factoriality, decided by counting atoms.
pub fn is_ohf(m: &PuiseuxMonoid) -> Result<bool> {
    Ok(atomic_atoms(m, "other-half-factoriality")?.len() <= 2)
}

/// For a monoid with at least two atoms `a₁ < a₂`: the element
/// `n(a₁)·n(a₂)` written as `n(a₂)·d(a₁)` copies of `a₁` and as
/// `n(a₁)·d(a₂)` copies of `a₂`. The lengths differ because `a₁ ≠ a₂`.
pub fn hf_witness(m: &PuiseuxMonoid) -> Result<HfWitness> {
    let atoms = atomic_atoms(m, "half-factoriality")?;
    if atoms.len() < 2 {
        return Err(Error::Precondition(
            "criterion inapplicable: fewer than 2 atoms".into(),
        ));
    }
    let (a1, a2) = (&atoms[0], &atoms[1]);
    let count = |k: BigUint| {
        k.to_u64()
            .ok_or_else(|| Error::ScaleExceeded("witness multiplicity exceeds u64".into()))
    };
    let z1 = Factorization::new([(a1.clone(), count(a2.num() * a1.den())?)]);
    let z2 = Factorization::new([(a2.clone(), count(a1.num() * a2.den())?)]);
    Ok(HfWitness {
        element: Rat::integer(a1.num() * a2.num()),
        z1,
        z2,
    })
}

/// For a monoid with at least three atoms: with `a₁ < a₂ < a₃` the three
/// smallest atoms, `d = d(a₁)d(a₂)d(a₃)` and `a′ᵢ = d·aᵢ`, the least
/// positive `m, n` with `m(a′₂ − a′₁) = n(a′₃ − a′₂)` give
/// `m·a₁ + n·a₃ = (m + n)·a₂`, two distinct factorizations of equal length.
pub fn ohf_witness(m: &PuiseuxMonoid) -> Result<OhfWitness> {
    let atoms = atomic_atoms(m, "other-half-factoriality")?;
    if atoms.len() < 3 {
        return Err(Error::Precondition(
            "criterion inapplicable: fewer than 3 atoms".into(),
        ));
    }
    let (a1, a2, a3) = (&atoms[0], &atoms[1], &atoms[2]);
    let d = a1.den() * a2.den() * a3.den();
    let scaled = |a: &Rat| a.scale(&d).to_integer().expect("d clears denominators").clone();
    let (p1, p2, p3) = (scaled(a1), scaled(a2), scaled(a3));
    let low = &p2 - &p1;
    let high = &p3 - &p2;
    let g = low.gcd(&high);
    let mm = &high / &g;
    let nn = &low / &g;
    let count = |k: &BigUint| {
        k.to_u64()
            .ok_or_else(|| Error::ScaleExceeded("witness multiplicity exceeds u64".into()))
    };
    let (mc, nc) = (count(&mm)?, count(&nn)?);
    let z1 = Factorization::new([(a1.clone(), mc), (a3.clone(), nc)]);
    let z2 = Factorization::new([(a2.clone(), mc + nc)]);
    Ok(OhfWitness {
        element: a2.scale(&(&mm + &nn)),
        z1,
        z2,
        m: mm,
        n: nn,
    })
}

fn semigroup_bound(m: &PuiseuxMonoid, bound: &Rat) -> Result<(Vec<u64>, u64, Rat)> {
    let (s, map) = atomic_normalization(m)?;
    if bound.is_zero() {
        return Err(Error::Precondition("bound must be positive".into()));
    }
    let scaled = map.scale() * bound;
    let top = (scaled.num() / scaled.den())
        .to_u64()
        .filter(|&t| t <= 1 << 24)
        .ok_or_else(|| Error::ScaleExceeded(format!("bound {bound} too large")))?;
    Ok((s.generators().to_vec(), top, map.inverse_scale().clone()))
}

/// Least member `x ≤ bound` whose factorizations do not all have the same
/// length, found by a shortest/longest-length table over the integers.
pub fn brute_hf_counterexample(m: &PuiseuxMonoid, bound: &Rat) -> Result<Option<Rat>> {
    let (atoms, top, inv) = semigroup_bound(m, bound)?;
    let top = top as usize;
    let mut shortest = vec![u64::MAX; top + 1];
    let mut longest = vec![0u64; top + 1];
    shortest[0] = 0;
    for x in 1..=top {
        for &a in &atoms {
            let a = a as usize;
            if a > x || shortest[x - a] == u64::MAX {
                continue;
            }
            shortest[x] = shortest[x].min(shortest[x - a] + 1);
            longest[x] = longest[x].max(longest[x - a] + 1);
        }
        if shortest[x] != u64::MAX && shortest[x] != longest[x] {
            return Ok(Some(&inv * &Rat::from(x as u64)));
        }
    }
    Ok(None)
}

/// True iff every member `0 < x ≤ bound` has a singleton length set.
pub fn brute_check_hf(m: &PuiseuxMonoid, bound: &Rat) -> Result<bool> {
    Ok(brute_hf_counterexample(m, bound)?.is_none())
}

/// Least member `x ≤ bound` with two distinct factorizations of the same
/// length. Counts multisets of atoms per `(element, length)` with the usual
/// one-atom-at-a-time recurrence, saturating at 2.
pub fn brute_ohf_counterexample(m: &PuiseuxMonoid, bound: &Rat) -> Result<Option<Rat>> {
    let (atoms, top, inv) = semigroup_bound(m, bound)?;
    let top = top as usize;
    let max_len = top / atoms[0] as usize;
    let width = max_len + 1;
    if (top + 1).saturating_mul(width) > 1 << 26 {
        return Err(Error::ScaleExceeded(format!(
            "counting table {}x{width} too large",
            top + 1
        )));
    }
    // count[x * width + l]: factorizations of x with length l using the atoms seen so far
    let mut count = vec![0u8; (top + 1) * width];
    count[0] = 1;
    for &a in &atoms {
        let a = a as usize;
        for x in a..=top {
            for l in 1..width {
                let add = count[(x - a) * width + l - 1];
                if add > 0 {
                    let c = &mut count[x * width + l];
                    *c = (*c + add).min(2);
                }
            }
        }
    }
    let first = (1..=top).find(|&x| (0..width).any(|l| count[x * width + l] >= 2));
    Ok(first.map(|x| &inv * &Rat::from(x as u64)))
}

/// True iff no member `0 < x ≤ bound` has two distinct factorizations of
/// equal length.
pub fn brute_check_ohf(m: &PuiseuxMonoid, bound: &Rat) -> Result<bool> {
    Ok(brute_ohf_counterexample(m, bound)?.is_none())
}
