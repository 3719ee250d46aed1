//! Puiseux monoids (additive submonoids of the nonnegative rationals).
//!
//! Three families are representable: finitely generated monoids
//! `⟨q₁, …, q_k⟩`, integer grids `⟨1/L⟩`, and the p-power monoid of all
//! rationals whose denominator is a power of `p`. A finitely generated
//! monoid is isomorphic, by scaling, to a numerical semigroup; membership,
//! atoms and factorizations are all computed on that integer image.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ratcore::{is_power_of, is_prime, lcm_of_denominators, Rat};

/// Largest multiplicity (least generator) accepted for a numerical semigroup.
/// The Apéry set holds one entry per residue class, so this bounds memory.
pub const MAX_MULTIPLICITY: u64 = 1 << 20;

/// A submonoid of `(ℕ₀, +)` with finite complement, with its Apéry set with
/// respect to the least generator precomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    apery: Vec<u64>,
    frobenius: i64,
    // Shortest-path tree over residues: (generator index, parent residue).
    parent: Vec<Option<(usize, usize)>>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, which must be positive with
    /// overall gcd 1. Non-minimal generators are discarded.
    pub fn new(gens: &[u64]) -> Result<Self> {
        let mut gens: Vec<u64> = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() || gens[0] == 0 {
            return Err(Error::InvalidMonoid(
                "numerical semigroup needs positive generators".into(),
            ));
        }
        if gens.iter().fold(0u64, |g, &x| g.gcd(&x)) != 1 {
            return Err(Error::InvalidMonoid(format!(
                "generators {gens:?} have a nontrivial common divisor"
            )));
        }
        if gens[0] > MAX_MULTIPLICITY {
            return Err(Error::ScaleExceeded(format!(
                "least generator {} exceeds {MAX_MULTIPLICITY}",
                gens[0]
            )));
        }

        let all = Self::with_generators(gens.clone())?;
        let minimal: Vec<u64> = gens
            .iter()
            .copied()
            .filter(|&g| !gens.iter().any(|&h| h < g && all.contains(g - h)))
            .collect();
        if minimal.len() == gens.len() {
            Ok(all)
        } else {
            Self::with_generators(minimal)
        }
    }

    fn with_generators(generators: Vec<u64>) -> Result<Self> {
        let m = generators[0];
        let size = m as usize;
        let mut dist = vec![u64::MAX; size];
        let mut parent = vec![None; size];
        dist[0] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0u64, 0usize)));
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > dist[r] {
                continue;
            }
            for (i, &g) in generators.iter().enumerate().skip(1) {
                let nd = d.checked_add(g).ok_or_else(|| {
                    Error::ScaleExceeded("Apéry set entry overflows u64".into())
                })?;
                let nr = ((r as u64 + g % m) % m) as usize;
                if nd < dist[nr] {
                    dist[nr] = nd;
                    parent[nr] = Some((i, r));
                    heap.push(Reverse((nd, nr)));
                }
            }
        }
        let frobenius = *dist.iter().max().expect("nonempty") as i64 - m as i64;
        Ok(NumericalSemigroup {
            generators,
            apery: dist,
            frobenius,
            parent,
        })
    }

    /// Minimal generators, ascending.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// `apery_set()[r]` is the least member congruent to `r` modulo the
    /// multiplicity.
    pub fn apery_set(&self) -> &[u64] {
        &self.apery
    }

    /// Largest integer not in the semigroup; −1 for `ℕ₀`.
    pub fn frobenius_number(&self) -> i64 {
        self.frobenius
    }

    pub fn is_n0(&self) -> bool {
        self.generators == [1]
    }

    /// Apéry-set membership test.
    pub fn contains(&self, n: u64) -> bool {
        n >= self.apery[(n % self.multiplicity()) as usize]
    }

    pub fn contains_big(&self, n: &BigUint) -> bool {
        match n.to_u64() {
            Some(n) => self.contains(n),
            // Beyond u64 is far past the Frobenius number.
            None => true,
        }
    }

    /// One representation of `n` as a nonnegative combination of the minimal
    /// generators, or `None` if `n` is a gap.
    pub fn representation(&self, n: &BigUint) -> Option<Vec<BigUint>> {
        let m = self.multiplicity();
        let r = (n % m).to_usize().expect("residue fits");
        let base = self.apery[r];
        if *n < BigUint::from(base) {
            return None;
        }
        let mut coeffs = vec![BigUint::zero(); self.generators.len()];
        coeffs[0] = (n - base) / m;
        let mut cur = r;
        while let Some((i, prev)) = self.parent[cur] {
            coeffs[i] += 1u32;
            cur = prev;
        }
        Some(coeffs)
    }
}

/// The scaling isomorphism between a finitely generated Puiseux monoid and
/// its numerical semigroup image: `n = scale · q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationMap {
    scale: Rat,
    inverse: Rat,
}

impl NormalizationMap {
    fn new(scale: Rat) -> Self {
        let inverse = Rat::one().checked_div(&scale).expect("positive scale");
        NormalizationMap { scale, inverse }
    }

    pub fn scale(&self) -> &Rat {
        &self.scale
    }

    pub fn inverse_scale(&self) -> &Rat {
        &self.inverse
    }

    /// `scale · q`, when that is an integer.
    pub fn to_semigroup(&self, q: &Rat) -> Option<BigUint> {
        (&self.scale * q).to_integer().cloned()
    }

    pub fn from_semigroup(&self, n: &BigUint) -> Rat {
        &self.inverse * &Rat::integer(n.clone())
    }
}

#[derive(Debug)]
struct Normalized {
    semigroup: NumericalSemigroup,
    map: NormalizationMap,
}

#[derive(Debug)]
struct FinGen {
    generators: Vec<Rat>,
    denominator_lcm: BigUint,
    normal: Normalized,
}

#[derive(Clone, Debug)]
enum Repr {
    FinGen(Arc<FinGen>),
    Grid(u64, Arc<Normalized>),
    PPow(u64),
}

/// A Puiseux monoid. Construct through [`PuiseuxMonoid::generated_by`],
/// [`PuiseuxMonoid::grid`] or [`PuiseuxMonoid::p_power`], or parse a literal
/// `gen:1/2,2/3,5`, `grid:6`, `ppow:2`.
#[derive(Clone, Debug)]
pub struct PuiseuxMonoid {
    repr: Repr,
}

/// Borrowed view of a monoid's defining data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoidKind<'a> {
    /// Generators, ascending and deduplicated.
    FinGen(&'a [Rat]),
    /// `⟨1/L⟩`.
    Grid(u64),
    /// `{q : d(q) is a power of p}`.
    PPow(u64),
}

impl PuiseuxMonoid {
    /// `⟨q₁, …, q_k⟩`. Generators are sorted and deduplicated; zero and an
    /// empty list are rejected.
    pub fn generated_by(generators: impl IntoIterator<Item = Rat>) -> Result<Self> {
        let mut gens: Vec<Rat> = generators.into_iter().collect();
        gens.sort();
        gens.dedup();
        if gens.is_empty() {
            return Err(Error::InvalidMonoid("empty generator list".into()));
        }
        if gens[0].is_zero() {
            return Err(Error::InvalidMonoid("generators must be positive".into()));
        }
        let lcm = lcm_of_denominators(&gens);
        let scaled: Vec<BigUint> = gens.iter().map(|q| q.scale(&lcm).num().clone()).collect();
        let d = scaled.iter().fold(BigUint::zero(), |g, x| g.gcd(x));
        let ints = scaled
            .iter()
            .map(|x| {
                (x / &d).to_u64().ok_or_else(|| {
                    Error::ScaleExceeded(format!("scaled generator {x} exceeds u64"))
                })
            })
            .collect::<Result<Vec<u64>>>()?;
        let semigroup = NumericalSemigroup::new(&ints)?;
        let scale = Rat::new(lcm.clone(), d)?;
        Ok(PuiseuxMonoid {
            repr: Repr::FinGen(Arc::new(FinGen {
                generators: gens,
                denominator_lcm: lcm,
                normal: Normalized {
                    semigroup,
                    map: NormalizationMap::new(scale),
                },
            })),
        })
    }

    /// `⟨1/L⟩`; `grid(1)` is `(ℕ₀, +)`.
    pub fn grid(l: u64) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidMonoid("grid denominator must be positive".into()));
        }
        let normal = Normalized {
            semigroup: NumericalSemigroup::new(&[1])?,
            map: NormalizationMap::new(Rat::integer(l)),
        };
        Ok(PuiseuxMonoid {
            repr: Repr::Grid(l, Arc::new(normal)),
        })
    }

    /// The monoid of nonnegative rationals whose denominator is a power of
    /// the prime `p`.
    pub fn p_power(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PuiseuxMonoid {
            repr: Repr::PPow(p),
        })
    }

    pub fn kind(&self) -> MonoidKind<'_> {
        match &self.repr {
            Repr::FinGen(fg) => MonoidKind::FinGen(&fg.generators),
            Repr::Grid(l, _) => MonoidKind::Grid(*l),
            Repr::PPow(p) => MonoidKind::PPow(*p),
        }
    }

    fn normalized(&self) -> Option<&Normalized> {
        match &self.repr {
            Repr::FinGen(fg) => Some(&fg.normal),
            Repr::Grid(_, n) => Some(n),
            Repr::PPow(_) => None,
        }
    }

    /// The isomorphic numerical semigroup and the scaling map onto it.
    /// Grids normalize to `ℕ₀` with scale `L`.
    pub fn normalize(&self) -> Result<(&NumericalSemigroup, &NormalizationMap)> {
        self.normalized()
            .map(|n| (&n.semigroup, &n.map))
            .ok_or_else(|| Error::NotFinitelyGenerated(format!("normalizing {self}")))
    }

    /// Least `L` with `M ⊆ (1/L)ℕ₀`; `None` for p-power monoids.
    pub fn denominator_lcm(&self) -> Option<BigUint> {
        match &self.repr {
            Repr::FinGen(fg) => Some(fg.denominator_lcm.clone()),
            Repr::Grid(l, _) => Some(BigUint::from(*l)),
            Repr::PPow(_) => None,
        }
    }

    pub fn is_finitely_generated(&self) -> bool {
        !matches!(self.repr, Repr::PPow(_))
    }

    pub fn member(&self, q: &Rat) -> bool {
        match &self.repr {
            Repr::FinGen(fg) => match fg.normal.map.to_semigroup(q) {
                Some(n) => fg.normal.semigroup.contains_big(&n),
                None => false,
            },
            Repr::Grid(l, _) => q.scale(&BigUint::from(*l)).is_integer(),
            Repr::PPow(p) => is_power_of(q.den(), *p),
        }
    }

    /// Coefficients expressing `q` over the generator list (for `FinGen`) or
    /// over `1/L` (for `Grid`). `None` when `q` is not a member or the
    /// monoid is not finitely generated.
    pub fn member_witness(&self, q: &Rat) -> Option<Vec<BigUint>> {
        match &self.repr {
            Repr::FinGen(fg) => {
                let n = fg.normal.map.to_semigroup(q)?;
                let rep = fg.normal.semigroup.representation(&n)?;
                let mut coeffs = vec![BigUint::zero(); fg.generators.len()];
                for (g, c) in fg.normal.semigroup.generators().iter().zip(rep) {
                    let atom = fg.normal.map.from_semigroup(&BigUint::from(*g));
                    let idx = fg
                        .generators
                        .binary_search(&atom)
                        .expect("atoms are generators");
                    coeffs[idx] = c;
                }
                Some(coeffs)
            }
            Repr::Grid(l, _) => q
                .scale(&BigUint::from(*l))
                .to_integer()
                .map(|n| vec![n.clone()]),
            Repr::PPow(_) => None,
        }
    }

    /// The atoms of the monoid, ascending.
    pub fn atoms(&self) -> Vec<Rat> {
        match self.normalized() {
            Some(n) => n
                .semigroup
                .generators()
                .iter()
                .map(|&g| n.map.from_semigroup(&BigUint::from(g)))
                .collect(),
            None => Vec::new(),
        }
    }

    /// Finitely generated monoids are atomic; p-power monoids have no atoms.
    pub fn is_atomic(&self) -> bool {
        self.is_finitely_generated()
    }

    pub fn is_iso_to_n0(&self) -> bool {
        self.normalized().is_some_and(|n| n.semigroup.is_n0())
    }

    /// All members `x` with `0 < x ≤ bound`, ascending.
    pub fn elements_up_to(&self, bound: &Rat) -> Result<Vec<Rat>> {
        let n = self
            .normalized()
            .ok_or_else(|| Error::NotFinitelyGenerated("listing elements".into()))?;
        let scaled = n.map.scale() * bound;
        let top = (scaled.num() / scaled.den())
            .to_u64()
            .ok_or_else(|| Error::ScaleExceeded(format!("bound {bound} too large")))?;
        Ok((1..=top)
            .filter(|&k| n.semigroup.contains(k))
            .map(|k| n.map.from_semigroup(&BigUint::from(k)))
            .collect())
    }
}

impl PartialEq for PuiseuxMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.kind() == other.kind()
    }
}

impl Eq for PuiseuxMonoid {}

impl fmt::Display for PuiseuxMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            MonoidKind::FinGen(gens) => {
                write!(f, "gen:")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            MonoidKind::Grid(l) => write!(f, "grid:{l}"),
            MonoidKind::PPow(p) => write!(f, "ppow:{p}"),
        }
    }
}

impl FromStr for PuiseuxMonoid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidMonoid(format!("cannot parse monoid literal {s:?}"));
        let (tag, body) = s.split_once(':').ok_or_else(bad)?;
        let int = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        match tag.trim() {
            "gen" => {
                let gens = body
                    .split(',')
                    .map(|t| t.trim().parse::<Rat>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                Self::generated_by(gens)
            }
            "grid" => Self::grid(int(body)?),
            "ppow" => Self::p_power(int(body)?),
            _ => Err(bad()),
        }
    }
}
