use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::coeff::CoeffRing;
use crate::error::{Error, Result};
use crate::monoid::PuiseuxMonoid;
use crate::ratcore::Rat;

/// A polynomial expression `α₁X^{q₁} + … + α_kX^{q_k}` in `R[M]`, held in
/// canonical form: coefficients nonzero, exponents strictly descending and
/// members of the attached monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyExpr {
    ring: CoeffRing,
    monoid: PuiseuxMonoid,
    terms: Vec<(Rat, BigRational)>,
}

impl PolyExpr {
    /// Canonicalizes `terms`: coefficients are coerced into the ring, equal
    /// exponents merged, zeros dropped, exponents sorted descending. Every
    /// exponent must belong to `monoid`.
    pub fn new(
        ring: CoeffRing,
        monoid: PuiseuxMonoid,
        terms: impl IntoIterator<Item = (Rat, BigRational)>,
    ) -> Result<Self> {
        let mut acc: BTreeMap<Rat, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            if !monoid.member(&e) {
                return Err(Error::NotInMonoid {
                    element: e,
                    monoid: monoid.to_string(),
                });
            }
            let c = ring.coerce(&c)?;
            let slot = acc.entry(e).or_insert_with(BigRational::zero);
            *slot = ring.reduce(&*slot + c);
        }
        Ok(Self::from_sorted(ring, monoid, acc))
    }

    /// Integer-coefficient shorthand for [`PolyExpr::new`].
    pub fn from_ints(
        ring: CoeffRing,
        monoid: PuiseuxMonoid,
        terms: impl IntoIterator<Item = (Rat, i64)>,
    ) -> Result<Self> {
        Self::new(
            ring,
            monoid,
            terms
                .into_iter()
                .map(|(e, c)| (e, BigRational::from_integer(c.into()))),
        )
    }

    // Terms already reduced into the ring with member exponents.
    fn from_sorted(ring: CoeffRing, monoid: PuiseuxMonoid, acc: BTreeMap<Rat, BigRational>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        PolyExpr { ring, monoid, terms }
    }

    pub fn zero(ring: CoeffRing, monoid: PuiseuxMonoid) -> Self {
        PolyExpr {
            ring,
            monoid,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: CoeffRing, monoid: PuiseuxMonoid, c: BigRational) -> Result<Self> {
        Self::new(ring, monoid, [(Rat::zero(), c)])
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn monoid(&self) -> &PuiseuxMonoid {
        &self.monoid
    }

    /// `(exponent, coefficient)` pairs, exponents strictly descending.
    pub fn terms(&self) -> &[(Rat, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Zero or a lone exponent-0 term.
    pub fn is_constant(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [(e, _)] => e.is_zero(),
            _ => false,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn degree(&self) -> Result<Rat> {
        self.terms
            .first()
            .map(|(e, _)| e.clone())
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coeff(&self) -> Result<&BigRational> {
        self.terms.first().map(|(_, c)| c).ok_or(Error::ZeroPolynomial)
    }

    /// Coefficient of `X^0`, taken to be 0 when there is no such term.
    pub fn constant_coeff(&self) -> Result<BigRational> {
        match self.terms.last() {
            None => Err(Error::ZeroPolynomial),
            Some((e, c)) if e.is_zero() => Ok(c.clone()),
            Some(_) => Ok(BigRational::zero()),
        }
    }

    /// Integer coefficients, for expressions over ℤ.
    pub fn int_coeffs(&self) -> impl Iterator<Item = BigInt> + '_ {
        self.terms.iter().map(|(_, c)| c.to_integer())
    }

    fn check_compatible(&self, other: &PolyExpr) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::Mismatch(format!(
                "coefficient rings {} and {}",
                self.ring, other.ring
            )));
        }
        if self.monoid != other.monoid {
            return Err(Error::Mismatch(format!(
                "exponent monoids {} and {}",
                self.monoid, other.monoid
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &PolyExpr) -> Result<PolyExpr> {
        self.check_compatible(other)?;
        let mut acc: BTreeMap<Rat, BigRational> = BTreeMap::new();
        for (e, c) in self.terms.iter().chain(&other.terms) {
            let slot = acc.entry(e.clone()).or_insert_with(BigRational::zero);
            *slot = self.ring.reduce(&*slot + c);
        }
        Ok(Self::from_sorted(self.ring, self.monoid.clone(), acc))
    }

    pub fn neg(&self) -> PolyExpr {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), self.ring.reduce(-c)))
            .collect();
        PolyExpr {
            ring: self.ring,
            monoid: self.monoid.clone(),
            terms,
        }
    }

    pub fn sub(&self, other: &PolyExpr) -> Result<PolyExpr> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PolyExpr) -> Result<PolyExpr> {
        self.check_compatible(other)?;
        let mut acc: BTreeMap<Rat, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let slot = acc.entry(e1 + e2).or_insert_with(BigRational::zero);
                *slot = self.ring.reduce(&*slot + c1 * c2);
            }
        }
        Ok(Self::from_sorted(self.ring, self.monoid.clone(), acc))
    }

    pub fn pow(&self, k: u32) -> PolyExpr {
        let mut acc = PolyExpr::constant(self.ring, self.monoid.clone(), BigRational::one())
            .expect("0 is in every monoid");
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring and monoid");
        }
        acc
    }

    /// `c · self` for a ring element `c`.
    pub fn scale(&self, c: &BigRational) -> Result<PolyExpr> {
        let c = self.ring.coerce(c)?;
        let acc = self
            .terms
            .iter()
            .map(|(e, a)| (e.clone(), self.ring.reduce(a * &c)))
            .collect();
        Ok(Self::from_sorted(self.ring, self.monoid.clone(), acc))
    }

    /// The same expression read over another coefficient ring.
    pub fn over_ring(&self, ring: CoeffRing) -> Result<PolyExpr> {
        PolyExpr::new(ring, self.monoid.clone(), self.terms.iter().cloned())
    }

    /// The same expression read in another exponent monoid.
    pub fn in_monoid(&self, monoid: PuiseuxMonoid) -> Result<PolyExpr> {
        PolyExpr::new(self.ring, monoid, self.terms.iter().cloned())
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for PolyExpr {
    /// Renders the canonical form, e.g. `3X^(5/6)-X^(1/2)+7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let mag = c.abs();
            if e.is_zero() {
                write_coeff(f, &mag)?;
                continue;
            }
            if !mag.is_one() {
                write_coeff(f, &mag)?;
            }
            if *e == Rat::one() {
                write!(f, "X")?;
            } else if e.is_integer() {
                write!(f, "X^{e}")?;
            } else {
                write!(f, "X^({e})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: u64, d: u64) -> Rat {
        Rat::ratio(n, d)
    }

    fn grid(l: u64) -> PuiseuxMonoid {
        PuiseuxMonoid::grid(l).unwrap()
    }

    #[test]
    fn make_canonical() {
        let f = PolyExpr::from_ints(
            CoeffRing::Int,
            grid(6),
            [(r(1, 2), -1), (r(0, 1), 7), (r(5, 6), 3)],
        )
        .unwrap();
        assert_eq!(f.to_string(), "3X^(5/6)-X^(1/2)+7");
        assert_eq!(f.terms()[0].0, r(5, 6));

        let z = PolyExpr::from_ints(CoeffRing::Int, grid(2), [(r(1, 2), 1), (r(1, 2), -1)])
            .unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");

        let m: PuiseuxMonoid = "gen:2,3".parse().unwrap();
        let err = PolyExpr::from_ints(CoeffRing::Int, m, [(r(1, 1), 5)]).unwrap_err();
        assert_eq!(
            err,
            Error::NotInMonoid {
                element: r(1, 1),
                monoid: "gen:2,3".into()
            }
        );
    }

    #[test]
    fn degree_and_coefficients() {
        let f = PolyExpr::from_ints(
            CoeffRing::Int,
            grid(6),
            [(r(5, 6), 3), (r(1, 2), -1), (r(0, 1), 7)],
        )
        .unwrap();
        assert_eq!(f.degree().unwrap(), r(5, 6));
        assert_eq!(f.leading_coeff().unwrap(), &BigRational::from_integer(3.into()));
        assert_eq!(f.constant_coeff().unwrap(), BigRational::from_integer(7.into()));

        let g = PolyExpr::from_ints(CoeffRing::Int, grid(2), [(r(1, 2), 1)]).unwrap();
        assert_eq!(g.degree().unwrap(), r(1, 2));
        assert!(g.constant_coeff().unwrap().is_zero());

        let c = PolyExpr::from_ints(CoeffRing::Int, grid(1), [(r(0, 1), 7)]).unwrap();
        assert_eq!(c.degree().unwrap(), Rat::zero());
        assert_eq!(c.leading_coeff().unwrap(), &BigRational::from_integer(7.into()));
        assert_eq!(c.constant_coeff().unwrap(), BigRational::from_integer(7.into()));

        let z = PolyExpr::zero(CoeffRing::Int, grid(1));
        assert_eq!(z.degree(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn products() {
        let a = PolyExpr::from_ints(CoeffRing::Int, grid(2), [(r(1, 2), 1), (r(0, 1), 1)]).unwrap();
        let b = PolyExpr::from_ints(CoeffRing::Int, grid(2), [(r(1, 2), 1), (r(0, 1), -1)]).unwrap();
        assert_eq!(a.mul(&b).unwrap().to_string(), "X-1");

        let f2 = CoeffRing::prime_field(2).unwrap();
        let pp = PuiseuxMonoid::p_power(2).unwrap();
        let g = PolyExpr::from_ints(f2, pp, [(r(1, 4), 1), (r(0, 1), 1)]).unwrap();
        assert_eq!(g.pow(2).to_string(), "X^(1/2)+1");

        let z = PolyExpr::zero(CoeffRing::Int, grid(2));
        assert!(a.mul(&z).unwrap().is_zero());

        let other = PolyExpr::zero(CoeffRing::Rational, grid(2));
        assert!(matches!(a.mul(&other), Err(Error::Mismatch(_))));
        let other = PolyExpr::zero(CoeffRing::Int, grid(3));
        assert!(matches!(a.add(&other), Err(Error::Mismatch(_))));
    }

    #[test]
    fn rendering() {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let f = PolyExpr::new(
            CoeffRing::Rational,
            grid(2),
            [(r(3, 2), q(-1, 2)), (r(1, 1), q(1, 1)), (r(2, 1), q(-1, 1))],
        )
        .unwrap();
        assert_eq!(f.to_string(), "-X^2-1/2X^(3/2)+X");
        let f7 = CoeffRing::prime_field(7).unwrap();
        let g = PolyExpr::from_ints(f7, grid(1), [(r(1, 1), -1), (r(0, 1), 1)]).unwrap();
        assert_eq!(g.to_string(), "6X+1");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly(ring: CoeffRing) -> impl Strategy<Value = PolyExpr> {
            proptest::collection::vec((0u64..12, -9i64..10), 0..6).prop_map(move |ts| {
                PolyExpr::from_ints(ring, grid(6), ts.into_iter().map(|(k, c)| (r(k, 6), c)))
                    .unwrap()
            })
        }

        proptest! {
            #[test]
            fn canonicalization_idempotent(f in poly(CoeffRing::Int)) {
                let again = PolyExpr::new(f.ring(), f.monoid().clone(), f.terms().iter().cloned()).unwrap();
                prop_assert_eq!(&again, &f);
                prop_assert!(f.terms().windows(2).all(|w| w[0].0 > w[1].0));
                prop_assert!(f.terms().iter().all(|(_, c)| !c.is_zero()));
            }

            #[test]
            fn ring_laws(f in poly(CoeffRing::Int), g in poly(CoeffRing::Int), h in poly(CoeffRing::Int)) {
                prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
                prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
                prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
                prop_assert_eq!(
                    f.mul(&g.add(&h).unwrap()).unwrap(),
                    f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
                );
                prop_assert!(f.sub(&f).unwrap().is_zero());
            }

            #[test]
            fn degree_is_additive(f in poly(CoeffRing::Int), g in poly(CoeffRing::Int)) {
                prop_assume!(!f.is_zero() && !g.is_zero());
                let fg = f.mul(&g).unwrap();
                prop_assert_eq!(fg.degree().unwrap(), &f.degree().unwrap() + &g.degree().unwrap());
            }

            #[test]
            fn field_ring_laws(f in poly(CoeffRing::prime_field(5).unwrap()),
                               g in poly(CoeffRing::prime_field(5).unwrap())) {
                prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
                prop_assert!(f.terms().iter().all(|(_, c)| c.is_integer() && *c.numer() < 5.into() && *c.numer() >= 0.into()));
            }
        }
    }
}
