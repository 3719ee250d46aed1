//! Polynomial expressions over ℤ, ℚ and 𝔽_p with exponents in a Puiseux
//! monoid, and the irreducibility tools that act on them.

mod coeff;
mod criteria;
mod poly;

pub use coeff::{CoeffRing, Prime};
pub use criteria::{
    content, eisenstein_check, eisenstein_search, frobenius_root, frobenius_split,
    gauss_irreducible_over_int, is_primitive, primitive_part, EisensteinOutcome,
    FrobeniusOutcome,
};
pub use poly::PolyExpr;

/// A prime `p` for which Eisenstein's conditions hold, certifying
/// irreducibility in `ℤ[M]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EisensteinCert {
    pub prime: u64,
}

/// Why an expression was declared irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Eisenstein(EisensteinCert),
    /// Primitive over ℤ and irreducible over ℚ.
    GaussPipeline,
    /// No admissible split survived exhaustive search.
    OracleExhaustion,
}

/// Outcome of an irreducibility decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Irreducible(Certificate),
    /// Two nonunit factors whose product is exactly the input.
    Reducible { left: PolyExpr, right: PolyExpr },
    Unit,
    Zero,
    Inapplicable(String),
}

impl Verdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Verdict::Irreducible(_))
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self, Verdict::Reducible { .. })
    }
}
