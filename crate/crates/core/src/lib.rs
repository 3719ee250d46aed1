//! Exact arithmetic for monoid rings `R[M]` whose exponents live in a
//! Puiseux monoid `M ⊆ ℚ≥0`, with coefficients in ℤ, ℚ or 𝔽_p.
//!
//! The crate is organized bottom-up:
//!
//! * [`ratcore`]: exact nonnegative rationals, the exponent domain;
//! * [`monoid`]: Puiseux monoids, numerical-semigroup normalization, atoms;
//! * [`factor`]: factorization sets, length sets, half-factoriality and
//!   other-half-factoriality with constructive witnesses;
//! * [`ring`]: polynomial expressions, content, Eisenstein's criterion,
//!   the Gauss-lemma pipeline and Frobenius roots;
//! * [`oracle`]: independent, complete irreducibility deciders used as
//!   ground truth at desk scale.

pub mod error;
pub mod factor;
pub mod monoid;
pub mod oracle;
pub mod ratcore;
pub mod ring;

pub use error::{Error, Result};
pub use factor::{Factorization, HfWitness, OhfWitness};
pub use monoid::{MonoidKind, NormalizationMap, NumericalSemigroup, PuiseuxMonoid};
pub use oracle::OracleConfig;
pub use ratcore::Rat;
pub use ring::{CoeffRing, Certificate, EisensteinCert, PolyExpr, Verdict};
