//! Independent decision procedures at desk scale: the grid embedding into a
//! univariate ring, complete univariate factorization over ℤ and 𝔽_p, and
//! irreducibility in `F[M]` / `ℤ[M]` for finitely generated `M`.
//!
//! Everything here errors with [`Error::ScaleExceeded`](crate::Error) rather
//! than guess when an input is beyond the configured bounds.

mod decide;
pub mod fp;
mod grid;
pub mod zpoly;

pub use decide::{brute_force_irreducible_fpm, decide_irreducible_in_fm, decide_irreducible_in_zm};
pub use fp::{factor_fp_univariate, FpFactorization};
pub use grid::{embed, GridImage};
pub use zpoly::{factor_int_univariate, IntFactorization};

use crate::error::{Error, Result};

/// Environment variable overriding [`OracleConfig::degree_bound`].
pub const DEGREE_BOUND_ENV: &str = "FACTA_ORACLE_DEGREE_BOUND";

/// Desk-scale limits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Degree limit for factoring over ℤ, after the power of `Y` is removed.
    pub degree_bound: usize,
    /// Largest `p` accepted over 𝔽_p.
    pub fp_prime_bound: u64,
    /// Degree limit for factoring over 𝔽_p.
    pub fp_degree_bound: usize,
    /// Candidate divisors the brute-force search may try.
    pub candidate_bound: u64,
    /// Two-block factor distributions the decision may try.
    pub distribution_bound: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            degree_bound: 8,
            fp_prime_bound: 13,
            fp_degree_bound: 12,
            candidate_bound: 1 << 20,
            distribution_bound: 1 << 20,
        }
    }
}

impl OracleConfig {
    /// Defaults, with the degree bound taken from
    /// `FACTA_ORACLE_DEGREE_BOUND` when set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = OracleConfig::default();
        if let Ok(v) = std::env::var(DEGREE_BOUND_ENV) {
            cfg.degree_bound = v.trim().parse().map_err(|_| {
                Error::Precondition(format!("{DEGREE_BOUND_ENV} must be a nonnegative integer, got {v:?}"))
            })?;
        }
        Ok(cfg)
    }

    pub fn with_degree_bound(mut self, bound: usize) -> Self {
        self.degree_bound = bound;
        self
    }
}
