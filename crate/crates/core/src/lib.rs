//! Exact and high-precision machinery for power series whose coefficients
//! are alternating binomial sums, the polynomial families those series
//! generate (exponential, geometric, Bernoulli, poly-Bernoulli, Euler), and
//! the zeta-type special functions and asymptotic expansions built on top.
//!
//! Layout:
//! - [`exact_core`]: big-rational scalars, binomials, Stirling/Bell tables
//! - [`poly_families`]: the exact polynomial and number families
//! - [`dyadic`]: guarded fixed-point reals for the numeric evaluators
//! - [`series_engine`]: truncated series, binomial-sum transforms, Euler-type
//!   series transformations
//! - [`special_functions`]: convergent (Hasse-type) and asymptotic evaluators
//!   for zeta/eta/Lerch/digamma/log-gamma and relatives
//! - [`suites`]: deterministic identity suites used by the CLI and tests

pub mod dyadic;
pub mod poly_families;
pub mod scalar;
pub mod series_engine;
pub mod special_functions;
pub mod exact_core;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic RNG for the identity suites' parameter grids.
pub fn suites_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small random rational with numerator in [-num_range, num_range] and
/// denominator in [1, den_range].
pub fn random_rational(rng: &mut ChaCha8Rng, num_range: i64, den_range: i64) -> BigRational {
    let n = rng.gen_range(-num_range..=num_range);
    let d = rng.gen_range(1..=den_range);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// How an evaluation loop stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    /// The relative-term tolerance held for three consecutive terms.
    ToleranceMet,
    /// An asymptotic series was cut at its smallest-magnitude term.
    OptimalTruncation,
    /// The term cap was reached first.
    MaxTerms,
}

impl StopReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            StopReason::ToleranceMet => "TOLERANCE_MET",
            StopReason::OptimalTruncation => "OPTIMAL_TRUNCATION",
            StopReason::MaxTerms => "MAX_TERMS",
        }
    }
}
