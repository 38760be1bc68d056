//! Numerics for mixed norm spaces H(p,q,alpha) of analytic functions on the
//! unit disk: truncated Taylor series, integral means and mixed norms,
//! composition/integral/multiplication operators, holomorphic semiflows and
//! their generators, and the explicit constructions (Fejer blocks, lacunary
//! embeddings, binomial singular families) used to probe separability and
//! strong continuity at desk scale.

pub mod constructions;
pub mod error;
pub mod fft;
pub mod norms;
pub mod operators;
pub mod quad;
pub mod semigroup;
pub mod series;

pub use error::Error;
pub use norms::SpaceParams;
pub use series::AnalyticFunction;

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;

/// Deterministic uniform f64 in [0, 1) from any RngCore (stable across rand
/// crate versions; 53 mantissa bits).
pub fn unit_f64(rng: &mut impl rand_core::RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Deterministic uniform f64 in [lo, hi).
pub fn uniform_f64(rng: &mut impl rand_core::RngCore, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * unit_f64(rng)
}
