//! Error type shared by all modules.

use crate::C64;

/// Failure modes surfaced by the toolkit. Domain violations are reported
/// eagerly; numerical non-convergence is kept distinct so callers (and the
/// CLI exit code) can tell the two apart.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("evaluation point {z} lies outside the closed unit disk")]
    OutsideDisk { z: C64 },

    #[error("boundary evaluation at |z| = 1 requires a polynomial (tail bound absent or zero)")]
    BoundaryEval,

    #[error("radius {r} exceeds the certified truncation radius {max}")]
    BeyondTailRadius { r: f64, max: f64 },

    #[error("invalid parameter {name}: {msg}")]
    InvalidParam { name: &'static str, msg: String },

    #[error("quadrature failed to converge ({context})")]
    NonConvergence { context: &'static str },

    #[error("ill-conditioned computation: amplified noise {amplified:.3e} exceeds tolerance {tol:.3e}")]
    IllConditioned { amplified: f64, tol: f64 },

    #[error("flow stalled near the boundary at t = {t:.6} (|z| = {abs_z:.12})")]
    BoundaryStall { t: f64, abs_z: f64 },

    #[error("series reciprocal requires a nonzero constant term")]
    ZeroConstantTerm,

    #[error("Herglotz factor has negative real part (min Re P = {0:.3e} on the sample grid)")]
    NotHerglotz(f64),

    #[error("composition symbol exceeds the unit bound: sup |phi| = {sup:.12}")]
    NotSelfMap { sup: f64 },

    #[error("degenerate composition symbol: |phi(0)| equals sup |phi|")]
    DegenerateSymbol,

    #[error("no Bloch witnesses found: {0}")]
    WitnessNotFound(&'static str),

    #[error("lacunary parameter violation: {0}")]
    LacunaryInvariant(String),

    #[error("principal branch argument left (-pi, pi): {0}")]
    BranchViolation(&'static str),
}
