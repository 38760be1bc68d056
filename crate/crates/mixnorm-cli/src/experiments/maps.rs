//! Experiments on composition with disk self-maps and the integral operator
//! classifier.

use mixnorm::norms::{integral_mean, mixed_norm, SpaceParams};
use mixnorm::operators::{
    compose_polynomial, composition_norm_bound, polynomial_family, tg_classify as classify,
    TgVerdict,
};
use mixnorm::series::{geometric_series, log_reciprocal, AnalyticFunction};
use mixnorm::{uniform_f64, C64};
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::config::{show_exponent, RunConfig};
use crate::error::CliError;
use crate::report::{ExperimentReport, ReportBuilder};

use super::DEFAULT_SEED;

/// Random degree-6 self-map with the prescribed constant term, scaled so
/// sup |phi| on the closed disk hits `target`.
fn random_self_map(
    rng: &mut ChaCha8Rng,
    c0: C64,
    target: f64,
) -> Result<AnalyticFunction, CliError> {
    let mut coeffs = vec![C64::new(0.0, 0.0)];
    for _ in 1..=6 {
        coeffs.push(C64::new(uniform_f64(rng, -1.0, 1.0), uniform_f64(rng, -1.0, 1.0)));
    }
    let tail = AnalyticFunction::from_coeffs(coeffs);
    let sup = integral_mean(&tail, 1.0, f64::INFINITY)?;
    if sup <= 1e-12 || target <= c0.norm() {
        return Err(CliError::Numerical("degenerate random self-map draw".into()));
    }
    let scaled = tail.scale(C64::new((target - c0.norm()) / sup, 0.0));
    Ok(scaled.add(&AnalyticFunction::constant(c0)))
}

pub fn subordination(cfg: &RunConfig) -> Result<ExperimentReport, CliError> {
    let pairs = cfg.extra_usize("pairs", 50)?;
    let p = cfg.p_or(2.0);
    let tol = cfg.tol_or(1e-9);
    let seed = cfg.seed_or(DEFAULT_SEED);
    let radii = [0.3, 0.6, 0.9, 0.97];

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fs = polynomial_family(pairs, 8, 0.7, seed.wrapping_add(1));
    let mut curve = Vec::with_capacity(pairs);
    let mut worst: f64 = 0.0;
    for (i, f) in fs.iter().enumerate() {
        let target = uniform_f64(&mut rng, 0.5, 0.95);
        let phi = random_self_map(&mut rng, C64::new(0.0, 0.0), target)?;
        let comp = compose_polynomial(f, &phi, f.degree() * phi.degree())?;
        let mut pair_worst: f64 = 0.0;
        for &r in &radii {
            let num = integral_mean(&comp, r, p)?;
            let den = integral_mean(f, r, p)?.max(1e-300);
            pair_worst = pair_worst.max(num / den);
        }
        worst = worst.max(pair_worst);
        curve.push((i as f64, pair_worst));
    }

    let mut b = ReportBuilder::new("subordination", seed);
    b.param("pairs", pairs)
        .param("p", show_exponent(p))
        .scalar("worst_ratio", worst)
        .curve("pair_worst", curve)
        .check("dominated", worst <= 1.0 + tol)
        .tolerance("dominated", tol);
    Ok(b.finish())
}

pub fn co_bound(cfg: &RunConfig) -> Result<ExperimentReport, CliError> {
    let pairs = cfg.extra_usize("pairs", 30)?;
    let sp = SpaceParams::new(cfg.p_or(2.0), cfg.q_or(f64::INFINITY), cfg.alpha_or(1.0))
        .map_err(CliError::from)?;
    let tol = cfg.tol_or(1e-9);
    let seed = cfg.seed_or(DEFAULT_SEED);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fs = polynomial_family(pairs, 8, 0.7, seed.wrapping_add(1));
    let mut curve = Vec::with_capacity(pairs);
    let mut worst_margin: f64 = 0.0;
    for (i, f) in fs.iter().enumerate() {
        let c0 = C64::new(uniform_f64(&mut rng, 0.1, 0.5), uniform_f64(&mut rng, -0.3, 0.3));
        let target = uniform_f64(&mut rng, c0.norm() + 0.15, 0.85);
        let phi = random_self_map(&mut rng, c0, target)?;
        let comp = compose_polynomial(f, &phi, f.degree() * phi.degree())?;
        let ratio = mixed_norm(&comp, &sp)? / mixed_norm(f, &sp)?.max(1e-300);
        let bound = composition_norm_bound(&phi, &sp)?;
        let margin = ratio / bound;
        worst_margin = worst_margin.max(margin);
        curve.push((i as f64, margin));
    }

    let mut b = ReportBuilder::new("co-bound", seed);
    b.param("pairs", pairs)
        .param("p", show_exponent(sp.p))
        .param("q", show_exponent(sp.q))
        .param("alpha", sp.alpha)
        .scalar("worst_margin", worst_margin)
        .curve("pair_margin", curve)
        .check("bounded", worst_margin <= 1.0 + tol)
        .tolerance("bounded", tol);
    Ok(b.finish())
}

pub fn tg_classify(cfg: &RunConfig) -> Result<ExperimentReport, CliError> {
    let symbol = cfg.extra_str("symbol", "log-reciprocal");
    let degree = cfg.degree_or(1 << 16);
    let tail_tol = cfg.extra_f64("tail_tol", 1e-7)?;
    let seminorm_tol = cfg.extra_f64("seminorm_tol", 0.02)?;

    let (g, expected) = match symbol.as_str() {
        "z" => (AnalyticFunction::monomial(1), TgVerdict::Compact),
        "log-reciprocal" => (log_reciprocal(degree, tail_tol), TgVerdict::BoundedNotCompact),
        "reciprocal" => (geometric_series(degree, tail_tol), TgVerdict::Unbounded),
        other => {
            return Err(CliError::Usage(format!(
                "unknown symbol {:?}; expected z, log-reciprocal, or reciprocal",
                other
            )))
        }
    };
    let report = classify(&g)?;
    let mut expected_ok = report.verdict == expected;
    if symbol == "log-reciprocal" {
        expected_ok &= (report.bloch.seminorm - 2.0).abs() <= seminorm_tol;
    }

    let mut b = ReportBuilder::new("tg-classify", cfg.seed_or(DEFAULT_SEED));
    b.param("symbol", &symbol)
        .param("degree", degree)
        .scalar("bloch_seminorm", report.bloch.seminorm)
        .curve(
            "bloch_profile",
            report.bloch.radii.iter().zip(&report.bloch.profile).map(|(&r, &v)| (r, v)).collect(),
        )
        .verdict("class", report.verdict)
        .check("expected", expected_ok)
        .tolerance("seminorm", seminorm_tol);
    Ok(b.finish())
}
