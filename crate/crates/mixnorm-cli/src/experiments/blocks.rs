//! Experiments on the explicit constructions: Fejer blocks, the lacunary
//! sup-scale embedding, the binomial family, and the damped approximants.

use mixnorm::constructions::{
    fejer, gn_poly, lacunary_embed, HnApprox, HnDiffMap, HnResidualMap, LacunaryParams, XnuSum,
};
use mixnorm::norms::{
    integral_mean, integral_mean_quadrature, mixed_norm, mixed_norm_map, parseval_mean,
    CircleMap, SpaceParams,
};
use mixnorm::semigroup::{DwPoint, GeneratorSpec, Herglotz};
use mixnorm::C64;

use crate::config::{show_exponent, RunConfig};
use crate::error::CliError;
use crate::report::{ExperimentReport, ReportBuilder};

use super::DEFAULT_SEED;

pub fn fejer_check(cfg: &RunConfig) -> Result<ExperimentReport, CliError> {
    let n = cfg.degree_or(16);
    if n == 0 {
        return Err(CliError::Usage("block order must be positive".into()));
    }
    let tol = cfg.tol_or(1e-8);
    let g = gn_poly(n);
    let nf = n as f64;

    let h1 = integral_mean(&g, 1.0, 1.0)?;
    let hinf = integral_mean(&g, 1.0, f64::INFINITY)?;
    let h2 = parseval_mean(&g, 1.0);
    let h2_quadrature = integral_mean_quadrature(&g, 1.0, 2.0)?;
    let h2_closed = ((2.0 * nf * nf + 1.0) / (3.0 * nf)).sqrt();
    let mass: f64 = fejer(n).iter().sum();
    let support_ok = (0..=g.degree())
        .all(|k| (g.coeff(k).norm() > 0.0) == (n + 1..=3 * n - 1).contains(&k));
    let mut hp_ok = true;
    for p in [2.0f64, 4.0] {
        let mp = integral_mean(&g, 1.0, p)?;
        hp_ok &= mp <= nf.powf(1.0 - 1.0 / p) * (1.0 + 1e-9);
    }

    let mut b = ReportBuilder::new("fejer-check", cfg.seed_or(DEFAULT_SEED));
    b.param("n", n)
        .scalar("h1", h1)
        .scalar("hinf", hinf)
        .scalar("h2", h2)
        .scalar("h2_quadrature", h2_quadrature)
        .scalar("h2_closed", h2_closed)
        .scalar("mass", mass)
        .curve(
            "coefficients",
            (n + 1..=3 * n - 1).map(|k| (k as f64, g.coeff(k).re)).collect(),
        )
        .check("h1", (h1 - 1.0).abs() <= tol)
        .check("hinf", (hinf - nf).abs() <= tol)
        .check("mass", (mass - nf).abs() <= 1e-12)
        .check("support", support_ok)
        .check("h2", (h2 - h2_closed).abs() <= 1e-10)
        .check("h2_agreement", (h2 - h2_quadrature).abs() <= 1e-8)
        .check("hp_bound", hp_ok)
        .tolerance("h1", tol)
        .tolerance("hinf", tol)
        .tolerance("mass", 1e-12)
        .tolerance("h2", 1e-10)
        .tolerance("h2_agreement", 1e-8);
    Ok(b.finish())
}

/// Per-length extremes of norm(Phi a) over sign patterns, with the global
/// two-sided constants and the worst relative drift between lengths.
pub struct SweepStats {
    pub per_length_min: Vec<(usize, f64)>,
    pub per_length_max: Vec<(usize, f64)>,
    pub lower: f64,
    pub upper: f64,
    pub drift: f64,
}

fn finish_stats(per_min: Vec<(usize, f64)>, per_max: Vec<(usize, f64)>) -> SweepStats {
    let lower = per_min.iter().map(|&(_, v)| v).fold(f64::MAX, f64::min);
    let upper = per_max.iter().map(|&(_, v)| v).fold(0.0, f64::max);
    // A single block has min = max by sign symmetry, so the step away from
    // length 1 measures the onset of cancellation, not convergence; drift
    // watches the steps after patterns first mix blocks.
    let skip = if per_min.len() > 2 { 1 } else { 0 };
    let mut drift: f64 = 0.0;
    for w in per_min[skip..].windows(2) {
        drift = drift.max((w[1].1 - w[0].1).abs() / w[0].1);
    }
    for w in per_max[skip..].windows(2) {
        drift = drift.max((w[1].1 - w[0].1).abs() / w[0].1);
    }
    SweepStats { per_length_min: per_min, per_length_max: per_max, lower, upper, drift }
}

fn sign_patterns(len: usize) -> impl Iterator<Item = Vec<f64>> {
    (0u32..1 << len).map(move |mask| {
        (0..len).map(|i| if mask >> i & 1 == 1 { -1.0 } else { 1.0 }).collect()
    })
}

/// Exhaustive +-1 sweep of the lacunary embedding, one block count at a time.
pub fn lacunary_sweep(
    sp: &SpaceParams,
    k_base: usize,
    blocks: usize,
) -> Result<SweepStats, CliError> {
    let params = LacunaryParams::for_space(sp, k_base, blocks)?;
    let mut per_min = Vec::new();
    let mut per_max = Vec::new();
    for len in 1..=blocks {
        let mut lo = f64::MAX;
        let mut hi = 0.0f64;
        for signs in sign_patterns(len) {
            let a: Vec<C64> = signs.iter().map(|&s| C64::new(s, 0.0)).collect();
            let norm = mixed_norm(&lacunary_embed(&a, &params)?, sp)?;
            lo = lo.min(norm);
            hi = hi.max(norm);
        }
        per_min.push((len, lo));
        per_max.push((len, hi));
    }
    Ok(finish_stats(per_min, per_max))
}

/// Fixed long sign patterns for block counts past the exhaustive range.
pub const XNU_LONG_PATTERNS: [&str; 2] = ["ones", "alternating"];

fn long_pattern(name: &str, len: usize) -> Vec<f64> {
    match name {
        "alternating" => (0..len).map(|i| if i % 2 == 1 { -1.0 } else { 1.0 }).collect(),
        _ => vec![1.0; len],
    }
}

/// Sign sweep of the binomial family sums: exhaustive up to four terms, the
/// fixed long patterns beyond that (each member norm costs a graded
/// quadrature pass, so the full power set is out of budget).
pub fn xnu_sweep(
    sp: &SpaceParams,
    nu: f64,
    beta: f64,
    k_base: usize,
    blocks: usize,
) -> Result<SweepStats, CliError> {
    let mut per_min = Vec::new();
    let mut per_max = Vec::new();
    for len in 1..=blocks {
        let mut lo = f64::MAX;
        let mut hi = 0.0f64;
        let mut eval = |signs: &[f64]| -> Result<(), CliError> {
            let a: Vec<C64> = signs.iter().map(|&s| C64::new(s, 0.0)).collect();
            let sum = XnuSum::assemble(&a, nu, beta, k_base);
            let norm = mixed_norm_map(&sum, sp)?;
            lo = lo.min(norm);
            hi = hi.max(norm);
            Ok(())
        };
        if len <= 4 {
            for signs in sign_patterns(len) {
                eval(&signs)?;
            }
        } else {
            for name in XNU_LONG_PATTERNS {
                eval(&long_pattern(name, len))?;
            }
        }
        per_min.push((len, lo));
        per_max.push((len, hi));
    }
    Ok(finish_stats(per_min, per_max))
}

/// sum_n |f_n| as a point-evaluated map; its weighted profile majorizes
/// every sign combination at once.
struct AbsSum {
    terms: Vec<(f64, f64)>,
    beta: f64,
}

impl AbsSum {
    fn new(nu: f64, beta: f64, k_base: usize, blocks: usize) -> Self {
        let terms = (1..=blocks)
            .map(|n| {
                let delta = (k_base as f64).powi(-(n as i32));
                (delta.powf(nu), delta)
            })
            .collect();
        Self { terms, beta }
    }
}

impl CircleMap for AbsSum {
    fn eval_map(&self, z: C64) -> C64 {
        let total: f64 = self
            .terms
            .iter()
            .map(|&(w, delta)| w * (C64::new(1.0 + delta, 0.0) - z).powf(self.beta).norm())
            .sum();
        C64::new(total, 0.0)
    }

    fn degree_hint(&self) -> usize {
        let sharpest = self.terms.iter().map(|t| t.1).fold(1.0, f64::min);
        ((4.0 / sharpest) as usize).clamp(256, 1 << 17)
    }

    fn singular_angles(&self) -> Vec<f64> {
        vec![0.0]
    }
}

/// Weighted sup of the termwise-absolute majorant.
pub fn xnu_majorant_sup(
    sp: &SpaceParams,
    nu: f64,
    beta: f64,
    k_base: usize,
    blocks: usize,
) -> Result<f64, CliError> {
    Ok(mixed_norm_map(&AbsSum::new(nu, beta, k_base, blocks), sp)?)
}

pub fn embed_linfty(cfg: &RunConfig) -> Result<ExperimentReport, CliError> {
    let sp = SpaceParams::new(cfg.p_or(2.0), cfg.q_or(f64::INFINITY), cfg.alpha_or(1.0))
        .map_err(CliError::from)?;
    let k_base = cfg.extra_usize("k_base", 10)?;
    let blocks = cfg.extra_usize("blocks", 5)?;
    if blocks == 0 || blocks > 20 {
        return Err(CliError::Usage(format!("blocks must lie in 1..=20, got {}", blocks)));
    }
    let drift_cap = cfg.tol_or(0.25);
    let stats = lacunary_sweep(&sp, k_base, blocks)?;

    // Disjointness is structural: each block ends before the next begins.
    let params = LacunaryParams::for_space(&sp, k_base, blocks)?;
    let disjoint = params.n_seq.windows(2).all(|w| 3 * w[0] - 1 < w[1] + 1);

    let mut b = ReportBuilder::new("embed-linfty", cfg.seed_or(DEFAULT_SEED));
    b.param("p", show_exponent(sp.p))
        .param("q", show_exponent(sp.q))
        .param("alpha", sp.alpha)
        .param("k_base", k_base)
        .param("blocks", blocks)
        .curve(
            "min_ratio",
            stats.per_length_min.iter().map(|&(l, v)| (l as f64, v)).collect(),
        )
        .curve(
            "max_ratio",
            stats.per_length_max.iter().map(|&(l, v)| (l as f64, v)).collect(),
        )
        .scalar("lower", stats.lower)
        .scalar("upper", stats.upper)
        .scalar("drift", stats.drift)
        .check("two_sided", stats.lower > 0.0 && stats.upper.is_finite())
        .check("drift", stats.drift < drift_cap)
        .check("disjoint", disjoint)
        .tolerance("drift", drift_cap);
    Ok(b.finish())
}

pub fn xnu_embed(cfg: &RunConfig) -> Result<ExperimentReport, CliError> {
    let sp = SpaceParams::new(cfg.p_or(2.0), cfg.q_or(f64::INFINITY), cfg.alpha_or(1.0))
        .map_err(CliError::from)?;
    let k_base = cfg.extra_usize("k_base", 10)?;
    let blocks = cfg.extra_usize("blocks", 4)?;
    if blocks == 0 || blocks > 12 {
        return Err(CliError::Usage(format!("blocks must lie in 1..=12, got {}", blocks)));
    }
    let beta = cfg.extra_f64("beta", -2.0)?;
    let nu_default = -sp.alpha - beta - mixnorm::norms::inv_exp(sp.p);
    let nu = cfg.extra_f64("nu", nu_default)?;
    let drift_cap = cfg.tol_or(0.25);
    let majorant_cap = cfg.extra_f64("majorant_cap", 10.0)?;

    let stats = xnu_sweep(&sp, nu, beta, k_base, blocks)?;
    let majorant = xnu_majorant_sup(&sp, nu, beta, k_base, blocks)?;

    let mut b = ReportBuilder::new("xnu-embed", cfg.seed_or(DEFAULT_SEED));
    b.param("p", show_exponent(sp.p))
        .param("q", show_exponent(sp.q))
        .param("alpha", sp.alpha)
        .param("k_base", k_base)
        .param("blocks", blocks)
        .param("nu", nu)
        .param("beta", beta)
        .curve(
            "min_ratio",
            stats.per_length_min.iter().map(|&(l, v)| (l as f64, v)).collect(),
        )
        .curve(
            "max_ratio",
            stats.per_length_max.iter().map(|&(l, v)| (l as f64, v)).collect(),
        )
        .scalar("lower", stats.lower)
        .scalar("upper", stats.upper)
        .scalar("drift", stats.drift)
        .scalar("majorant", majorant)
        .check("two_sided", stats.lower > 0.0 && stats.upper.is_finite())
        .check("drift", stats.drift < drift_cap)
        .check("majorant", majorant.is_finite() && majorant <= majorant_cap)
        .tolerance("drift", drift_cap)
        .tolerance("majorant", majorant_cap);
    Ok(b.finish())
}

fn parse_reals(text: &str, key: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("config key {}: bad real {:?}", key, t)))
        })
        .collect()
}

pub fn approx_e(cfg: &RunConfig) -> Result<ExperimentReport, CliError> {
    let sp = SpaceParams::new(cfg.p_or(2.0), cfg.q_or(f64::INFINITY), cfg.alpha_or(1.0))
        .map_err(CliError::from)?;
    let k_base = cfg.extra_usize("k_base", 10)?;
    let beta = cfg.extra_f64("beta", -2.0)?;
    let nu = cfg.extra_f64("nu", -sp.alpha - beta - mixnorm::norms::inv_exp(sp.p))?;
    let theta = cfg.extra_f64("theta", 0.5)?;
    let signs = parse_reals(&cfg.extra_str("signs", "1,-1"), "signs")?;
    let n_values = parse_reals(&cfg.extra_str("n_values", "10,100"), "n_values")?;
    if n_values.len() < 2 {
        return Err(CliError::Usage("n_values needs at least two entries".into()));
    }

    let a: Vec<C64> = signs.iter().map(|&s| C64::new(s, 0.0)).collect();
    let f = XnuSum::assemble(&a, nu, beta, k_base);
    let spec = GeneratorSpec::new(DwPoint::Boundary, Herglotz::Const(C64::new(1.0, 0.0)))?;

    let mut curve = Vec::with_capacity(n_values.len());
    let mut decreasing = true;
    let mut residual_last = f64::NAN;
    for (i, &n) in n_values.iter().enumerate() {
        let h = HnApprox::new(&f, &spec, theta, n)?;
        let d = mixed_norm_map(&HnDiffMap(&h), &sp)?;
        if let Some(&(_, prev)) = curve.last() {
            decreasing &= d < prev;
        }
        curve.push((n, d));
        if i == n_values.len() - 1 {
            residual_last = mixed_norm_map(&HnResidualMap(&h), &sp)?;
        }
    }
    let first = curve.first().map(|&(_, d)| d).unwrap_or(f64::NAN);
    let last = curve.last().map(|&(_, d)| d).unwrap_or(f64::NAN);

    let mut b = ReportBuilder::new("approx-E", cfg.seed_or(DEFAULT_SEED));
    b.param("p", show_exponent(sp.p))
        .param("q", show_exponent(sp.q))
        .param("alpha", sp.alpha)
        .param("k_base", k_base)
        .param("nu", nu)
        .param("beta", beta)
        .param("theta", theta)
        .param("signs", cfg.extra_str("signs", "1,-1"))
        .param("n_values", cfg.extra_str("n_values", "10,100"))
        .curve("difference_norm", curve)
        .scalar("first", first)
        .scalar("last", last)
        .scalar("reduction", last / first)
        .scalar("residual", residual_last)
        .check("decreasing", decreasing)
        .check("residual_finite", residual_last.is_finite());
    Ok(b.finish())
}
