//! Experiments on the norm machinery itself: monomial closed forms, the
//! derivative weight shift, and exponential membership patterns.

use mixnorm::norms::{inv_exp, mixed_norm, RadialGrid, SpaceParams};
use mixnorm::operators::exp_membership as membership_table;
use mixnorm::series::{differentiate, inverse_power, log_reciprocal, AnalyticFunction};
use mixnorm::C64;

use crate::config::{show_exponent, RunConfig};
use crate::error::CliError;
use crate::report::{ExperimentReport, ReportBuilder};

use super::DEFAULT_SEED;

fn monomial_closed_form(n: usize, sp: &SpaceParams) -> f64 {
    let nf = n as f64;
    let a = sp.alpha;
    if sp.q.is_infinite() {
        if n == 0 {
            1.0
        } else {
            a.powf(a) * nf.powf(nf) / (nf + a).powf(nf + a)
        }
    } else {
        let q = sp.q;
        (a * q * statrs::function::beta::beta(a * q, nf * q + 1.0)).powf(1.0 / q)
    }
}

pub fn monomial_norms(cfg: &RunConfig) -> Result<ExperimentReport, CliError> {
    let n = cfg.degree_or(1);
    let sp = SpaceParams::new(cfg.p_or(2.0), cfg.q_or(f64::INFINITY), cfg.alpha_or(1.0))
        .map_err(CliError::from)?;
    let tol = cfg.tol_or(1e-8);

    let f = AnalyticFunction::monomial(n);
    let norm = mixed_norm(&f, &sp)?;
    let closed = monomial_closed_form(n, &sp);
    let rel = (norm - closed).abs() / closed.max(1e-300);
    let one = mixed_norm(&AnalyticFunction::constant(C64::new(1.0, 0.0)), &sp)?;

    let grid = RadialGrid::standard(1.0);
    let curve: Vec<(f64, f64)> = grid
        .radii
        .iter()
        .zip(&grid.us)
        .map(|(&r, &u)| (r, u.powf(sp.alpha) * r.powi(n as i32)))
        .collect();

    let mut b = ReportBuilder::new("monomial-norms", cfg.seed_or(DEFAULT_SEED));
    b.param("n", n)
        .param("p", show_exponent(sp.p))
        .param("q", show_exponent(sp.q))
        .param("alpha", sp.alpha)
        .scalar("norm", norm)
        .scalar("closed_form", closed)
        .scalar("relative_error", rel)
        .scalar("unit_norm", one)
        .curve("weighted_profile", curve)
        .check("match", rel <= tol)
        .check("unit", (one - 1.0).abs() <= 1e-6)
        .tolerance("match", tol)
        .tolerance("unit", 1e-6);
    Ok(b.finish())
}

pub fn hl_derivative(cfg: &RunConfig) -> Result<ExperimentReport, CliError> {
    let p = cfg.p_or(2.0);
    let alpha = cfg.alpha_or(1.0);
    let degree = cfg.degree_or(1 << 14);
    let s = cfg.extra_f64("exponent", alpha + inv_exp(p))?;
    if !(s > 0.0) {
        return Err(CliError::Usage(format!("exponent must be positive, got {}", s)));
    }
    let window = cfg.tol_or(20.0);

    let f = inverse_power(C64::new(1.0, 0.0), s, degree, 1e-9)?;
    let fp = differentiate(&f);
    let sp = SpaceParams::sup_scale(p, alpha).map_err(CliError::from)?;
    let sp_shift = SpaceParams::sup_scale(p, alpha + 1.0).map_err(CliError::from)?;

    let norm_f = mixed_norm(&f, &sp)?;
    let norm_fp = f.coeff(0).norm() + mixed_norm(&fp, &sp_shift)?;
    let ratio = norm_fp / norm_f;

    let grid = RadialGrid::standard(f.max_radius());
    let mut curve_f = Vec::with_capacity(grid.len());
    let mut curve_fp = Vec::with_capacity(grid.len());
    for (&r, &u) in grid.radii.iter().zip(&grid.us) {
        curve_f.push((r, u.powf(alpha) * mixnorm::norms::integral_mean(&f, r, p)?));
        curve_fp.push((r, u.powf(alpha + 1.0) * mixnorm::norms::integral_mean(&fp, r, p)?));
    }

    let mut b = ReportBuilder::new("hl-derivative", cfg.seed_or(DEFAULT_SEED));
    b.param("p", show_exponent(p))
        .param("alpha", alpha)
        .param("exponent", s)
        .param("degree", degree)
        .scalar("norm", norm_f)
        .scalar("shifted_norm", norm_fp)
        .scalar("ratio", ratio)
        .curve("weighted_profile", curve_f)
        .curve("derivative_weighted_profile", curve_fp)
        .check("both_finite", norm_f.is_finite() && norm_fp.is_finite())
        .check("equivalent", ratio >= 1.0 / window && ratio <= window)
        .tolerance("equivalent", window);
    Ok(b.finish())
}

pub fn exp_membership(cfg: &RunConfig) -> Result<ExperimentReport, CliError> {
    let symbol = cfg.extra_str("symbol", "log-reciprocal");
    let s = cfg.extra_f64("scale", 1.0)?;
    // The symbol's certified radius must clear the 0.998 sampling circle of
    // the exponential, which needs roughly 2^14 log-series terms.
    let degree = cfg.degree_or(1 << 15);
    let g = match symbol.as_str() {
        "log-reciprocal" => log_reciprocal(degree, 1e-9),
        "z" => AnalyticFunction::monomial(1),
        other => {
            return Err(CliError::Usage(format!(
                "unknown symbol {:?}; expected log-reciprocal or z",
                other
            )))
        }
    };
    let alphas = match cfg.alpha {
        Some(a) => vec![a],
        None => vec![0.25, 0.5, 1.0],
    };
    let ps = match cfg.p {
        Some(p) => vec![p],
        None => vec![1.0, 2.0, 4.0],
    };

    let mut b = ReportBuilder::new("exp-membership", cfg.seed_or(DEFAULT_SEED));
    b.param("symbol", &symbol).param("scale", s).param("degree", degree);
    let mut pattern_ok = true;
    for &alpha in &alphas {
        let table = membership_table(&g, s, alpha, &ps)?;
        for (p, row) in &table.rows {
            let key = format!("p{}_alpha{}", p, alpha);
            let finite = row.verdict == mixnorm::operators::Membership::Finite;
            // e^{s g} = (1-z)^{-s} for the log symbol, so the weighted sup
            // stays bounded exactly when alpha >= s - 1/p.
            let expected = match symbol.as_str() {
                "log-reciprocal" => alpha >= s - inv_exp(*p),
                _ => true,
            };
            pattern_ok &= finite == expected;
            b.verdict(&key, row.verdict);
            b.scalar(&format!("slope_{}", key), row.slope);
        }
    }
    b.check("pattern", pattern_ok);
    Ok(b.finish())
}
