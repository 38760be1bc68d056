//! Integral means M_p(r, f), radial profiles on the geometric grid
//! r_j = 1 - 2^{-j/kappa}, mixed norms of H(p,q,alpha), and the heuristic
//! decay verdicts (little-oh membership, Bloch classification).
//!
//! p = 2 means are computed by the exact Parseval sum; for any finite series
//! the spec's sampled mean is aliasing-free once M >= 2*degree+2, so the
//! doubling loop's fixed point is that same value. The sampled route is kept
//! as `integral_mean_quadrature` so the two can be compared as independent
//! oracles.

use crate::quad::{adaptive_simpson, golden_max, ls_slope};
use crate::series::{circle_samples, differentiate, AnalyticFunction};
use crate::{Error, Result, C64};

/// Exponent triple (p, q, alpha) for H(p,q,alpha); q = f64::INFINITY selects
/// the sup-norm scale, and `little_oh` marks the closure-of-polynomials
/// subspace H(p,0,alpha) (meaningful only with q = infinity).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaceParams {
    pub p: f64,
    pub q: f64,
    pub alpha: f64,
    pub little_oh: bool,
}

impl SpaceParams {
    pub fn new(p: f64, q: f64, alpha: f64) -> Result<Self> {
        if !(p > 0.0) {
            return Err(Error::InvalidParam { name: "p", msg: format!("must be positive, got {}", p) });
        }
        if !(q > 0.0) {
            return Err(Error::InvalidParam { name: "q", msg: format!("must be positive, got {}", q) });
        }
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidParam {
                name: "alpha",
                msg: format!("must be finite and positive, got {}", alpha),
            });
        }
        Ok(Self { p, q, alpha, little_oh: false })
    }

    /// H(p,0,alpha): same norm as q = infinity, little-oh membership semantics.
    pub fn little_oh(p: f64, alpha: f64) -> Result<Self> {
        let mut sp = Self::new(p, f64::INFINITY, alpha)?;
        sp.little_oh = true;
        Ok(sp)
    }

    pub fn sup_scale(p: f64, alpha: f64) -> Result<Self> {
        Self::new(p, f64::INFINITY, alpha)
    }
}

/// 1/x with the convention 1/infinity = 0.
pub fn inv_exp(x: f64) -> f64 {
    if x.is_infinite() {
        0.0
    } else {
        1.0 / x
    }
}

/// Geometric radial grid r_j = 1 - 2^{-j/kappa}, capped at a certified radius.
#[derive(Debug, Clone)]
pub struct RadialGrid {
    pub kappa: u32,
    /// 1 - r_j, stored directly to avoid cancellation in the weights.
    pub us: Vec<f64>,
    pub radii: Vec<f64>,
}

/// Grid steps per factor 10 in (1 - r) at kappa = 4.
pub(crate) const STEPS_PER_DECADE: usize = 14;

impl RadialGrid {
    /// Default grid: kappa = 4, extending to 1 - r ~ 2^{-40} or the certified
    /// radius of the function, whichever comes first.
    pub fn standard(max_radius: f64) -> Self {
        Self::with_kappa(4, max_radius, 2f64.powi(-40))
    }

    pub fn with_kappa(kappa: u32, max_radius: f64, u_floor: f64) -> Self {
        let floor = u_floor.max(1.0 - max_radius);
        let mut us = Vec::new();
        let mut radii = Vec::new();
        let mut j = 0u32;
        loop {
            let u = 2f64.powf(-(j as f64) / kappa as f64);
            if u < floor {
                break;
            }
            us.push(u);
            radii.push(1.0 - u);
            j += 1;
        }
        Self { kappa, us, radii }
    }

    pub fn len(&self) -> usize {
        self.radii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radii.is_empty()
    }
}

/// Values of r -> M_p(r, f) on a radial grid. Construction enforces the
/// monotonicity every integral mean satisfies (within 1e-9 relative slack).
#[derive(Debug, Clone)]
pub struct RadialProfile {
    pub radii: Vec<f64>,
    pub values: Vec<f64>,
    pub p: f64,
}

impl RadialProfile {
    pub fn new(radii: Vec<f64>, values: Vec<f64>, p: f64) -> Result<Self> {
        if radii.len() != values.len() {
            return Err(Error::InvalidParam { name: "values", msg: "length mismatch with radii".into() });
        }
        for w in values.windows(2) {
            if w[1] < w[0] * (1.0 - 1e-9) - 1e-300 {
                return Err(Error::InvalidParam {
                    name: "values",
                    msg: format!("integral means must be nondecreasing in r ({} -> {})", w[0], w[1]),
                });
            }
        }
        Ok(Self { radii, values, p })
    }
}

/// Trend of a weighted radial profile as r -> 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decay {
    Decays,
    Persists,
    Inconclusive,
}

impl std::fmt::Display for Decay {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Decay::Decays => "DECAYS",
            Decay::Persists => "PERSISTS",
            Decay::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Bloch-type classification of a symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlochClass {
    LittleBloch,
    BlochOnly,
    NotBloch,
    Inconclusive,
}

impl std::fmt::Display for BlochClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BlochClass::LittleBloch => "LITTLE_BLOCH",
            BlochClass::BlochOnly => "BLOCH_ONLY",
            BlochClass::NotBloch => "NOT_BLOCH",
            BlochClass::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Heuristic decade thresholds for the decay verdicts. A "decade" is a factor
/// 10 reduction of 1 - r (14 grid steps at kappa = 4).
#[derive(Debug, Clone, Copy)]
pub struct DecayThresholds {
    /// Minimum shrink factor per decade for DECAYS (over the last 3 decades).
    pub per_decade: f64,
    /// PERSISTS once (last-decade infimum) > persistence * (tail supremum).
    pub persistence: f64,
}

impl Default for DecayThresholds {
    fn default() -> Self {
        Self { per_decade: 2.0, persistence: 0.5 }
    }
}

/// Integral mean M_p(r, f). p = infinity is the circle max (sampled, then
/// golden-section refined); p = 2 is the Parseval sum; other p use the
/// doubling sampler. r = 1 is polynomial-only.
pub fn integral_mean(f: &AnalyticFunction, r: f64, p: f64) -> Result<f64> {
    check_mean_radius(f, r)?;
    if p.is_infinite() {
        return Ok(max_modulus(f, r));
    }
    if p == 2.0 {
        return Ok(parseval_mean(f, r));
    }
    sampled_mean(f, r, p)
}

/// The sampled route for any finite p (independent of the Parseval shortcut).
pub fn integral_mean_quadrature(f: &AnalyticFunction, r: f64, p: f64) -> Result<f64> {
    check_mean_radius(f, r)?;
    if p.is_infinite() {
        return Ok(max_modulus(f, r));
    }
    sampled_mean(f, r, p)
}

fn check_mean_radius(f: &AnalyticFunction, r: f64) -> Result<()> {
    if !(0.0..=1.0 + 1e-12).contains(&r) {
        return Err(Error::InvalidParam { name: "r", msg: format!("radius {} not in [0, 1]", r) });
    }
    if r >= 1.0 - 1e-15 && !f.is_polynomial() {
        return Err(Error::BoundaryEval);
    }
    Ok(())
}

/// Exact mean for p = 2: sqrt(sum |c_k|^2 r^{2k}).
pub fn parseval_mean(f: &AnalyticFunction, r: f64) -> f64 {
    let r2 = r * r;
    let mut acc = 0.0;
    let mut pw = 1.0;
    for c in f.coeffs() {
        acc += c.norm_sqr() * pw;
        pw *= r2;
    }
    acc.sqrt()
}

fn base_sample_count(degree: usize) -> usize {
    (4 * degree + 4).max(4096).next_power_of_two()
}

const MAX_SAMPLES: usize = 1 << 23;

fn sampled_mean(f: &AnalyticFunction, r: f64, p: f64) -> Result<f64> {
    let mut m = base_sample_count(f.degree()).min(MAX_SAMPLES);
    let mut prev = power_mean(&circle_samples(f, r, m)?.values, p);
    loop {
        if m >= MAX_SAMPLES {
            return Ok(prev);
        }
        m *= 2;
        let next = power_mean(&circle_samples(f, r, m)?.values, p);
        if (next - prev).abs() <= 1e-10 * next.abs().max(1e-300) {
            return Ok(next);
        }
        prev = next;
    }
}

fn power_mean(values: &[C64], p: f64) -> f64 {
    let inv_m = 1.0 / values.len() as f64;
    if p == 2.0 {
        return (values.iter().map(|v| v.norm_sqr()).sum::<f64>() * inv_m).sqrt();
    }
    let acc: f64 = values.iter().map(|v| v.norm().powf(p)).sum();
    (acc * inv_m).powf(1.0 / p)
}

/// Circle max via dense sampling plus golden-section refinement around the
/// sampled argmax.
fn max_modulus(f: &AnalyticFunction, r: f64) -> f64 {
    if f.degree() == 0 {
        return f.coeff(0).norm();
    }
    let m = base_sample_count(f.degree()).min(MAX_SAMPLES);
    let samples = circle_samples(f, r, m).expect("radius checked by caller");
    let (jmax, vmax) = samples
        .values
        .iter()
        .enumerate()
        .map(|(j, v)| (j, v.norm()))
        .fold((0usize, f64::MIN), |best, cur| if cur.1 > best.1 { cur } else { best });
    let h = 2.0 * std::f64::consts::PI / m as f64;
    let theta0 = jmax as f64 * h;
    let mut eval = |t: f64| f.eval_unchecked(C64::from_polar(r, t)).norm();
    let (_, refined) = golden_max(&mut eval, theta0 - h, theta0 + h, 1e-13);
    refined.max(vmax)
}

/// M_p(r, f) on each grid radius.
pub fn radial_profile(f: &AnalyticFunction, p: f64, grid: &RadialGrid) -> Result<RadialProfile> {
    let mut values = Vec::with_capacity(grid.len());
    for &r in &grid.radii {
        values.push(integral_mean(f, r, p)?);
    }
    RadialProfile::new(grid.radii.clone(), values, p)
}

/// Detailed mixed-norm result: the reported value is a certified lower
/// enclosure of the sup/integral on the certified grid; `upper_estimate`
/// brackets it from above using monotonicity of the means, and `grid_cap` is
/// the last radius the representation could be trusted on.
#[derive(Debug, Clone, Copy)]
pub struct NormDetail {
    pub value: f64,
    pub upper_estimate: f64,
    pub grid_cap: f64,
}

/// Mixed norm of H(p,q,alpha); see `mixed_norm_detailed` for the enclosure.
pub fn mixed_norm(f: &AnalyticFunction, sp: &SpaceParams) -> Result<f64> {
    Ok(mixed_norm_detailed(f, sp)?.value)
}

pub fn mixed_norm_detailed(f: &AnalyticFunction, sp: &SpaceParams) -> Result<NormDetail> {
    let max_radius = f.max_radius();
    let boundary_ok = f.is_polynomial();
    let mut mean = |r: f64| integral_mean(f, r, sp.p);
    norm_engine(&mut mean, sp, max_radius, boundary_ok)
}

pub(crate) fn norm_engine(
    mean: &mut dyn FnMut(f64) -> Result<f64>,
    sp: &SpaceParams,
    max_radius: f64,
    boundary_ok: bool,
) -> Result<NormDetail> {
    if sp.q.is_infinite() {
        sup_norm_engine(mean, sp.alpha, max_radius)
    } else {
        integral_norm_engine(mean, sp, max_radius, boundary_ok)
    }
}

fn sup_norm_engine(
    mean: &mut dyn FnMut(f64) -> Result<f64>,
    alpha: f64,
    max_radius: f64,
) -> Result<NormDetail> {
    let grid = RadialGrid::standard(max_radius);
    let mut values = Vec::with_capacity(grid.len());
    for (&r, &u) in grid.radii.iter().zip(&grid.us) {
        values.push(u.powf(alpha) * mean(r)?);
    }
    let (jmax, &grid_max) = values
        .iter()
        .enumerate()
        .fold((0, &values[0]), |best, cur| if cur.1 > best.1 { cur } else { best });
    let lo = grid.radii[jmax.saturating_sub(1)];
    let hi = grid.radii[(jmax + 1).min(grid.len() - 1)];
    let mut weighted = |r: f64| (1.0 - r).powf(alpha) * mean(r).unwrap_or(0.0);
    let (_, refined) = golden_max(&mut weighted, lo, hi, 1e-13);
    let value = refined.max(grid_max);

    // Bracket from monotonicity: on [r_j, r_{j+1}] the weighted profile is at
    // most (1 - r_j)^alpha M_p(r_{j+1}).
    let mut upper: f64 = 0.0;
    for j in 0..grid.len() {
        let next_mean = if j + 1 < grid.len() {
            values[j + 1] / grid.us[j + 1].powf(alpha)
        } else {
            values[j] / grid.us[j].powf(alpha)
        };
        upper = upper.max(grid.us[j].powf(alpha) * next_mean);
    }
    Ok(NormDetail { value, upper_estimate: upper.max(value), grid_cap: *grid.radii.last().unwrap() })
}

fn integral_norm_engine(
    mean: &mut dyn FnMut(f64) -> Result<f64>,
    sp: &SpaceParams,
    max_radius: f64,
    boundary_ok: bool,
) -> Result<NormDetail> {
    let aq = sp.alpha * sp.q;
    let exponent = 1.0 / aq;
    // Exact substitution u = (1-r)^{alpha q} removes the weight:
    // ||f||^q = integral_0^1 M_p(1 - u^{1/(alpha q)}, f)^q du.
    let u_min = if boundary_ok { 0.0 } else { (1.0 - max_radius).powf(aq) };
    let mut integrand = |u: f64| -> f64 {
        let r = if u <= 0.0 { 1.0 } else { (1.0 - u.powf(exponent)).max(0.0) };
        let r = r.min(max_radius.max(0.0)).min(1.0);
        mean(r).map(|v| v.powf(sp.q)).unwrap_or(f64::NAN)
    };
    let integral = adaptive_simpson(&mut integrand, u_min, 1.0, 1e-11)?;
    if integral.is_nan() {
        return Err(Error::NonConvergence { context: "mixed norm integrand" });
    }
    let value = integral.powf(1.0 / sp.q);
    let upper = if boundary_ok {
        value
    } else {
        let edge = mean(max_radius)?;
        (integral + u_min * edge.powf(sp.q)).powf(1.0 / sp.q)
    };
    Ok(NormDetail { value, upper_estimate: upper, grid_cap: max_radius.min(1.0) })
}

/// Weighted profile (1-r)^alpha M_p(r, f) with its decay verdict.
#[derive(Debug, Clone)]
pub struct LittleOhReport {
    pub radii: Vec<f64>,
    pub weighted: Vec<f64>,
    pub verdict: Decay,
}

pub fn little_oh_profile(f: &AnalyticFunction, p: f64, alpha: f64) -> Result<LittleOhReport> {
    little_oh_profile_with(f, p, alpha, DecayThresholds::default())
}

pub fn little_oh_profile_with(
    f: &AnalyticFunction,
    p: f64,
    alpha: f64,
    th: DecayThresholds,
) -> Result<LittleOhReport> {
    let grid = RadialGrid::standard(f.max_radius());
    let mut weighted = Vec::with_capacity(grid.len());
    for (&r, &u) in grid.radii.iter().zip(&grid.us) {
        weighted.push(u.powf(alpha) * integral_mean(f, r, p)?);
    }
    let verdict = decay_verdict(&weighted, th);
    Ok(LittleOhReport { radii: grid.radii, weighted, verdict })
}

/// Decade-based trend classifier; see `DecayThresholds` for the heuristics.
pub fn decay_verdict(weighted: &[f64], th: DecayThresholds) -> Decay {
    let n = weighted.len();
    if n == 0 {
        return Decay::Inconclusive;
    }
    let last = n - 1;
    let tail_len = (3 * STEPS_PER_DECADE).min(last);
    let tail_sup = weighted[n - 1 - tail_len..].iter().copied().fold(0.0, f64::max);
    if tail_sup <= 1e-300 {
        return Decay::Decays;
    }
    if last >= 3 * STEPS_PER_DECADE {
        let mut all_shrink = true;
        for d in 1..=3usize {
            let start = weighted[last - d * STEPS_PER_DECADE];
            let end = weighted[last - (d - 1) * STEPS_PER_DECADE];
            if !(start >= th.per_decade * end) {
                all_shrink = false;
                break;
            }
        }
        if all_shrink {
            return Decay::Decays;
        }
    }
    let dec_len = STEPS_PER_DECADE.min(last);
    let last_decade_inf = weighted[n - 1 - dec_len..].iter().copied().fold(f64::MAX, f64::min);
    if last_decade_inf > th.persistence * tail_sup {
        return Decay::Persists;
    }
    Decay::Inconclusive
}

/// Bloch profile (1-r^2) M_inf(r, g') with seminorm and classification.
#[derive(Debug, Clone)]
pub struct BlochReport {
    pub radii: Vec<f64>,
    pub profile: Vec<f64>,
    pub seminorm: f64,
    pub class: BlochClass,
}

/// sup over the grid of (1-r^2) M_inf(r, g'), golden-section refined.
pub fn bloch_seminorm(g: &AnalyticFunction) -> Result<f64> {
    Ok(bloch_report(g)?.seminorm)
}

/// Bloch class of g alone, when the profile behind it is not needed.
pub fn little_bloch_verdict(g: &AnalyticFunction) -> Result<BlochClass> {
    Ok(bloch_report(g)?.class)
}

pub fn bloch_report(g: &AnalyticFunction) -> Result<BlochReport> {
    bloch_report_with(g, DecayThresholds::default(), 1e3)
}

pub fn bloch_report_with(
    g: &AnalyticFunction,
    th: DecayThresholds,
    not_bloch_factor: f64,
) -> Result<BlochReport> {
    let gp = differentiate(g);
    let grid = RadialGrid::standard(gp.max_radius());
    let mut profile = Vec::with_capacity(grid.len());
    for &r in &grid.radii {
        profile.push((1.0 - r * r) * integral_mean(&gp, r, f64::INFINITY)?);
    }
    let (jmax, &grid_max) = profile
        .iter()
        .enumerate()
        .fold((0, &profile[0]), |best, cur| if cur.1 > best.1 { cur } else { best });
    let lo = grid.radii[jmax.saturating_sub(1)];
    let hi = grid.radii[(jmax + 1).min(grid.len() - 1)];
    let mut weighted =
        |r: f64| (1.0 - r * r) * integral_mean(&gp, r, f64::INFINITY).unwrap_or(0.0);
    let (_, refined) = golden_max(&mut weighted, lo, hi, 1e-13);
    let seminorm = refined.max(grid_max);

    // Reference scale for the unboundedness cutoff: the r = 0 value, with the
    // first decade as fallback when g'(0) vanishes.
    let first_decade_max = profile
        .iter()
        .take(STEPS_PER_DECADE.min(profile.len()))
        .copied()
        .fold(0.0, f64::max);
    let reference = profile[0].max(first_decade_max * 1e-3).max(1e-300);
    let class = if seminorm > not_bloch_factor * reference {
        BlochClass::NotBloch
    } else {
        match decay_verdict(&profile, th) {
            Decay::Decays => BlochClass::LittleBloch,
            Decay::Persists => BlochClass::BlochOnly,
            Decay::Inconclusive => BlochClass::Inconclusive,
        }
    };
    Ok(BlochReport { radii: grid.radii, profile, seminorm, class })
}

/// Norm of the point evaluation functional at z: (1-|z|)^{-(alpha + 1/p)}.
pub fn point_eval_norm(z: C64, sp: &SpaceParams) -> Result<f64> {
    let r = z.norm();
    if r >= 1.0 {
        return Err(Error::OutsideDisk { z });
    }
    Ok((1.0 - r).powf(-(sp.alpha + inv_exp(sp.p))))
}

/// A function on the disk known only through point evaluation (compositions,
/// closed-form families). Norms of such maps are computed by angular
/// quadrature instead of coefficient transforms.
pub trait CircleMap {
    fn eval_map(&self, z: C64) -> C64;

    /// Rough oscillation scale, used to choose the initial angular sample
    /// count. Defaults suit mildly oscillatory maps.
    fn degree_hint(&self) -> usize {
        128
    }

    /// Largest radius the map may be evaluated at (1.0 = closed disk).
    fn max_radius(&self) -> f64 {
        1.0
    }

    /// Angles where the map concentrates sharp boundary features; when
    /// nonempty, finite-p means switch to graded adaptive quadrature anchored
    /// at these angles.
    fn singular_angles(&self) -> Vec<f64> {
        Vec::new()
    }
}

fn check_map_radius(map: &dyn CircleMap, r: f64) -> Result<()> {
    if !(0.0..=1.0 + 1e-12).contains(&r) {
        return Err(Error::InvalidParam { name: "r", msg: format!("radius {} not in [0, 1]", r) });
    }
    if r > map.max_radius() + 1e-15 {
        return Err(Error::BeyondTailRadius { r, max: map.max_radius() });
    }
    Ok(())
}

fn map_samples(map: &dyn CircleMap, r: f64, m: usize) -> Vec<C64> {
    let h = 2.0 * std::f64::consts::PI / m as f64;
    (0..m).map(|j| map.eval_map(C64::from_polar(r, j as f64 * h))).collect()
}

const MAX_MAP_SAMPLES: usize = 1 << 20;

/// M_p(r, F) for a point-evaluated map.
pub fn integral_mean_map(map: &dyn CircleMap, r: f64, p: f64) -> Result<f64> {
    check_map_radius(map, r)?;
    if p.is_infinite() {
        return Ok(max_modulus_map(map, r));
    }
    let anchors = map.singular_angles();
    if anchors.is_empty() {
        return equispaced_map_mean(map, r, p);
    }
    graded_map_mean(map, r, p, &anchors)
}

fn equispaced_map_mean(map: &dyn CircleMap, r: f64, p: f64) -> Result<f64> {
    let mut m = (4 * map.degree_hint() + 4).max(512).next_power_of_two().min(MAX_MAP_SAMPLES);
    let mut prev = power_mean(&map_samples(map, r, m), p);
    loop {
        if m >= MAX_MAP_SAMPLES {
            return Ok(prev);
        }
        m *= 2;
        let next = power_mean(&map_samples(map, r, m), p);
        if (next - prev).abs() <= 1e-10 * next.abs().max(1e-300) {
            return Ok(next);
        }
        prev = next;
    }
}

fn graded_map_mean(map: &dyn CircleMap, r: f64, p: f64, anchors: &[f64]) -> Result<f64> {
    use std::f64::consts::PI;
    let tau = 2.0 * PI;
    let mut cuts: Vec<f64> = anchors.iter().map(|a| a.rem_euclid(tau)).collect();
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
    let mut total = 0.0;
    for i in 0..cuts.len() {
        let a = cuts[i];
        let b = if i + 1 < cuts.len() { cuts[i + 1] } else { cuts[0] + tau };
        if b - a < 1e-14 {
            continue;
        }
        let mut g = |t: f64| map.eval_map(C64::from_polar(r, t)).norm().powf(p);
        total += adaptive_simpson(&mut g, a, b, 1e-9)?;
    }
    Ok((total / tau).powf(1.0 / p))
}

fn max_modulus_map(map: &dyn CircleMap, r: f64) -> f64 {
    let m = (4 * map.degree_hint() + 4).max(1024).next_power_of_two().min(MAX_MAP_SAMPLES);
    let h = 2.0 * std::f64::consts::PI / m as f64;
    let mut anchors: Vec<f64> = map.singular_angles();
    let samples = map_samples(map, r, m);
    let (jmax, vmax) = samples
        .iter()
        .enumerate()
        .map(|(j, v)| (j, v.norm()))
        .fold((0usize, f64::MIN), |best, cur| if cur.1 > best.1 { cur } else { best });
    anchors.push(jmax as f64 * h);
    let mut best = vmax;
    for theta in anchors {
        let mut eval = |t: f64| map.eval_map(C64::from_polar(r, t)).norm();
        let (_, refined) = golden_max(&mut eval, theta - h, theta + h, 1e-13);
        best = best.max(refined);
    }
    best
}

/// Mixed norm of a point-evaluated map.
pub fn mixed_norm_map(map: &dyn CircleMap, sp: &SpaceParams) -> Result<f64> {
    Ok(mixed_norm_map_detailed(map, sp)?.value)
}

pub fn mixed_norm_map_detailed(map: &dyn CircleMap, sp: &SpaceParams) -> Result<NormDetail> {
    let max_radius = map.max_radius();
    let boundary_ok = max_radius >= 1.0;
    let mut mean = |r: f64| integral_mean_map(map, r, sp.p);
    norm_engine(&mut mean, sp, max_radius, boundary_ok)
}

/// Weighted profile and verdict for a point-evaluated map.
pub fn little_oh_profile_map(map: &dyn CircleMap, p: f64, alpha: f64) -> Result<LittleOhReport> {
    let grid = RadialGrid::standard(map.max_radius());
    let mut weighted = Vec::with_capacity(grid.len());
    for (&r, &u) in grid.radii.iter().zip(&grid.us) {
        weighted.push(u.powf(alpha) * integral_mean_map(map, r, p)?);
    }
    let verdict = decay_verdict(&weighted, DecayThresholds::default());
    Ok(LittleOhReport { radii: grid.radii, weighted, verdict })
}

/// Least-squares slope of log(weighted profile) against log(1-r) over the
/// last third of the grid. Negative slope = growth toward the boundary.
pub fn profile_log_slope(us: &[f64], weighted: &[f64]) -> f64 {
    let n = us.len();
    let start = (2 * n) / 3;
    let xs: Vec<f64> = us[start..].iter().map(|u| u.ln()).collect();
    let ys: Vec<f64> = weighted[start..].iter().map(|v| v.max(1e-300).ln()).collect();
    if xs.len() < 2 {
        return 0.0;
    }
    ls_slope(&xs, &ys)
}
