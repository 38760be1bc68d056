//! Holomorphic semiflows on the disk from Berkson-Porta generators
//! G(z) = -z P(z) (interior fixed point 0) or G(z) = (1-z)^2 P(z) (boundary
//! fixed point 1), with Re P >= 0. Provides adaptive flow integration,
//! g-symbols, Koenigs functional-equation residuals, strong-continuity
//! probes, generator action, and the maximal-subspace classifier.

use crate::norms::{
    bloch_report, decay_verdict, mixed_norm, BlochReport, Decay, DecayThresholds, RadialGrid,
    SpaceParams,
};
use crate::quad::{adaptive_simpson, ls_slope};
use crate::series::{
    cauchy_product, differentiate, geometric_series, inverse_power, polynomial_reciprocal,
    reexpand_from_samples, tail_from_flat_majorant, truncate_series, volterra_primitive,
    AnalyticFunction, CircleSamples, TailBound,
};
use crate::{Error, Result, C64};

/// Location of the Denjoy-Wolff point: the origin or z = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DwPoint {
    Interior,
    Boundary,
}

/// Closed-form Herglotz factors, plus arbitrary truncated series.
#[derive(Debug, Clone)]
pub enum Herglotz {
    Const(C64),
    /// P(z) = 1 - z.
    OneMinusZ,
    /// P(z) = (1+z)/(1-z), the half-plane map.
    Cayley,
    User(AnalyticFunction),
}

impl Herglotz {
    pub fn eval(&self, z: C64) -> Result<C64> {
        match self {
            Herglotz::Const(c) => Ok(*c),
            Herglotz::OneMinusZ => Ok(C64::new(1.0, 0.0) - z),
            Herglotz::Cayley => {
                let denom = C64::new(1.0, 0.0) - z;
                if denom.norm() < 1e-15 {
                    return Err(Error::BoundaryEval);
                }
                Ok((C64::new(1.0, 0.0) + z) / denom)
            }
            Herglotz::User(p) => p.eval(z),
        }
    }

    /// Truncated Taylor expansion to the requested degree.
    pub fn series(&self, degree: usize) -> AnalyticFunction {
        match self {
            Herglotz::Const(c) => AnalyticFunction::constant(*c),
            Herglotz::OneMinusZ => {
                AnalyticFunction::from_coeffs(vec![C64::new(1.0, 0.0), C64::new(-1.0, 0.0)])
            }
            Herglotz::Cayley => {
                let one_plus = AnalyticFunction::from_real_coeffs(&[1.0, 1.0]);
                truncate_series(&cauchy_product(&one_plus, &geometric_series(degree, 1e-12)), degree)
            }
            Herglotz::User(p) => truncate_series(p, degree),
        }
    }

    /// Truncated Taylor expansion of 1/P. The closed forms expand exactly;
    /// a user polynomial goes through long division, which stays accurate
    /// because a Herglotz factor keeps its zeros out of the open disk.
    pub fn reciprocal_series(&self, degree: usize) -> Result<AnalyticFunction> {
        match self {
            Herglotz::Const(c) => {
                if c.norm() == 0.0 {
                    return Err(Error::ZeroConstantTerm);
                }
                Ok(AnalyticFunction::constant(C64::new(1.0, 0.0) / c))
            }
            Herglotz::OneMinusZ => Ok(geometric_series(degree, 1e-12)),
            Herglotz::Cayley => {
                let coeffs: Vec<C64> = (0..=degree)
                    .map(|k| match k {
                        0 => C64::new(1.0, 0.0),
                        k if k % 2 == 1 => C64::new(-2.0, 0.0),
                        _ => C64::new(2.0, 0.0),
                    })
                    .collect();
                AnalyticFunction::truncated(coeffs, tail_from_flat_majorant(2.0, degree, 1e-12))
            }
            Herglotz::User(p) => polynomial_reciprocal(p, degree, 1e-12),
        }
    }
}

/// Closed-form flows for the cataloged generators, kept alongside the spec
/// for oracle comparisons.
#[derive(Debug, Clone, Copy)]
pub enum ClosedFlow {
    /// phi_t(z) = e^{-ct} z.
    Dilation(C64),
    /// phi_t(z) = e^{-t} z / (1 - z + e^{-t} z).
    InteriorOneMinusZ,
    /// phi_t(z) = 1 - (1-z)/(1 + c t (1-z)).
    BoundaryConst(C64),
}

impl ClosedFlow {
    pub fn eval(&self, t: f64, z: C64) -> C64 {
        match self {
            ClosedFlow::Dilation(c) => (-c * t).exp() * z,
            ClosedFlow::InteriorOneMinusZ => {
                let s = (-t).exp();
                s * z / (C64::new(1.0, 0.0) - z + s * z)
            }
            ClosedFlow::BoundaryConst(c) => {
                let u = C64::new(1.0, 0.0) - z;
                C64::new(1.0, 0.0) - u / (C64::new(1.0, 0.0) + c * t * u)
            }
        }
    }
}

/// A Berkson-Porta generator. Construction verifies Re P >= 0 on a sampling
/// grid and attaches the closed-form flow when the catalog has one.
#[derive(Debug, Clone)]
pub struct GeneratorSpec {
    pub dw: DwPoint,
    pub herglotz: Herglotz,
    pub closed_flow: Option<ClosedFlow>,
}

impl GeneratorSpec {
    pub fn new(dw: DwPoint, herglotz: Herglotz) -> Result<Self> {
        let mut min_re = f64::MAX;
        let max_r = match &herglotz {
            Herglotz::User(p) => p.max_radius().min(0.99),
            _ => 0.99,
        };
        for &r in &[0.0, 0.3, 0.6, 0.9, max_r] {
            for j in 0..64 {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / 64.0;
                let z = C64::from_polar(r, theta);
                if let Ok(v) = herglotz.eval(z) {
                    min_re = min_re.min(v.re);
                }
            }
        }
        if min_re < -1e-12 {
            return Err(Error::NotHerglotz(min_re));
        }
        let closed_flow = match (dw, &herglotz) {
            (DwPoint::Interior, Herglotz::Const(c)) => Some(ClosedFlow::Dilation(*c)),
            (DwPoint::Interior, Herglotz::OneMinusZ) => Some(ClosedFlow::InteriorOneMinusZ),
            (DwPoint::Boundary, Herglotz::Const(c)) => Some(ClosedFlow::BoundaryConst(*c)),
            _ => None,
        };
        Ok(Self { dw, herglotz, closed_flow })
    }

    /// The standard dilation semigroup phi_t(z) = e^{-ct} z.
    pub fn dilation(c: C64) -> Result<Self> {
        Self::new(DwPoint::Interior, Herglotz::Const(c))
    }

    /// G'(0) for interior specs: -P(0).
    pub fn multiplier_rate(&self) -> Result<C64> {
        match self.dw {
            DwPoint::Interior => Ok(-self.herglotz.eval(C64::new(0.0, 0.0))?),
            DwPoint::Boundary => Err(Error::InvalidParam {
                name: "dw",
                msg: "multiplier rate is an interior-point notion".into(),
            }),
        }
    }

    /// G as a truncated series of the requested degree.
    pub fn generator_series(&self, degree: usize) -> AnalyticFunction {
        let p = self.herglotz.series(degree);
        let g = match self.dw {
            DwPoint::Interior => {
                let mut coeffs = vec![C64::new(0.0, 0.0); p.degree() + 2];
                for (k, &c) in p.coeffs().iter().enumerate() {
                    coeffs[k + 1] = -c;
                }
                let tail = p.tail_bound().map(|t| TailBound { radius: t.radius, sup: t.sup * t.radius });
                match tail {
                    Some(t) => AnalyticFunction::truncated(coeffs, t).expect("radius preserved"),
                    None => AnalyticFunction::from_coeffs(coeffs),
                }
            }
            DwPoint::Boundary => {
                let square = AnalyticFunction::from_real_coeffs(&[1.0, -2.0, 1.0]);
                cauchy_product(&square, &p)
            }
        };
        truncate_series(&g, degree + 2)
    }
}

/// G(z) at a point of the open disk.
pub fn generator_eval(spec: &GeneratorSpec, z: C64) -> Result<C64> {
    if z.norm() >= 1.0 {
        return Err(Error::OutsideDisk { z });
    }
    let p = spec.herglotz.eval(z)?;
    Ok(match spec.dw {
        DwPoint::Interior => -z * p,
        DwPoint::Boundary => {
            let u = C64::new(1.0, 0.0) - z;
            u * u * p
        }
    })
}

/// Result of one flow integration.
#[derive(Debug, Clone, Copy)]
pub struct FlowResult {
    pub t: f64,
    pub z0: C64,
    pub z_t: C64,
    pub step_count: usize,
    pub error_estimate: f64,
}

const DP_C: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const DP_A: [&[f64]; 6] = [
    &[1.0 / 5.0],
    &[3.0 / 40.0, 9.0 / 40.0],
    &[44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0],
    &[19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0],
    &[9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0],
    &[35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const DP_E: [f64; 7] = [
    35.0 / 384.0 - 5179.0 / 57600.0,
    0.0,
    500.0 / 1113.0 - 7571.0 / 16695.0,
    125.0 / 192.0 - 393.0 / 640.0,
    -2187.0 / 6784.0 + 92097.0 / 339200.0,
    11.0 / 84.0 - 187.0 / 2100.0,
    -1.0 / 40.0,
];

const MAX_FLOW_STEPS: usize = 1_000_000;

/// Integrate dw/dt = G(w), w(0) = z0, to time t with a Dormand-Prince 5(4)
/// embedded pair at local absolute tolerance `tol`.
pub fn flow(spec: &GeneratorSpec, t: f64, z0: C64, tol: f64) -> Result<FlowResult> {
    if z0.norm() >= 1.0 {
        return Err(Error::OutsideDisk { z: z0 });
    }
    if !(0.0..=50.0).contains(&t) {
        return Err(Error::InvalidParam { name: "t", msg: format!("time {} outside [0, 50]", t) });
    }
    if t == 0.0 {
        return Ok(FlowResult { t, z0, z_t: z0, step_count: 0, error_estimate: 0.0 });
    }
    let mut w = z0;
    let mut s = 0.0;
    let mut h = t.min(0.01);
    let mut steps = 0usize;
    let mut err_acc = 0.0;
    let mut k1 = generator_eval(spec, w)?;
    while s < t {
        if steps >= MAX_FLOW_STEPS || h < 1e-14 * t.max(1.0) {
            return Err(Error::BoundaryStall { t: s, abs_z: w.norm() });
        }
        h = h.min(t - s);
        let mut k = [C64::new(0.0, 0.0); 7];
        k[0] = k1;
        let mut failed = false;
        for stage in 0..6 {
            let mut acc = C64::new(0.0, 0.0);
            for (j, &a) in DP_A[stage].iter().enumerate() {
                acc += a * k[j];
            }
            let _ = DP_C[stage];
            match generator_eval(spec, w + h * acc) {
                Ok(v) => k[stage + 1] = v,
                Err(_) => {
                    failed = true;
                    break;
                }
            }
        }
        if failed {
            h *= 0.5;
            steps += 1;
            continue;
        }
        let mut err = C64::new(0.0, 0.0);
        for (j, &e) in DP_E.iter().enumerate() {
            err += e * k[j];
        }
        let err_norm = (h * err).norm();
        if err_norm <= tol {
            let mut inc = C64::new(0.0, 0.0);
            for (j, &a) in DP_A[5].iter().enumerate() {
                inc += a * k[j];
            }
            w += h * inc;
            s += h;
            err_acc += err_norm;
            if w.norm() >= 1.0 + 1e-12 {
                return Err(Error::BoundaryStall { t: s, abs_z: w.norm() });
            }
            k1 = k[6];
        }
        let scale = if err_norm > 0.0 { 0.9 * (tol / err_norm).powf(0.2) } else { 5.0 };
        h *= scale.clamp(0.2, 5.0);
        steps += 1;
    }
    Ok(FlowResult { t, z0, z_t: w, step_count: steps, error_estimate: err_acc })
}

/// Difference quotients (phi_t(z) - z)/t on a time grid, with the observed
/// convergence order toward G(z).
#[derive(Debug, Clone)]
pub struct RecoveryReport {
    pub ts: Vec<f64>,
    pub quotients: Vec<C64>,
    pub errors: Vec<f64>,
    pub order: f64,
    pub target: C64,
}

pub fn generator_recovery(spec: &GeneratorSpec, z: C64, ts: &[f64]) -> Result<RecoveryReport> {
    let target = generator_eval(spec, z)?;
    let mut quotients = Vec::with_capacity(ts.len());
    let mut errors = Vec::with_capacity(ts.len());
    for &t in ts {
        if t <= 0.0 {
            return Err(Error::InvalidParam { name: "ts", msg: "times must be positive".into() });
        }
        let r = flow(spec, t, z, 1e-13)?;
        let q = (r.z_t - z) / t;
        quotients.push(q);
        errors.push((q - target).norm());
    }
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (&t, &e) in ts.iter().zip(&errors) {
        if e > 1e-14 {
            xs.push(t.ln());
            ys.push(e.ln());
        }
    }
    let order = if xs.len() >= 2 { ls_slope(&xs, &ys) } else { f64::INFINITY };
    Ok(RecoveryReport { ts: ts.to_vec(), quotients, errors, order, target })
}

/// The g-symbol: gamma(z) = -int_0^z dzeta/P(zeta) (interior) or
/// int_0^z dzeta/((1-zeta)^2 P(zeta)) (boundary), as a truncated series.
pub fn g_symbol(spec: &GeneratorSpec, degree: usize) -> Result<AnalyticFunction> {
    let inv = spec.herglotz.reciprocal_series(degree)?;
    let integrand = match spec.dw {
        DwPoint::Interior => inv.scale(C64::new(-1.0, 0.0)),
        DwPoint::Boundary => {
            let geo2 = inverse_power(C64::new(1.0, 0.0), 2.0, degree, 1e-12)?;
            truncate_series(&cauchy_product(&inv, &geo2), degree)
        }
    };
    Ok(volterra_primitive(&integrand))
}

/// Closed-form Koenigs functions for the catalog.
#[derive(Debug, Clone, Copy)]
pub enum KoenigsForm {
    /// h(z) = z (dilation).
    Identity,
    /// h(z) = z/(1-z) (interior ONE_MINUS_Z; multiplier e^{-t}).
    ZOverOneMinusZ,
    /// h(z) = z/(1+z)^2 (interior CAYLEY; multiplier e^{-t}).
    ZOverOnePlusZSq,
    /// h(z) = z/(c(1-z)) (boundary CONST(c); additive cocycle).
    BoundaryConst(C64),
}

impl KoenigsForm {
    pub fn eval(&self, z: C64) -> C64 {
        let one = C64::new(1.0, 0.0);
        match self {
            KoenigsForm::Identity => z,
            KoenigsForm::ZOverOneMinusZ => z / (one - z),
            KoenigsForm::ZOverOnePlusZSq => {
                let w = one + z;
                z / (w * w)
            }
            KoenigsForm::BoundaryConst(c) => z / (c * (one - z)),
        }
    }
}

/// The cataloged Koenigs function for a spec, when one is known.
pub fn koenigs_closed(spec: &GeneratorSpec) -> Option<KoenigsForm> {
    match (spec.dw, &spec.herglotz) {
        (DwPoint::Interior, Herglotz::Const(_)) => Some(KoenigsForm::Identity),
        (DwPoint::Interior, Herglotz::OneMinusZ) => Some(KoenigsForm::ZOverOneMinusZ),
        (DwPoint::Interior, Herglotz::Cayley) => Some(KoenigsForm::ZOverOnePlusZSq),
        (DwPoint::Boundary, Herglotz::Const(c)) => Some(KoenigsForm::BoundaryConst(*c)),
        _ => None,
    }
}

/// Residual of the Koenigs functional equation at (t, z):
/// |h(phi_t(z)) - e^{G'(0)t} h(z)| for interior specs,
/// |h(phi_t(z)) - h(z) - t| for boundary specs.
pub fn koenigs_residual(spec: &GeneratorSpec, t: f64, z: C64, tol: f64) -> Result<f64> {
    let h = koenigs_closed(spec).ok_or(Error::WitnessNotFound("no cataloged Koenigs function"))?;
    let phi = flow(spec, t, z, tol)?.z_t;
    Ok(match spec.dw {
        DwPoint::Interior => {
            let rate = spec.multiplier_rate()?;
            (h.eval(phi) - (rate * t).exp() * h.eval(z)).norm()
        }
        DwPoint::Boundary => (h.eval(phi) - h.eval(z) - t).norm(),
    })
}

/// Curve t -> ||f o phi_t - f|| with a decay verdict. The time grid should
/// decrease geometrically with about 14 points per decade so the verdict
/// thresholds keep their meaning.
#[derive(Debug, Clone)]
pub struct ContinuityReport {
    pub ts: Vec<f64>,
    pub values: Vec<f64>,
    pub verdict: Decay,
    pub norm_f: f64,
}

/// Decreasing geometric time grid with 14 points per decade.
pub fn default_t_grid(t_max: f64, t_min: f64) -> Vec<f64> {
    let ratio = 10f64.powf(-1.0 / 14.0);
    let mut ts = vec![t_max];
    while *ts.last().unwrap() > t_min {
        ts.push(ts.last().unwrap() * ratio);
    }
    ts
}

pub fn continuity_probe(
    spec: &GeneratorSpec,
    f: &AnalyticFunction,
    sp: &SpaceParams,
    ts: &[f64],
) -> Result<ContinuityReport> {
    let norm_f = mixed_norm(f, sp)?;
    let mut values = Vec::with_capacity(ts.len());
    for &t in ts {
        let diff = match spec.closed_flow {
            Some(ClosedFlow::Dilation(c)) => dilation_difference(f, c, t),
            _ => sampled_difference(spec, f, t)?,
        };
        values.push(mixed_norm(&diff, sp)?);
    }
    let verdict = decay_verdict(&values, DecayThresholds::default());
    Ok(ContinuityReport { ts: ts.to_vec(), values, verdict, norm_f })
}

/// f o phi_t - f for the dilation flow, exactly in coefficients:
/// c_k (e^{-ckt} - 1) z^k.
fn dilation_difference(f: &AnalyticFunction, c: C64, t: f64) -> AnalyticFunction {
    let coeffs: Vec<C64> = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, &ck)| ck * ((-c * (k as f64) * t).exp() - C64::new(1.0, 0.0)))
        .collect();
    match f.tail_bound() {
        Some(tb) => AnalyticFunction::truncated(
            coeffs,
            TailBound { radius: tb.radius, sup: 2.0 * tb.sup },
        )
        .expect("radius unchanged"),
        None => AnalyticFunction::from_coeffs(coeffs),
    }
}

/// f o phi_t - f by circle sampling of the numerical flow and re-expansion.
fn sampled_difference(
    spec: &GeneratorSpec,
    f: &AnalyticFunction,
    t: f64,
) -> Result<AnalyticFunction> {
    let n_target = (4 * f.degree() + 64).min(512);
    let radius: f64 = 0.998_f64.min(f.max_radius());
    let m = (4 * n_target + 4).max(4096).next_power_of_two();
    let mut values = Vec::with_capacity(m);
    for j in 0..m {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / m as f64;
        let z = C64::from_polar(radius, theta);
        let w = match spec.closed_flow {
            Some(cf) => cf.eval(t, z),
            None => flow(spec, t, z, 1e-12)?.z_t,
        };
        let fr = f.max_radius();
        let w = if w.norm() > fr { w * (fr / w.norm()) } else { w };
        values.push(f.eval_unchecked(w) - f.eval_unchecked(z));
    }
    let samples = CircleSamples { radius, values };
    reexpand_from_samples(&samples, n_target, 1e-6)
}

/// Gamma f = G f' as a truncated series.
pub fn generator_action(spec: &GeneratorSpec, f: &AnalyticFunction) -> AnalyticFunction {
    let fp = differentiate(f);
    let g = spec.generator_series(fp.degree() + 4);
    cauchy_product(&g, &fp)
}

/// Classification of the maximal subspace of strong continuity inside
/// H(p,infinity,alpha).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxSubspace {
    LittleOhSpace,
    NonSeparable,
    Inconclusive,
}

impl std::fmt::Display for MaxSubspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MaxSubspace::LittleOhSpace => "LITTLE_OH_SPACE",
            MaxSubspace::NonSeparable => "NON_SEPARABLE",
            MaxSubspace::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone)]
pub struct ClassifyReport {
    pub verdict: MaxSubspace,
    pub gamma_bloch: BlochReport,
    pub gamma_degree: usize,
}

/// Boundary specs give a non-separable maximal subspace unconditionally;
/// interior specs inherit the little-Bloch verdict of the g-symbol.
pub fn maximal_subspace_classify(
    spec: &GeneratorSpec,
    sp: &SpaceParams,
    degree: usize,
) -> Result<ClassifyReport> {
    if !sp.q.is_infinite() {
        return Err(Error::InvalidParam {
            name: "q",
            msg: "maximal-subspace classification concerns q = infinity".into(),
        });
    }
    let gamma = g_symbol(spec, degree)?;
    let gamma_bloch = bloch_report(&gamma)?;
    let verdict = match spec.dw {
        DwPoint::Boundary => MaxSubspace::NonSeparable,
        DwPoint::Interior => match gamma_bloch.class {
            crate::norms::BlochClass::LittleBloch => MaxSubspace::LittleOhSpace,
            crate::norms::BlochClass::BlochOnly => MaxSubspace::NonSeparable,
            _ => MaxSubspace::Inconclusive,
        },
    };
    Ok(ClassifyReport { verdict, gamma_bloch, gamma_degree: degree })
}

/// (1-r)^alpha (int_{theta-(1-r)}^{theta+(1-r)} |h(r e^{it})|^p dt)^{1/p}
/// on a radial grid, with the decade decay verdict.
#[derive(Debug, Clone)]
pub struct ArcDecayReport {
    pub radii: Vec<f64>,
    pub values: Vec<f64>,
    pub verdict: Decay,
}

pub fn arc_decay(
    h: &AnalyticFunction,
    theta: f64,
    p: f64,
    alpha: f64,
    grid: &RadialGrid,
) -> Result<ArcDecayReport> {
    if !p.is_finite() || p <= 0.0 {
        return Err(Error::InvalidParam { name: "p", msg: format!("need finite positive p, got {}", p) });
    }
    let mut values = Vec::with_capacity(grid.len());
    for (&r, &u) in grid.radii.iter().zip(&grid.us) {
        let mut integral = 0.0;
        let panels = 16usize;
        let width = 2.0 * u / panels as f64;
        for k in 0..panels {
            let a = theta - u + k as f64 * width;
            let mut g = |t: f64| h.eval_unchecked(C64::from_polar(r, t)).norm().powf(p);
            integral += adaptive_simpson(&mut g, a, a + width, 1e-9)?;
        }
        values.push(u.powf(alpha) * integral.powf(1.0 / p));
    }
    let verdict = decay_verdict(&values, DecayThresholds::default());
    Ok(ArcDecayReport { radii: grid.radii.clone(), values, verdict })
}

/// inf |P| over a triangular Stolz grid of aperture 2 anchored at e^{i
/// theta}, sampled at about 10^3 points.
pub fn stolz_inf(herglotz: &Herglotz, theta: f64) -> f64 {
    let apex = C64::from_polar(1.0, theta);
    let mut inf = f64::MAX;
    for i in 1..=40 {
        let s = 0.99 * 2f64.powf(-(i as f64) / 4.0);
        for j in 0..25 {
            let x = -1.0 + 2.0 * j as f64 / 24.0;
            let z = apex * C64::new(1.0 - s, x * s);
            if z.norm() >= 1.0 {
                continue;
            }
            if let Ok(v) = herglotz.eval(z) {
                inf = inf.min(v.norm());
            }
        }
    }
    inf
}
