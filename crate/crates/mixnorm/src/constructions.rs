//! Explicit function families: Fejer-kernel block polynomials, lacunary
//! block sums embedding finite sequences, Bloch witnesses, binomial families
//! with a boundary singularity, obstruction and growth test functions, and
//! the h_n approximants built from a damped Volterra integral.

use crate::norms::{bloch_report, BlochClass, CircleMap};
use crate::quad::{gl12, golden_max};
use crate::semigroup::Herglotz;
use crate::series::{circle_samples, differentiate, inverse_power, AnalyticFunction};
use crate::{Error, Result, C64};

/// Fejer kernel coefficients 1 - |k|/N for k in [-(N-1), N-1].
pub fn fejer(n: usize) -> Vec<f64> {
    assert!(n >= 1, "Fejer order must be positive");
    let mut out = Vec::with_capacity(2 * n - 1);
    for j in 0..(2 * n - 1) {
        let k = j as i64 - (n as i64 - 1);
        out.push(1.0 - k.unsigned_abs() as f64 / n as f64);
    }
    out
}

/// Block polynomial G_N(z) = z^{2N} F_{N-1}(z): coefficient support
/// [N+1, 3N-1], nonnegative coefficients, unit H^1 norm.
pub fn gn_poly(n: usize) -> AnalyticFunction {
    let kernel = fejer(n);
    let mut coeffs = vec![C64::new(0.0, 0.0); 3 * n];
    for (j, &c) in kernel.iter().enumerate() {
        coeffs[n + 1 + j] = C64::new(c, 0.0);
    }
    AnalyticFunction::from_coeffs(coeffs)
}

/// Witness points for a Bloch-only symbol: radii 1 - 2^{-n} with angles
/// where (1-r)|g'| is largest, and the largest half-width delta < pi/8 on
/// which the lower bound (1-r)|g'| >= delta holds around every witness.
#[derive(Debug, Clone)]
pub struct BlochWitnessReport {
    pub delta: f64,
    /// (r_n, t_n) per witness.
    pub points: Vec<(f64, f64)>,
    /// (1-r_n) max_t |g'(r_n e^{it})| per witness.
    pub values: Vec<f64>,
}

pub fn bloch_witness(g: &AnalyticFunction, delta_cap: f64) -> Result<BlochWitnessReport> {
    let report = bloch_report(g)?;
    if report.class == BlochClass::LittleBloch {
        return Err(Error::WitnessNotFound("symbol is little Bloch on the grid"));
    }
    let gp = differentiate(g);
    let m = ((2 * gp.degree() + 2).max(4096)).next_power_of_two().min(1 << 20);
    let mut candidates: Vec<(f64, f64, f64)> = Vec::new();
    let mut n = 1u32;
    loop {
        let r = 1.0 - 2f64.powi(-(n as i32));
        if r > gp.max_radius() {
            break;
        }
        let samples = circle_samples(&gp, r, m)?;
        let (jmax, vmax) = samples
            .values
            .iter()
            .enumerate()
            .map(|(j, v)| (j, v.norm()))
            .fold((0usize, f64::MIN), |best, cur| if cur.1 > best.1 { cur } else { best });
        let h = 2.0 * std::f64::consts::PI / m as f64;
        let t0 = jmax as f64 * h;
        let mut eval = |t: f64| gp.eval_unchecked(C64::from_polar(r, t)).norm();
        let (t_best, v_best) = golden_max(&mut eval, t0 - h, t0 + h, 1e-12);
        let v = (1.0 - r) * v_best.max(vmax);
        candidates.push((r, t_best, v));
        n += 1;
    }
    let v_max = candidates.iter().map(|c| c.2).fold(0.0, f64::max);
    let kept: Vec<(f64, f64, f64)> =
        candidates.into_iter().filter(|c| c.2 >= 0.5 * v_max).collect();
    if kept.len() < 4 {
        return Err(Error::WitnessNotFound("fewer than 4 Bloch witnesses"));
    }

    let delta_top = delta_cap.min(std::f64::consts::FRAC_PI_8 * (1.0 - 1e-9));
    let feasible = |delta: f64| -> bool {
        kept.iter().all(|&(r, t_n, _)| {
            let half = delta * (1.0 - r);
            (0..64).all(|i| {
                let t = t_n - half + 2.0 * half * i as f64 / 63.0;
                (1.0 - r) * gp.eval_unchecked(C64::from_polar(r, t)).norm() >= delta
            })
        })
    };
    let delta = if feasible(delta_top) {
        delta_top
    } else {
        let (mut lo, mut hi) = (0.0f64, delta_top);
        for _ in 0..50 {
            let mid = 0.5 * (lo + hi);
            if feasible(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };
    if delta <= 0.0 {
        return Err(Error::WitnessNotFound("no positive interval half-width"));
    }
    Ok(BlochWitnessReport {
        delta,
        points: kept.iter().map(|&(r, t, _)| (r, t)).collect(),
        values: kept.iter().map(|&(_, _, v)| v).collect(),
    })
}

/// Parameters of the lacunary block construction.
#[derive(Debug, Clone)]
pub struct LacunaryParams {
    pub k_base: usize,
    pub nu: f64,
    pub n_seq: Vec<usize>,
    pub r_seq: Vec<f64>,
    pub t_seq: Vec<f64>,
}

impl LacunaryParams {
    /// Standard parameters tied to a space: the block exponent is
    /// nu = alpha + 1/p - 1, the value that makes single blocks have
    /// norms of order one.
    pub fn for_space(sp: &crate::norms::SpaceParams, k_base: usize, l_blocks: usize) -> Result<Self> {
        Self::standard(k_base, l_blocks, sp.alpha + crate::norms::inv_exp(sp.p) - 1.0)
    }

    /// Standard choice: N_n = K^n, r_n = 1 - K^{-n}, t_n = 0, n = 1..=L.
    pub fn standard(k_base: usize, l_blocks: usize, nu: f64) -> Result<Self> {
        if k_base < 3 {
            return Err(Error::InvalidParam {
                name: "k_base",
                msg: format!("geometric base must be at least 3, got {}", k_base),
            });
        }
        let mut n_seq = Vec::with_capacity(l_blocks);
        let mut r_seq = Vec::with_capacity(l_blocks);
        let mut nn = 1usize;
        for _ in 0..l_blocks {
            nn = nn.checked_mul(k_base).ok_or(Error::InvalidParam {
                name: "l_blocks",
                msg: "block frequency overflow".into(),
            })?;
            n_seq.push(nn);
            r_seq.push(1.0 - 1.0 / nn as f64);
        }
        let params =
            Self { k_base, nu, n_seq, r_seq, t_seq: vec![0.0; l_blocks] };
        params.validate()?;
        Ok(params)
    }

    pub fn blocks(&self) -> usize {
        self.n_seq.len()
    }

    pub fn validate(&self) -> Result<()> {
        let l = self.n_seq.len();
        if self.r_seq.len() != l || self.t_seq.len() != l {
            return Err(Error::LacunaryInvariant("sequence length mismatch".into()));
        }
        for (i, (&nn, &r)) in self.n_seq.iter().zip(&self.r_seq).enumerate() {
            let x = nn as f64 * (1.0 - r);
            if !(1.0 - 1e-9..=2.0 + 1e-9).contains(&x) {
                return Err(Error::LacunaryInvariant(format!(
                    "N_n (1 - r_n) = {} outside [1, 2] at block {}",
                    x, i
                )));
            }
        }
        for w in self.n_seq.windows(2) {
            if w[1] < 3 * w[0] {
                return Err(Error::LacunaryInvariant(format!(
                    "frequency ratio {}/{} below 3",
                    w[1], w[0]
                )));
            }
            // Disjoint blocks [N+1, 3N-1]: the next block starts past this one.
            if w[1] + 1 <= 3 * w[0] - 1 {
                return Err(Error::LacunaryInvariant(format!(
                    "blocks of {} and {} overlap",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }
}

/// The block sum Phi a = sum_n a_n N_n^nu G_{N_n}(e^{-i t_n} z), assembled
/// exactly in coefficients (the blocks are disjoint).
pub fn lacunary_embed(
    a: &[C64],
    params: &LacunaryParams,
) -> Result<AnalyticFunction> {
    params.validate()?;
    if a.len() > params.blocks() {
        return Err(Error::InvalidParam {
            name: "a",
            msg: format!("sequence length {} exceeds {} blocks", a.len(), params.blocks()),
        });
    }
    let top = a
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm_sqr() > 0.0)
        .map(|(i, _)| 3 * params.n_seq[i] - 1)
        .max();
    let degree = match top {
        Some(d) => d,
        None => return Ok(AnalyticFunction::zero()),
    };
    let mut coeffs = vec![C64::new(0.0, 0.0); degree + 1];
    for (i, &an) in a.iter().enumerate() {
        if an.norm_sqr() == 0.0 {
            continue;
        }
        let nn = params.n_seq[i];
        let t_n = params.t_seq[i];
        let base = an * (nn as f64).powf(params.nu);
        for j in 0..(2 * nn - 1) {
            let k = nn + 1 + j;
            let weight = 1.0 - (j as i64 - (nn as i64 - 1)).unsigned_abs() as f64 / nn as f64;
            let rot = C64::from_polar(1.0, -t_n * k as f64);
            coeffs[k] = base * weight * rot;
        }
    }
    Ok(AnalyticFunction::from_coeffs(coeffs))
}

/// Constants (A, B) of the proof's split of (1-r)^alpha M_p(r, Phi a): the
/// retained blocks contribute at most A = 2^alpha/(1 - K^{-alpha}) and the
/// remote blocks at most B = e^{C_alpha} sum_j e^{-K^j/2} with
/// C_alpha = alpha log(2 alpha) - alpha, so the profile is at most
/// (A + B) ||a||_inf.
pub fn upper_chain_constants(alpha: f64, k_base: usize) -> (f64, f64) {
    let k = k_base as f64;
    let a = 2f64.powf(alpha) / (1.0 - k.powf(-alpha));
    let c_alpha = alpha * (2.0 * alpha).ln() - alpha;
    let mut sum = 0.0;
    let mut kj = 1.0f64;
    loop {
        let term = (-kj / 2.0).exp();
        sum += term;
        if term < 1e-18 {
            break;
        }
        kj *= k;
    }
    (a, c_alpha.exp() * sum)
}

/// One member of the binomial family delta^nu (1 + delta - z)^beta with
/// delta = K^{-n}, as a certified truncated series. The representation is
/// (1+delta)^beta (1 - z/(1+delta))^beta, a negative binomial series.
pub fn xnu_family(n: u32, nu: f64, beta: f64, k_base: usize) -> Result<AnalyticFunction> {
    if beta >= 0.0 {
        return Err(Error::InvalidParam {
            name: "beta",
            msg: format!("family needs a negative exponent, got {}", beta),
        });
    }
    let delta = (k_base as f64).powi(-(n as i32));
    let degree = ((48.0 / delta) as usize + 64).min(1 << 21);
    let scale = delta.powf(nu) * (1.0 + delta).powf(beta);
    let b = 1.0 / (1.0 + delta);
    let series = inverse_power(C64::new(b, 0.0), -beta, degree, 1e-12 / scale.max(1e-300))?;
    Ok(series.scale(C64::new(scale, 0.0)))
}

/// Closed-form evaluator for offset + sum_n w_n (1 + delta_n - z)^beta,
/// with the boundary feature concentrated at angle 0.
#[derive(Debug, Clone)]
pub struct XnuSum {
    pub offset: C64,
    /// (weight, delta) per term; weight already carries a_n delta_n^nu.
    pub terms: Vec<(C64, f64)>,
    pub beta: f64,
}

/// The weighted family sum as a pointwise evaluator. A coefficient form
/// would need degrees near 48 K^L, so norms go through the closed form.
pub fn xnu_embed(a: &[C64], nu: f64, beta: f64, k_base: usize) -> Result<XnuSum> {
    if beta >= 0.0 {
        return Err(Error::InvalidParam {
            name: "beta",
            msg: format!("family needs a negative exponent, got {}", beta),
        });
    }
    Ok(XnuSum::assemble(a, nu, beta, k_base))
}

impl XnuSum {
    /// sum_{n=1..=L} a_n delta_n^nu (1 + delta_n - z)^beta, delta_n = K^{-n}.
    pub fn assemble(a: &[C64], nu: f64, beta: f64, k_base: usize) -> Self {
        let terms = a
            .iter()
            .enumerate()
            .map(|(i, &an)| {
                let delta = (k_base as f64).powi(-(i as i32 + 1));
                (an * delta.powf(nu), delta)
            })
            .collect();
        Self { offset: C64::new(0.0, 0.0), terms, beta }
    }

    pub fn eval(&self, z: C64) -> C64 {
        let mut acc = self.offset;
        for &(w, delta) in &self.terms {
            acc += w * (C64::new(1.0 + delta, 0.0) - z).powf(self.beta);
        }
        acc
    }

    /// Termwise derivative: -beta (1 + delta - z)^{beta - 1} per term.
    pub fn eval_derivative(&self, z: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for &(w, delta) in &self.terms {
            acc += w * (-self.beta) * (C64::new(1.0 + delta, 0.0) - z).powf(self.beta - 1.0);
        }
        acc
    }

    fn sharpest_delta(&self) -> f64 {
        self.terms.iter().map(|t| t.1).fold(1.0, f64::min)
    }
}

impl CircleMap for XnuSum {
    fn eval_map(&self, z: C64) -> C64 {
        self.eval(z)
    }

    fn degree_hint(&self) -> usize {
        ((4.0 / self.sharpest_delta()) as usize).clamp(256, 1 << 17)
    }

    fn singular_angles(&self) -> Vec<f64> {
        vec![0.0]
    }
}

/// The non-separability obstruction (1 - e^{-i theta} z)^{-(alpha + 1/p)}:
/// bounded weighted profile, yet neither little-oh decay nor arc decay.
pub fn obstruction_fn(
    theta: f64,
    alpha: f64,
    p: f64,
    degree: usize,
) -> Result<AnalyticFunction> {
    let s = alpha + crate::norms::inv_exp(p);
    inverse_power(C64::from_polar(1.0, -theta), s, degree, 1e-9)
}

/// Normalized point-mass test function
/// (1 - |z0|^2)^{alpha + 1/p} / (1 - conj(z0) w)^{2(alpha + 1/p)}.
pub fn growth_test_fn(z0: C64, alpha: f64, p: f64, degree: usize) -> Result<AnalyticFunction> {
    let r = z0.norm();
    if r >= 1.0 {
        return Err(Error::OutsideDisk { z: z0 });
    }
    let s = alpha + crate::norms::inv_exp(p);
    if r == 0.0 {
        return Ok(AnalyticFunction::one());
    }
    let series = inverse_power(z0.conj(), 2.0 * s, degree, 1e-9)?;
    Ok(series.scale(C64::new((1.0 - r * r).powf(s), 0.0)))
}

/// The approximants h_n = f(0) + V(n f'/(n + psi)) with
/// psi = ((1-z) P)^{1-theta}, evaluated pointwise through a graded ray
/// quadrature. Evaluation returns NaN outside the principal branch.
#[derive(Debug, Clone)]
pub struct HnApprox<'a> {
    pub f: &'a XnuSum,
    pub herglotz: &'a Herglotz,
    pub theta: f64,
    pub n: f64,
}

impl<'a> HnApprox<'a> {
    /// The generator must have its attracting point on the boundary; its
    /// Herglotz function keeps (1-z)P(z) off the branch cut.
    pub fn new(
        f: &'a XnuSum,
        spec: &'a crate::semigroup::GeneratorSpec,
        theta: f64,
        n: f64,
    ) -> Result<Self> {
        if spec.dw != crate::semigroup::DwPoint::Boundary {
            return Err(Error::InvalidParam {
                name: "spec",
                msg: "approximants need a boundary attracting point".into(),
            });
        }
        Self::with_herglotz(f, &spec.herglotz, theta, n)
    }

    pub fn with_herglotz(
        f: &'a XnuSum,
        herglotz: &'a Herglotz,
        theta: f64,
        n: f64,
    ) -> Result<Self> {
        if !(0.0..1.0).contains(&theta) {
            return Err(Error::InvalidParam {
                name: "theta",
                msg: format!("damping exponent must lie in (0, 1), got {}", theta),
            });
        }
        if n <= 0.0 {
            return Err(Error::InvalidParam { name: "n", msg: "index must be positive".into() });
        }
        Ok(Self { f, herglotz, theta, n })
    }

    /// psi(z) = ((1-z) P(z))^{1-theta}, principal branch.
    pub fn psi(&self, z: C64) -> Result<C64> {
        let base = (C64::new(1.0, 0.0) - z) * self.herglotz.eval(z)?;
        if base.norm() == 0.0 {
            return Ok(C64::new(0.0, 0.0));
        }
        if base.arg().abs() >= std::f64::consts::PI * (1.0 - 1e-12) {
            return Err(Error::BranchViolation("(1-z)P(z) reached the branch cut"));
        }
        Ok(base.powf(1.0 - self.theta))
    }

    /// Integrand of h_n' = n f'/(n + psi).
    pub fn damped_derivative(&self, z: C64) -> Result<C64> {
        let psi = self.psi(z)?;
        let denom = psi + self.n;
        if denom.norm() < 1e-9 {
            return Err(Error::NonConvergence { context: "damped derivative denominator" });
        }
        Ok(self.f.eval_derivative(z) * self.n / denom)
    }

    /// h_n(z) via the ray integral f(0) + int_0^1 h_n'(sz) z ds on dyadically
    /// graded segments (the integrand steepens only toward s = 1).
    pub fn eval(&self, z: C64) -> Result<C64> {
        let integral = self.ray_integral(z, |w| self.damped_derivative(w))?;
        Ok(self.f.eval(C64::new(0.0, 0.0)) + integral)
    }

    /// (h_n - f)(z) = -int over [0,z] of psi f'/(n + psi), computed directly
    /// for conditioning at large n.
    pub fn diff(&self, z: C64) -> Result<C64> {
        let integral = self.ray_integral(z, |w| {
            let psi = self.psi(w)?;
            let denom = psi + self.n;
            if denom.norm() < 1e-9 {
                return Err(Error::NonConvergence { context: "damped difference denominator" });
            }
            Ok(-self.f.eval_derivative(w) * psi / denom)
        })?;
        Ok(integral)
    }

    /// Membership residual (1-z)^2 P(z) h_n'(z); h_n lies in the generator
    /// domain exactly when this has a finite weighted sup norm.
    pub fn residual(&self, z: C64) -> Result<C64> {
        let u = C64::new(1.0, 0.0) - z;
        Ok(u * u * self.herglotz.eval(z)? * self.damped_derivative(z)?)
    }

    fn ray_integral(
        &self,
        z: C64,
        mut integrand: impl FnMut(C64) -> Result<C64>,
    ) -> Result<C64> {
        let mut acc = C64::new(0.0, 0.0);
        let mut failed: Option<Error> = None;
        let mut lo = 0.0f64;
        for j in 0..=40 {
            let hi = if j == 40 { 1.0 } else { 1.0 - 2f64.powi(-(j as i32 + 1)) };
            let mut g = |s: f64| match integrand(s * z) {
                Ok(v) => v * z,
                Err(e) => {
                    failed = Some(e);
                    C64::new(f64::NAN, f64::NAN)
                }
            };
            acc += gl12(&mut g, lo, hi);
            if let Some(e) = failed {
                return Err(e);
            }
            lo = hi;
        }
        Ok(acc)
    }
}

/// h_n - f as a point-evaluated map for norm computation.
pub struct HnDiffMap<'a>(pub &'a HnApprox<'a>);

impl CircleMap for HnDiffMap<'_> {
    fn eval_map(&self, z: C64) -> C64 {
        self.0.diff(z).unwrap_or(C64::new(f64::NAN, f64::NAN))
    }

    fn degree_hint(&self) -> usize {
        self.0.f.degree_hint()
    }

    fn singular_angles(&self) -> Vec<f64> {
        vec![0.0]
    }
}

/// (1-z)^2 P h_n' as a point-evaluated map.
pub struct HnResidualMap<'a>(pub &'a HnApprox<'a>);

impl CircleMap for HnResidualMap<'_> {
    fn eval_map(&self, z: C64) -> C64 {
        self.0.residual(z).unwrap_or(C64::new(f64::NAN, f64::NAN))
    }

    fn degree_hint(&self) -> usize {
        self.0.f.degree_hint()
    }

    fn singular_angles(&self) -> Vec<f64> {
        vec![0.0]
    }
}
