//! Truncated Taylor series on the unit disk and the coefficient-space
//! operations everything else is built from: evaluation, circle sampling via
//! the fast transform, Cauchy products, differentiation, Volterra primitives,
//! dilation, and re-expansion from samples.
//!
//! A non-polynomial function enters as a truncation together with a certified
//! tail bound: `|dropped tail(z)| <= tail.sup for |z| <= tail.radius`. Radial
//! grids downstream cap at that radius, so verdicts are only ever claimed
//! where the representation is trustworthy.

use crate::{fft, Error, Result, C64};

/// Certified bound on the dropped tail of a truncated series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBound {
    /// Largest radius on which the bound is certified.
    pub radius: f64,
    /// Sup of the dropped tail modulus on |z| <= radius.
    pub sup: f64,
}

/// Analytic function represented by Taylor coefficients around 0.
/// `tail = None` means the representation is exact (a polynomial).
#[derive(Debug, Clone)]
pub struct AnalyticFunction {
    coeffs: Vec<C64>,
    tail: Option<TailBound>,
}

/// Equispaced samples of a function on the circle of the given radius.
/// The sample count is always a power of two.
#[derive(Debug, Clone)]
pub struct CircleSamples {
    pub radius: f64,
    pub values: Vec<C64>,
}

impl AnalyticFunction {
    /// Polynomial with the given coefficients (index k = k-th Taylor coefficient).
    pub fn from_coeffs(coeffs: Vec<C64>) -> Self {
        let coeffs = if coeffs.is_empty() { vec![C64::new(0.0, 0.0)] } else { coeffs };
        Self { coeffs, tail: None }
    }

    /// Polynomial with real coefficients.
    pub fn from_real_coeffs(coeffs: &[f64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// Truncation of a non-polynomial function with a certified tail bound.
    pub fn truncated(coeffs: Vec<C64>, tail: TailBound) -> Result<Self> {
        if !(tail.radius > 0.0 && tail.radius < 1.0) {
            return Err(Error::InvalidParam {
                name: "tail.radius",
                msg: format!("must lie in (0, 1), got {}", tail.radius),
            });
        }
        if !(tail.sup >= 0.0) {
            return Err(Error::InvalidParam {
                name: "tail.sup",
                msg: format!("must be nonnegative, got {}", tail.sup),
            });
        }
        Ok(Self { coeffs: Self::from_coeffs(coeffs).coeffs, tail: Some(tail) })
    }

    pub fn zero() -> Self {
        Self::from_coeffs(vec![C64::new(0.0, 0.0)])
    }

    pub fn constant(c: C64) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(C64::new(1.0, 0.0))
    }

    /// z^n.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![C64::new(0.0, 0.0); n + 1];
        coeffs[n] = C64::new(1.0, 0.0);
        Self::from_coeffs(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or_else(|| C64::new(0.0, 0.0))
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn tail_bound(&self) -> Option<TailBound> {
        self.tail
    }

    /// True when the representation is exact on the closed disk.
    pub fn is_polynomial(&self) -> bool {
        match self.tail {
            None => true,
            Some(t) => t.sup == 0.0,
        }
    }

    /// Largest radius on which the representation is certified (1 for polynomials).
    pub fn max_radius(&self) -> f64 {
        match self.tail {
            None => 1.0,
            Some(t) => {
                if t.sup == 0.0 {
                    1.0
                } else {
                    t.radius
                }
            }
        }
    }

    /// Horner evaluation. |z| = 1 is allowed only for polynomials.
    pub fn eval(&self, z: C64) -> Result<C64> {
        let r = z.norm();
        if r > 1.0 + 1e-12 {
            return Err(Error::OutsideDisk { z });
        }
        if r >= 1.0 - 1e-15 && !self.is_polynomial() {
            return Err(Error::BoundaryEval);
        }
        Ok(self.eval_unchecked(z))
    }

    /// Horner evaluation without domain checks (hot paths that pre-validate).
    pub fn eval_unchecked(&self, z: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Sum of |c_k| r^k (coefficient majorant of the sup on |z| = r).
    pub fn l1_at(&self, r: f64) -> f64 {
        let mut acc = 0.0;
        let mut pw = 1.0;
        for c in &self.coeffs {
            acc += c.norm() * pw;
            pw *= r;
        }
        acc
    }

    /// a*self + b*other, combining tail bounds conservatively.
    pub fn lin2(&self, a: C64, other: &AnalyticFunction, b: C64) -> AnalyticFunction {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![C64::new(0.0, 0.0); n];
        for (k, slot) in coeffs.iter_mut().enumerate() {
            *slot = a * self.coeff(k) + b * other.coeff(k);
        }
        let tail = combine_tails(
            self.tail.map(|t| TailBound { radius: t.radius, sup: t.sup * a.norm() }),
            other.tail.map(|t| TailBound { radius: t.radius, sup: t.sup * b.norm() }),
        );
        AnalyticFunction { coeffs, tail }
    }

    pub fn add(&self, other: &AnalyticFunction) -> AnalyticFunction {
        self.lin2(C64::new(1.0, 0.0), other, C64::new(1.0, 0.0))
    }

    pub fn sub(&self, other: &AnalyticFunction) -> AnalyticFunction {
        self.lin2(C64::new(1.0, 0.0), other, C64::new(-1.0, 0.0))
    }

    pub fn scale(&self, a: C64) -> AnalyticFunction {
        let coeffs = self.coeffs.iter().map(|&c| a * c).collect();
        let tail = self.tail.map(|t| TailBound { radius: t.radius, sup: t.sup * a.norm() });
        AnalyticFunction { coeffs, tail }
    }
}

fn combine_tails(a: Option<TailBound>, b: Option<TailBound>) -> Option<TailBound> {
    match (a, b) {
        (None, None) => None,
        (Some(t), None) | (None, Some(t)) => Some(t),
        (Some(x), Some(y)) => {
            Some(TailBound { radius: x.radius.min(y.radius), sup: x.sup + y.sup })
        }
    }
}

/// Samples f on the circle of radius r at m equispaced angles via the fast
/// transform: values[j] = sum_k c_k r^k e^{2 pi i jk / m}.
///
/// m must be a power of two with m >= 2*degree + 2; r = 1 is polynomial-only.
pub fn circle_samples(f: &AnalyticFunction, r: f64, m: usize) -> Result<CircleSamples> {
    if !m.is_power_of_two() || m < 2 * f.degree() + 2 {
        return Err(Error::InvalidParam {
            name: "m",
            msg: format!("need power of two >= 2*degree+2 = {}, got {}", 2 * f.degree() + 2, m),
        });
    }
    if !(0.0..=1.0 + 1e-12).contains(&r) {
        return Err(Error::InvalidParam { name: "r", msg: format!("radius {} not in [0, 1]", r) });
    }
    if r >= 1.0 - 1e-15 && !f.is_polynomial() {
        return Err(Error::BoundaryEval);
    }
    let mut buf = vec![C64::new(0.0, 0.0); m];
    let mut pw = 1.0;
    for (k, &c) in f.coeffs().iter().enumerate() {
        buf[k] = c * pw;
        pw *= r;
    }
    fft::inverse(&mut buf);
    Ok(CircleSamples { radius: r, values: buf })
}

/// Coefficient convolution (f*g as functions). Small products run directly;
/// large ones go through the fast transform.
pub fn cauchy_product(f: &AnalyticFunction, g: &AnalyticFunction) -> AnalyticFunction {
    let (df, dg) = (f.degree(), g.degree());
    let out_len = df + dg + 1;
    let coeffs = if (df + 1).min(dg + 1) <= 64 || (df + 1) * (dg + 1) <= (1 << 16) {
        let mut out = vec![C64::new(0.0, 0.0); out_len];
        for (i, &a) in f.coeffs().iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            for (j, &b) in g.coeffs().iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        out
    } else {
        let m = fft::next_pow2(out_len);
        let mut fa = vec![C64::new(0.0, 0.0); m];
        let mut fb = vec![C64::new(0.0, 0.0); m];
        fa[..=df].copy_from_slice(f.coeffs());
        fb[..=dg].copy_from_slice(g.coeffs());
        fft::forward(&mut fa);
        fft::forward(&mut fb);
        for (a, b) in fa.iter_mut().zip(&fb) {
            *a *= b;
        }
        fft::inverse(&mut fa);
        let scale = 1.0 / m as f64;
        fa.truncate(out_len);
        fa.iter().map(|c| c * scale).collect()
    };
    let tail = match (f.tail_bound(), g.tail_bound()) {
        (None, None) => None,
        _ => {
            let radius = f.max_radius().min(g.max_radius()).min(1.0 - 2f64.powi(-44));
            let (sf, sg) = (
                f.tail_bound().map_or(0.0, |t| t.sup),
                g.tail_bound().map_or(0.0, |t| t.sup),
            );
            let sup = sf * g.l1_at(radius) + sg * f.l1_at(radius) + sf * sg;
            Some(TailBound { radius, sup })
        }
    };
    AnalyticFunction { coeffs, tail }
}

/// Truncation to `degree` coefficients; the dropped head moves into the tail
/// bound at the certified radius.
pub fn truncate_series(f: &AnalyticFunction, degree: usize) -> AnalyticFunction {
    if f.degree() <= degree {
        return f.clone();
    }
    let radius = f.max_radius().min(1.0 - 2f64.powi(-44));
    let mut dropped = 0.0;
    let mut pw = radius.powi(degree as i32 + 1);
    for c in &f.coeffs()[degree + 1..] {
        dropped += c.norm() * pw;
        pw *= radius;
    }
    let coeffs: Vec<C64> = f.coeffs()[..=degree].to_vec();
    let sup = dropped + f.tail.map_or(0.0, |t| t.sup);
    AnalyticFunction { coeffs, tail: Some(TailBound { radius, sup }) }
}

/// Termwise derivative. For truncations the certified radius retreats by
/// (1-R)/8 and the tail sup picks up the matching Cauchy factor 8/(1-R).
pub fn differentiate(f: &AnalyticFunction) -> AnalyticFunction {
    let coeffs: Vec<C64> = if f.degree() == 0 {
        vec![C64::new(0.0, 0.0)]
    } else {
        f.coeffs()[1..]
            .iter()
            .enumerate()
            .map(|(k, &c)| c * (k + 1) as f64)
            .collect()
    };
    let tail = f.tail.map(|t| TailBound {
        radius: t.radius - (1.0 - t.radius) / 8.0,
        sup: t.sup * 8.0 / (1.0 - t.radius),
    });
    AnalyticFunction { coeffs, tail }
}

/// Volterra primitive V(f)(z) = integral of f along [0, z]; (Vf)(0) = 0.
pub fn volterra_primitive(f: &AnalyticFunction) -> AnalyticFunction {
    let mut coeffs = vec![C64::new(0.0, 0.0); f.degree() + 2];
    for (k, &c) in f.coeffs().iter().enumerate() {
        coeffs[k + 1] = c / (k + 1) as f64;
    }
    let tail = f.tail.map(|t| TailBound { radius: t.radius, sup: t.sup * t.radius });
    AnalyticFunction { coeffs, tail }
}

/// Dilation f_rho(z) = f(rho z) for 0 <= rho <= 1 (exact in coefficients).
pub fn dilate(f: &AnalyticFunction, rho: f64) -> Result<AnalyticFunction> {
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::InvalidParam { name: "rho", msg: format!("{} not in [0, 1]", rho) });
    }
    let mut pw = 1.0;
    let coeffs = f
        .coeffs()
        .iter()
        .map(|&c| {
            let out = c * pw;
            pw *= rho;
            out
        })
        .collect();
    let tail = f.tail.map(|t| TailBound {
        radius: if rho == 0.0 { 1.0 - 2f64.powi(-44) } else { (t.radius / rho).min(1.0 - 2f64.powi(-44)) },
        sup: t.sup,
    });
    Ok(AnalyticFunction { coeffs, tail })
}

/// Recovers Taylor coefficients 0..=n from circle samples at radius rho < 1:
/// c_k = (forward DFT / M) * rho^{-k}. The noise floor amplified by rho^{-n}
/// must stay below `tol`, otherwise the recovery is rejected as
/// ill-conditioned. A tail bound is estimated from the last decade of
/// recovered coefficients.
pub fn reexpand_from_samples(samples: &CircleSamples, n: usize, tol: f64) -> Result<AnalyticFunction> {
    let m = samples.values.len();
    if !m.is_power_of_two() {
        return Err(Error::InvalidParam { name: "samples", msg: "sample count must be a power of two".into() });
    }
    if n > m / 2 {
        return Err(Error::InvalidParam {
            name: "n",
            msg: format!("requested degree {} exceeds M/2 = {}", n, m / 2),
        });
    }
    let rho = samples.radius;
    if !(rho > 0.0 && rho < 1.0) {
        return Err(Error::InvalidParam { name: "samples.radius", msg: format!("{} not in (0, 1)", rho) });
    }
    let max_val = samples.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let noise_floor = f64::EPSILON * max_val * (m as f64).sqrt();
    let amplified = noise_floor * (-(n as f64) * rho.ln()).exp();
    if amplified > tol {
        return Err(Error::IllConditioned { amplified, tol });
    }
    let mut buf = samples.values.clone();
    fft::forward(&mut buf);
    let inv_m = 1.0 / m as f64;
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut scale = 1.0;
    for item in buf.iter().take(n + 1) {
        coeffs.push(item * inv_m * scale);
        scale /= rho;
    }
    let window_start = n / 2;
    let c_max = coeffs[window_start..]
        .iter()
        .map(|c| c.norm())
        .fold(0.0, f64::max)
        .max(amplified)
        * 2.0;
    let tail = tail_from_flat_majorant(c_max, n, tol.max(amplified));
    AnalyticFunction::truncated(coeffs, tail)
}

/// Largest radius (bisected) at which `tail_at` stays below tol.
pub(crate) fn largest_radius(tail_at: impl Fn(f64) -> f64, tol: f64) -> TailBound {
    let hi_cap = 1.0 - 2f64.powi(-44);
    let v = tail_at(hi_cap);
    if v.is_finite() && v <= tol {
        return TailBound { radius: hi_cap, sup: v };
    }
    let mut lo = 0.0;
    let mut hi = hi_cap;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let t = tail_at(mid);
        if t.is_finite() && t <= tol {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    TailBound { radius: lo.max(2f64.powi(-44)), sup: tail_at(lo).min(tol) }
}

/// Tail bound under the model |c_k| <= c_max for k > n.
pub(crate) fn tail_from_flat_majorant(c_max: f64, n: usize, tol: f64) -> TailBound {
    largest_radius(
        |r| {
            if r >= 1.0 {
                return f64::INFINITY;
            }
            c_max * r.powi(n as i32 + 1) / (1.0 - r)
        },
        tol,
    )
}

/// Truncated reciprocal 1/p of a series with p(0) != 0, by Newton doubling.
/// The output tail bound is estimated from the last decade of coefficients.
///
/// Newton squares its own error each doubling, so for series whose
/// coefficient mass does not decay (a pole hugging the unit circle) the
/// iteration can leave its contraction basin; the final residual check
/// turns that into an error instead of a silently wrong series. Callers
/// dividing by a polynomial should prefer [`polynomial_reciprocal`].
pub fn series_reciprocal(p: &AnalyticFunction, degree: usize, tail_tol: f64) -> Result<AnalyticFunction> {
    let p0 = p.coeff(0);
    if p0.norm() == 0.0 {
        return Err(Error::ZeroConstantTerm);
    }
    let mut b = AnalyticFunction::from_coeffs(vec![C64::new(1.0, 0.0) / p0]);
    let mut len = 1usize;
    let two = AnalyticFunction::constant(C64::new(2.0, 0.0));
    while len <= degree {
        len *= 2;
        let p_trunc = AnalyticFunction::from_coeffs(
            p.coeffs().iter().take(len.min(p.coeffs().len())).copied().collect(),
        );
        let pb = truncate_coeffs(&cauchy_product(&p_trunc, &b), len - 1);
        let corr = two.sub(&pb);
        b = truncate_coeffs(&cauchy_product(&b, &corr), len - 1);
    }
    let mut coeffs: Vec<C64> = b.coeffs().iter().take(degree + 1).copied().collect();
    coeffs.resize(degree + 1, C64::new(0.0, 0.0));
    let b_poly = AnalyticFunction::from_coeffs(coeffs.clone());
    let p_poly = truncate_coeffs(p, degree);
    let residual = cauchy_product(&p_poly, &b_poly)
        .coeffs()
        .iter()
        .take(degree + 1)
        .enumerate()
        .map(|(k, c)| if k == 0 { (c - C64::new(1.0, 0.0)).norm() } else { c.norm() })
        .fold(0.0, f64::max);
    let b_sup = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let bound = 1e-7 * (1.0 + b_sup);
    if residual > bound {
        return Err(Error::IllConditioned { amplified: residual, tol: bound });
    }
    let c_max = coeffs[degree / 2..].iter().map(|c| c.norm()).fold(0.0, f64::max).max(1e-300) * 2.0;
    let tail = tail_from_flat_majorant(c_max, degree, tail_tol);
    AnalyticFunction::truncated(coeffs, tail)
}

/// Truncated reciprocal 1/p of a polynomial with p(0) != 0, by the long
/// division recurrence b_n = -(1/p_0) sum p_k b_{n-k}. Costs
/// O(degree * deg p) and, unlike Newton doubling, never amplifies its own
/// roundoff; accuracy is set by how far p's zeros stay from the closed disk.
pub fn polynomial_reciprocal(
    p: &AnalyticFunction,
    degree: usize,
    tail_tol: f64,
) -> Result<AnalyticFunction> {
    let p0 = p.coeff(0);
    if p0.norm() == 0.0 {
        return Err(Error::ZeroConstantTerm);
    }
    let inv_p0 = C64::new(1.0, 0.0) / p0;
    let dp = p.degree();
    let mut coeffs = vec![C64::new(0.0, 0.0); degree + 1];
    coeffs[0] = inv_p0;
    for n in 1..=degree {
        let mut acc = C64::new(0.0, 0.0);
        for k in 1..=dp.min(n) {
            acc += p.coeff(k) * coeffs[n - k];
        }
        coeffs[n] = -inv_p0 * acc;
    }
    let c_max = coeffs[degree / 2..].iter().map(|c| c.norm()).fold(0.0, f64::max).max(1e-300) * 2.0;
    let tail = tail_from_flat_majorant(c_max, degree, tail_tol);
    AnalyticFunction::truncated(coeffs, tail)
}

fn truncate_coeffs(f: &AnalyticFunction, degree: usize) -> AnalyticFunction {
    AnalyticFunction::from_coeffs(f.coeffs().iter().take(degree + 1).copied().collect())
}

/// Truncation of (1 - b z)^{-s} for |b| <= 1, s > 0, via the stable ratio
/// recurrence c_{k+1} = c_k (k+s)/(k+1) b. The tail bound is certified against
/// the geometric majorant of the ratio sequence.
pub fn inverse_power(b: C64, s: f64, degree: usize, tail_tol: f64) -> Result<AnalyticFunction> {
    if !(s > 0.0) {
        return Err(Error::InvalidParam { name: "s", msg: format!("exponent must be positive, got {}", s) });
    }
    if b.norm() > 1.0 + 1e-12 {
        return Err(Error::InvalidParam { name: "b", msg: format!("|b| = {} exceeds 1", b.norm()) });
    }
    let mut coeffs = Vec::with_capacity(degree + 1);
    let mut c = C64::new(1.0, 0.0);
    for k in 0..=degree {
        coeffs.push(c);
        c = c * ((k as f64 + s) / (k as f64 + 1.0)) * b;
    }
    let abs_next = c.norm();
    let beta = b.norm();
    let n1 = degree as f64 + 1.0;
    let tail_at = |r: f64| {
        let rho = beta * r * (n1 + s) / (n1 + 1.0);
        if rho >= 1.0 {
            return f64::INFINITY;
        }
        abs_next * r.powf(n1) / (1.0 - rho)
    };
    let tail = largest_radius(tail_at, tail_tol);
    AnalyticFunction::truncated(coeffs, tail)
}

/// Truncation of 1/(1-z).
pub fn geometric_series(degree: usize, tail_tol: f64) -> AnalyticFunction {
    inverse_power(C64::new(1.0, 0.0), 1.0, degree, tail_tol).unwrap()
}

/// Truncation of log(1/(1-z)) = sum z^k / k.
pub fn log_reciprocal(degree: usize, tail_tol: f64) -> AnalyticFunction {
    let mut coeffs = vec![C64::new(0.0, 0.0); degree + 1];
    for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
        *slot = C64::new(1.0 / k as f64, 0.0);
    }
    let n1 = degree as f64 + 1.0;
    let tail = largest_radius(
        |r| {
            if r >= 1.0 {
                return f64::INFINITY;
            }
            r.powf(n1) / (n1 * (1.0 - r))
        },
        tail_tol,
    );
    AnalyticFunction::truncated(coeffs, tail).unwrap()
}

/// Truncation of log(1+z) = sum (-1)^{k+1} z^k / k.
pub fn log_one_plus(degree: usize, tail_tol: f64) -> AnalyticFunction {
    let mut f = log_reciprocal(degree, tail_tol);
    let mut sign = 1.0;
    let coeffs: Vec<C64> = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            if k == 0 {
                return c;
            }
            let out = c * sign;
            sign = -sign;
            out
        })
        .collect();
    f.coeffs = coeffs;
    f
}
