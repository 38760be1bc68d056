//! Operators acting on truncated series: composition C_phi, pointwise
//! multiplication, the Volterra-type integral operator T_g f = int_0^z f g'
//! and its companion, conformal shifts of a symbol, sampled exponentials with
//! membership tables, empirical operator-norm lower bounds over test
//! families, and the Bloch-based boundedness classifier for T_g.

use crate::constructions::growth_test_fn;
use crate::norms::{
    bloch_report, integral_mean, inv_exp, mixed_norm, BlochReport, CircleMap, RadialGrid,
    SpaceParams,
};
use crate::quad::ls_slope;
use crate::series::{
    cauchy_product, circle_samples, differentiate, reexpand_from_samples, tail_from_flat_majorant,
    volterra_primitive, AnalyticFunction, TailBound,
};
use crate::{unit_f64, Error, Result, C64};
use rand_core::SeedableRng;

/// T_g f = int_0^z f(w) g'(w) dw.
pub fn volterra_op(g: &AnalyticFunction, f: &AnalyticFunction) -> AnalyticFunction {
    volterra_primitive(&multiply(&differentiate(g), f))
}

/// Companion S_g f = int_0^z f'(w) g(w) dw; together with multiplication,
/// M_g f = T_g f + S_g f + f(0) g(0).
pub fn companion_op(g: &AnalyticFunction, f: &AnalyticFunction) -> AnalyticFunction {
    volterra_primitive(&cauchy_product(&differentiate(f), g))
}

/// Pointwise multiplication M_g f = g f.
pub fn multiply(g: &AnalyticFunction, f: &AnalyticFunction) -> AnalyticFunction {
    cauchy_product(g, f)
}

/// Supremum of |phi| over the largest certified circle.
pub fn self_map_sup(phi: &AnalyticFunction) -> Result<f64> {
    let r = phi.max_radius();
    let mut sup = integral_mean(phi, r, f64::INFINITY)?;
    if let Some(t) = phi.tail_bound() {
        sup += t.sup;
    }
    Ok(sup)
}

/// Error unless |phi| <= 1 + 1e-9 on its certified circle.
pub fn ensure_self_map(phi: &AnalyticFunction) -> Result<f64> {
    let sup = self_map_sup(phi)?;
    if sup > 1.0 + 1e-9 {
        return Err(Error::NotSelfMap { sup });
    }
    Ok(sup)
}

/// Disk automorphism (a - z)/(1 - conj(a) z) as a truncated series with a
/// certified geometric tail.
pub fn disk_automorphism(a: C64, degree: usize) -> Result<AnalyticFunction> {
    let r = a.norm();
    if r >= 1.0 {
        return Err(Error::OutsideDisk { z: a });
    }
    let mut coeffs = vec![C64::new(0.0, 0.0); degree + 1];
    coeffs[0] = a;
    let head = 1.0 - r * r;
    let ac = a.conj();
    let mut pw = C64::new(1.0, 0.0);
    for c in coeffs.iter_mut().skip(1) {
        *c = -head * pw;
        pw *= ac;
    }
    if r == 0.0 {
        return Ok(AnalyticFunction::from_coeffs(coeffs));
    }
    let radius = 1.0 - 2f64.powi(-44);
    let sup = head * r.powi(degree as i32) / (1.0 - r * radius);
    AnalyticFunction::truncated(coeffs, TailBound { radius, sup })
}

/// Composition f(phi(z)) by coefficient Horner recursion, truncated to
/// `degree`. Exact when both inputs are polynomials and `degree` is at least
/// deg(f) * deg(phi), which makes it the reference oracle for the sampled
/// routes below.
pub fn compose_polynomial(
    f: &AnalyticFunction,
    phi: &AnalyticFunction,
    degree: usize,
) -> Result<AnalyticFunction> {
    if phi.eval_unchecked(C64::new(0.0, 0.0)).norm() >= 1.0 {
        return Err(Error::NotSelfMap { sup: phi.coeff(0).norm() });
    }
    let n = f.degree();
    let mut acc = AnalyticFunction::constant(f.coeff(n));
    for k in (0..n).rev() {
        let prod = cauchy_product(&acc, phi);
        let truncated: Vec<C64> =
            prod.coeffs().iter().take(degree + 1).copied().collect();
        acc = AnalyticFunction::from_coeffs(truncated);
        acc = acc.add(&AnalyticFunction::constant(f.coeff(k)));
    }
    Ok(acc)
}

/// Composition via circle sampling at `radius` and re-expansion to `degree`
/// coefficients. `tol` bounds the tolerated noise amplification.
pub fn compose_sampled(
    f: &AnalyticFunction,
    phi: &AnalyticFunction,
    radius: f64,
    degree: usize,
    tol: f64,
) -> Result<AnalyticFunction> {
    let hint = (f.degree().max(1)).saturating_mul(phi.degree().max(1));
    let m = (4 * hint.min(1 << 18) + 4).max(4096).next_power_of_two();
    let inner = circle_samples(phi, radius, m)?;
    let fr = f.max_radius();
    let mut values = Vec::with_capacity(m);
    for w in &inner.values {
        let w = if w.norm() > fr { w * (fr / w.norm()) } else { *w };
        values.push(f.eval_unchecked(w));
    }
    let samples = crate::series::CircleSamples { radius, values };
    reexpand_from_samples(&samples, degree, tol)
}

/// f(phi(z)) as a point-evaluated map, for norm computations that need no
/// coefficient representation.
pub struct CompositionMap<'a> {
    outer: &'a AnalyticFunction,
    inner: &'a AnalyticFunction,
    radius: f64,
    hint: usize,
}

impl<'a> CompositionMap<'a> {
    pub fn new(outer: &'a AnalyticFunction, inner: &'a AnalyticFunction) -> Result<Self> {
        // A hint, not a resolution bound: angular sampling doubles past it
        // until the mean stabilizes, so cap it to keep the first pass cheap.
        let hint = (outer.degree().max(1)).saturating_mul(inner.degree().max(1)).min(1 << 12);
        let radius = if outer.is_polynomial() {
            inner.max_radius()
        } else {
            // Largest r with sup_{|z|=r} |phi| within the certified radius of f.
            let target = outer.max_radius();
            let sup =
                |r: f64| integral_mean(inner, r, f64::INFINITY).unwrap_or(f64::INFINITY);
            if sup(inner.max_radius()) <= target {
                inner.max_radius()
            } else {
                let (mut lo, mut hi) = (0.0, inner.max_radius());
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    if sup(mid) <= target {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                lo
            }
        };
        if radius <= 0.0 {
            return Err(Error::NotSelfMap { sup: inner.coeff(0).norm() });
        }
        Ok(Self { outer, inner, radius, hint })
    }
}

impl CircleMap for CompositionMap<'_> {
    fn eval_map(&self, z: C64) -> C64 {
        let w = self.inner.eval_unchecked(z);
        let fr = self.outer.max_radius();
        let w = if w.norm() > fr { w * (fr / w.norm()) } else { w };
        self.outer.eval_unchecked(w)
    }

    fn degree_hint(&self) -> usize {
        self.hint
    }

    fn max_radius(&self) -> f64 {
        self.radius
    }
}

/// The shifted symbol g_zeta(z) = g(phi_zeta(z)) - g(zeta), with the Moebius
/// map phi_zeta(z) = (z + zeta)/(1 + conj(zeta) z), as a pointwise evaluator.
/// The shift vanishes at the origin; its certified circle keeps phi_zeta
/// inside the certified radius of g.
pub struct ConformalShift<'a> {
    g: &'a AnalyticFunction,
    zeta: C64,
    base: C64,
    radius: f64,
    hint: usize,
}

pub fn conformal_shift(g: &AnalyticFunction, zeta: C64) -> Result<ConformalShift<'_>> {
    if zeta.norm() >= 1.0 {
        return Err(Error::OutsideDisk { z: zeta });
    }
    let base = g.eval(zeta)?;
    let a = zeta.norm();
    let gm = g.max_radius();
    // sup_{|z|=R} |phi_zeta(z)| = (R + a)/(1 + a R), so R below keeps the
    // composed argument within gm.
    let radius = if gm >= 1.0 { 1.0 } else { ((gm - a) / (1.0 - a * gm)).max(0.0) };
    let hint = (4 * g.degree()).clamp(128, 1 << 14);
    Ok(ConformalShift { g, zeta, base, radius, hint })
}

impl ConformalShift<'_> {
    pub fn mobius(&self, z: C64) -> C64 {
        (z + self.zeta) / (C64::new(1.0, 0.0) + self.zeta.conj() * z)
    }
}

impl CircleMap for ConformalShift<'_> {
    fn eval_map(&self, z: C64) -> C64 {
        let w = self.mobius(z);
        let gm = self.g.max_radius();
        let w = if w.norm() > gm { w * (gm / w.norm()) } else { w };
        self.g.eval_unchecked(w) - self.base
    }

    fn degree_hint(&self) -> usize {
        self.hint
    }

    fn max_radius(&self) -> f64 {
        self.radius
    }
}

/// Upper bound for the norm of C_phi on H(p,q,alpha) from the subordination
/// chain, with a = |phi(0)| rescaled by the sup of |phi|:
/// ((1+a)/(1-a))^e ((3+a)/(1-a))^{1/p} where e = max(alpha - 1/q, 0) + 1/q,
/// so e = alpha on the sup scale and whenever alpha q >= 1.
pub fn composition_norm_bound(phi: &AnalyticFunction, sp: &SpaceParams) -> Result<f64> {
    let sup = ensure_self_map(phi)?;
    let m = sup.min(1.0);
    let a = phi.coeff(0).norm();
    if m - a < 1e-12 {
        return Err(Error::DegenerateSymbol);
    }
    Ok(chain_constant(a / m, sp))
}

fn chain_constant(a: f64, sp: &SpaceParams) -> f64 {
    let iq = inv_exp(sp.q);
    let e = (sp.alpha - iq).max(0.0) + iq;
    ((1.0 + a) / (1.0 - a)).powf(e) * ((3.0 + a) / (1.0 - a)).powf(inv_exp(sp.p))
}

/// Test family for operator-norm probing: point-mass growth functions on a
/// radius grid, monomials, and seeded random polynomials.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub growth_radii: Vec<f64>,
    pub monomial_degrees: Vec<usize>,
    pub random_count: usize,
    pub random_degree: usize,
    pub damping: f64,
}

impl FamilySpec {
    pub fn standard() -> Self {
        Self {
            growth_radii: vec![0.0, 0.3, 0.6, 0.9, 0.99],
            monomial_degrees: vec![0, 1, 2, 4, 8, 16, 32, 64],
            random_count: 8,
            random_degree: 32,
            damping: 0.7,
        }
    }

    /// Trimmed family for quick checks: short polynomials only.
    pub fn light() -> Self {
        Self {
            growth_radii: vec![0.0, 0.6],
            monomial_degrees: vec![0, 1, 4],
            random_count: 3,
            random_degree: 8,
            damping: 0.5,
        }
    }
}

/// Deterministic random polynomials: c_0 = 1 and c_k uniform in the square
/// [-1, 1]^2 scaled by damping^k.
pub fn polynomial_family(
    count: usize,
    degree: usize,
    damping: f64,
    seed: u64,
) -> Vec<AnalyticFunction> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut family = Vec::with_capacity(count);
    for _ in 0..count {
        let mut coeffs = Vec::with_capacity(degree + 1);
        coeffs.push(C64::new(1.0, 0.0));
        let mut scale = 1.0;
        for _ in 1..=degree {
            scale *= damping;
            let re = crate::uniform_f64(&mut rng, -1.0, 1.0) * scale;
            let im = crate::uniform_f64(&mut rng, -1.0, 1.0) * scale;
            coeffs.push(C64::new(re, im));
        }
        family.push(AnalyticFunction::from_coeffs(coeffs));
    }
    let _ = unit_f64(&mut rng);
    family
}

/// Materializes the family with a label for each member. Growth functions
/// take their exponent alpha + 1/p from the space the probe runs in.
pub fn test_family(
    spec: &FamilySpec,
    sp: &SpaceParams,
    seed: u64,
) -> Result<Vec<(String, AnalyticFunction)>> {
    let mut out = Vec::new();
    for &x in &spec.growth_radii {
        let degree = ((48.0 / (1.0 - x).max(1e-6)).ceil() as usize + 64).min(1 << 16);
        let f = growth_test_fn(C64::new(x, 0.0), sp.alpha, sp.p, degree)?;
        out.push((format!("growth point {}", x), f));
    }
    for &n in &spec.monomial_degrees {
        out.push((format!("monomial z^{}", n), AnalyticFunction::monomial(n)));
    }
    let randoms = polynomial_family(spec.random_count, spec.random_degree, spec.damping, seed);
    for (i, f) in randoms.into_iter().enumerate() {
        out.push((format!("random polynomial {}", i), f));
    }
    Ok(out)
}

/// Empirical lower bound sup ||T f|| / ||f|| over a labeled test family.
#[derive(Debug, Clone)]
pub struct OperatorNormEstimate {
    pub lower_bound: f64,
    pub witness: String,
    pub family_size: usize,
    pub upper_bound: Option<f64>,
}

/// The handle returns the norm of T f in the target space, so operators that
/// only exist as pointwise evaluators fit without a coefficient form.
pub fn op_norm_lower(
    op: &mut dyn FnMut(&AnalyticFunction) -> Result<f64>,
    sp: &SpaceParams,
    family: &FamilySpec,
    seed: u64,
) -> Result<OperatorNormEstimate> {
    let members = test_family(family, sp, seed)?;
    let family_size = members.len();
    let mut best: Option<(String, f64)> = None;
    for (label, f) in members {
        let denom = mixed_norm(&f, sp)?;
        if denom <= 1e-300 {
            continue;
        }
        let ratio = op(&f)? / denom;
        if best.as_ref().map_or(true, |(_, b)| ratio > *b) {
            best = Some((label, ratio));
        }
    }
    let (witness, lower_bound) =
        best.ok_or(Error::WitnessNotFound("test family norms all vanish"))?;
    Ok(OperatorNormEstimate { lower_bound, witness, family_size, upper_bound: None })
}

/// Boundedness class of T_g on H(p,q,alpha), decided by the Bloch type of g.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TgVerdict {
    Compact,
    BoundedNotCompact,
    Unbounded,
    Inconclusive,
}

impl std::fmt::Display for TgVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TgVerdict::Compact => "COMPACT",
            TgVerdict::BoundedNotCompact => "BOUNDED_NOT_COMPACT",
            TgVerdict::Unbounded => "UNBOUNDED",
            TgVerdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone)]
pub struct TgReport {
    pub bloch: BlochReport,
    pub verdict: TgVerdict,
}

/// T_g is bounded iff g is Bloch and compact iff g is little Bloch,
/// uniformly in (p, q, alpha).
pub fn tg_classify(g: &AnalyticFunction) -> Result<TgReport> {
    let bloch = bloch_report(g)?;
    let verdict = match bloch.class {
        crate::norms::BlochClass::LittleBloch => TgVerdict::Compact,
        crate::norms::BlochClass::BlochOnly => TgVerdict::BoundedNotCompact,
        crate::norms::BlochClass::NotBloch => TgVerdict::Unbounded,
        crate::norms::BlochClass::Inconclusive => TgVerdict::Inconclusive,
    };
    Ok(TgReport { bloch, verdict })
}

/// Exponential exp(g) of a polynomial or short truncation, via the
/// derivative recurrence (k+1) u_{k+1} = sum_j (j+1) g_{j+1} u_{k-j}.
pub fn exponential_of(g: &AnalyticFunction, degree: usize) -> Result<AnalyticFunction> {
    if degree > 1 << 14 {
        return Err(Error::InvalidParam {
            name: "degree",
            msg: format!("exponential recurrence capped at {}, got {}", 1 << 14, degree),
        });
    }
    let gp: Vec<C64> = (0..g.degree())
        .map(|j| g.coeff(j + 1) * (j + 1) as f64)
        .collect();
    let mut u = vec![C64::new(0.0, 0.0); degree + 1];
    u[0] = g.coeff(0).exp();
    for k in 0..degree {
        let mut s = C64::new(0.0, 0.0);
        for (j, gj) in gp.iter().enumerate().take(k + 1) {
            s += gj * u[k - j];
        }
        u[k + 1] = s / (k + 1) as f64;
    }
    if g.is_polynomial() && g.degree() <= 1 {
        // exp of a linear polynomial is entire with factorially small tail.
        let c_max = u.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let t = tail_from_flat_majorant(c_max * 1e-6, degree, 1e-30);
        return AnalyticFunction::truncated(u, t);
    }
    let window: Vec<f64> =
        u[degree / 2..].iter().map(|c| c.norm()).collect();
    let c_max = window.iter().copied().fold(0.0, f64::max);
    if c_max <= 1e-300 {
        return Ok(AnalyticFunction::from_coeffs(u));
    }
    let t = tail_from_flat_majorant(2.0 * c_max, degree, 1e-9);
    AnalyticFunction::truncated(u, t)
}

/// Membership verdict for a function presented by its truncated series:
/// FINITE when the weighted profile stays bounded, INFINITE when it grows
/// like a negative power of (1-r).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Finite,
    Infinite,
}

impl std::fmt::Display for Membership {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Membership::Finite => "FINITE",
            Membership::Infinite => "INFINITE",
        })
    }
}

#[derive(Debug, Clone)]
pub struct MembershipReport {
    pub us: Vec<f64>,
    pub weighted: Vec<f64>,
    pub slope: f64,
    pub verdict: Membership,
    pub sup_weighted: f64,
}

/// Decides membership of f in H(p,infinity,alpha) from the log-log slope of
/// the weighted profile over the last third of the radial grid: slope at or
/// below -0.05 means the profile diverges like (1-r)^{slope}.
pub fn sup_membership(f: &AnalyticFunction, sp: &SpaceParams) -> Result<MembershipReport> {
    let grid = RadialGrid::standard(f.max_radius());
    let mut weighted = Vec::with_capacity(grid.len());
    for (&r, &u) in grid.radii.iter().zip(&grid.us) {
        weighted.push(u.powf(sp.alpha) * integral_mean(f, r, sp.p)?);
    }
    let n = grid.len();
    let start = (2 * n) / 3;
    let xs: Vec<f64> = grid.us[start..].iter().map(|u| u.ln()).collect();
    let ys: Vec<f64> = weighted[start..].iter().map(|v| v.max(1e-300).ln()).collect();
    let slope = if xs.len() >= 2 { ls_slope(&xs, &ys) } else { 0.0 };
    let verdict = if slope <= -0.05 { Membership::Infinite } else { Membership::Finite };
    let sup_weighted = weighted.iter().copied().fold(0.0, f64::max);
    Ok(MembershipReport { us: grid.us, weighted, slope, verdict, sup_weighted })
}

/// exp(s g) from circle samples on the largest certified radius of g,
/// exponentiated pointwise and re-expanded to a truncation with a certified
/// tail. Avoids the coefficient recurrence, whose terms can cancel badly for
/// symbols with large boundary values.
pub fn sampled_exponential(g: &AnalyticFunction, s: f64) -> Result<AnalyticFunction> {
    let degree = 4096usize;
    let rho = g.max_radius().min(0.998);
    let m = (2 * degree + 2)
        .max(2 * g.degree() + 2)
        .max(4096)
        .next_power_of_two();
    let inner = circle_samples(g, rho, m)?;
    let mut max_val = 0.0f64;
    let mut values = Vec::with_capacity(m);
    for w in &inner.values {
        let v = (s * w).exp();
        if !v.norm().is_finite() {
            return Err(Error::NonConvergence { context: "sampled exponential overflowed" });
        }
        max_val = max_val.max(v.norm());
        values.push(v);
    }
    let samples = crate::series::CircleSamples { radius: rho, values };
    reexpand_from_samples(&samples, degree, 1e-8 * max_val.max(1e-12))
}

/// Membership of e^{s g} in H(p,infinity,alpha), one row per p.
#[derive(Debug, Clone)]
pub struct MembershipTable {
    pub s: f64,
    pub alpha: f64,
    pub rows: Vec<(f64, MembershipReport)>,
}

pub fn exp_membership(
    g: &AnalyticFunction,
    s: f64,
    alpha: f64,
    p_grid: &[f64],
) -> Result<MembershipTable> {
    if !(s > 0.0) {
        return Err(Error::InvalidParam {
            name: "s",
            msg: format!("exponential scale must be positive, got {}", s),
        });
    }
    let esg = sampled_exponential(g, s)?;
    let mut rows = Vec::with_capacity(p_grid.len());
    for &p in p_grid {
        let sp = SpaceParams::sup_scale(p, alpha)?;
        rows.push((p, sup_membership(&esg, &sp)?));
    }
    Ok(MembershipTable { s, alpha, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::{integral_mean_map, mixed_norm_map};
    use crate::series::geometric_series;

    #[test]
    fn volterra_of_constant_symbol_is_zero() {
        let g = AnalyticFunction::constant(C64::new(3.0, 0.0));
        let f = AnalyticFunction::from_real_coeffs(&[1.0, 2.0]);
        let out = volterra_op(&g, &f);
        assert!(out.coeffs().iter().all(|c| c.norm() == 0.0));
    }

    #[test]
    fn volterra_plus_companion_is_multiplication() {
        let g = AnalyticFunction::from_real_coeffs(&[0.5, -1.0, 2.0]);
        let f = AnalyticFunction::from_real_coeffs(&[1.0, 3.0, 0.0, -2.0]);
        let lhs = volterra_op(&g, &f)
            .add(&companion_op(&g, &f))
            .add(&AnalyticFunction::constant(f.coeff(0) * g.coeff(0)));
        let rhs = multiply(&g, &f);
        for k in 0..=rhs.degree() {
            assert!((lhs.coeff(k) - rhs.coeff(k)).norm() < 1e-12, "k = {}", k);
        }
    }

    #[test]
    fn automorphism_is_a_self_map_and_involution() {
        let a = C64::new(0.4, 0.3);
        let phi = disk_automorphism(a, 512).unwrap();
        let sup = self_map_sup(&phi).unwrap();
        assert!(sup <= 1.0 + 1e-6, "{}", sup);
        // phi(phi(z)) = z
        let z = C64::new(0.35, -0.2);
        let w = phi.eval(z).unwrap();
        let back = phi.eval(w).unwrap();
        assert!((back - z).norm() < 1e-8);
    }

    #[test]
    fn coefficient_and_sampled_composition_agree() {
        let f = AnalyticFunction::from_real_coeffs(&[1.0, -0.5, 0.25, 0.125]);
        let phi = AnalyticFunction::from_real_coeffs(&[0.1, 0.0, 0.6]);
        let exact = compose_polynomial(&f, &phi, 6).unwrap();
        let sampled = compose_sampled(&f, &phi, 0.9, 6, 1e-3).unwrap();
        for k in 0..=6 {
            assert!(
                (exact.coeff(k) - sampled.coeff(k)).norm() < 1e-9,
                "k = {}: {} vs {}",
                k,
                exact.coeff(k),
                sampled.coeff(k)
            );
        }
    }

    #[test]
    fn composition_map_matches_coefficient_composition() {
        let f = AnalyticFunction::from_real_coeffs(&[0.2, 1.0, -0.4, 0.7]);
        let phi = AnalyticFunction::from_real_coeffs(&[0.0, 0.45, 0.45]);
        let exact = compose_polynomial(&f, &phi, 9).unwrap();
        let map = CompositionMap::new(&f, &phi).unwrap();
        let a = integral_mean(&exact, 0.9, 2.0).unwrap();
        let b = integral_mean_map(&map, 0.9, 2.0).unwrap();
        assert!((a - b).abs() < 1e-9 * a.max(1.0));
        let sp = SpaceParams::new(2.0, f64::INFINITY, 1.0).unwrap();
        let na = mixed_norm(&exact, &sp).unwrap();
        let nb = mixed_norm_map(&map, &sp).unwrap();
        assert!((na - nb).abs() < 1e-8 * na);
    }

    #[test]
    fn subordination_for_zero_fixing_self_maps() {
        // phi(0) = 0 and |phi| <= 1 force M_p(r, f o phi) <= M_p(r, f).
        let f = AnalyticFunction::from_real_coeffs(&[0.3, 1.0, -0.7, 0.2, 0.5]);
        let phi = AnalyticFunction::from_real_coeffs(&[0.0, 0.5, 0.0, 0.5]);
        assert!(ensure_self_map(&phi).is_ok());
        let comp = compose_polynomial(&f, &phi, 12).unwrap();
        for r in [0.3, 0.6, 0.9, 0.99] {
            for p in [1.0, 2.0, f64::INFINITY] {
                let lhs = integral_mean(&comp, r, p).unwrap();
                let rhs = integral_mean(&f, r, p).unwrap();
                assert!(lhs <= rhs * (1.0 + 1e-9), "r = {}, p = {}: {} vs {}", r, p, lhs, rhs);
            }
        }
    }

    #[test]
    fn composition_bound_closed_form_value() {
        // phi = -(z + 0.5)/(1 + 0.5 z), so |phi(0)| = 0.5 and sup|phi| = 1:
        // the chain gives 3 sqrt(7) for alpha = 1, p = 2 on the sup scale.
        let phi = disk_automorphism(C64::new(-0.5, 0.0), 512).unwrap();
        let sp = SpaceParams::new(2.0, f64::INFINITY, 1.0).unwrap();
        let b = composition_norm_bound(&phi, &sp).unwrap();
        assert!((b - 3.0 * 7.0f64.sqrt()).abs() < 1e-9, "{}", b);
        // alpha q = 1 reproduces the same exponent.
        let sp1 = SpaceParams::new(2.0, 1.0, 1.0).unwrap();
        let b1 = composition_norm_bound(&phi, &sp1).unwrap();
        assert!((b1 - b).abs() < 1e-9);
        // Constant symbols are degenerate.
        let c = AnalyticFunction::constant(C64::new(0.5, 0.0));
        assert!(matches!(composition_norm_bound(&c, &sp), Err(Error::DegenerateSymbol)));
    }

    #[test]
    fn family_is_deterministic_and_damped() {
        let a = polynomial_family(4, 5, 0.25, 7);
        let b = polynomial_family(4, 5, 0.25, 7);
        for (f, g) in a.iter().zip(&b) {
            for k in 0..=f.degree() {
                assert_eq!(f.coeff(k), g.coeff(k));
            }
        }
        assert!((a[0].coeff(0) - C64::new(1.0, 0.0)).norm() == 0.0);
        assert!(a[0].coeff(5).norm() <= 0.25f64.powi(5) * 1.5);
    }

    #[test]
    fn op_norm_lower_identity_is_one() {
        let sp = SpaceParams::new(2.0, f64::INFINITY, 1.0).unwrap();
        let sp_for_op = sp;
        let mut id = move |f: &AnalyticFunction| mixed_norm(f, &sp_for_op);
        let est = op_norm_lower(&mut id, &sp, &FamilySpec::light(), 3).unwrap();
        assert!((est.lower_bound - 1.0).abs() < 1e-9, "{}", est.lower_bound);
        assert_eq!(est.family_size, 8);
        assert!(est.upper_bound.is_none());
    }

    #[test]
    fn op_norm_of_origin_fixing_composition_is_one() {
        // phi(0) = 0 makes every ratio at most 1 by subordination, and the
        // constant member attains it.
        let phi = AnalyticFunction::from_real_coeffs(&[0.0, 0.6, 0.4]);
        let sp = SpaceParams::new(2.0, f64::INFINITY, 1.0).unwrap();
        let sp_for_op = sp;
        let phi_for_op = phi.clone();
        let mut c_phi = move |f: &AnalyticFunction| {
            let map = CompositionMap::new(f, &phi_for_op)?;
            mixed_norm_map(&map, &sp_for_op)
        };
        let est = op_norm_lower(&mut c_phi, &sp, &FamilySpec::light(), 11).unwrap();
        assert!(est.lower_bound <= 1.0 + 1e-6, "{}", est.lower_bound);
        assert!(est.lower_bound >= 1.0 - 1e-6, "{}", est.lower_bound);
    }

    #[test]
    fn conformal_shift_at_origin_recovers_centered_symbol() {
        let g = AnalyticFunction::from_real_coeffs(&[0.7, 1.0, -0.3, 0.2]);
        let sh = conformal_shift(&g, C64::new(0.0, 0.0)).unwrap();
        for z in [C64::new(0.3, 0.4), C64::new(-0.8, 0.1)] {
            let want = g.eval(z).unwrap() - g.coeff(0);
            assert!((sh.eval_map(z) - want).norm() < 1e-12);
        }
    }

    #[test]
    fn conformal_shift_vanishes_at_origin() {
        let g = AnalyticFunction::from_real_coeffs(&[0.4, -0.2, 0.9, 0.3]);
        for &(x, y) in &[(0.0, 0.0), (0.5, 0.0), (-0.3, 0.4), (0.0, -0.8)] {
            let sh = conformal_shift(&g, C64::new(x, y)).unwrap();
            assert!(sh.eval_map(C64::new(0.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn conformal_shift_derivative_identity() {
        // d/dz exp(g_zeta)(z) at z = 0 equals (1 - |zeta|^2) g'(zeta).
        let g = AnalyticFunction::from_real_coeffs(&[0.2, 0.5, 0.1, -0.4, 0.05]);
        let gp = differentiate(&g);
        for zeta in [C64::new(0.3, -0.2), C64::new(-0.5, 0.4), C64::new(0.0, 0.7)] {
            let sh = conformal_shift(&g, zeta).unwrap();
            let e = |x: f64| sh.eval_map(C64::new(x, 0.0)).exp();
            let h = 1e-5;
            let fd = (e(-2.0 * h) - e(2.0 * h) + 8.0 * (e(h) - e(-h))) / (12.0 * h);
            let want = (1.0 - zeta.norm_sqr()) * gp.eval(zeta).unwrap();
            assert!((fd - want).norm() < 1e-8 * (1.0 + want.norm()), "zeta = {}", zeta);
        }
    }

    #[test]
    fn tg_classification_of_catalog_symbols() {
        use crate::series::{log_reciprocal, geometric_series};
        let z = AnalyticFunction::monomial(1);
        assert_eq!(tg_classify(&z).unwrap().verdict, TgVerdict::Compact);
        let log = log_reciprocal(65536, 1e-9);
        assert_eq!(tg_classify(&log).unwrap().verdict, TgVerdict::BoundedNotCompact);
        let geo = geometric_series(65536, 1e-9);
        assert_eq!(tg_classify(&geo).unwrap().verdict, TgVerdict::Unbounded);
    }

    #[test]
    fn exponential_matches_known_series() {
        // exp(z): coefficients 1/k!
        let g = AnalyticFunction::monomial(1);
        let e = exponential_of(&g, 20).unwrap();
        let mut fact = 1.0;
        for k in 0..=20usize {
            if k > 0 {
                fact *= k as f64;
            }
            assert!((e.coeff(k) - C64::new(1.0 / fact, 0.0)).norm() < 1e-15, "k = {}", k);
        }
        // exp(log 1/(1-z)) = geometric series
        let log = crate::series::log_reciprocal(400, 1e-12);
        let e = exponential_of(&log, 200).unwrap();
        for k in [0usize, 1, 10, 100, 200] {
            assert!((e.coeff(k) - C64::new(1.0, 0.0)).norm() < 1e-10, "k = {}", k);
        }
    }

    #[test]
    fn membership_of_geometric_series_across_spaces() {
        // 1/(1-z) lies in H(p,inf,alpha) iff alpha + 1/p >= 1... the slope
        // test distinguishes alpha = 1 (finite at p >= 1) from alpha = 0.25,
        // p = 2 (infinite).
        let geo = geometric_series(1 << 16, 1e-9);
        let finite = SpaceParams::new(2.0, f64::INFINITY, 1.0).unwrap();
        let rep = sup_membership(&geo, &finite).unwrap();
        assert_eq!(rep.verdict, Membership::Finite, "slope {}", rep.slope);
        let infinite = SpaceParams::new(2.0, f64::INFINITY, 0.25).unwrap();
        let rep = sup_membership(&geo, &infinite).unwrap();
        assert_eq!(rep.verdict, Membership::Infinite, "slope {}", rep.slope);
    }

    #[test]
    fn exp_membership_log_symbol_oracle() {
        // e^g = 1/(1-z) with M_p growth (1-r)^{1/p-1}, so the weighted
        // profile stays bounded exactly when 1 - 1/p <= alpha.
        let log = crate::series::log_reciprocal(1 << 15, 1e-9);
        let table = exp_membership(&log, 1.0, 0.5, &[1.0, 2.0, 4.0]).unwrap();
        let verdicts: Vec<Membership> = table.rows.iter().map(|(_, r)| r.verdict).collect();
        assert_eq!(
            verdicts,
            vec![Membership::Finite, Membership::Finite, Membership::Infinite],
            "slopes: {:?}",
            table.rows.iter().map(|(_, r)| r.slope).collect::<Vec<_>>()
        );
    }

    #[test]
    fn exp_membership_bounded_symbol_finite_everywhere() {
        let z = AnalyticFunction::monomial(1);
        let table = exp_membership(&z, 1.0, 0.5, &[0.5, 1.0, 2.0, 6.0]).unwrap();
        for (p, rep) in &table.rows {
            assert_eq!(rep.verdict, Membership::Finite, "p = {}", p);
        }
        let zero = AnalyticFunction::zero();
        let table = exp_membership(&zero, 2.0, 1.0, &[2.0]).unwrap();
        assert_eq!(table.rows[0].1.verdict, Membership::Finite);
        assert!((table.rows[0].1.sup_weighted - 1.0).abs() < 1e-6);
    }
}
