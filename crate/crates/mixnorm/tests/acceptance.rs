//! End-to-end acceptance suite. Each test exercises one advertised behavior
//! of the toolkit at its stated tolerance and prints a single PASS/FAIL line
//! (visible with --nocapture); calibrated constants come from the fixture
//! written by `mixnorm calibrate`.

use std::path::Path;
use std::time::Instant;

use mixnorm::constructions::{
    gn_poly, lacunary_embed, obstruction_fn, HnApprox, HnDiffMap, HnResidualMap, LacunaryParams,
    XnuSum,
};
use mixnorm::norms::{
    integral_mean, integral_mean_quadrature, little_oh_profile, mixed_norm, mixed_norm_map,
    parseval_mean, CircleMap, Decay, RadialGrid, SpaceParams,
};
use mixnorm::operators::{
    compose_polynomial, composition_norm_bound, exp_membership, polynomial_family, tg_classify,
    Membership, TgVerdict,
};
use mixnorm::semigroup::{
    arc_decay, continuity_probe, default_t_grid, flow, generator_recovery, koenigs_residual,
    maximal_subspace_classify, DwPoint, GeneratorSpec, Herglotz, MaxSubspace,
};
use mixnorm::series::{geometric_series, log_reciprocal, AnalyticFunction};
use mixnorm::C64;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

struct Criterion {
    name: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(name: &'static str) -> Self {
        Criterion { name, failures: Vec::new() }
    }

    fn check(&mut self, label: &str, ok: bool) {
        if !ok {
            self.failures.push(label.to_string());
        }
    }

    fn finish(self) {
        let ok = self.failures.is_empty();
        println!("acceptance {}: {}", self.name, if ok { "PASS" } else { "FAIL" });
        assert!(ok, "{} failed: {}", self.name, self.failures.join("; "));
    }
}

fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * (rng.next_u64() as f64 / u64::MAX as f64)
}

/// Degree-6 self-map with prescribed constant term and boundary sup.
fn random_self_map(rng: &mut ChaCha8Rng, c0: C64, target: f64) -> AnalyticFunction {
    let mut coeffs = vec![C64::new(0.0, 0.0)];
    for _ in 1..=6 {
        coeffs.push(C64::new(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)));
    }
    let tail = AnalyticFunction::from_coeffs(coeffs);
    let sup = integral_mean(&tail, 1.0, f64::INFINITY).unwrap();
    assert!(sup > 0.0, "degenerate self-map draw");
    let scaled = tail.scale(C64::new((target - c0.norm()) / sup, 0.0));
    scaled.add(&AnalyticFunction::constant(c0))
}

fn fixture() -> toml::Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/calibration.toml");
    let text = std::fs::read_to_string(&path)
        .expect("calibration fixture missing; run `mixnorm calibrate` first");
    text.parse::<toml::Value>().expect("fixture is not valid TOML")
}

fn fixture_f64(v: &toml::Value, table: &str, key: &str) -> f64 {
    let cell = &v[table][key];
    cell.as_float().or_else(|| cell.as_integer().map(|n| n as f64)).unwrap()
}

fn rel_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1e-300)
}

#[test]
fn acceptance_01_fejer_block_norms() {
    let start = Instant::now();
    let mut c = Criterion::new("01 fejer block norms");
    for n in [4usize, 16, 64] {
        let g = gn_poly(n);
        let nf = n as f64;
        let h1 = integral_mean(&g, 1.0, 1.0).unwrap();
        c.check(&format!("N={} H1 norm is 1", n), (h1 - 1.0).abs() <= 1e-8);
        let hinf = integral_mean(&g, 1.0, f64::INFINITY).unwrap();
        c.check(&format!("N={} Hinf norm is N", n), (hinf - nf).abs() <= 1e-8);
        let mass: C64 = g.coeffs().iter().sum();
        c.check(&format!("N={} coefficient mass is N", n), (mass - C64::new(nf, 0.0)).norm() <= 1e-12);
        let support = (0..=g.degree())
            .all(|k| (g.coeff(k).norm() > 0.0) == ((n + 1)..=(3 * n - 1)).contains(&k));
        c.check(&format!("N={} support fills its window", n), support);
        let h2_closed = ((2.0 * nf * nf + 1.0) / (3.0 * nf)).sqrt();
        let h2_parseval = parseval_mean(&g, 1.0);
        let h2_quad = integral_mean_quadrature(&g, 1.0, 2.0).unwrap();
        c.check(&format!("N={} H2 by coefficients", n), (h2_parseval - h2_closed).abs() <= 1e-10);
        c.check(&format!("N={} H2 by quadrature", n), (h2_quad - h2_closed).abs() <= 1e-10);
        c.check(&format!("N={} H2 route agreement", n), (h2_parseval - h2_quad).abs() <= 1e-8);
        for p in [2.0f64, 4.0] {
            let hp = integral_mean(&g, 1.0, p).unwrap();
            c.check(
                &format!("N={} Hp growth cap at p={}", n, p),
                hp <= nf.powf(1.0 - 1.0 / p) * (1.0 + 1e-9),
            );
        }
    }
    c.check("runtime under 5 s", start.elapsed().as_secs_f64() < 5.0);
    c.finish();
}

fn monomial_closed_form(n: usize, q: f64, alpha: f64) -> f64 {
    let nf = n as f64;
    if q.is_infinite() {
        if n == 0 {
            1.0
        } else {
            alpha.powf(alpha) * nf.powf(nf) / (nf + alpha).powf(nf + alpha)
        }
    } else {
        (alpha * q * statrs::function::beta::beta(alpha * q, nf * q + 1.0)).powf(1.0 / q)
    }
}

#[test]
fn acceptance_02_monomial_norm_closed_forms() {
    let mut c = Criterion::new("02 monomial norm closed forms");
    for &alpha in &[0.5, 1.0, 2.0] {
        for &q in &[1.0, 2.0, f64::INFINITY] {
            let sp = SpaceParams::new(2.0, q, alpha).unwrap();
            for n in 0..=8usize {
                let norm = mixed_norm(&AnalyticFunction::monomial(n), &sp).unwrap();
                let closed = monomial_closed_form(n, q, alpha);
                c.check(
                    &format!("n={} q={} alpha={}: {} vs {}", n, q, alpha, norm, closed),
                    rel_eq(norm, closed, 1e-8),
                );
            }
            let unit = mixed_norm(&AnalyticFunction::one(), &sp).unwrap();
            c.check(&format!("unit norm q={} alpha={}", q, alpha), (unit - 1.0).abs() <= 1e-8);
        }
    }
    c.finish();
}

#[test]
fn acceptance_03_subordination_and_composition_bounds() {
    let start = Instant::now();
    let mut c = Criterion::new("03 subordination and composition bounds");
    let grid = RadialGrid::standard(1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(12);

    let fs = polynomial_family(200, 8, 0.7, 11);
    let mut worst = 0.0f64;
    for f in &fs {
        let target = uniform(&mut rng, 0.5, 0.95);
        let phi = random_self_map(&mut rng, C64::new(0.0, 0.0), target);
        let comp = compose_polynomial(f, &phi, f.degree() * phi.degree()).unwrap();
        for &r in &grid.radii {
            let lhs = integral_mean(&comp, r, 2.0).unwrap();
            let rhs = integral_mean(f, r, 2.0).unwrap();
            worst = worst.max(lhs / rhs);
        }
    }
    c.check(
        &format!("origin-fixing symbols leave means dominated (worst {})", worst),
        worst <= 1.0 + 1e-9,
    );

    let sp = SpaceParams::sup_scale(2.0, 1.0).unwrap();
    let fs = polynomial_family(100, 8, 0.7, 13);
    let mut worst_margin = 0.0f64;
    for f in &fs {
        let c0 = C64::new(uniform(&mut rng, 0.1, 0.5), uniform(&mut rng, -0.3, 0.3));
        let target = uniform(&mut rng, c0.norm() + 0.15, 0.85);
        let phi = random_self_map(&mut rng, c0, target);
        let comp = compose_polynomial(f, &phi, f.degree() * phi.degree()).unwrap();
        let ratio = mixed_norm(&comp, &sp).unwrap() / mixed_norm(f, &sp).unwrap();
        let bound = composition_norm_bound(&phi, &sp).unwrap();
        worst_margin = worst_margin.max(ratio / bound);
    }
    c.check(
        &format!("general symbols within the norm bound (worst margin {})", worst_margin),
        worst_margin <= 1.0 + 1e-9,
    );
    c.check("runtime under 60 s", start.elapsed().as_secs_f64() < 60.0);
    c.finish();
}

fn catalog() -> Vec<(&'static str, GeneratorSpec)> {
    vec![
        ("dilation", GeneratorSpec::dilation(C64::new(1.0, 0.0)).unwrap()),
        ("interior one-minus-z", GeneratorSpec::new(DwPoint::Interior, Herglotz::OneMinusZ).unwrap()),
        (
            "boundary const",
            GeneratorSpec::new(DwPoint::Boundary, Herglotz::Const(C64::new(1.0, 0.0))).unwrap(),
        ),
    ]
}

#[test]
fn acceptance_04_flow_fidelity() {
    let mut c = Criterion::new("04 flow fidelity");
    let ts: Vec<f64> = (0..=8).map(|k| 0.25 * k as f64).collect();
    let zs: Vec<C64> = [0.3, 0.6, 0.9]
        .iter()
        .flat_map(|&m| (0..8).map(move |j| C64::from_polar(m, j as f64 * std::f64::consts::PI / 4.0)))
        .collect();
    let caps = [1e-10, 1e-8, 1e-8];
    for ((name, spec), cap) in catalog().into_iter().zip(caps) {
        let closed = spec.closed_flow.clone().expect("catalog spec has a closed flow");
        let mut worst = 0.0f64;
        for &t in &ts {
            for &z in &zs {
                let num = flow(&spec, t, z, 1e-12).unwrap().z_t;
                worst = worst.max((num - closed.eval(t, z)).norm());
            }
        }
        c.check(&format!("{} closed-form agreement ({:.3e})", name, worst), worst < cap);
    }

    let mut specs = catalog();
    specs.push((
        "user boundary",
        GeneratorSpec::new(
            DwPoint::Boundary,
            Herglotz::User(AnalyticFunction::from_real_coeffs(&[1.0, 0.5])),
        )
        .unwrap(),
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut worst = 0.0f64;
    for (_, spec) in &specs {
        for _ in 0..10 {
            let s = uniform(&mut rng, 0.0, 1.0);
            let t = uniform(&mut rng, 0.0, 1.0);
            let z = C64::from_polar(uniform(&mut rng, 0.0, 0.8), uniform(&mut rng, 0.0, 6.28));
            let step = flow(spec, t, z, 1e-12).unwrap().z_t;
            let lhs = flow(spec, s, step, 1e-12).unwrap().z_t;
            let rhs = flow(spec, s + t, z, 1e-12).unwrap().z_t;
            worst = worst.max((lhs - rhs).norm());
        }
    }
    c.check(&format!("semiflow law residual ({:.3e})", worst), worst < 1e-8);

    let mut koenigs_specs = catalog();
    koenigs_specs
        .push(("interior cayley", GeneratorSpec::new(DwPoint::Interior, Herglotz::Cayley).unwrap()));
    let mut worst = 0.0f64;
    for (_, spec) in &koenigs_specs {
        for &t in &[0.1, 0.6, 1.7] {
            for j in 0..5 {
                let z = C64::from_polar(0.15 * (j as f64 + 1.0), 1.1 * j as f64);
                worst = worst.max(koenigs_residual(spec, t, z, 1e-12).unwrap());
            }
        }
    }
    c.check(&format!("Koenigs functional equations ({:.3e})", worst), worst < 1e-8);

    let rec_ts: Vec<f64> = (0..=8).map(|k| 1e-2 * 10f64.powf(-(k as f64) / 4.0)).collect();
    for (name, spec) in &catalog() {
        for &z in &[C64::new(0.4, 0.0), C64::new(-0.2, 0.45)] {
            let rep = generator_recovery(spec, z, &rec_ts).unwrap();
            c.check(&format!("{} recovery order at {} ({:.3})", name, z, rep.order), rep.order >= 0.9);
        }
    }
    c.finish();
}

#[test]
fn acceptance_05_strong_continuity_on_integral_scales() {
    let mut c = Criterion::new("05 strong continuity on integral scales");
    let sp = SpaceParams::new(2.0, 2.0, 1.0).unwrap();
    let family = polynomial_family(10, 5, 0.4, 7);
    let ts = default_t_grid(1e-1, 1e-4);
    let milli = ts
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - 1e-3).abs().partial_cmp(&(b.1 - 1e-3).abs()).unwrap())
        .map(|(i, _)| i)
        .unwrap();
    for (name, spec) in &catalog() {
        for (j, f) in family.iter().enumerate() {
            let rep = continuity_probe(spec, f, &sp, &ts).unwrap();
            c.check(&format!("{} poly {} orbit decays", name, j), rep.verdict == Decay::Decays);
            c.check(
                &format!("{} poly {} small at t=1e-3 ({:.3e})", name, j, rep.values[milli] / rep.norm_f),
                rep.values[milli] < 1e-3 * rep.norm_f,
            );
        }
    }
    c.finish();
}

#[test]
fn acceptance_06_sup_scale_obstruction() {
    let mut c = Criterion::new("06 sup scale obstruction");
    let fix = fixture();
    let floor = fixture_f64(&fix, "continuity", "obstruction_floor");
    let sp = SpaceParams::sup_scale(2.0, 1.0).unwrap();

    let f = obstruction_fn(0.0, 1.0, 2.0, 1 << 14).unwrap();
    let norm = mixed_norm(&f, &sp).unwrap();
    c.check(&format!("finite norm ({})", norm), norm.is_finite() && norm > 0.0);
    let little = little_oh_profile(&f, 2.0, 1.0).unwrap();
    c.check("weighted profile persists", little.verdict == Decay::Persists);
    let arc = arc_decay(&f, 0.0, 2.0, 1.0, &RadialGrid::standard(f.max_radius())).unwrap();
    c.check("arc mass persists", arc.verdict == Decay::Persists);

    let f_probe = obstruction_fn(0.0, 1.0, 2.0, 1 << 20).unwrap();
    let spec = GeneratorSpec::dilation(C64::new(1.0, 0.0)).unwrap();
    let probe = continuity_probe(&spec, &f_probe, &sp, &default_t_grid(1e-1, 1e-4)).unwrap();
    let min_ratio =
        probe.values.iter().map(|v| v / probe.norm_f).fold(f64::MAX, f64::min);
    c.check(&format!("dilation probe floor ({:.4})", min_ratio), min_ratio >= 0.1);
    c.check(
        &format!("probe matches calibration ({} vs {})", min_ratio, floor),
        (min_ratio - floor).abs() <= 1e-12,
    );
    c.finish();
}

#[test]
fn acceptance_07_maximal_subspace_classification() {
    let mut c = Criterion::new("07 maximal subspace classification");
    let sp = SpaceParams::sup_scale(2.0, 1.0).unwrap();

    let dilation = GeneratorSpec::dilation(C64::new(1.0, 0.0)).unwrap();
    let rep = maximal_subspace_classify(&dilation, &sp, 256).unwrap();
    c.check("dilation keeps the little-oh space", rep.verdict == MaxSubspace::LittleOhSpace);

    let cayley = GeneratorSpec::new(DwPoint::Interior, Herglotz::Cayley).unwrap();
    let rep = maximal_subspace_classify(&cayley, &sp, 1 << 16).unwrap();
    c.check("cayley is non-separable", rep.verdict == MaxSubspace::NonSeparable);
    let bloch = &rep.gamma_bloch;
    let idx = bloch
        .radii
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - 0.999).abs().partial_cmp(&(b.1 - 0.999).abs()).unwrap())
        .map(|(i, _)| i)
        .unwrap();
    c.check(&format!("profile grid reaches 0.999 ({})", bloch.radii[idx]), (bloch.radii[idx] - 0.999).abs() < 5e-4);
    c.check(
        &format!("gamma profile near 4 at r=0.999 ({})", bloch.profile[idx]),
        (bloch.profile[idx] - 4.0).abs() <= 0.05,
    );

    let boundary =
        GeneratorSpec::new(DwPoint::Boundary, Herglotz::Const(C64::new(1.0, 0.0))).unwrap();
    let rep = maximal_subspace_classify(&boundary, &sp, 256).unwrap();
    c.check("boundary const is non-separable", rep.verdict == MaxSubspace::NonSeparable);
    c.finish();
}

#[test]
fn acceptance_08_integration_operator_classifier() {
    let mut c = Criterion::new("08 integration operator classifier");
    let rep = tg_classify(&AnalyticFunction::monomial(1)).unwrap();
    c.check("g = z is compact", rep.verdict == TgVerdict::Compact);

    let rep = tg_classify(&log_reciprocal(1 << 16, 1e-7)).unwrap();
    c.check("logarithmic g bounded, not compact", rep.verdict == TgVerdict::BoundedNotCompact);
    c.check(
        &format!("logarithmic Bloch seminorm is 2 ({})", rep.bloch.seminorm),
        (rep.bloch.seminorm - 2.0).abs() <= 0.02,
    );

    let rep = tg_classify(&geometric_series(1 << 16, 1e-7)).unwrap();
    c.check("pole symbol unbounded", rep.verdict == TgVerdict::Unbounded);
    c.finish();
}

fn sign_patterns(len: usize) -> impl Iterator<Item = Vec<C64>> {
    (0u32..1 << len).map(move |mask| {
        (0..len)
            .map(|i| C64::new(if mask >> i & 1 == 1 { -1.0 } else { 1.0 }, 0.0))
            .collect()
    })
}

struct Sweep {
    per_min: Vec<f64>,
    per_max: Vec<f64>,
}

impl Sweep {
    fn lower(&self) -> f64 {
        self.per_min.iter().copied().fold(f64::MAX, f64::min)
    }

    fn upper(&self) -> f64 {
        self.per_max.iter().copied().fold(0.0, f64::max)
    }

    /// Largest relative step between consecutive lengths, skipping the move
    /// away from the single-block column when longer data exists.
    fn drift(&self) -> f64 {
        let skip = if self.per_min.len() > 2 { 1 } else { 0 };
        let mut d = 0.0f64;
        for series in [&self.per_min, &self.per_max] {
            for w in series[skip..].windows(2) {
                d = d.max((w[1] - w[0]).abs() / w[0]);
            }
        }
        d
    }
}

#[test]
fn acceptance_09_linfty_embedding_bounds() {
    let start = Instant::now();
    let mut c = Criterion::new("09 linfty embedding bounds");
    let fix = fixture();
    c.check("fixture block count", fixture_f64(&fix, "lacunary", "blocks") as usize == 5);
    c.check("fixture base", fixture_f64(&fix, "lacunary", "k_base") as usize == 10);

    let sp = SpaceParams::sup_scale(2.0, 1.0).unwrap();
    let params = LacunaryParams::for_space(&sp, 10, 5).unwrap();

    let disjoint = params.n_seq.windows(2).all(|w| 3 * w[0] - 1 < w[1] + 1);
    c.check("frequency windows disjoint", disjoint);
    let ones: Vec<C64> = vec![C64::new(1.0, 0.0); 5];
    let full = lacunary_embed(&ones, &params).unwrap();
    let support_exact = (0..=full.degree()).all(|k| {
        let inside = params.n_seq.iter().any(|&n| ((n + 1)..=(3 * n - 1)).contains(&k));
        (full.coeff(k).norm() > 0.0) == inside
    });
    c.check("embedded support matches the window union", support_exact);

    let mut sweep = Sweep { per_min: Vec::new(), per_max: Vec::new() };
    for len in 1..=5usize {
        let mut lo = f64::MAX;
        let mut hi = 0.0f64;
        for a in sign_patterns(len) {
            let norm = mixed_norm(&lacunary_embed(&a, &params).unwrap(), &sp).unwrap();
            lo = lo.min(norm);
            hi = hi.max(norm);
        }
        sweep.per_min.push(lo);
        sweep.per_max.push(hi);
    }
    let (lower, upper, drift) = (sweep.lower(), sweep.upper(), sweep.drift());
    c.check(&format!("two-sided bounds ({:.4} .. {:.4})", lower, upper), lower > 0.0 && upper.is_finite());
    c.check(
        "lower constant matches calibration",
        rel_eq(lower, fixture_f64(&fix, "lacunary", "lower"), 1e-9),
    );
    c.check(
        "upper constant matches calibration",
        rel_eq(upper, fixture_f64(&fix, "lacunary", "upper"), 1e-9),
    );
    c.check(&format!("ratio drift under 25% ({:.4})", drift), drift < 0.25);
    c.check("runtime under 120 s", start.elapsed().as_secs_f64() < 120.0);
    c.finish();
}

/// Pointwise absolute-value majorant of a binomial family sum.
struct AbsSum {
    terms: Vec<(f64, f64)>,
    beta: f64,
}

impl CircleMap for AbsSum {
    fn eval_map(&self, z: C64) -> C64 {
        let total: f64 = self
            .terms
            .iter()
            .map(|&(w, delta)| w * (C64::new(1.0 + delta, 0.0) - z).norm().powf(self.beta))
            .sum();
        C64::new(total, 0.0)
    }

    fn degree_hint(&self) -> usize {
        let delta_min = self.terms.iter().map(|&(_, d)| d).fold(1.0, f64::min);
        ((4.0 / delta_min) as usize).clamp(256, 1 << 17)
    }

    fn singular_angles(&self) -> Vec<f64> {
        vec![0.0]
    }
}

#[test]
fn acceptance_10_binomial_family_and_approximants() {
    let mut c = Criterion::new("10 binomial family and approximants");
    let fix = fixture();
    let sp = SpaceParams::sup_scale(2.0, 1.0).unwrap();
    let (nu, beta, k_base, blocks) =
        (fixture_f64(&fix, "xnu", "nu"), fixture_f64(&fix, "xnu", "beta"), 10usize, 5usize);

    let majorant = AbsSum {
        terms: (1..=blocks)
            .map(|l| {
                let delta = (k_base as f64).powi(-(l as i32));
                (delta.powf(nu), delta)
            })
            .collect(),
        beta,
    };
    let majorant_sup = mixed_norm_map(&majorant, &sp).unwrap();
    c.check(&format!("majorant bounded on the grid ({:.4})", majorant_sup), majorant_sup.is_finite());
    c.check(
        "majorant matches calibration",
        rel_eq(majorant_sup, fixture_f64(&fix, "xnu", "majorant_sup"), 1e-9),
    );

    let mut sweep = Sweep { per_min: Vec::new(), per_max: Vec::new() };
    for len in 1..=blocks {
        let mut lo = f64::MAX;
        let mut hi = 0.0f64;
        if len <= 4 {
            for a in sign_patterns(len) {
                let norm = mixed_norm_map(&XnuSum::assemble(&a, nu, beta, k_base), &sp).unwrap();
                lo = lo.min(norm);
                hi = hi.max(norm);
            }
        } else {
            for name in ["ones", "alternating"] {
                let a: Vec<C64> = (0..len)
                    .map(|i| {
                        let s = if name == "alternating" && i % 2 == 1 { -1.0 } else { 1.0 };
                        C64::new(s, 0.0)
                    })
                    .collect();
                let norm = mixed_norm_map(&XnuSum::assemble(&a, nu, beta, k_base), &sp).unwrap();
                lo = lo.min(norm);
                hi = hi.max(norm);
            }
        }
        sweep.per_min.push(lo);
        sweep.per_max.push(hi);
    }
    let (lower, upper, drift) = (sweep.lower(), sweep.upper(), sweep.drift());
    c.check(&format!("two-sided bounds ({:.4} .. {:.4})", lower, upper), lower > 0.0 && upper.is_finite());
    c.check("lower matches calibration", rel_eq(lower, fixture_f64(&fix, "xnu", "lower"), 1e-9));
    c.check("upper matches calibration", rel_eq(upper, fixture_f64(&fix, "xnu", "upper"), 1e-9));
    c.check(
        "majorant dominates the signed sums",
        fixture_f64(&fix, "xnu", "majorant_sup") >= upper * (1.0 - 1e-12),
    );
    c.check(&format!("ratio drift under 25% ({:.4})", drift), drift < 0.25);

    let f = XnuSum::assemble(&[C64::new(1.0, 0.0), C64::new(-1.0, 0.0)], nu, beta, k_base);
    let spec =
        GeneratorSpec::new(DwPoint::Boundary, Herglotz::Const(C64::new(1.0, 0.0))).unwrap();
    let ns = [10.0, 100.0, 1000.0, 10000.0];
    let mut diffs = Vec::new();
    for &n in &ns {
        let h = HnApprox::new(&f, &spec, 0.5, n).unwrap();
        let d = mixed_norm_map(&HnDiffMap(&h), &sp).unwrap();
        let r = mixed_norm_map(&HnResidualMap(&h), &sp).unwrap();
        c.check(&format!("n={} membership residual finite ({:.4})", n, r), r.is_finite());
        diffs.push(d);
    }
    c.check(
        &format!("approximation error decreasing ({:?})", diffs),
        diffs.windows(2).all(|w| w[1] < w[0]),
    );
    c.check(
        &format!("final error a tenth of initial ({:.3e} vs {:.3e})", diffs[3], diffs[0]),
        diffs[3] <= 0.1 * diffs[0],
    );
    c.finish();
}

#[test]
fn acceptance_11_exponential_membership() {
    let mut c = Criterion::new("11 exponential membership");
    let log_g = log_reciprocal(1 << 15, 1e-9);
    let z = AnalyticFunction::monomial(1);
    for &alpha in &[0.25, 0.5, 1.0] {
        let table = exp_membership(&log_g, 1.0, alpha, &[1.0, 2.0, 4.0]).unwrap();
        for (p, rep) in &table.rows {
            let expect_finite = alpha + 1e-12 >= 1.0 - 1.0 / p;
            c.check(
                &format!("log symbol p={} alpha={} ({:?})", p, alpha, rep.verdict),
                (rep.verdict == Membership::Finite) == expect_finite,
            );
        }
        let table = exp_membership(&z, 1.0, alpha, &[1.0, 2.0, 4.0]).unwrap();
        for (p, rep) in &table.rows {
            c.check(
                &format!("bounded symbol p={} alpha={}", p, alpha),
                rep.verdict == Membership::Finite,
            );
        }
    }
    c.finish();
}
