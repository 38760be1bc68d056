//! Property tests for the series kernel: algebraic identities that must hold
//! coefficientwise and pointwise for arbitrary short polynomials.

use mixnorm::series::{
    cauchy_product, circle_samples, differentiate, dilate, reexpand_from_samples,
    truncate_series, volterra_primitive, AnalyticFunction,
};
use mixnorm::C64;
use proptest::prelude::*;

fn coeffs_strategy(max_len: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..max_len)
        .prop_map(|v| v.into_iter().map(|(re, im)| C64::new(re, im)).collect())
}

fn poly_strategy(max_len: usize) -> impl Strategy<Value = AnalyticFunction> {
    coeffs_strategy(max_len).prop_map(AnalyticFunction::from_coeffs)
}

fn disk_point() -> impl Strategy<Value = C64> {
    (0.0f64..0.95, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| C64::from_polar(r, t))
}

proptest! {
    #[test]
    fn product_evaluates_pointwise(f in poly_strategy(16), g in poly_strategy(16), z in disk_point()) {
        let fg = cauchy_product(&f, &g);
        let lhs = fg.eval(z).unwrap();
        let rhs = f.eval(z).unwrap() * g.eval(z).unwrap();
        let scale = 1.0 + lhs.norm().max(rhs.norm());
        prop_assert!((lhs - rhs).norm() < 1e-11 * scale);
    }

    #[test]
    fn product_distributes_over_sums(
        f in poly_strategy(12),
        g in poly_strategy(12),
        h in poly_strategy(12),
    ) {
        let lhs = cauchy_product(&f.add(&g), &h);
        let rhs = cauchy_product(&f, &h).add(&cauchy_product(&g, &h));
        for k in 0..=lhs.degree().max(rhs.degree()) {
            prop_assert!((lhs.coeff(k) - rhs.coeff(k)).norm() < 1e-12);
        }
    }

    #[test]
    fn derivative_inverts_primitive(f in poly_strategy(20)) {
        let back = differentiate(&volterra_primitive(&f));
        for k in 0..=f.degree() {
            prop_assert!((back.coeff(k) - f.coeff(k)).norm() < 1e-13);
        }
    }

    #[test]
    fn primitive_vanishes_at_origin_and_integrates(f in poly_strategy(20), z in disk_point()) {
        let vf = volterra_primitive(&f);
        prop_assert_eq!(vf.coeff(0), C64::new(0.0, 0.0));
        // d/dz V f = f pointwise as well.
        let h = 1e-6;
        let fd = (vf.eval(z + C64::new(h, 0.0)).unwrap()
            - vf.eval(z - C64::new(h, 0.0)).unwrap())
            / (2.0 * h);
        prop_assert!((fd - f.eval(z).unwrap()).norm() < 1e-6 * (1.0 + fd.norm()));
    }

    #[test]
    fn dilation_is_composition_with_rz(f in poly_strategy(16), r in 0.0f64..1.0, z in disk_point()) {
        let fr = dilate(&f, r).unwrap();
        let lhs = fr.eval(z).unwrap();
        let rhs = f.eval(z * r).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-12 * (1.0 + rhs.norm()));
    }

    #[test]
    fn circle_samples_match_direct_evaluation(f in poly_strategy(12), r in 0.1f64..0.99) {
        let m = 64usize;
        let samples = circle_samples(&f, r, m).unwrap();
        for (j, v) in samples.values.iter().enumerate().step_by(7) {
            let z = C64::from_polar(r, std::f64::consts::TAU * j as f64 / m as f64);
            let direct = f.eval(z).unwrap();
            prop_assert!((v - direct).norm() < 1e-10 * (1.0 + direct.norm()));
        }
    }

    #[test]
    fn reexpansion_round_trips_polynomials(f in poly_strategy(12), r in 0.5f64..0.9) {
        let m = 128usize;
        let samples = circle_samples(&f, r, m).unwrap();
        let back = reexpand_from_samples(&samples, f.degree(), 1e-6).unwrap();
        for k in 0..=f.degree() {
            prop_assert!((back.coeff(k) - f.coeff(k)).norm() < 1e-8);
        }
    }

    #[test]
    fn truncation_error_stays_within_tail_bound(f in poly_strategy(24), z in disk_point()) {
        let cut = truncate_series(&f, 6);
        if let Some(t) = cut.tail_bound() {
            if z.norm() <= t.radius {
                let err = (f.eval(z).unwrap() - cut.eval(z).unwrap()).norm();
                prop_assert!(err <= t.sup * (1.0 + 1e-12) + 1e-15);
            }
        }
    }
}
