use proptest::prelude::*;
use siam_core::quadrature::{simpson_integrate, trapezoid_integrate, SampledFunction, UniformGrid};
use siam_core::scenario::{burden_only, default_grid, Scenario};
use siam_core::{InstitutionPolicy, LogisticCurve, TechModel};

proptest! {
    #[test]
    fn logistic_midpoint_symmetry_monotonicity(
        slope in 0.01f64..10.0,
        midpoint in -20.0f64..20.0,
        d in 0.0f64..3.0,
        step in 1e-3f64..1.0,
    ) {
        let c = LogisticCurve::new(slope, midpoint).unwrap();
        prop_assert!((c.eval(midpoint) - 0.5).abs() <= 1e-12);
        prop_assert!((c.eval(midpoint + d) + c.eval(midpoint - d) - 1.0).abs() <= 1e-12);

        // stay where 1 - f is representable so strictness is observable
        let t = midpoint + d;
        let (a, b) = (c.eval(t), c.eval(t + step));
        prop_assert!(a < b, "f({}) = {} !< f({}) = {}", t, a, t + step, b);
        prop_assert!(a > 0.0 && b < 1.0);
    }

    #[test]
    fn institution_anchor_points(lag in 0.0f64..10.0, duration in 0.05f64..10.0) {
        let p = InstitutionPolicy::new(lag, duration).unwrap();
        let i = p.curve();
        prop_assert!((i.eval(lag) - 0.1).abs() <= 1e-12);
        prop_assert!((i.eval(lag + duration / 2.0) - 0.5).abs() <= 1e-12);
        prop_assert!((i.eval(lag + duration) - 0.9).abs() <= 1e-12);
    }

    #[test]
    fn inflection_moves_one_for_one_with_lag_and_half_with_duration(
        lag in 0.0f64..10.0,
        duration in 0.05f64..10.0,
        delta in 0.0f64..5.0,
    ) {
        let base = InstitutionPolicy::new(lag, duration).unwrap().inflection();
        let later = InstitutionPolicy::new(lag + delta, duration).unwrap().inflection();
        let longer = InstitutionPolicy::new(lag, duration + delta).unwrap().inflection();
        prop_assert!((later - base - delta).abs() <= 1e-12);
        prop_assert!((longer - base - delta / 2.0).abs() <= 1e-12);
    }

    #[test]
    fn tech_curve_never_exceeds_permeability(
        doubling in 0.05f64..10.0,
        alpha in 0.01f64..=1.0,
        t in -50.0f64..50.0,
    ) {
        let s = TechModel::new(doubling, alpha, 1.0).unwrap().curve();
        let v = s.eval(t);
        prop_assert!(v >= 0.0 && v <= alpha);
    }

    #[test]
    fn quadrature_is_linear(
        a in -5.0f64..5.0,
        b in -5.0f64..5.0,
        p in -3.0f64..3.0,
        q in 0.1f64..4.0,
        half_n in 1usize..200,
    ) {
        let grid = UniformGrid::new(0.0, 2.0, 2 * half_n + 1).unwrap();
        let f = |t: f64| (p * t).sin() + t * t;
        let g = |t: f64| (q * t).exp();
        let sf = SampledFunction::from_fn(grid, f).unwrap();
        let sg = SampledFunction::from_fn(grid, g).unwrap();
        let combo = SampledFunction::from_fn(grid, |t| a * f(t) + b * g(t)).unwrap();

        let scale = (a * simpson_integrate(&sf).unwrap()).abs()
            + (b * simpson_integrate(&sg).unwrap()).abs();
        let lhs = simpson_integrate(&combo).unwrap();
        let rhs = a * simpson_integrate(&sf).unwrap() + b * simpson_integrate(&sg).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * scale.max(1.0));

        let lhs = trapezoid_integrate(&combo);
        let rhs = a * trapezoid_integrate(&sf) + b * trapezoid_integrate(&sg);
        prop_assert!((lhs - rhs).abs() <= 1e-10 * scale.max(1.0));
    }

    #[test]
    fn simpson_exact_on_cubics(
        c in prop::array::uniform4(-10.0f64..10.0),
        lo in -3.0f64..0.0,
        width in 0.1f64..5.0,
        half_n in 1usize..50,
    ) {
        let hi = lo + width;
        let poly = |t: f64| c[0] + c[1] * t + c[2] * t * t + c[3] * t * t * t;
        let anti = |t: f64| c[0] * t + c[1] * t * t / 2.0 + c[2] * t.powi(3) / 3.0 + c[3] * t.powi(4) / 4.0;
        let exact = anti(hi) - anti(lo);
        let grid = UniformGrid::new(lo, hi, 2 * half_n + 1).unwrap();
        let got = simpson_integrate(&SampledFunction::from_fn(grid, poly).unwrap()).unwrap();
        // relative to the size of the terms being summed, not to a possibly cancelling total
        let scale = c.iter().map(|x| x.abs()).sum::<f64>() * width * (1.0 + lo.abs() + hi.abs()).powi(3);
        prop_assert!((got - exact).abs() <= 1e-12 * scale.max(exact.abs()));
    }
}

fn burden(doubling: f64, alpha: f64, lag: f64, duration: f64) -> f64 {
    let grid = UniformGrid::simpson(0.0, 15.0, 2001).unwrap();
    let tech = TechModel::new(doubling, alpha, 1.0).unwrap();
    let policy = InstitutionPolicy::new(lag, duration).unwrap();
    burden_only(&Scenario::new("p", tech, policy, grid).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    // A later start shifts I(t) right, so the gap grows pointwise for any parameters.
    #[test]
    fn burden_non_negative_and_monotone_in_lag(
        doubling in 0.2f64..3.0,
        alpha in 0.05f64..=1.0,
        lag in 0.0f64..4.0,
        duration in 0.1f64..4.0,
        delta in 0.01f64..1.0,
    ) {
        let h = burden(doubling, alpha, lag, duration);
        prop_assert!(h >= 0.0);
        prop_assert!(burden(doubling, alpha, lag + delta, duration) >= h);
    }

    // A longer rollout also raises I(t) before the lag point, so monotonicity in D only
    // holds once the gap is dominated by the post-lag region: full permeability and a lag
    // that is not tiny.
    #[test]
    fn burden_monotone_in_duration_at_full_pressure(
        doubling in 0.2f64..3.0,
        lag in 0.5f64..4.0,
        duration in 0.3f64..4.0,
        delta in 0.05f64..1.0,
    ) {
        let h = burden(doubling, 1.0, lag, duration);
        prop_assert!(burden(doubling, 1.0, lag, duration + delta) >= h - 1e-12);
    }
}

#[test]
fn longer_rollout_can_lower_burden_under_a_low_ceiling() {
    // counterexample found by the property above before it was restricted
    let (doubling, alpha, lag) = (2.507562337419252, 0.2, 3.6895866073298786);
    assert!(burden(doubling, alpha, lag, 0.35) < burden(doubling, alpha, lag, 0.3));
}

#[test]
fn default_grid_matches_canonical_settings() {
    let g = default_grid::<f64>();
    assert_eq!((g.t_start(), g.t_end(), g.n_points()), (0.0, 15.0, 10_001));
}
