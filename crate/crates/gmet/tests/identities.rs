//! Derivative-identity, signature, determinant, periodicity and
//! pullback suites for the time-periodic catalog family.

#![allow(clippy::needless_range_loop)]

use gmet::analysis::{
    congruence_diagonal, det_closed_form, principal_minors, signature_at,
};
use gmet::catalog::{
    self, g00_bound_check, helpers_at, periodicity_check, property1_residuals, pullback_audit,
    sample_points, TimePeriodicParams, IDENTITY_BANDS,
};
use gmet::chart::Point4;

const PARAM_GRID: [TimePeriodicParams; 4] = [
    TimePeriodicParams { eps: 0.05, m: 1.0 },
    TimePeriodicParams { eps: 0.1, m: 1.0 },
    TimePeriodicParams { eps: 0.1, m: 2.0 },
    TimePeriodicParams { eps: -0.1, m: 0.5 },
];

#[test]
fn identity_residuals_on_thousand_points_per_param_set() {
    for p in PARAM_GRID {
        let spec = catalog::time_periodic_polar(&p);
        let params = p.to_map();
        let points = sample_points(&spec, &params, 1000, 42, &IDENTITY_BANDS);
        let mut worst = 0.0f64;
        for point in points {
            let res = property1_residuals(&p, point).unwrap();
            let (name, value) = res.worst();
            assert!(
                value.abs() <= 1e-10,
                "eps {} m {}: `{name}` = {value} at {point:?}",
                p.eps,
                p.m
            );
            worst = worst.max(value.abs());
        }
        assert!(worst > 0.0, "degenerate residuals");
    }
}

#[test]
fn omega_quadratic_identity_along_theta() {
    // (Ω⁺)² − (Ω⁻)² = 4 is algebraic; checked across the open interval
    let p = TimePeriodicParams { eps: 0.1, m: 1.0 };
    for i in 1..200 {
        let theta = std::f64::consts::PI * i as f64 / 200.0;
        let f = helpers_at(&p, Point4::new(0.0, 3.0, theta, 0.0)).unwrap();
        let value = f.omega_plus * f.omega_plus - f.omega_minus * f.omega_minus;
        assert!((value - 4.0).abs() <= 1e-10, "theta {theta}: {value}");
        // M and Q are recomputable from Ω±
        assert!((f.m - f.omega_plus * theta.sin()).abs() <= 1e-12);
        assert!((f.q + 0.5 * (1.0 + 2.0 * theta.sin()) * f.omega_minus).abs() <= 1e-12);
    }
}

#[test]
fn g00_stays_above_amplitude_bound() {
    for eps in [0.0, 0.05, -0.05, 0.1, -0.1, 0.124, -0.124] {
        let p = TimePeriodicParams { eps, m: 1.0 };
        let min = g00_bound_check(&p, 10_000, 42);
        let bound = 1.0 - 8.0 * eps.abs() - 1e-12;
        assert!(min >= bound, "eps {eps}: min G = {min} < {bound}");
    }
}

#[test]
fn exact_time_periodicity_at_sampled_points() {
    for p in PARAM_GRID {
        let spec = catalog::time_periodic_polar(&p);
        let params = p.to_map();
        for point in sample_points(&spec, &params, 200, 7, &IDENTITY_BANDS) {
            let d = periodicity_check(&spec, &params, point).unwrap();
            assert!(d <= 1e-12, "eps {} m {} at {point:?}: {d}", p.eps, p.m);
        }
    }
}

#[test]
fn determinant_matches_closed_form_on_thousand_points() {
    let p = TimePeriodicParams { eps: 0.1, m: 1.0 };
    let spec = catalog::time_periodic_polar(&p);
    let params = p.to_map();
    for point in sample_points(&spec, &params, 1000, 42, &IDENTITY_BANDS) {
        let mv = gmet::geometry::metric_at(&spec, &params, point).unwrap();
        let closed = det_closed_form(&p, point).unwrap();
        let rel = (mv.det - closed).abs() / (1.0 + closed.abs());
        assert!(rel <= 1e-10, "{point:?}: det {} vs {closed}", mv.det);
        // the compact form −M²K⁴r² sin²θ/(r−m)² is the same number
        let f = helpers_at(&p, point).unwrap();
        let r = point.0[1];
        let sin_th = point.0[2].sin();
        let compact =
            -f.m * f.m * f.k.powi(4) * r * r * sin_th * sin_th / ((r - p.m) * (r - p.m));
        assert!((mv.det - compact).abs() / (1.0 + compact.abs()) <= 1e-10);
    }
}

#[test]
fn minors_match_closed_forms_and_signature_is_lorentzian() {
    for p in PARAM_GRID {
        let spec = catalog::time_periodic_polar(&p);
        let params = p.to_map();
        for point in sample_points(&spec, &params, 250, 42, &IDENTITY_BANDS) {
            let report = principal_minors(&spec, &params, point).unwrap();
            let closed = report.closed_form.expect("polar closed forms");
            for k in 1..4 {
                let rel = (report.minors[k] - closed[k]).abs() / (1.0 + closed[k].abs());
                assert!(rel <= 1e-10, "minor {} at {point:?}: rel {rel}", k + 1);
            }
            let sig = signature_at(&spec, &params, point).unwrap();
            assert_eq!(sig.lorentzian, Some(true), "{point:?}");
            assert_eq!(sig.eigen_signs, [1, -1, -1, -1], "{point:?}");
        }
    }
}

#[test]
fn congruence_entries_product_and_sylvester_signs() {
    for p in PARAM_GRID {
        let spec = catalog::time_periodic_polar(&p);
        let params = p.to_map();
        for point in sample_points(&spec, &params, 100, 42, &IDENTITY_BANDS) {
            let diag = congruence_diagonal(&spec, &params, point).unwrap();
            let closed = diag.closed_form.expect("polar closed forms");
            for k in 0..4 {
                let rel = (diag.entries[k] - closed[k]).abs() / (1.0 + closed[k].abs());
                assert!(rel <= 1e-10, "entry {k} at {point:?}: rel {rel}");
            }
            let mv = gmet::geometry::metric_at(&spec, &params, point).unwrap();
            let rel = (diag.product() - mv.det).abs() / (1.0 + mv.det.abs());
            assert!(rel <= 1e-10, "product vs det at {point:?}");
            let sig = signature_at(&spec, &params, point).unwrap();
            let mut diag_signs = diag.signs();
            let mut eigen_signs = sig.eigen_signs;
            diag_signs.sort_unstable();
            eigen_signs.sort_unstable();
            assert_eq!(diag_signs, eigen_signs, "Sylvester at {point:?}");
        }
    }
}

#[test]
fn tilde_and_polar_zero_patterns() {
    let p = TimePeriodicParams::default();
    let polar = catalog::time_periodic_polar(&p);
    for (mu, nu) in [(0, 3), (1, 3), (2, 3)] {
        assert!(polar.is_structurally_zero(mu, nu));
    }
    let tilde = catalog::time_periodic_tilde(&p).unwrap();
    assert!(tilde.is_structurally_zero(1, 1));
    assert!(tilde.shape().type1);
}

#[test]
fn pullback_discrepancy_is_reported_not_asserted() {
    let p = TimePeriodicParams { eps: 0.1, m: 1.0 };
    // reference point: the angular (2,2) entry compares −K² against −S²
    let audit = pullback_audit(&p, Point4::new(0.3, 0.5, std::f64::consts::FRAC_PI_2, 0.0)).unwrap();
    let s = 0.3 + 0.5 + 0.1 * 0.3f64.sin();
    let f = helpers_at(&p, audit.polar_point).unwrap();
    assert!((audit.discrepancy[2][2] - (-f.k * f.k + s * s)).abs() <= 1e-12);
    // symmetric output
    for i in 0..4 {
        for j in 0..4 {
            assert!((audit.discrepancy[i][j] - audit.discrepancy[j][i]).abs() <= 1e-12);
        }
    }
    // ε = 0: the comparison still runs and still reports a mismatch
    let p0 = TimePeriodicParams { eps: 0.0, m: 1.0 };
    let audit0 = pullback_audit(&p0, Point4::new(0.3, 0.5, 1.1, 0.0)).unwrap();
    assert!(audit0.max_abs.is_finite());
    assert!(audit0.max_abs > 1.0, "charts differ even at eps = 0");
}
