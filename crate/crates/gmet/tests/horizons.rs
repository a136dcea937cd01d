//! Horizon-candidate extents, time slots and branch tracing, checked
//! against an independent bracketing oracle written in this file.

use gmet::analysis::{
    gamma_radial, gamma_radial_prime, horizon_extent, horizon_f, horizon_time_slots,
    trace_horizon_branch, ArcTag, Extent, HorizonCase, HorizonError,
};
use gmet::catalog::TimePeriodicParams;

use std::f64::consts::PI;

/// Plain midpoint bracketing, independent of the analysis module's root
/// finder: no polishing, no shared code path.
fn oracle_root(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    assert!(flo * f(hi) < 0.0, "oracle needs a sign change");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn p01() -> TimePeriodicParams {
    TimePeriodicParams { eps: 0.1, m: 1.0 }
}

// Frozen from the bracketing oracle below before being asserted against
// the implementation (they also match an external high-precision pass).
const R_MINUS: f64 = 0.3831831682082949;
const R_ZERO: f64 = 1.2573435021764574;
const R_PLUS: f64 = 1.3009178789305853;

#[test]
fn frozen_extents_reconfirmed_by_oracle() {
    let p = p01();
    let gamma = |r: f64| r + (r - 1.0f64).abs().ln();
    let r_minus = oracle_root(|r| gamma(r) + p.eps, 0.0, 0.9999);
    let r_zero = oracle_root(|r| gamma(r) + p.eps, 1.0001, 3.0);
    let r_plus = oracle_root(|r| gamma(r) - p.eps, 1.0001, 3.0);
    assert!((r_minus - R_MINUS).abs() <= 1e-6);
    assert!((r_zero - R_ZERO).abs() <= 1e-6);
    assert!((r_plus - R_PLUS).abs() <= 1e-6);
}

#[test]
fn extents_match_frozen_values() {
    let p = p01();
    let Extent::CaseI { r_minus } = horizon_extent(&p, HorizonCase::I).unwrap() else {
        unreachable!()
    };
    assert!((r_minus - R_MINUS).abs() <= 1e-6, "{r_minus}");
    let Extent::CaseII { r0, r_plus } = horizon_extent(&p, HorizonCase::II).unwrap() else {
        unreachable!()
    };
    assert!((r0 - R_ZERO).abs() <= 1e-6, "{r0}");
    assert!((r_plus - R_PLUS).abs() <= 1e-6, "{r_plus}");
    // the polished roots sit on the potential to machine precision
    assert!((gamma_radial(&p, r_minus) + p.eps).abs() <= 1e-14);
    assert!((gamma_radial(&p, r0) + p.eps).abs() <= 1e-13);
    assert!((gamma_radial(&p, r_plus) - p.eps).abs() <= 1e-13);
}

#[test]
fn unit_mass_slots_are_exact_multiples_of_two_pi() {
    let p = p01();
    for k in 0..3u32 {
        let t_k = horizon_time_slots(&p, k, HorizonCase::I).unwrap();
        assert_eq!(t_k, 2.0 * PI * k as f64);
        // f(0, t_k) vanishes up to the rounding of sin at 2kπ
        let f = horizon_f(&p, 0.0, t_k).unwrap();
        if k == 0 {
            assert_eq!(f, 0.0);
        } else {
            assert!(f.abs() <= 1e-15, "k = {k}: f = {f:e}");
        }
    }
}

#[test]
fn infeasible_case_reports_ratio() {
    let p = TimePeriodicParams { eps: 0.1, m: 1.2 };
    match horizon_time_slots(&p, 0, HorizonCase::I) {
        Err(HorizonError::Infeasible { ratio }) => {
            assert!((ratio.abs() - 2.1878586815274548).abs() <= 1e-12)
        }
        other => panic!("expected infeasible, got {other:?}"),
    }
    match trace_horizon_branch(&p, 0, HorizonCase::I, ArcTag::Principal, 8) {
        Err(HorizonError::Infeasible { .. }) => {}
        other => panic!("expected infeasible trace, got {other:?}"),
    }
}

#[test]
fn case_two_slots_and_arcs() {
    let p = p01();
    let t0 = horizon_time_slots(&p, 0, HorizonCase::II).unwrap();
    assert!((t0 - (R_ZERO + PI / 2.0)).abs() <= 1e-6);
    let t1 = horizon_time_slots(&p, 1, HorizonCase::II).unwrap();
    assert!((t1 - t0 - 2.0 * PI).abs() <= 1e-12);
}

#[test]
fn all_branch_samples_lie_on_the_zero_set() {
    let p = p01();
    for case in [HorizonCase::I, HorizonCase::II] {
        for arc in [ArcTag::Principal, ArcTag::Conjugate] {
            for k in 0..3u32 {
                let branch = trace_horizon_branch(&p, k, case, arc, 128).unwrap();
                assert_eq!(branch.samples.len(), 128);
                for s in &branch.samples {
                    assert!(
                        s.f_residual.abs() <= 1e-12,
                        "case {case} {arc} k{k}: |f({}, {})| = {:e}",
                        s.r,
                        s.t,
                        s.f_residual
                    );
                }
            }
        }
    }
}

#[test]
fn branch_endpoints_match_slot_times() {
    let p = p01();
    for k in 0..3u32 {
        let b = trace_horizon_branch(&p, k, HorizonCase::I, ArcTag::Principal, 32).unwrap();
        let t_k = horizon_time_slots(&p, k, HorizonCase::I).unwrap();
        assert!((b.slot_open - t_k).abs() <= 1e-10, "k = {k}");
        let Extent::CaseI { r_minus } = b.extent else { unreachable!() };
        let t_close = r_minus + PI / 2.0 + 2.0 * PI * k as f64;
        assert!((b.slot_close - t_close).abs() <= 1e-10, "k = {k}");
        let b2 = trace_horizon_branch(&p, k, HorizonCase::II, ArcTag::Conjugate, 32).unwrap();
        let t_k2 = horizon_time_slots(&p, k, HorizonCase::II).unwrap();
        assert!((b2.slot_open - t_k2).abs() <= 1e-10, "case II k = {k}");
    }
}

#[test]
fn feasibility_band_shapes_match_the_case_split() {
    let p = p01();
    // case I: the band [0, r₋] is exactly where |γ| ≤ ε on [0, m)
    let Extent::CaseI { r_minus } = horizon_extent(&p, HorizonCase::I).unwrap() else {
        unreachable!()
    };
    for i in 0..50 {
        let r = r_minus * i as f64 / 49.0;
        assert!(gamma_radial(&p, r).abs() <= p.eps + 1e-12, "inside band at {r}");
    }
    assert!(gamma_radial(&p, r_minus + 1e-3).abs() > p.eps, "outside band");
    // the monotonicity that makes the roots unique
    for i in 1..50 {
        let r = 0.02 * i as f64;
        if r < 1.0 {
            assert!(gamma_radial_prime(&p, r) < 0.0);
        }
    }
    // case II: band [r₀, r₊], γ increasing
    let Extent::CaseII { r0, r_plus } = horizon_extent(&p, HorizonCase::II).unwrap() else {
        unreachable!()
    };
    for i in 0..50 {
        let r = r0 + (r_plus - r0) * i as f64 / 49.0;
        assert!(gamma_radial(&p, r).abs() <= p.eps + 1e-12);
        assert!(gamma_radial_prime(&p, r) > 0.0);
    }
}

#[test]
fn small_mass_uses_principal_slot_and_large_mass_shifts_a_turn() {
    let small = TimePeriodicParams { eps: 0.1, m: 0.9 };
    let t0 = horizon_time_slots(&small, 0, HorizonCase::I).unwrap();
    assert!((t0 - 1.2476614906666457).abs() <= 1e-12);
    assert!(t0 >= 0.0);
    // m slightly above 1 with feasibility intact: slots shift by 2π
    let large = TimePeriodicParams { eps: 0.1, m: 1.05 };
    let ratio: f64 = 1.05 * 1.05f64.ln() / 0.1;
    assert!(ratio.abs() <= 1.0, "fixture must stay feasible");
    let t0 = horizon_time_slots(&large, 0, HorizonCase::I).unwrap();
    assert!((t0 - (2.0 * PI + (-ratio).asin())).abs() <= 1e-12);
    assert!(t0 >= 0.0);
    // branch opening matches the shifted slot
    let b = trace_horizon_branch(&large, 0, HorizonCase::I, ArcTag::Principal, 16).unwrap();
    assert!((b.slot_open - t0).abs() <= 1e-10);
}
