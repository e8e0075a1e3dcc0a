//! Base functions against independent numeric oracles.

mod common;

use ofn_core::{Direction, ExtReal};

use common::bases;

/// Trapezoid rule for `∫₀¹ h` after `α = e^{-s}`, truncated at `s = 50`.
fn trapezoid_integral(h: impl Fn(f64) -> f64, points: usize) -> f64 {
    let (s_max, n) = (50.0, points - 1);
    let step = s_max / n as f64;
    let f = |s: f64| {
        let a = (-s).exp();
        h(a) * a
    };
    let inner: f64 = (1..n).map(|i| f(i as f64 * step)).sum();
    step * (inner + 0.5 * (f(0.0) + f(s_max)))
}

#[allow(clippy::too_many_arguments)]
fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
        left + right + (left + right - whole) / 15.0
    } else {
        simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
            + simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }
}

/// Adaptive Simpson on the same substitution.
fn adaptive_integral(h: impl Fn(f64) -> f64) -> f64 {
    let f = move |s: f64| {
        let a = (-s).exp();
        h(a) * a
    };
    let (a, b) = (0.0, 50.0);
    let (fa, fm, fb) = (f(a), f(25.0), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson(&f, a, b, fa, fm, fb, whole, 1e-13, 50)
}

fn h_of(base: &ofn_core::BaseRef<f64>) -> impl Fn(f64) -> f64 + '_ {
    move |a| base.eval(a).unwrap().to_float()
}

#[test]
fn integrals_match_trapezoid_oracle() {
    for base in bases() {
        let oracle = trapezoid_integral(h_of(&base), 1_000_000);
        assert!(
            (base.integral() - oracle).abs() <= 1e-6,
            "{}: {} vs {oracle}",
            base.tag(),
            base.integral()
        );
    }
}

#[test]
fn integrals_match_adaptive_oracle() {
    for base in bases() {
        let oracle = adaptive_integral(h_of(&base));
        assert!(
            (base.integral() - oracle).abs() <= 1e-9,
            "{}: {} vs {oracle}",
            base.tag(),
            base.integral()
        );
    }
}

#[test]
fn frozen_integral_values() {
    let b = bases();
    assert_eq!(b[0].integral(), 0.5);
    assert!((b[1].integral() - 2.0 / 3.0).abs() < 1e-15);
    assert!((b[2].integral() - 1.253_314_137_315_500_3).abs() < 1e-15);
    assert_eq!(b[3].integral(), -1.0);
}

#[test]
fn strictly_monotone_on_thousand_point_grid() {
    for base in bases() {
        let sign = match base.direction() {
            Direction::Increasing => 1.0,
            Direction::Decreasing => -1.0,
        };
        let vals: Vec<f64> = (1..=1000)
            .map(|i| base.eval(i as f64 / 1000.0).unwrap().to_float())
            .collect();
        assert!(vals.windows(2).all(|w| sign * (w[1] - w[0]) > 0.0), "{}", base.tag());
    }
}

#[test]
fn inverse_round_trip_on_log_grid() {
    for base in bases() {
        for i in 0..=600 {
            let a = 10f64.powf(-6.0 + i as f64 / 100.0);
            let back = base.inverse(base.eval(a).unwrap()).unwrap();
            assert!((back - a).abs() <= 1e-12, "{} at {a}: {back}", base.tag());
        }
    }
}

#[test]
fn frozen_point_values() {
    let b = bases();
    let g = b[2].eval(0.5).unwrap().finite().unwrap();
    assert!((g - 1.177_410_022_515_474_7).abs() < 1e-15);
    assert_eq!(b[2].eval(0.0).unwrap(), ExtReal::PosInf);
    assert_eq!(b[3].eval(0.0).unwrap(), ExtReal::NegInf);
    let e = b[3].inverse(ExtReal::Finite(-1.0)).unwrap();
    assert!((e - 0.367_879_441_171_442_33).abs() < 1e-15);
}
