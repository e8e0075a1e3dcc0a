#![allow(dead_code)]

use std::sync::Arc;

use ofn_core::{Base, BaseFunction, BaseRef, Direction, EssentialTuple, Ofn};
use proptest::prelude::*;

pub fn bases() -> Vec<BaseRef<f64>> {
    vec![
        Arc::new(Base::identity()),
        Arc::new(Base::sqrt()),
        Arc::new(Base::gaussian()),
        Arc::new(Base::log()),
    ]
}

pub fn identity() -> BaseRef<f64> {
    Arc::new(BaseFunction::identity())
}

pub fn ofn(base: &BaseRef<f64>, t: [f64; 4]) -> Ofn {
    Ofn::new(base.clone(), EssentialTuple::from_array(t)).unwrap()
}

pub fn trap(t: [f64; 4]) -> Ofn {
    ofn(&identity(), t)
}

/// `|l − r| ≤ tol · max(|l|, |r|, 1)`
pub fn close(l: f64, r: f64, tol: f64) -> bool {
    (l - r).abs() <= tol * l.abs().max(r.abs()).max(1.0)
}

pub fn tuple_close(l: &EssentialTuple<f64>, r: &EssentialTuple<f64>, tol: f64) -> bool {
    l.to_array().iter().zip(r.to_array()).all(|(&x, y)| close(x, y, tol))
}

pub fn component() -> impl Strategy<Value = f64> {
    -10.0..=10.0f64
}

pub fn tuple() -> impl Strategy<Value = [f64; 4]> {
    [component(), component(), component(), component()]
}

/// A proper OFN built from two slope magnitudes, an intercept and a gap
/// between the sides at `α = 1`; `flip` swaps the roles of the sides.
pub fn proper_from(base: &BaseRef<f64>, slope_up: f64, slope_dn: f64, b: f64, gap: f64, flip: bool) -> Ofn {
    let s = match base.direction() {
        Direction::Increasing => 1.0,
        Direction::Decreasing => -1.0,
    };
    let h1 = base.range_at_1();
    let (a_lo, a_hi) = (s * slope_up, -s * slope_dn);
    let b_hi = b + (a_lo - a_hi) * h1 + gap;
    let t = if flip {
        [a_hi, b_hi, a_lo, b]
    } else {
        [a_lo, b, a_hi, b_hi]
    };
    ofn(base, t)
}

pub fn proper_strategy(min_slope: f64) -> impl Strategy<Value = (f64, f64, f64, f64, bool)> {
    (
        min_slope..=10.0f64,
        min_slope..=10.0f64,
        component(),
        0.0..=10.0f64,
        any::<bool>(),
    )
}
