//! Self-check of the library against known worked values.

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use ofn_core::kosinski::{k_is_proper, k_op, KOp, PiecewisePolyOfn};
use ofn_core::propriety::{containment_violation, correct_type_ii};
use ofn_core::{
    classify, correct, p_closure_check, p_closure_witness, p_op, Base, Bases, Interval, MixedOfn, Ofn, PStar,
    Pathology, Side, SidePair, Tuple, Which,
};

pub struct Row {
    pub item: usize,
    pub label: &'static str,
    pub pass: bool,
}

fn trap(t: [f64; 4]) -> Ofn {
    Ofn::new(Bases::builtin().identity(), Tuple::from_array(t)).expect("finite")
}

fn tuple_of(r: ofn_core::Result<Ofn>) -> Option<[f64; 4]> {
    r.ok().map(|x| x.tuple().to_array())
}

fn four_operations() -> bool {
    let x = trap([1.0, -5.0, -1.0, -3.0]);
    let y = trap([1.0, 5.0, -1.0, 3.0]);
    tuple_of(x.add(&y)) == Some([2.0, 0.0, -2.0, 0.0])
        && tuple_of(x.sub(&y)) == Some([0.0, -10.0, 0.0, -6.0])
        && tuple_of(x.mul(&y)) == Some([1.0, -25.0, 1.0, -9.0])
        && tuple_of(x.div(&y)) == Some([1.0, -1.0, 1.0, -1.0])
}

fn plain_addition() -> bool {
    let x = trap([0.0, -1.0, -1.0, 0.0]);
    let y = trap([0.0, 2.0, 4.0, -2.0]);
    tuple_of(x.add(&y)) == Some([0.0, 1.0, 3.0, -2.0])
}

fn gaussian_addition() -> bool {
    let g = Bases::builtin().get("gaussian").expect("builtin");
    let x = Ofn::from_parts(g.clone(), 0.25, 0.0, -0.25, 0.0).expect("finite");
    let y = Ofn::from_parts(g, 0.125, 1.0, -0.125, 1.0).expect("finite");
    tuple_of(x.add(&y)) == Some([0.375, 1.0, -0.375, 1.0])
}

fn close(l: f64, r: f64) -> bool {
    (l - r).abs() <= 1e-9 * l.abs().max(r.abs()).max(1.0)
}

/// Ring laws on seeded random tuples over every built-in base.
fn ring_axioms() -> bool {
    let mut rng = StdRng::seed_from_u64(7);
    let bases = Bases::builtin();
    ["identity", "sqrt", "gaussian", "exponential"].iter().all(|tag| {
        let base = bases.get(tag).expect("builtin");
        let zero = Ofn::crisp(base.clone(), 0.0).expect("finite");
        let one = Ofn::new(base.clone(), Tuple::one()).expect("finite");
        (0..1000).all(|_| {
            let mut draw = || {
                let t: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-10.0..10.0));
                Ofn::new(base.clone(), Tuple::from_array(t)).expect("finite")
            };
            let (x, y, z) = (draw(), draw(), draw());
            let t = |r: ofn_core::Result<Ofn>| r.expect("same base").tuple().to_array();
            let near = |a: [f64; 4], b: [f64; 4]| a.iter().zip(b).all(|(p, q)| close(*p, q));
            t(x.add(&y)) == t(y.add(&x))
                && t(x.mul(&y)) == t(y.mul(&x))
                && t(x.add(&zero)) == x.tuple().to_array()
                && t(x.mul(&one)) == x.tuple().to_array()
                && t(x.add(&x.neg())) == [0.0; 4]
                && near(
                    t(x.add(&y).and_then(|s| s.add(&z))),
                    t(y.add(&z).and_then(|s| x.add(&s))),
                )
                && near(
                    t(x.mul(&y).and_then(|s| s.mul(&z))),
                    t(y.mul(&z).and_then(|s| x.mul(&s))),
                )
                && near(
                    t(y.add(&z).and_then(|s| x.mul(&s))),
                    t(x.mul(&y).and_then(|p| x.mul(&z).and_then(|q| p.add(&q)))),
                )
        })
    })
}

/// `(x, 2 − x) + (1 − 2x, −3)`: both sides fall, and the cuts stop nesting.
fn non_nesting_sum() -> bool {
    let a = PiecewisePolyOfn::linear(1.0, 0.0, -1.0, 2.0);
    let b = PiecewisePolyOfn::linear(-2.0, 1.0, 0.0, -3.0);
    let Ok(s) = k_op(KOp::Add, &a, &b) else { return false };
    let typed = trap([1.0, 0.0, -1.0, 2.0])
        .add(&trap([-2.0, 1.0, 0.0, -3.0]))
        .expect("same base");
    let cuts = containment_violation(&typed, 0.5, 1.0).ok().flatten();
    s == PiecewisePolyOfn::linear(-1.0, 1.0, -1.0, -1.0)
        && !k_is_proper(&s).proper
        && classify(&typed).pathology == Pathology::TypeII
        && cuts.is_some_and(|v| v.high_cut == Interval::finite(-2.0, 0.0) && v.low_cut == Interval::finite(-1.5, 0.5))
}

/// `(−1, −x) · (2, 4x − 2)` under the corner product is not an OFN of the
/// same family: its down side `−4α² + 2α` takes the value 0 twice.
fn trapezoid_product() -> bool {
    let Ok(r) = p_op(PStar::Mul, &trap([0.0, -1.0, -1.0, 0.0]), &trap([0.0, 2.0, 4.0, -2.0])) else {
        return false;
    };
    r.corners.to_array() == [-2.0, -2.0, -2.0, 0.0]
        && r.down_fn.num.coeffs() == [0.0, 2.0, -4.0]
        && r.down_fn.is_polynomial()
        && !p_closure_check(&r)
        && p_closure_witness(&r).is_some_and(|w| w.side == Which::Down && w.alphas == (0.0, 0.5) && w.value == 0.0)
}

fn corrections() -> bool {
    let y = trap([1.0, 2.0, 1.0, 0.0]);
    let s = trap([-1.0, 1.0, -1.0, -1.0]);
    let twisted = correct(&trap([-2.0, 3.0, 2.0, 1.0])).0;
    correct_type_ii(&y).is_ok_and(|c| c == trap([0.0, 2.0, 1.0, 0.0]) && c.is_proper())
        && correct_type_ii(&s).is_ok_and(|c| c == trap([-1.0, 1.0, 0.0, -1.0]) && c.is_proper())
        && twisted.is_proper()
}

/// `(√α, 2 − α)`: support `[0, 2]`, core `{1}`, quarter cut `[1/2, 7/4]`.
fn mixed_level_sets() -> bool {
    let a = MixedOfn::new(
        Side::new(Arc::new(Base::sqrt()), 1.0, 0.0),
        Side::new(Arc::new(Base::identity()), -1.0, 2.0),
    );
    a.level_set(0.25).is_ok_and(|c| c == Interval::finite(0.5, 1.75))
        && a.level_set(1.0).is_ok_and(|c| c == Interval::point(1.0))
        && a.support() == Interval::finite(0.0, 2.0)
}

type Check = (&'static str, fn() -> bool);

pub fn run() -> Vec<Row> {
    let checks: [Check; 8] = [
        ("trapezoidal sum, difference, product and quotient", four_operations),
        ("sum of two rectangular-side trapezoids", plain_addition),
        ("sum of two gaussian OFNs", gaussian_addition),
        ("ring laws on 1000 random triples per base", ring_axioms),
        ("improper sum of proper OFNs: type-ii, cuts not nested", non_nesting_sum),
        ("corner product leaves the trapezoid family", trapezoid_product),
        ("type-ii repairs and the twisted fallback", corrections),
        ("level sets of (sqrt a, 2 - a)", mixed_level_sets),
    ];
    checks
        .into_iter()
        .enumerate()
        .map(|(i, (label, f))| Row {
            item: i + 1,
            label,
            pass: f(),
        })
        .collect()
}
