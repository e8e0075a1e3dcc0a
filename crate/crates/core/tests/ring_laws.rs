//! Ring axioms and geometric laws of typed OFNs, property-tested per base.

mod common;

use ofn_core::{EssentialTuple, ExtReal, Interval, Ofn, SidePair, Which};
use proptest::prelude::*;

use common::{bases, close, ofn, proper_from, proper_strategy, tuple, tuple_close};

const CASES: u32 = 10_000;

fn base_index() -> impl Strategy<Value = usize> {
    0..4usize
}

fn zero_like(x: &Ofn) -> Ofn {
    ofn(x.base(), [0.0; 4])
}

fn one_like(x: &Ofn) -> Ofn {
    ofn(x.base(), [1.0; 4])
}

/// A scalar binary operation applied to each tuple component.
type Scalar2 = fn(f64, f64) -> f64;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn commutative_and_unital(b in base_index(), p in tuple(), q in tuple()) {
        let base = &bases()[b];
        let (x, y) = (ofn(base, p), ofn(base, q));
        prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.add(&zero_like(&x)).unwrap(), x.clone());
        prop_assert_eq!(x.mul(&one_like(&x)).unwrap(), x.clone());
        prop_assert_eq!(x.add(&x.neg()).unwrap().tuple(), EssentialTuple::zero());
        let s = x.add(&y).unwrap();
        prop_assert_eq!(s.base().tag(), base.tag());
    }

    #[test]
    fn associative_and_distributive(b in base_index(), p in tuple(), q in tuple(), r in tuple()) {
        let base = &bases()[b];
        let (x, y, z) = (ofn(base, p), ofn(base, q), ofn(base, r));
        let l = x.add(&y).unwrap().add(&z).unwrap();
        let rr = x.add(&y.add(&z).unwrap()).unwrap();
        prop_assert!(tuple_close(&l.tuple(), &rr.tuple(), 1e-9));
        let l = x.mul(&y).unwrap().mul(&z).unwrap();
        let rr = x.mul(&y.mul(&z).unwrap()).unwrap();
        prop_assert!(tuple_close(&l.tuple(), &rr.tuple(), 1e-9));
        let l = x.mul(&y.add(&z).unwrap()).unwrap();
        let rr = x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap();
        prop_assert!(tuple_close(&l.tuple(), &rr.tuple(), 1e-9));
    }

    #[test]
    fn self_quotient_is_one(b in base_index(), p in tuple()) {
        prop_assume!(p.iter().all(|&c| c != 0.0));
        let x = ofn(&bases()[b], p);
        prop_assert_eq!(x.div(&x).unwrap().tuple(), EssentialTuple::one());
        prop_assert_eq!(x.div(&one_like(&x)).unwrap(), x.clone());
    }

    #[test]
    fn tuple_ops_match_brute_force_componentwise(p in tuple(), q in tuple()) {
        let base = &bases()[0];
        let (x, y) = (ofn(base, p), ofn(base, q));
        let ops: [(Scalar2, Ofn); 3] = [
            (|a, b| a + b, x.add(&y).unwrap()),
            (|a, b| a - b, x.sub(&y).unwrap()),
            (|a, b| a * b, x.mul(&y).unwrap()),
        ];
        for (f, got) in ops {
            let want: Vec<f64> = (0..4).map(|k| f(p[k], q[k])).collect();
            prop_assert_eq!(got.tuple().to_array().to_vec(), want);
        }
    }

    #[test]
    fn scaling_is_affine_in_h(b in base_index(), p in tuple(), e in -4i32..=4, r in -10.0..=10.0f64, alpha in 1e-6..=1.0f64) {
        let x = ofn(&bases()[b], p);
        for which in [Which::Up, Which::Down] {
            let v = x.side_eval(which, alpha).unwrap().to_float();
            let pow2 = 2f64.powi(e);
            prop_assert_eq!(x.scalar_mul(pow2).unwrap().side_eval(which, alpha).unwrap().to_float(), pow2 * v);
            let scaled = x.scalar_mul(r).unwrap().side_eval(which, alpha).unwrap().to_float();
            prop_assert!(close(scaled, r * v, 1e-12));
        }
    }

    #[test]
    fn level_sets_add_for_same_shape_proper_operands(
        b in base_index(),
        g1 in proper_strategy(0.0),
        g2 in proper_strategy(0.0),
        alpha in 1e-6..=1.0f64,
    ) {
        let base = &bases()[b];
        let x = proper_from(base, g1.0, g1.1, g1.2, g1.3, g1.4);
        let y = proper_from(base, g2.0, g2.1, g2.2, g2.3, g1.4);
        prop_assert!(x.is_proper() && y.is_proper());
        let sum = x.add(&y).unwrap().level_set(alpha).unwrap();
        let expect = x.level_set(alpha).unwrap().checked_add(&y.level_set(alpha).unwrap()).unwrap();
        let f = |e: ExtReal<f64>| e.to_float();
        prop_assert!(close(f(sum.lo), f(expect.lo), 1e-12), "{} vs {}", sum, expect);
        prop_assert!(close(f(sum.hi), f(expect.hi), 1e-12), "{} vs {}", sum, expect);
    }

    #[test]
    fn level_sets_nest_for_proper(b in base_index(), g in proper_strategy(0.0)) {
        let x = proper_from(&bases()[b], g.0, g.1, g.2, g.3, g.4);
        let cuts: Vec<Interval<f64>> = (0..=100).map(|i| x.level_set(i as f64 / 100.0).unwrap()).collect();
        for w in cuts.windows(2) {
            prop_assert!(w[0].contains(&w[1]), "{} does not contain {}", w[0], w[1]);
        }
    }
}

#[test]
fn mixed_bases_refuse_arithmetic() {
    let b = bases();
    let x = ofn(&b[0], [1.0, 0.0, -1.0, 2.0]);
    for other in &b[1..] {
        let y = ofn(other, [1.0, 0.0, -1.0, 2.0]);
        assert!(x.add(&y).is_err() && x.sub(&y).is_err() && x.mul(&y).is_err() && x.div(&y).is_err());
    }
}
