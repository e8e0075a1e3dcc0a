//! Proper and improper typed OFNs: classification, membership functions
//! and the repair procedures for improper results.

use std::fmt;

use crate::error::{OfnError, Result};
use crate::ext::{ExtReal, Interval};
use crate::ring::{EssentialTuple, TypedOfn};
use crate::scalar::{signum0, Real};
use crate::side::{Monotone, Orientation, Side, SidePair};

/// Kind of defect of an improper typed OFN.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pathology {
    None,
    /// Both sides monotone in the same direction, ranges apart.
    TypeII,
    /// Side ranges twisted or crossing, slopes not of one sign.
    TypeIII,
    /// Same-direction sides whose ranges also overlap.
    Combined,
}

impl Pathology {
    pub fn as_str(self) -> &'static str {
        match self {
            Pathology::None => "none",
            Pathology::TypeII => "type-ii",
            Pathology::TypeIII => "type-iii",
            Pathology::Combined => "combined",
        }
    }
}

impl fmt::Display for Pathology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProprietyReport {
    pub proper: bool,
    pub orientation: Orientation,
    /// `sgn(a↑) = sgn(a↓) ≠ 0`.
    pub same_sign: bool,
    /// The side ranges share more than one point.
    pub crossing: bool,
    pub pathology: Pathology,
}

pub fn classify<T: Real>(x: &TypedOfn<T>) -> ProprietyReport {
    let t = x.tuple();
    let proper = x.is_proper();
    let (su, sd) = (signum0(t.a_up), signum0(t.a_dn));
    let same_sign = su == sd && su != 0;
    let crossing = x.up().range().overlaps_in_more_than_a_point(&x.down().range());
    let pathology = match (proper, same_sign, crossing) {
        (true, _, _) => Pathology::None,
        (false, true, true) => Pathology::Combined,
        (false, true, false) => Pathology::TypeII,
        (false, false, _) => Pathology::TypeIII,
    };
    ProprietyReport {
        proper,
        orientation: x.orientation(),
        same_sign,
        crossing,
        pathology,
    }
}

/// One non-core piece of a membership function: on `domain` the
/// membership is the level at which `side` reaches the argument.
#[derive(Debug, Clone)]
pub struct Branch<T> {
    pub side: Side<T>,
    pub domain: Interval<T>,
}

/// Classical membership function of a proper OFN.
#[derive(Debug, Clone)]
pub struct MembershipFunction<T> {
    /// Branch generated by the up side; absent when that side is typeless.
    pub up_branch: Option<Branch<T>>,
    pub down_branch: Option<Branch<T>>,
    pub core: Interval<T>,
}

impl<T: Real> MembershipFunction<T> {
    pub fn eval(&self, v: T) -> T {
        let x = ExtReal::Finite(v);
        if self.core.contains_value(x) {
            return T::one();
        }
        [&self.up_branch, &self.down_branch]
            .into_iter()
            .flatten()
            .find(|br| br.domain.contains_value(x))
            .map_or(T::zero(), |br| br.side.level_of(v))
    }
}

/// Builds the membership function of a proper OFN of any side shape.
pub fn membership<T: Real, X: SidePair<T> + ?Sized>(x: &X) -> Result<MembershipFunction<T>> {
    let shape = x.proper_shape().ok_or(OfnError::Improper)?;
    let (left, right) = match shape {
        Orientation::Decreasing => (x.down(), x.up()),
        _ => (x.up(), x.down()),
    };
    let (l1, r1) = (ExtReal::Finite(left.at_one()), ExtReal::Finite(right.at_one()));
    let branch = |side: Side<T>, domain: Interval<T>| (!side.is_typeless()).then_some(Branch { side, domain });
    let lb = branch(left.clone(), Interval::spanning(left.at_zero(), l1));
    let rb = branch(right.clone(), Interval::spanning(r1, right.at_zero()));
    let (up_branch, down_branch) = match shape {
        Orientation::Decreasing => (rb, lb),
        _ => (lb, rb),
    };
    Ok(MembershipFunction {
        up_branch,
        down_branch,
        core: Interval::spanning(l1, r1),
    })
}

/// `membership(x)` evaluated at `v`.
pub fn membership_eval<T: Real, X: SidePair<T> + ?Sized>(x: &X, v: T) -> Result<T> {
    Ok(membership(x)?.eval(v))
}

fn require<T: Real>(x: &TypedOfn<T>, expected: Pathology) -> Result<ProprietyReport> {
    let r = classify(x);
    if r.pathology == expected {
        Ok(r)
    } else {
        Err(OfnError::WrongPathology {
            expected: expected.as_str(),
            found: r.pathology.as_str(),
        })
    }
}

/// Collapses the side running the wrong way to its constant term.
///
/// With `s` the common direction of both sides in `α`: an increasing OFN
/// keeps its up side when `s` rises and its down side when `s` falls;
/// a decreasing OFN does the opposite.
pub fn correct_type_ii<T: Real>(x: &TypedOfn<T>) -> Result<TypedOfn<T>> {
    let r = require(x, Pathology::TypeII)?;
    let t = x.tuple();
    let rising = x.up().direction() == Monotone::Increasing;
    let keep_up = match r.orientation {
        Orientation::Decreasing => !rising,
        _ => rising,
    };
    let fixed = if keep_up {
        EssentialTuple::new(t.a_up, t.b_up, T::zero(), t.b_dn)
    } else {
        EssentialTuple::new(T::zero(), t.b_up, t.a_dn, t.b_dn)
    };
    x.with_tuple(fixed)
}

/// Swaps the constant terms: `(a↑, b↓, a↓, b↑)`.
pub fn correct_type_iii<T: Real>(x: &TypedOfn<T>) -> Result<TypedOfn<T>> {
    require(x, Pathology::TypeIII)?;
    let t = x.tuple();
    x.with_tuple(EssentialTuple::new(t.a_up, t.b_dn, t.a_dn, t.b_up))
}

/// Replaces both sides by their values at `α = 1`.
pub fn correct_combined<T: Real>(x: &TypedOfn<T>) -> Result<TypedOfn<T>> {
    require(x, Pathology::Combined)?;
    Ok(collapse(x))
}

fn collapse<T: Real>(x: &TypedOfn<T>) -> TypedOfn<T> {
    let fixed = EssentialTuple::new(T::zero(), x.up().at_one(), T::zero(), x.down().at_one());
    x.with_tuple(fixed)
        .expect("side values at 1 of a finite tuple are finite")
}

/// Which repair [`correct`] applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Applied {
    None,
    Ii,
    Iii,
    Combined,
    /// The pathology-specific repair left the OFN improper, so it was
    /// collapsed to its values at `α = 1` instead.
    Fallback,
}

impl Applied {
    pub fn as_str(self) -> &'static str {
        match self {
            Applied::None => "none",
            Applied::Ii => "ii",
            Applied::Iii => "iii",
            Applied::Combined => "combined",
            Applied::Fallback => "fallback",
        }
    }
}

impl fmt::Display for Applied {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Repairs any typed OFN into a proper one of the same base.
pub fn correct<T: Real>(x: &TypedOfn<T>) -> (TypedOfn<T>, Applied) {
    let (fixed, applied) = match classify(x).pathology {
        Pathology::None => return (x.clone(), Applied::None),
        Pathology::TypeII => (correct_type_ii(x), Applied::Ii),
        Pathology::TypeIII => (correct_type_iii(x), Applied::Iii),
        Pathology::Combined => (correct_combined(x), Applied::Combined),
    };
    match fixed {
        Ok(y) if y.is_proper() => (y, applied),
        _ => (collapse(x), Applied::Fallback),
    }
}

/// A failure of level-set nesting: the cut at the higher level is not
/// inside the cut at the lower level.
#[derive(Debug, Clone, PartialEq)]
pub struct ContainmentViolation<T> {
    pub alpha_low: T,
    pub alpha_high: T,
    pub low_cut: Interval<T>,
    pub high_cut: Interval<T>,
}

/// Checks `x_β ⊆ x_α` for `α ≤ β`.
pub fn containment_violation<T: Real, X: SidePair<T> + ?Sized>(
    x: &X,
    alpha: T,
    beta: T,
) -> Result<Option<ContainmentViolation<T>>> {
    let (lo, hi) = if alpha <= beta { (alpha, beta) } else { (beta, alpha) };
    let low_cut = x.level_set(lo)?;
    let high_cut = x.level_set(hi)?;
    Ok((!low_cut.contains(&high_cut)).then_some(ContainmentViolation {
        alpha_low: lo,
        alpha_high: hi,
        low_cut,
        high_cut,
    }))
}

/// First nesting violation between consecutive points of a uniform grid
/// with `points` levels on `[0, 1]`.
pub fn find_containment_violation<T: Real, X: SidePair<T> + ?Sized>(
    x: &X,
    points: usize,
) -> Result<Option<ContainmentViolation<T>>> {
    let n = points.max(2) - 1;
    let level = |i: usize| T::lit(i as f64 / n as f64);
    for i in 0..n {
        if let Some(v) = containment_violation(x, level(i), level(i + 1))? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}
