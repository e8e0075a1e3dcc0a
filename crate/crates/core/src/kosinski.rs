//! General OFNs with piecewise-polynomial sides and Kosinski's
//! componentwise arithmetic on them.

use std::fmt;

use crate::base::{check_alpha, IDENTITY};
use crate::error::{OfnError, Result};
use crate::ext::Interval;
use crate::poly::Polynomial;
use crate::ring::TypedOfn;
use crate::scalar::Real;
use crate::side::{Monotone, Orientation, Which};

/// Largest polynomial degree accepted in a piece.
pub const DEGREE_CAP: usize = 8;

/// A continuous function on `[0, 1]`, polynomial in `α` on each piece.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewisePoly<T> {
    breaks: Vec<T>,
    pieces: Vec<Polynomial<T>>,
}

impl<T: Real> PiecewisePoly<T> {
    /// `breaks` must run strictly upward from 0 to 1 with one more entry
    /// than `pieces`; adjacent pieces must agree at the shared breakpoint.
    pub fn new(breaks: Vec<T>, pieces: Vec<Polynomial<T>>) -> Result<Self> {
        let bad = |m: &str| Err(OfnError::InvalidPiecewise(m.to_string()));
        if pieces.is_empty() || breaks.len() != pieces.len() + 1 {
            return bad("need one more breakpoint than pieces");
        }
        if breaks[0] != T::zero() || breaks[breaks.len() - 1] != T::one() {
            return bad("breakpoints must start at 0 and end at 1");
        }
        if breaks
            .windows(2)
            .any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less))
        {
            return bad("breakpoints must increase strictly");
        }
        if let Some(p) = pieces.iter().find(|p| p.degree() > DEGREE_CAP) {
            return Err(OfnError::DegreeCap {
                degree: p.degree(),
                cap: DEGREE_CAP,
            });
        }
        if pieces.iter().flat_map(|p| p.coeffs()).any(|c| !c.is_finite()) {
            return Err(OfnError::NonFinite);
        }
        for (k, w) in pieces.windows(2).enumerate() {
            let x = breaks[k + 1];
            let (l, r) = (w[0].eval(x), w[1].eval(x));
            if (l - r).abs() > T::lit(1e-9) * T::one().max(l.abs()).max(r.abs()) {
                return bad("pieces disagree at a breakpoint");
            }
        }
        Ok(Self { breaks, pieces })
    }

    pub fn single(p: Polynomial<T>) -> Result<Self> {
        Self::new(vec![T::zero(), T::one()], vec![p])
    }

    pub fn constant(c: T) -> Self {
        Self {
            breaks: vec![T::zero(), T::one()],
            pieces: vec![Polynomial::constant(c)],
        }
    }

    pub fn breaks(&self) -> &[T] {
        &self.breaks
    }

    pub fn pieces(&self) -> &[Polynomial<T>] {
        &self.pieces
    }

    /// `(lo, hi, polynomial)` for each piece.
    pub fn segments(&self) -> impl Iterator<Item = (T, T, &Polynomial<T>)> {
        self.breaks.windows(2).zip(&self.pieces).map(|(w, p)| (w[0], w[1], p))
    }

    pub fn eval(&self, alpha: T) -> Result<T> {
        check_alpha(alpha)?;
        Ok(self.value(alpha))
    }

    pub(crate) fn value(&self, alpha: T) -> T {
        let k = self.breaks[1..self.breaks.len() - 1].partition_point(|&b| b <= alpha);
        self.pieces[k].eval(alpha)
    }

    pub fn max_degree(&self) -> usize {
        self.pieces.iter().map(Polynomial::degree).max().unwrap_or(0)
    }

    /// Combines two functions piece by piece over the union of their
    /// breakpoints.
    pub fn zip_with(&self, other: &Self, f: impl Fn(&Polynomial<T>, &Polynomial<T>) -> Polynomial<T>) -> Result<Self> {
        let mut breaks: Vec<T> = self.breaks.iter().chain(&other.breaks).copied().collect();
        breaks.sort_by(|a, b| a.partial_cmp(b).expect("finite breakpoints"));
        breaks.dedup();
        let piece_at = |g: &Self, mid: T| {
            let k = g.breaks[1..g.breaks.len() - 1].partition_point(|&b| b <= mid);
            g.pieces[k].clone()
        };
        let pieces = breaks
            .windows(2)
            .map(|w| {
                let mid = (w[0] + w[1]) * T::half();
                f(&piece_at(self, mid), &piece_at(other, mid))
            })
            .collect();
        Self::new(breaks, pieces)
    }

    pub fn map(&self, f: impl Fn(&Polynomial<T>) -> Polynomial<T>) -> Self {
        Self {
            breaks: self.breaks.clone(),
            pieces: self.pieces.iter().map(f).collect(),
        }
    }

    pub fn monotone(&self) -> Monotone {
        let dirs = self.segments().map(|(lo, hi, p)| p.monotone_on(lo, hi));
        let mut acc = Monotone::Constant;
        for d in dirs {
            acc = match (acc, d) {
                (_, Monotone::NonMonotone) => return Monotone::NonMonotone,
                (a, Monotone::Constant) => a,
                (Monotone::Constant, d) => d,
                (a, d) if a == d => a,
                _ => return Monotone::NonMonotone,
            };
        }
        acc
    }

    /// Largest `α` with `f(α) = v`. A piece that is constant at `v`
    /// contributes its right end.
    pub fn last_level_of(&self, v: T) -> Option<T> {
        self.segments()
            .filter_map(|(lo, hi, p)| {
                let shifted = p.sub(&Polynomial::constant(v));
                if shifted.is_zero() {
                    Some(hi)
                } else {
                    shifted.roots_in(lo, hi).last().copied()
                }
            })
            .last()
    }

    /// Smallest and largest value on `[0, 1]`.
    pub fn range(&self) -> Interval<T> {
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for (a, b, p) in self.segments() {
            let crit = p.derivative().roots_in(a, b);
            for x in crit.into_iter().chain([a, b]) {
                let y = p.eval(x);
                lo = lo.min(y);
                hi = hi.max(y);
            }
        }
        Interval::finite(lo, hi)
    }
}

impl<T: Real> fmt::Display for PiecewisePoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pieces.len() == 1 {
            return write!(f, "{}", self.pieces[0]);
        }
        let parts: Vec<String> = self
            .segments()
            .map(|(lo, hi, p)| format!("{p} on [{lo}, {hi}]"))
            .collect();
        write!(f, "{{{}}}", parts.join("; "))
    }
}

/// A side function that can be evaluated anywhere on `[0, 1]` and whose
/// monotonicity can be decided.
pub trait AnalyticSide<T> {
    fn value(&self, alpha: T) -> T;
    fn monotone(&self) -> Monotone;
}

impl<T: Real> AnalyticSide<T> for PiecewisePoly<T> {
    fn value(&self, alpha: T) -> T {
        PiecewisePoly::value(self, alpha)
    }

    fn monotone(&self) -> Monotone {
        PiecewisePoly::monotone(self)
    }
}

/// First proper-OFN condition a pair of sides fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    NonMonotone(Which),
    /// Both sides move the same way; carries that direction.
    SameDirection(Monotone),
    /// Directions fit but the sides cross.
    Dominance,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonMonotone(Which::Up) => f.write_str("up side non-monotonic"),
            Violation::NonMonotone(Which::Down) => f.write_str("down side non-monotonic"),
            Violation::SameDirection(Monotone::Decreasing) => f.write_str("both sides decreasing"),
            Violation::SameDirection(_) => f.write_str("both sides increasing"),
            Violation::Dominance => f.write_str("sides cross"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KProperReport {
    pub proper: bool,
    /// Shape of a proper pair.
    pub shape: Option<Orientation>,
    pub violation: Option<Violation>,
}

/// Proper test for arbitrary continuous sides. With the directions right,
/// `down − up` is monotone, so dominance is decided at `α = 1`.
pub fn proper_pair<T: Real, S: AnalyticSide<T> + ?Sized>(up: &S, down: &S) -> KProperReport {
    let fail = |v| KProperReport {
        proper: false,
        shape: None,
        violation: Some(v),
    };
    let (mu, md) = (up.monotone(), down.monotone());
    if mu == Monotone::NonMonotone {
        return fail(Violation::NonMonotone(Which::Up));
    }
    if md == Monotone::NonMonotone {
        return fail(Violation::NonMonotone(Which::Down));
    }
    let inc = mu.rises() && md.falls();
    let dec = md.rises() && mu.falls();
    if !inc && !dec {
        return fail(Violation::SameDirection(mu));
    }
    let (u1, d1) = (up.value(T::one()), down.value(T::one()));
    let shape = if inc && u1 <= d1 {
        Orientation::Increasing
    } else if dec && d1 <= u1 {
        Orientation::Decreasing
    } else {
        return fail(Violation::Dominance);
    };
    KProperReport {
        proper: true,
        shape: Some(shape),
        violation: None,
    }
}

/// An OFN in the general space: two piecewise-polynomial sides.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewisePolyOfn<T> {
    pub up: PiecewisePoly<T>,
    pub down: PiecewisePoly<T>,
}

impl<T: Real> PiecewisePolyOfn<T> {
    pub fn new(up: PiecewisePoly<T>, down: PiecewisePoly<T>) -> Self {
        Self { up, down }
    }

    /// Both sides linear: `(a↑α + b↑, a↓α + b↓)`.
    pub fn linear(a_up: T, b_up: T, a_dn: T, b_dn: T) -> Self {
        let side = |a, b| PiecewisePoly {
            breaks: vec![T::zero(), T::one()],
            pieces: vec![Polynomial::linear(a, b)],
        };
        Self::new(side(a_up, b_up), side(a_dn, b_dn))
    }

    pub fn constant(c: T) -> Self {
        Self::new(PiecewisePoly::constant(c), PiecewisePoly::constant(c))
    }

    /// Embeds a trapezoidal (identity-base) typed OFN; rectangular OFNs of
    /// any base are accepted too.
    pub fn from_typed(x: &TypedOfn<T>) -> Result<Self> {
        if x.base().tag() != IDENTITY && !x.is_rectangular() {
            return Err(OfnError::InvalidBase {
                tag: x.base().tag().to_string(),
                reason: "sides are not polynomial in alpha".to_string(),
            });
        }
        let t = x.tuple();
        Ok(Self::linear(t.a_up, t.b_up, t.a_dn, t.b_dn))
    }

    pub fn side(&self, which: Which) -> &PiecewisePoly<T> {
        match which {
            Which::Up => &self.up,
            Which::Down => &self.down,
        }
    }

    pub fn level_set(&self, alpha: T) -> Result<Interval<T>> {
        let (u, d) = (self.up.eval(alpha)?, self.down.eval(alpha)?);
        Ok(Interval::finite(u.min(d), u.max(d)))
    }
}

impl<T: Real> fmt::Display for PiecewisePolyOfn<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.up, self.down)
    }
}

/// Componentwise operations available in the polynomial representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KOp {
    Add,
    Sub,
    Mul,
}

pub fn k_op<T: Real>(op: KOp, x: &PiecewisePolyOfn<T>, y: &PiecewisePolyOfn<T>) -> Result<PiecewisePolyOfn<T>> {
    let f = |p: &Polynomial<T>, q: &Polynomial<T>| match op {
        KOp::Add => p.add(q),
        KOp::Sub => p.sub(q),
        KOp::Mul => p.mul(q),
    };
    Ok(PiecewisePolyOfn::new(
        x.up.zip_with(&y.up, f)?,
        x.down.zip_with(&y.down, f)?,
    ))
}

pub fn k_neg<T: Real>(x: &PiecewisePolyOfn<T>) -> PiecewisePolyOfn<T> {
    k_scalar(-T::one(), x)
}

pub fn k_scalar<T: Real>(r: T, x: &PiecewisePolyOfn<T>) -> PiecewisePolyOfn<T> {
    PiecewisePolyOfn::new(x.up.map(|p| p.scale(r)), x.down.map(|p| p.scale(r)))
}

pub fn k_is_proper<T: Real>(x: &PiecewisePolyOfn<T>) -> KProperReport {
    proper_pair(&x.up, &x.down)
}

/// Membership that gives `v` the largest level at which either side
/// reaches it: 1 between the side values at `α = 1`, 0 when neither side
/// attains `v`.
pub fn corresponding_membership<T: Real>(x: &PiecewisePolyOfn<T>, v: T) -> T {
    let (u1, d1) = (x.up.value(T::one()), x.down.value(T::one()));
    if u1.min(d1) <= v && v <= u1.max(d1) {
        return T::one();
    }
    [x.up.last_level_of(v), x.down.last_level_of(v)]
        .into_iter()
        .flatten()
        .fold(T::zero(), T::max)
}
