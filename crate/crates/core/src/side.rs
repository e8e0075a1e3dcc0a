//! Side functions `a·h(α) + b` and the geometry shared by every OFN whose
//! sides have that form: level sets, support, sign and the proper test.

use std::cmp::Ordering;

use crate::base::{check_alpha, BaseRef};
use crate::error::Result;
use crate::ext::{ExtReal, Interval};
use crate::scalar::{signum0, Real};

/// Selects one of the two sides of an ordered fuzzy number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Which {
    Up,
    Down,
}

/// Orientation of an OFN relative to the real axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Increasing,
    Decreasing,
    /// Both sides are the same function.
    Degenerate,
}

impl Orientation {
    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Increasing => "increasing",
            Orientation::Decreasing => "decreasing",
            Orientation::Degenerate => "degenerate",
        }
    }

    pub(crate) fn from_ordering(up_vs_down: Ordering) -> Option<Self> {
        match up_vs_down {
            Ordering::Less => Some(Orientation::Increasing),
            Ordering::Greater => Some(Orientation::Decreasing),
            Ordering::Equal => None,
        }
    }
}

/// Sign of a fuzzy number, read off its support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignClass {
    Positive,
    Negative,
    Neither,
}

/// Monotone behaviour of a function of `α` on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Monotone {
    Constant,
    Increasing,
    Decreasing,
    NonMonotone,
}

impl Monotone {
    /// Weakly non-decreasing (constants count).
    pub fn rises(self) -> bool {
        matches!(self, Monotone::Constant | Monotone::Increasing)
    }

    /// Weakly non-increasing (constants count).
    pub fn falls(self) -> bool {
        matches!(self, Monotone::Constant | Monotone::Decreasing)
    }
}

/// One side `a·h(α) + b` of a typed OFN.
#[derive(Debug, Clone)]
pub struct Side<T> {
    base: BaseRef<T>,
    a: T,
    b: T,
}

impl<T: Real> Side<T> {
    pub fn new(base: BaseRef<T>, a: T, b: T) -> Self {
        Self { base, a, b }
    }

    pub fn base(&self) -> &BaseRef<T> {
        &self.base
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    pub fn is_typeless(&self) -> bool {
        self.a == T::zero()
    }

    pub fn eval(&self, alpha: T) -> Result<ExtReal<T>> {
        check_alpha(alpha)?;
        Ok(self.eval_unchecked(alpha))
    }

    pub(crate) fn eval_unchecked(&self, alpha: T) -> ExtReal<T> {
        self.base.eval_unchecked(alpha).affine(self.a, self.b)
    }

    /// Limit as `α → 0⁺`.
    pub fn at_zero(&self) -> ExtReal<T> {
        self.base.range_at_0().affine(self.a, self.b)
    }

    pub fn at_one(&self) -> T {
        self.a * self.base.range_at_1() + self.b
    }

    /// Direction in `α`: `sign(a) · direction(h)`.
    pub fn direction(&self) -> Monotone {
        match signum0(self.a) * self.base.direction().sign() {
            0 => Monotone::Constant,
            1 => Monotone::Increasing,
            _ => Monotone::Decreasing,
        }
    }

    /// Closure of the set of values over `α ∈ (0, 1]`.
    pub fn range(&self) -> Interval<T> {
        Interval::spanning(self.at_zero(), ExtReal::Finite(self.at_one()))
    }

    /// Level `α` at which this side takes value `v`: `h⁻¹((v − b)/a)`,
    /// clamped into `[0, 1]`. Meaningless for typeless sides.
    pub fn level_of(&self, v: T) -> T {
        let t = match ExtReal::from_float(v) {
            Some(ExtReal::Finite(x)) => ExtReal::Finite((x - self.b) / self.a),
            Some(inf) => {
                if self.a > T::zero() {
                    inf
                } else {
                    inf.neg()
                }
            }
            None => ExtReal::Finite(T::nan()),
        };
        self.base.inverse_clamped(t)
    }
}

/// Geometry common to OFNs whose sides are affine in a base function.
pub trait SidePair<T: Real> {
    fn up(&self) -> Side<T>;

    fn down(&self) -> Side<T>;

    fn orientation(&self) -> Orientation;

    fn side(&self, which: Which) -> Side<T> {
        match which {
            Which::Up => self.up(),
            Which::Down => self.down(),
        }
    }

    /// Value of the selected side at `α`; `±∞` possible at `α = 0`.
    fn side_eval(&self, which: Which, alpha: T) -> Result<ExtReal<T>> {
        self.side(which).eval(alpha)
    }

    /// The α-cut: the interval spanned by both side values.
    fn level_set(&self, alpha: T) -> Result<Interval<T>> {
        Ok(Interval::spanning(self.up().eval(alpha)?, self.down().eval(alpha)?))
    }

    /// Closure of all side values; both sides are monotone, so the extremes
    /// sit at `α → 0` and `α = 1`.
    fn support(&self) -> Interval<T> {
        let (u, d) = (self.up().range(), self.down().range());
        Interval {
            lo: u.lo.min(d.lo),
            hi: u.hi.max(d.hi),
        }
    }

    fn sign_class(&self) -> SignClass {
        let s = self.support();
        let zero = ExtReal::Finite(T::zero());
        if s.lo > zero {
            SignClass::Positive
        } else if s.hi < zero {
            SignClass::Negative
        } else {
            SignClass::Neither
        }
    }

    /// Which proper shape the pair has, if any. Increasing-proper: up
    /// rises, down falls, up ≤ down. Decreasing-proper: the mirror image.
    /// Typeless sides count as monotone either way. Once the directions
    /// hold, `down − up` is monotone and its minimum is at `α = 1`, so
    /// comparing there settles dominance.
    fn proper_shape(&self) -> Option<Orientation> {
        let (u, d) = (self.up(), self.down());
        let (ud, dd) = (u.direction(), d.direction());
        if ud.rises() && dd.falls() && u.at_one() <= d.at_one() {
            Some(Orientation::Increasing)
        } else if dd.rises() && ud.falls() && d.at_one() <= u.at_one() {
            Some(Orientation::Decreasing)
        } else {
            None
        }
    }

    fn is_proper(&self) -> bool {
        self.proper_shape().is_some()
    }
}

/// An OFN whose sides are affine in different base functions.
///
/// Arithmetic is not defined on these; they exist for geometry and
/// membership, e.g. `(√α, 2 − α)`.
#[derive(Debug, Clone)]
pub struct MixedOfn<T> {
    up: Side<T>,
    down: Side<T>,
}

impl<T: Real> MixedOfn<T> {
    pub fn new(up: Side<T>, down: Side<T>) -> Self {
        Self { up, down }
    }
}

impl<T: Real> SidePair<T> for MixedOfn<T> {
    fn up(&self) -> Side<T> {
        self.up.clone()
    }

    fn down(&self) -> Side<T> {
        self.down.clone()
    }

    /// Compares the sides at `α → 0`, then at `α = 1`, then at `α = 1/2`.
    fn orientation(&self) -> Orientation {
        let (u, d) = (&self.up, &self.down);
        let probes = [
            u.at_zero().total_cmp(&d.at_zero()),
            u.at_one().partial_cmp(&d.at_one()).unwrap_or(Ordering::Equal),
            u.eval_unchecked(T::half()).total_cmp(&d.eval_unchecked(T::half())),
        ];
        probes
            .into_iter()
            .find_map(Orientation::from_ordering)
            .unwrap_or(Orientation::Degenerate)
    }
}
