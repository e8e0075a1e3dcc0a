//! Extended reals and closed intervals with possibly infinite endpoints.

use std::cmp::Ordering;
use std::fmt;

use crate::scalar::{signum0, Real};

/// A real number or a signed infinity.
///
/// Variant order gives the natural order: `NegInf < Finite(_) < PosInf`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub enum ExtReal<T> {
    NegInf,
    Finite(T),
    PosInf,
}

impl<T: Real> ExtReal<T> {
    /// Maps a float to an extended real; NaN is rejected.
    pub fn from_float(x: T) -> Option<Self> {
        if x.is_nan() {
            None
        } else if x == T::infinity() {
            Some(Self::PosInf)
        } else if x == T::neg_infinity() {
            Some(Self::NegInf)
        } else {
            Some(Self::Finite(x))
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Self::Finite(_))
    }

    pub fn finite(&self) -> Option<T> {
        match *self {
            Self::Finite(x) => Some(x),
            _ => None,
        }
    }

    /// Float view, with infinities mapped to the float infinities.
    pub fn to_float(&self) -> T {
        match *self {
            Self::NegInf => T::neg_infinity(),
            Self::Finite(x) => x,
            Self::PosInf => T::infinity(),
        }
    }

    /// `a * self + b` with `0 * inf = 0`, so a typeless side stays at `b`.
    pub fn affine(&self, a: T, b: T) -> Self {
        match *self {
            Self::Finite(h) => Self::Finite(a * h + b),
            Self::PosInf => match signum0(a) {
                0 => Self::Finite(b),
                1 => Self::PosInf,
                _ => Self::NegInf,
            },
            Self::NegInf => match signum0(a) {
                0 => Self::Finite(b),
                1 => Self::NegInf,
                _ => Self::PosInf,
            },
        }
    }

    /// Sum; `None` for the undefined `inf + -inf`.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        match (*self, *other) {
            (Self::Finite(x), Self::Finite(y)) => Some(Self::Finite(x + y)),
            (Self::PosInf, Self::NegInf) | (Self::NegInf, Self::PosInf) => None,
            (Self::PosInf, _) | (_, Self::PosInf) => Some(Self::PosInf),
            (Self::NegInf, _) | (_, Self::NegInf) => Some(Self::NegInf),
        }
    }

    pub fn neg(&self) -> Self {
        match *self {
            Self::NegInf => Self::PosInf,
            Self::Finite(x) => Self::Finite(-x),
            Self::PosInf => Self::NegInf,
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub(crate) fn total_cmp(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }
}

impl<T: Real> From<T> for ExtReal<T> {
    fn from(x: T) -> Self {
        Self::Finite(x)
    }
}

impl<T: Real> fmt::Display for ExtReal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NegInf => f.write_str("-inf"),
            Self::Finite(x) => write!(f, "{x}"),
            Self::PosInf => f.write_str("inf"),
        }
    }
}

/// Closed interval `[lo, hi]` over the extended reals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    pub lo: ExtReal<T>,
    pub hi: ExtReal<T>,
}

impl<T: Real> Interval<T> {
    /// Interval spanning two endpoints given in either order.
    pub fn spanning(x: ExtReal<T>, y: ExtReal<T>) -> Self {
        Self {
            lo: x.min(y),
            hi: x.max(y),
        }
    }

    pub fn finite(lo: T, hi: T) -> Self {
        Self::spanning(ExtReal::Finite(lo), ExtReal::Finite(hi))
    }

    pub fn point(x: T) -> Self {
        Self::finite(x, x)
    }

    pub fn contains_value(&self, x: ExtReal<T>) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Subset test: `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Minkowski sum; `None` when an endpoint sum is `inf + -inf`.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        Some(Self {
            lo: self.lo.checked_add(&other.lo)?,
            hi: self.hi.checked_add(&other.hi)?,
        })
    }

    /// Length of the intersection is positive (more than one common point).
    pub fn overlaps_in_more_than_a_point(&self, other: &Self) -> bool {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        lo < hi
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }
}

impl<T: Real> fmt::Display for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
