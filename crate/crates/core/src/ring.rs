//! Typed ordered fuzzy numbers and their ring operations.
//!
//! For a fixed base `h`, a typed OFN `(a↑·h + b↑, a↓·h + b↓)` is determined
//! by its essential tuple `(a↑, b↑, a↓, b↓)`. Addition, subtraction,
//! multiplication and division act componentwise on the tuple, so every
//! result stays in the same typed set.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::base::BaseRef;
use crate::error::{OfnError, Result};
use crate::ext::ExtReal;
use crate::scalar::Real;
use crate::side::{Orientation, Side, SidePair};

/// The coefficients `(a↑, b↑, a↓, b↓)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EssentialTuple<T> {
    pub a_up: T,
    pub b_up: T,
    pub a_dn: T,
    pub b_dn: T,
}

impl<T: Real> EssentialTuple<T> {
    pub fn new(a_up: T, b_up: T, a_dn: T, b_dn: T) -> Self {
        Self { a_up, b_up, a_dn, b_dn }
    }

    pub fn from_array([a_up, b_up, a_dn, b_dn]: [T; 4]) -> Self {
        Self::new(a_up, b_up, a_dn, b_dn)
    }

    pub fn to_array(self) -> [T; 4] {
        [self.a_up, self.b_up, self.a_dn, self.b_dn]
    }

    /// Additive identity, the crisp zero.
    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    /// Multiplicative identity.
    pub fn one() -> Self {
        Self::new(T::one(), T::one(), T::one(), T::one())
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    /// Both sides typeless.
    pub fn is_rectangular(&self) -> bool {
        self.a_up == T::zero() && self.a_dn == T::zero()
    }

    pub fn map(self, f: impl Fn(T) -> T) -> Self {
        Self::new(f(self.a_up), f(self.b_up), f(self.a_dn), f(self.b_dn))
    }

    pub fn zip_with(self, other: Self, f: impl Fn(T, T) -> T) -> Self {
        Self::new(
            f(self.a_up, other.a_up),
            f(self.b_up, other.b_up),
            f(self.a_dn, other.a_dn),
            f(self.b_dn, other.b_dn),
        )
    }

    pub fn scale(self, r: T) -> Self {
        self.map(|c| r * c)
    }

    /// Componentwise quotient; `None` if any divisor component is zero.
    pub fn checked_div(self, other: Self) -> Option<Self> {
        if other.to_array().iter().any(|c| *c == T::zero()) {
            None
        } else {
            Some(self.zip_with(other, |x, y| x / y))
        }
    }

    /// Lexicographic order on `(a↑, b↑, a↓, b↓)`.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.to_array()
            .iter()
            .zip(other.to_array().iter())
            .map(|(x, y)| x.partial_cmp(y).unwrap_or(Ordering::Equal))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    }
}

impl<T: Real> Add for EssentialTuple<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.zip_with(rhs, |x, y| x + y)
    }
}

impl<T: Real> Sub for EssentialTuple<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.zip_with(rhs, |x, y| x - y)
    }
}

/// Hadamard product.
impl<T: Real> Mul for EssentialTuple<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.zip_with(rhs, |x, y| x * y)
    }
}

impl<T: Real> Neg for EssentialTuple<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|c| -c)
    }
}

impl<T: Real> fmt::Display for EssentialTuple<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a_up, self.b_up, self.a_dn, self.b_dn)
    }
}

/// An element of the ring of OFNs of one base type (rectangular OFNs
/// included).
#[derive(Debug, Clone)]
pub struct TypedOfn<T> {
    base: BaseRef<T>,
    tuple: EssentialTuple<T>,
}

impl<T: Real> TypedOfn<T> {
    pub fn new(base: BaseRef<T>, tuple: EssentialTuple<T>) -> Result<Self> {
        if !tuple.is_finite() {
            return Err(OfnError::NonFinite);
        }
        Ok(Self { base, tuple })
    }

    pub fn from_parts(base: BaseRef<T>, a_up: T, b_up: T, a_dn: T, b_dn: T) -> Result<Self> {
        Self::new(base, EssentialTuple::new(a_up, b_up, a_dn, b_dn))
    }

    /// Rectangular OFN `(b↑, b↓)`.
    pub fn rectangular(base: BaseRef<T>, b_up: T, b_dn: T) -> Result<Self> {
        Self::from_parts(base, T::zero(), b_up, T::zero(), b_dn)
    }

    pub fn crisp(base: BaseRef<T>, value: T) -> Result<Self> {
        Self::rectangular(base, value, value)
    }

    pub fn base(&self) -> &BaseRef<T> {
        &self.base
    }

    pub fn tuple(&self) -> EssentialTuple<T> {
        self.tuple
    }

    pub fn is_rectangular(&self) -> bool {
        self.tuple.is_rectangular()
    }

    /// Same tuple, different base. Used by corrections, which never change
    /// the type.
    pub(crate) fn with_tuple(&self, tuple: EssentialTuple<T>) -> Result<Self> {
        Self::new(self.base.clone(), tuple)
    }

    /// Base of a binary result. Rectangular operands belong to every typed
    /// ring and adopt the other operand's base.
    pub(crate) fn common_base(&self, other: &Self) -> Result<BaseRef<T>> {
        if self.base.tag() == other.base.tag() || other.is_rectangular() {
            Ok(self.base.clone())
        } else if self.is_rectangular() {
            Ok(other.base.clone())
        } else {
            Err(OfnError::MixedType {
                left: self.base.tag().to_string(),
                right: other.base.tag().to_string(),
            })
        }
    }

    fn combine(
        &self,
        other: &Self,
        f: impl Fn(EssentialTuple<T>, EssentialTuple<T>) -> EssentialTuple<T>,
    ) -> Result<Self> {
        let base = self.common_base(other)?;
        Self::new(base, f(self.tuple, other.tuple))
    }

    /// `⊞`
    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |x, y| x + y)
    }

    /// `⊟`
    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |x, y| x - y)
    }

    /// `⊡`
    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.combine(other, |x, y| x * y)
    }

    /// `⧄`; every component of the divisor must be nonzero.
    #[allow(clippy::should_implement_trait)]
    pub fn div(&self, other: &Self) -> Result<Self> {
        let base = self.common_base(other)?;
        let q = self.tuple.checked_div(other.tuple).ok_or(OfnError::DivisionByZero)?;
        Self::new(base, q)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Self {
        Self {
            base: self.base.clone(),
            tuple: -self.tuple,
        }
    }

    pub fn scalar_mul(&self, r: T) -> Result<Self> {
        Self::new(self.base.clone(), self.tuple.scale(r))
    }

    fn side_values(&self, h: ExtReal<T>) -> (ExtReal<T>, ExtReal<T>) {
        let t = self.tuple;
        (h.affine(t.a_up, t.b_up), h.affine(t.a_dn, t.b_dn))
    }
}

impl<T: PartialEq> PartialEq for TypedOfn<T> {
    fn eq(&self, other: &Self) -> bool {
        self.base.tag() == other.base.tag() && self.tuple == other.tuple
    }
}

impl<T: Real> SidePair<T> for TypedOfn<T> {
    fn up(&self) -> Side<T> {
        Side::new(self.base.clone(), self.tuple.a_up, self.tuple.b_up)
    }

    fn down(&self) -> Side<T> {
        Side::new(self.base.clone(), self.tuple.a_dn, self.tuple.b_dn)
    }

    /// For `h → +∞` at `α → 0⁺` the slopes dominate near zero (ties broken
    /// by the intercepts); for `h → −∞` the slope comparison flips. Bounded
    /// bases compare the side values at `α = 0`, then at `α = 1`.
    fn orientation(&self) -> Orientation {
        let t = self.tuple;
        let by_coeffs = |first: Ordering| first.then(t.b_up.partial_cmp(&t.b_dn).unwrap_or(Ordering::Equal));
        let ord = match self.base.range_at_0() {
            ExtReal::PosInf => by_coeffs(t.a_up.partial_cmp(&t.a_dn).unwrap_or(Ordering::Equal)),
            ExtReal::NegInf => by_coeffs(t.a_dn.partial_cmp(&t.a_up).unwrap_or(Ordering::Equal)),
            h0 @ ExtReal::Finite(_) => {
                let (u0, d0) = self.side_values(h0);
                let (u1, d1) = self.side_values(ExtReal::Finite(self.base.range_at_1()));
                u0.total_cmp(&d0).then(u1.total_cmp(&d1))
            }
        };
        Orientation::from_ordering(ord).unwrap_or(Orientation::Degenerate)
    }
}

impl<T: Real> fmt::Display for TypedOfn<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.base.tag(), self.tuple)
    }
}
