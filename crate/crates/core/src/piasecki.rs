//! Piasecki's corner-based operations on trapezoidal OFNs, kept as an
//! executable counterexample: they do not map proper OFNs to proper OFNs.

use std::fmt;

use crate::base::IDENTITY;
use crate::error::{OfnError, Result};
use crate::kosinski::{proper_pair, AnalyticSide, KProperReport};
use crate::poly::Polynomial;
use crate::ring::TypedOfn;
use crate::scalar::Real;
use crate::side::{Monotone, SidePair, Which};

/// `a = μ↑(0)`, `b = μ↑(1)`, `c = μ↓(1)`, `d = μ↓(0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapezoidCorners<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Real> TrapezoidCorners<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self { a, b, c, d }
    }

    pub fn of(x: &TypedOfn<T>) -> Result<Self> {
        trapezoid(x)?;
        let t = x.tuple();
        Ok(Self::new(t.b_up, t.a_up + t.b_up, t.a_dn + t.b_dn, t.b_dn))
    }

    pub fn to_array(self) -> [T; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

fn trapezoid<T: Real>(x: &TypedOfn<T>) -> Result<()> {
    if x.base().tag() == IDENTITY || x.is_rectangular() {
        Ok(())
    } else {
        Err(OfnError::MixedType {
            left: x.base().tag().to_string(),
            right: IDENTITY.to_string(),
        })
    }
}

/// Arithmetic operation on the reals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PStar {
    Add,
    Sub,
    Mul,
    Div,
}

impl PStar {
    pub fn apply<T: Real>(self, x: T, y: T) -> T {
        match self {
            PStar::Add => x + y,
            PStar::Sub => x - y,
            PStar::Mul => x * y,
            PStar::Div => x / y,
        }
    }
}

/// Quotient of two polynomials in `α`, nonvanishing denominator on
/// `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalSide<T> {
    pub num: Polynomial<T>,
    pub den: Polynomial<T>,
}

impl<T: Real> RationalSide<T> {
    pub fn polynomial(p: Polynomial<T>) -> Self {
        Self {
            num: p,
            den: Polynomial::constant(T::one()),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::polynomial(Polynomial::constant(c))
    }

    fn combine(star: PStar, x: &Self, y: &Self) -> Result<Self> {
        let (n, d) = match star {
            PStar::Add => (x.num.mul(&y.den).add(&y.num.mul(&x.den)), x.den.mul(&y.den)),
            PStar::Sub => (x.num.mul(&y.den).sub(&y.num.mul(&x.den)), x.den.mul(&y.den)),
            PStar::Mul => (x.num.mul(&y.num), x.den.mul(&y.den)),
            PStar::Div => (x.num.mul(&y.den), x.den.mul(&y.num)),
        };
        if d.is_zero() || !d.roots_in(T::zero(), T::one()).is_empty() {
            return Err(OfnError::DivisionByZero);
        }
        Ok(Self { num: n, den: d })
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Every `α` in `[0, 1]` at which the side equals `v`.
    pub fn levels_of(&self, v: T) -> Vec<T> {
        self.num.sub(&self.den.scale(v)).roots_in(T::zero(), T::one())
    }
}

impl<T: Real> AnalyticSide<T> for RationalSide<T> {
    fn value(&self, alpha: T) -> T {
        self.num.eval(alpha) / self.den.eval(alpha)
    }

    /// The derivative has the sign of `n'd − nd'`, so monotonicity reduces
    /// to that of the polynomial `∫(n'd − nd')`.
    fn monotone(&self) -> Monotone {
        let wronskian = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        let antiderivative = Polynomial::new(
            std::iter::once(T::zero())
                .chain(
                    wronskian
                        .coeffs()
                        .iter()
                        .enumerate()
                        .map(|(k, &c)| c / T::lit((k + 1) as f64)),
                )
                .collect(),
        );
        antiderivative.monotone_on(T::zero(), T::one())
    }
}

impl<T: Real> fmt::Display for RationalSide<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.den.coeffs() {
            [c] if *c == T::one() => write!(f, "{}", self.num),
            _ => write!(f, "({}) / ({})", self.num, self.den),
        }
    }
}

/// How a result side was formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SideRule {
    /// The operation applied to the operand sides pointwise.
    ProductForm,
    /// Collapsed to the corner value at `α = 1`.
    Constant,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PiaseckiResult<T> {
    pub corners: TrapezoidCorners<T>,
    pub up_rule: SideRule,
    pub down_rule: SideRule,
    pub up_fn: RationalSide<T>,
    pub down_fn: RationalSide<T>,
}

fn linear_side<T: Real>(x: &TypedOfn<T>, which: Which) -> RationalSide<T> {
    let s = x.side(which);
    RationalSide::polynomial(Polynomial::linear(s.a(), s.b()))
}

/// `X ⋆̃ Y` on trapezoidal OFNs.
pub fn p_op<T: Real>(star: PStar, x: &TypedOfn<T>, y: &TypedOfn<T>) -> Result<PiaseckiResult<T>> {
    let (cx, cy) = (TrapezoidCorners::of(x)?, TrapezoidCorners::of(y)?);
    if star == PStar::Div && cy.to_array().contains(&T::zero()) {
        return Err(OfnError::DivisionByZero);
    }
    let [aa, bb, cc, dd] = [0, 1, 2, 3].map(|k| star.apply(cx.to_array()[k], cy.to_array()[k]));
    // the tie b⋆b = c⋆c with a⋆a = d⋆d lands here as well
    let first = bb < cc || (bb == cc && aa <= dd);
    let (a_w, d_w) = if first {
        (aa.min(bb), dd.max(cc))
    } else {
        (aa.max(bb), dd.min(cc))
    };
    let corners = TrapezoidCorners::new(a_w, bb, cc, d_w);
    let side = |which, constant: bool, at_one: T| -> Result<(SideRule, RationalSide<T>)> {
        if constant {
            Ok((SideRule::Constant, RationalSide::constant(at_one)))
        } else {
            let f = RationalSide::combine(star, &linear_side(x, which), &linear_side(y, which))?;
            Ok((SideRule::ProductForm, f))
        }
    };
    let (up_rule, up_fn) = side(Which::Up, a_w == bb, bb)?;
    let (down_rule, down_fn) = side(Which::Down, cc == d_w, cc)?;
    Ok(PiaseckiResult {
        corners,
        up_rule,
        down_rule,
        up_fn,
        down_fn,
    })
}

pub fn p_closure_report<T: Real>(r: &PiaseckiResult<T>) -> KProperReport {
    proper_pair(&r.up_fn, &r.down_fn)
}

/// Whether the result is a proper OFN.
pub fn p_closure_check<T: Real>(r: &PiaseckiResult<T>) -> bool {
    p_closure_report(r).proper
}

/// Two distinct levels at which a side takes the same value, which rules
/// out inverting it into a membership function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosureWitness<T> {
    pub side: Which,
    pub alphas: (T, T),
    pub value: T,
}

/// A witness for a non-monotone side: a second level sharing the value
/// at `α = 0` or at `α = 1`.
pub fn p_closure_witness<T: Real>(r: &PiaseckiResult<T>) -> Option<ClosureWitness<T>> {
    let slack = T::lit(1e-9);
    [(Which::Up, &r.up_fn), (Which::Down, &r.down_fn)]
        .into_iter()
        .filter(|(_, f)| f.monotone() == Monotone::NonMonotone)
        .find_map(|(side, f)| {
            let v0 = f.value(T::zero());
            let from_zero = f
                .levels_of(v0)
                .into_iter()
                .find(|&a| a > slack)
                .map(|a| (T::zero(), a, v0));
            from_zero
                .or_else(|| {
                    let v1 = f.value(T::one());
                    f.levels_of(v1)
                        .into_iter()
                        .find(|&a| a < T::one() - slack)
                        .map(|a| (a, T::one(), v1))
                })
                .map(|(lo, hi, value)| ClosureWitness {
                    side,
                    alphas: (lo, hi),
                    value,
                })
        })
}
