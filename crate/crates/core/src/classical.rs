//! Classical L-R fuzzy numbers with level-set and extension-principle
//! arithmetic, used as a reference for the ordered representation.

use std::fmt;
use std::sync::Arc;

use crate::base::{check_alpha, BaseRef, IDENTITY};
use crate::error::{OfnError, Result};
use crate::ext::{ExtReal, Interval};
use crate::ring::{EssentialTuple, TypedOfn};
use crate::scalar::Real;
use crate::side::SidePair;

type UnitMap<T> = Arc<dyn Fn(T) -> T + Send + Sync>;

/// Shape function of a spread: an increasing bijection of `[0, 1]`.
#[derive(Clone)]
pub struct Spread<T> {
    name: String,
    f: UnitMap<T>,
    inverse: UnitMap<T>,
}

impl<T: Real> Spread<T> {
    pub fn new(name: impl Into<String>, f: UnitMap<T>, inverse: UnitMap<T>) -> Self {
        Self {
            name: name.into(),
            f,
            inverse,
        }
    }

    pub fn linear() -> Self {
        Self::new("linear", Arc::new(|t| t), Arc::new(|t| t))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, t: T) -> T {
        (self.f)(t)
    }

    pub fn inverse(&self, alpha: T) -> T {
        (self.inverse)(alpha)
    }
}

impl<T> fmt::Debug for Spread<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spread({})", self.name)
    }
}

/// `(a₀⁻, a₁⁻, a₁⁺, a₀⁺)` with left and right shapes `L`, `R`.
#[derive(Debug, Clone)]
pub struct LRFuzzyNumber<T> {
    a0m: T,
    a1m: T,
    a1p: T,
    a0p: T,
    left: Spread<T>,
    right: Spread<T>,
}

impl<T: Real> LRFuzzyNumber<T> {
    pub fn new(corners: [T; 4], left: Spread<T>, right: Spread<T>) -> Result<Self> {
        let [a0m, a1m, a1p, a0p] = corners;
        if corners.iter().any(|c| !c.is_finite()) {
            return Err(OfnError::NonFinite);
        }
        if !(a0m <= a1m && a1m <= a1p && a1p <= a0p) {
            return Err(OfnError::InvalidNumber(format!(
                "corners must be ordered, got ({a0m}, {a1m}, {a1p}, {a0p})"
            )));
        }
        Ok(Self {
            a0m,
            a1m,
            a1p,
            a0p,
            left,
            right,
        })
    }

    /// Linear spreads on both sides.
    pub fn trapezoid(corners: [T; 4]) -> Result<Self> {
        Self::new(corners, Spread::linear(), Spread::linear())
    }

    pub fn crisp(v: T) -> Self {
        Self::trapezoid([v; 4]).expect("crisp corners are ordered")
    }

    pub fn corners(&self) -> [T; 4] {
        [self.a0m, self.a1m, self.a1p, self.a0p]
    }

    pub fn left_spread(&self) -> T {
        self.a1m - self.a0m
    }

    pub fn right_spread(&self) -> T {
        self.a0p - self.a1p
    }

    pub fn core(&self) -> Interval<T> {
        Interval::finite(self.a1m, self.a1p)
    }

    pub fn support(&self) -> Interval<T> {
        Interval::finite(self.a0m, self.a0p)
    }

    fn family(&self) -> (&str, &str) {
        (self.left.name(), self.right.name())
    }

    fn same_family(&self, other: &Self) -> Result<()> {
        if self.family() == other.family() {
            Ok(())
        } else {
            let show = |n: &Self| format!("{}/{}", n.left.name(), n.right.name());
            Err(OfnError::FamilyMismatch(show(self), show(other)))
        }
    }
}

/// Piecewise membership; zero-width ramps never evaluate a spread.
pub fn lr_membership<T: Real>(n: &LRFuzzyNumber<T>, x: T) -> T {
    if x < n.a0m || x > n.a0p {
        T::zero()
    } else if x < n.a1m {
        n.left.eval((x - n.a0m) / n.left_spread())
    } else if x <= n.a1p {
        T::one()
    } else {
        n.right.eval((n.a0p - x) / n.right_spread())
    }
}

/// `[a₀⁻ + L⁻¹(α)·u, a₀⁺ − R⁻¹(α)·v]`
pub fn lr_level_set<T: Real>(n: &LRFuzzyNumber<T>, alpha: T) -> Result<Interval<T>> {
    check_alpha(alpha)?;
    Ok(Interval::finite(
        n.a0m + n.left.inverse(alpha) * n.left_spread(),
        n.a0p - n.right.inverse(alpha) * n.right_spread(),
    ))
}

/// Sum by adding level sets, i.e. corners.
pub fn levelset_add<T: Real>(x: &LRFuzzyNumber<T>, y: &LRFuzzyNumber<T>) -> Result<LRFuzzyNumber<T>> {
    x.same_family(y)?;
    let (p, q) = (x.corners(), y.corners());
    LRFuzzyNumber::new([0, 1, 2, 3].map(|k| p[k] + q[k]), x.left.clone(), x.right.clone())
}

/// Membership sampled at points `(z, μ(z))`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledMembership<T> {
    pub points: Vec<(T, T)>,
}

impl<T: Real> SampledMembership<T> {
    /// Largest deviation from `f` over the samples.
    pub fn sup_error(&self, f: impl Fn(T) -> T) -> T {
        self.points
            .iter()
            .fold(T::zero(), |m, &(z, mu)| m.max((mu - f(z)).abs()))
    }
}

/// Smallest grid accepted by [`zadeh_add_grid`].
pub const MIN_GRID: usize = 101;

fn uniform<T: Real>(lo: T, hi: T, points: usize) -> impl Iterator<Item = T> {
    let n = T::lit((points - 1) as f64);
    (0..points).map(move |i| {
        if i + 1 == points {
            hi
        } else {
            lo + (hi - lo) * T::lit(i as f64) / n
        }
    })
}

/// `sup_{x} min(μ_X(x), μ_Y(z − x))` with `x` ranging over `grid`
/// points of the support of `X`.
pub fn zadeh_add_at<T: Real>(x: &LRFuzzyNumber<T>, y: &LRFuzzyNumber<T>, z: T, grid: usize) -> T {
    uniform(x.a0m, x.a0p, grid).fold(T::zero(), |best, s| {
        best.max(lr_membership(x, s).min(lr_membership(y, z - s)))
    })
}

/// Extension-principle sum sampled at `grid` points spanning the summed
/// supports.
pub fn zadeh_add_grid<T: Real>(
    x: &LRFuzzyNumber<T>,
    y: &LRFuzzyNumber<T>,
    grid: usize,
) -> Result<SampledMembership<T>> {
    if grid < MIN_GRID {
        return Err(OfnError::InvalidNumber(format!(
            "grid needs at least {MIN_GRID} points, got {grid}"
        )));
    }
    let points = uniform(x.a0m + y.a0m, x.a0p + y.a0p, grid)
        .map(|z| (z, zadeh_add_at(x, y, z, grid)))
        .collect();
    Ok(SampledMembership { points })
}

/// Level set of the extension-principle product: the hull of the four
/// endpoint products.
pub fn zadeh_mul_levelsets<T: Real>(x: &LRFuzzyNumber<T>, y: &LRFuzzyNumber<T>, alpha: T) -> Result<Interval<T>> {
    let (p, q) = (lr_level_set(x, alpha)?, lr_level_set(y, alpha)?);
    let ends = |i: Interval<T>| [i.lo.to_float(), i.hi.to_float()];
    let mut lo = T::infinity();
    let mut hi = T::neg_infinity();
    for u in ends(p) {
        for v in ends(q) {
            lo = lo.min(u * v);
            hi = hi.max(u * v);
        }
    }
    Ok(Interval::finite(lo, hi))
}

/// Reads a proper trapezoidal OFN as an L-R number with linear spreads;
/// orientation is forgotten.
pub fn from_typed<T: Real>(x: &TypedOfn<T>) -> Result<LRFuzzyNumber<T>> {
    if x.base().tag() != IDENTITY && !x.is_rectangular() {
        return Err(OfnError::InvalidBase {
            tag: x.base().tag().to_string(),
            reason: "only trapezoidal OFNs have linear spreads".to_string(),
        });
    }
    if !x.is_proper() {
        return Err(OfnError::Improper);
    }
    let (support, core) = (x.level_set(T::zero())?, x.level_set(T::one())?);
    let f = |e: ExtReal<T>| e.to_float();
    LRFuzzyNumber::trapezoid([f(support.lo), f(core.lo), f(core.hi), f(support.hi)])
}

/// The increasing trapezoidal OFN with the same level sets. `base` must be
/// the identity base.
pub fn to_typed<T: Real>(n: &LRFuzzyNumber<T>, base: BaseRef<T>) -> Result<TypedOfn<T>> {
    if base.tag() != IDENTITY {
        return Err(OfnError::InvalidBase {
            tag: base.tag().to_string(),
            reason: "L-R numbers map to trapezoidal OFNs".to_string(),
        });
    }
    if n.family() != ("linear", "linear") {
        return Err(OfnError::FamilyMismatch(
            format!("{}/{}", n.left.name(), n.right.name()),
            "linear/linear".to_string(),
        ));
    }
    TypedOfn::new(
        base,
        EssentialTuple::new(n.left_spread(), n.a0m, -n.right_spread(), n.a0p),
    )
}
