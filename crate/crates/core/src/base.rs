//! Base functions `h` generating typed ordered fuzzy numbers.
//!
//! A typed OFN has sides `a·h(α) + b`. Everything downstream needs four
//! facts about `h`: its value on `(0, 1]`, its inverse, its limits at the
//! ends of `[0, 1]` (the limit at `0` may be infinite) and `∫₀¹ h`.

use std::fmt;
use std::sync::Arc;

use crate::error::{OfnError, Result};
use crate::ext::{ExtReal, Interval};
use crate::scalar::Real;

type ScalarFn<T> = Arc<dyn Fn(T) -> T + Send + Sync>;

/// Shared handle to a base function.
pub type BaseRef<T> = Arc<BaseFunction<T>>;

/// Monotone direction of `h` on `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    /// `+1` or `-1`.
    pub fn sign(self) -> i8 {
        match self {
            Direction::Increasing => 1,
            Direction::Decreasing => -1,
        }
    }
}

pub const IDENTITY: &str = "identity";
pub const SQRT: &str = "sqrt";
pub const GAUSSIAN: &str = "gaussian";
pub const EXPONENTIAL: &str = "exponential";

/// Number of grid points in the monotonicity sweep run on user bases.
const SWEEP_POINTS: usize = 1000;

/// A registered monotone generator `h`.
#[derive(Clone)]
pub struct BaseFunction<T> {
    tag: String,
    eval: ScalarFn<T>,
    inverse: ScalarFn<T>,
    direction: Direction,
    range_at_0: ExtReal<T>,
    range_at_1: T,
    integral01: T,
}

/// Definition of a user-supplied base, validated by [`BaseFunction::custom`].
pub struct CustomBase<T> {
    pub tag: String,
    pub eval: ScalarFn<T>,
    pub inverse: ScalarFn<T>,
    pub direction: Direction,
    pub range_at_0: ExtReal<T>,
    pub range_at_1: T,
    pub integral01: T,
}

impl<T> BaseFunction<T> {
    pub fn tag(&self) -> &str {
        &self.tag
    }
}

impl<T: Real> BaseFunction<T> {
    /// `h(α) = α`: trapezoidal OFNs.
    pub fn identity() -> Self {
        Self {
            tag: IDENTITY.into(),
            eval: Arc::new(|a| a),
            inverse: Arc::new(|t| t),
            direction: Direction::Increasing,
            range_at_0: ExtReal::Finite(T::zero()),
            range_at_1: T::one(),
            integral01: T::half(),
        }
    }

    /// `h(α) = √α`.
    pub fn sqrt() -> Self {
        Self {
            tag: SQRT.into(),
            eval: Arc::new(|a: T| a.sqrt()),
            inverse: Arc::new(|t: T| t * t),
            direction: Direction::Increasing,
            range_at_0: ExtReal::Finite(T::zero()),
            range_at_1: T::one(),
            integral01: T::lit(2.0 / 3.0),
        }
    }

    /// `h(α) = √(−2 log α)`: Gaussian OFNs, unbounded as `α → 0⁺`.
    pub fn gaussian() -> Self {
        Self {
            tag: GAUSSIAN.into(),
            eval: Arc::new(|a: T| {
                let l = -T::two() * a.ln();
                if l <= T::zero() {
                    T::zero()
                } else {
                    l.sqrt()
                }
            }),
            inverse: Arc::new(|t: T| (-(t * t) / T::two()).exp()),
            direction: Direction::Decreasing,
            range_at_0: ExtReal::PosInf,
            range_at_1: T::zero(),
            // ∫₀¹ √(−2 ln α) dα = √(π/2)
            integral01: (T::PI() / T::two()).sqrt(),
        }
    }

    /// `h(α) = log α`: exponential OFNs, unbounded below as `α → 0⁺`.
    pub fn log() -> Self {
        Self {
            tag: EXPONENTIAL.into(),
            eval: Arc::new(|a: T| a.ln()),
            inverse: Arc::new(|t: T| t.exp()),
            direction: Direction::Increasing,
            range_at_0: ExtReal::NegInf,
            range_at_1: T::zero(),
            integral01: -T::one(),
        }
    }

    /// Validates a user base: finite strictly monotone values on a grid of
    /// `(0, 1]`, an inverse that round-trips, limits consistent with the
    /// direction and a finite integral.
    pub fn custom(def: CustomBase<T>) -> Result<Self> {
        let bad = |reason: String| OfnError::InvalidBase {
            tag: def.tag.clone(),
            reason,
        };
        if def.tag.is_empty() {
            return Err(bad("empty tag".into()));
        }
        if !def.integral01.is_finite() {
            return Err(bad("integral over [0,1] is not finite".into()));
        }
        let n = T::from_usize(SWEEP_POINTS).unwrap();
        let tol = T::lit(1e-9);
        let mut prev: Option<T> = None;
        for k in 1..=SWEEP_POINTS {
            let alpha = T::from_usize(k).unwrap() / n;
            let v = (def.eval)(alpha);
            if !v.is_finite() {
                return Err(bad(format!("h({alpha}) is not finite")));
            }
            if let Some(p) = prev {
                let ok = match def.direction {
                    Direction::Increasing => v > p,
                    Direction::Decreasing => v < p,
                };
                if !ok {
                    return Err(bad(format!("not strictly monotone at alpha = {alpha}")));
                }
            }
            let back = (def.inverse)(v);
            if (back - alpha).abs() > tol {
                return Err(bad(format!("inverse does not round-trip at alpha = {alpha}")));
            }
            prev = Some(v);
        }
        let at_one = (def.eval)(T::one());
        if (at_one - def.range_at_1).abs() > tol * T::one().max(at_one.abs()) {
            return Err(bad("range_at_1 disagrees with h(1)".into()));
        }
        let first = ExtReal::Finite((def.eval)(T::one() / n));
        let limit_ok = match def.direction {
            Direction::Increasing => def.range_at_0 <= first,
            Direction::Decreasing => def.range_at_0 >= first,
        };
        if !limit_ok {
            return Err(bad("range_at_0 is on the wrong side of h".into()));
        }
        Ok(Self {
            tag: def.tag,
            eval: def.eval,
            inverse: def.inverse,
            direction: def.direction,
            range_at_0: def.range_at_0,
            range_at_1: def.range_at_1,
            integral01: def.integral01,
        })
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn range_at_0(&self) -> ExtReal<T> {
        self.range_at_0
    }

    pub fn range_at_1(&self) -> T {
        self.range_at_1
    }

    /// `∫₀¹ h(α) dα`.
    pub fn integral(&self) -> T {
        self.integral01
    }

    /// Closure of the range of `h` over `(0, 1]`.
    pub fn range(&self) -> Interval<T> {
        Interval::spanning(self.range_at_0, ExtReal::Finite(self.range_at_1))
    }

    /// `h(α)`; at `α = 0` this is the (possibly infinite) limit.
    pub fn eval(&self, alpha: T) -> Result<ExtReal<T>> {
        check_alpha(alpha)?;
        Ok(self.eval_unchecked(alpha))
    }

    pub(crate) fn eval_unchecked(&self, alpha: T) -> ExtReal<T> {
        if alpha == T::zero() {
            self.range_at_0
        } else {
            ExtReal::Finite((self.eval)(alpha))
        }
    }

    /// `h⁻¹(t)` for `t` in the closure of the range.
    pub fn inverse(&self, t: ExtReal<T>) -> Result<T> {
        if !self.range().contains_value(t) {
            return Err(OfnError::Range {
                base: self.tag.clone(),
                value: t.to_float().to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(self.inverse_unchecked(t))
    }

    /// Inverse after clamping `t` into the range closure; absorbs the last-ulp
    /// excursions of `(v - b) / a`.
    pub(crate) fn inverse_clamped(&self, t: ExtReal<T>) -> T {
        let r = self.range();
        self.inverse_unchecked(t.max(r.lo).min(r.hi))
    }

    fn inverse_unchecked(&self, t: ExtReal<T>) -> T {
        match t {
            ExtReal::Finite(x) => (self.inverse)(x).max(T::zero()).min(T::one()),
            _ => T::zero(),
        }
    }
}

impl<T> fmt::Debug for BaseFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BaseFunction")
            .field("tag", &self.tag)
            .field("direction", &self.direction)
            .finish_non_exhaustive()
    }
}

pub(crate) fn check_alpha<T: Real>(alpha: T) -> Result<()> {
    if alpha >= T::zero() && alpha <= T::one() {
        Ok(())
    } else {
        Err(OfnError::Domain(alpha.to_f64().unwrap_or(f64::NAN)))
    }
}

/// Immutable set of base functions, addressed by tag.
#[derive(Debug, Clone)]
pub struct Registry<T> {
    bases: Vec<BaseRef<T>>,
}

impl<T: Real> Registry<T> {
    /// The four shipped bases.
    pub fn builtin() -> Self {
        Self {
            bases: vec![
                Arc::new(BaseFunction::identity()),
                Arc::new(BaseFunction::sqrt()),
                Arc::new(BaseFunction::gaussian()),
                Arc::new(BaseFunction::log()),
            ],
        }
    }

    /// Returns a registry extended with `base`; tags must be unique.
    pub fn with(mut self, base: BaseFunction<T>) -> Result<Self> {
        if self.get(base.tag()).is_some() {
            return Err(OfnError::InvalidBase {
                tag: base.tag.clone(),
                reason: "tag already registered".into(),
            });
        }
        self.bases.push(Arc::new(base));
        Ok(self)
    }

    /// Looks up a base by tag. `gaussian-inverse` and `log` are accepted as
    /// aliases of `gaussian` and `exponential`.
    pub fn get(&self, tag: &str) -> Option<BaseRef<T>> {
        let tag = match tag {
            "gaussian-inverse" => GAUSSIAN,
            "log" => EXPONENTIAL,
            other => other,
        };
        self.bases.iter().find(|b| b.tag == tag).cloned()
    }

    pub fn identity(&self) -> BaseRef<T> {
        self.get(IDENTITY).expect("identity base is always registered")
    }

    pub fn iter(&self) -> impl Iterator<Item = &BaseRef<T>> {
        self.bases.iter()
    }
}

impl<T: Real> Default for Registry<T> {
    fn default() -> Self {
        Self::builtin()
    }
}
