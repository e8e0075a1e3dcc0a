//! Dense real polynomials and sign-change root isolation on an interval.

use std::fmt;

use crate::scalar::Real;
use crate::side::Monotone;

/// Number of cells used to bracket roots before bisecting.
pub const ROOT_CELLS: usize = 1024;

/// Polynomial with coefficients in ascending powers; trailing zeros are
/// trimmed, the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Real> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| *c == T::zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `a·x + b`
    pub fn linear(a: T, b: T) -> Self {
        Self::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial counted as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| T::lit(k as f64) * c)
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let at = |p: &Self, k: usize| p.coeffs.get(k).copied().unwrap_or_else(T::zero);
        Self::new((0..n).map(|k| at(self, k) + at(other, k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-T::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &p) in self.coeffs.iter().enumerate() {
            for (j, &q) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + p * q;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, r: T) -> Self {
        Self::new(self.coeffs.iter().map(|&c| r * c).collect())
    }

    /// Points in `[lo, hi]` where the polynomial vanishes or changes sign,
    /// ascending. Roots of even multiplicity that never produce a sign
    /// change and miss every grid point are not reported.
    pub fn roots_in(&self, lo: T, hi: T) -> Vec<T> {
        match self.coeffs[..] {
            [] | [_] => Vec::new(),
            [c0, c1] => {
                let r = -c0 / c1;
                if lo <= r && r <= hi {
                    vec![r]
                } else {
                    Vec::new()
                }
            }
            _ => sign_change_roots(|x| self.eval(x), lo, hi, ROOT_CELLS),
        }
    }

    /// Monotone behaviour on `[lo, hi]`, from the sign changes of the
    /// derivative strictly inside the interval.
    pub fn monotone_on(&self, lo: T, hi: T) -> Monotone {
        let d = self.derivative();
        if d.is_zero() {
            return Monotone::Constant;
        }
        let slack = (hi - lo) * T::lit(1e-12);
        if d.roots_in(lo, hi).iter().any(|&r| r > lo + slack && r < hi - slack) {
            // a root without a sign change (touching zero) is harmless
            let signs = grid(lo, hi, ROOT_CELLS).map(|x| signum(d.eval(x)));
            let (pos, neg) = signs.fold((false, false), |(p, n), s| (p || s > 0, n || s < 0));
            if pos && neg {
                return Monotone::NonMonotone;
            }
        }
        let dominant =
            grid(lo, hi, ROOT_CELLS)
                .map(|x| d.eval(x))
                .fold(T::zero(), |best, v| if v.abs() > best.abs() { v } else { best });
        match signum(dominant) {
            1 => Monotone::Increasing,
            -1 => Monotone::Decreasing,
            _ => Monotone::Constant,
        }
    }
}

fn signum<T: Real>(x: T) -> i8 {
    if x > T::zero() {
        1
    } else if x < T::zero() {
        -1
    } else {
        0
    }
}

fn grid<T: Real>(lo: T, hi: T, cells: usize) -> impl Iterator<Item = T> {
    let n = T::lit(cells as f64);
    (0..=cells).map(move |i| {
        if i == cells {
            hi
        } else {
            lo + (hi - lo) * T::lit(i as f64) / n
        }
    })
}

/// Brackets zeros of `f` on a uniform grid of `cells` cells and refines
/// each bracket by bisection to full precision.
pub fn sign_change_roots<T: Real>(f: impl Fn(T) -> T, lo: T, hi: T, cells: usize) -> Vec<T> {
    let xs: Vec<T> = grid(lo, hi, cells.max(1)).collect();
    let ys: Vec<T> = xs.iter().map(|&x| f(x)).collect();
    let mut roots = Vec::new();
    for i in 0..xs.len() {
        if ys[i] == T::zero() {
            roots.push(xs[i]);
        } else if i + 1 < xs.len() && ys[i + 1] != T::zero() && signum(ys[i]) != signum(ys[i + 1]) {
            roots.push(bisect(&f, xs[i], xs[i + 1], ys[i]));
        }
    }
    roots
}

fn bisect<T: Real>(f: &impl Fn(T) -> T, mut a: T, mut b: T, fa: T) -> T {
    let sa = signum(fa);
    for _ in 0..200 {
        let m = (a + b) * T::half();
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == T::zero() {
            return m;
        }
        if signum(fm) == sa {
            a = m;
        } else {
            b = m;
        }
    }
    (a + b) * T::half()
}

impl<T: Real> fmt::Display for Polynomial<T> {
    /// Renders in the variable `x`, e.g. `-4x^2 + 2x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == T::zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c < T::zero() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < T::zero() { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 || mag != T::one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
