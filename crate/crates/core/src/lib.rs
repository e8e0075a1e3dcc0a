//! Ordered fuzzy numbers: typed OFNs over a base function, their ring
//! operations, propriety analysis and repair, general (Kosinski-style)
//! piecewise-polynomial OFNs, Piasecki's trapezoidal operators, classical
//! L-R fuzzy numbers and a fuzzy shortest-path algebra.
//!
//! The library is generic over the scalar type (`f32` or `f64`); the
//! aliases below fix it to `f64`, with `*32` variants for `f32`.

pub mod base;
pub mod classical;
pub mod error;
pub mod ext;
pub mod kosinski;
pub mod pathalgebra;
pub mod piasecki;
pub mod poly;
pub mod propriety;
pub mod ring;
pub mod scalar;
pub mod side;

pub use base::{BaseFunction, BaseRef, CustomBase, Direction, Registry};
pub use classical::{
    levelset_add, lr_level_set, lr_membership, zadeh_add_grid, zadeh_mul_levelsets, LRFuzzyNumber, Spread,
};
pub use error::{OfnError, Result};
pub use ext::{ExtReal, Interval};
pub use kosinski::{
    corresponding_membership, k_is_proper, k_neg, k_op, k_scalar, KOp, PiecewisePoly, PiecewisePolyOfn,
};
pub use pathalgebra::{ofn_min, rank, shortest_paths, FuzzyDigraph, ShortestPaths};
pub use piasecki::{p_closure_check, p_closure_witness, p_op, PStar, PiaseckiResult, TrapezoidCorners};
pub use poly::Polynomial;
pub use propriety::{classify, correct, membership, Applied, MembershipFunction, Pathology, ProprietyReport};
pub use ring::{EssentialTuple, TypedOfn};
pub use scalar::Real;
pub use side::{MixedOfn, Monotone, Orientation, Side, SidePair, SignClass, Which};

pub type Ofn = TypedOfn<f64>;
pub type Tuple = EssentialTuple<f64>;
pub type Base = BaseFunction<f64>;
pub type Bases = Registry<f64>;
pub type Range = Interval<f64>;
pub type Value = ExtReal<f64>;
pub type Graph = FuzzyDigraph<f64>;

pub type Ofn32 = TypedOfn<f32>;
pub type Tuple32 = EssentialTuple<f32>;
pub type Base32 = BaseFunction<f32>;
