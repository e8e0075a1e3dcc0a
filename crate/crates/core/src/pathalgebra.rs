//! Shortest paths with typed-OFN arc weights: `⊞` extends a path and a
//! rank-based selection picks the better of two paths, so every distance
//! stays in the typed ring.

use std::cmp::Ordering;

use crate::base::BaseRef;
use crate::error::{OfnError, Result};
use crate::ext::ExtReal;
use crate::ring::TypedOfn;
use crate::scalar::Real;
use crate::side::{SidePair, Which};

/// Mean of the level-set midpoints over `α ∈ [0, 1]`:
/// `(a↑ + a↓)/2 · ∫h + (b↑ + b↓)/2`. Linear in the tuple.
pub fn rank<T: Real>(x: &TypedOfn<T>) -> T {
    let t = x.tuple();
    (t.a_up + t.a_dn) * T::half() * x.base().integral() + (t.b_up + t.b_dn) * T::half()
}

/// An OFN together with its rank.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedOfn<T> {
    pub ofn: TypedOfn<T>,
    pub rank: T,
}

impl<T: Real> RankedOfn<T> {
    pub fn new(ofn: TypedOfn<T>) -> Self {
        let rank = rank(&ofn);
        Self { ofn, rank }
    }
}

/// Total order used for selection: rank first, then the tuple
/// lexicographically.
pub fn rank_cmp<T: Real>(x: &TypedOfn<T>, y: &TypedOfn<T>, rank_fn: impl Fn(&TypedOfn<T>) -> T) -> Ordering {
    rank_fn(x)
        .partial_cmp(&rank_fn(y))
        .unwrap_or(Ordering::Equal)
        .then_with(|| x.tuple().lex_cmp(&y.tuple()))
}

/// The operand of lower rank (ties: lexicographically smaller tuple).
pub fn ofn_min<T: Real>(x: &TypedOfn<T>, y: &TypedOfn<T>) -> Result<TypedOfn<T>> {
    x.common_base(y)?;
    Ok(match rank_cmp(x, y, rank) {
        Ordering::Greater => y.clone(),
        _ => x.clone(),
    })
}

/// Pointwise minima of the two operands' sides at grid levels. These are
/// generally not sides of a typed OFN.
#[derive(Debug, Clone, PartialEq)]
pub struct PointwiseMin<T> {
    pub alphas: Vec<T>,
    pub up: Vec<ExtReal<T>>,
    pub down: Vec<ExtReal<T>>,
}

pub fn pointwise_min_report<T: Real>(x: &TypedOfn<T>, y: &TypedOfn<T>, grid: usize) -> Result<PointwiseMin<T>> {
    x.common_base(y)?;
    let n = grid.max(2) - 1;
    let alphas: Vec<T> = (0..=n).map(|i| T::lit(i as f64 / n as f64)).collect();
    let side_min = |which| -> Result<Vec<ExtReal<T>>> {
        alphas
            .iter()
            .map(|&a| Ok(x.side_eval(which, a)?.min(y.side_eval(which, a)?)))
            .collect()
    };
    Ok(PointwiseMin {
        up: side_min(Which::Up)?,
        down: side_min(Which::Down)?,
        alphas,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Edge<T> {
    pub from: usize,
    pub to: usize,
    pub weight: TypedOfn<T>,
}

/// Directed graph whose arc weights live in one typed ring.
#[derive(Debug, Clone)]
pub struct FuzzyDigraph<T> {
    nodes: usize,
    base: BaseRef<T>,
    edges: Vec<Edge<T>>,
}

impl<T: Real> FuzzyDigraph<T> {
    pub fn new(nodes: usize, base: BaseRef<T>) -> Self {
        Self {
            nodes,
            base,
            edges: Vec::new(),
        }
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn base(&self) -> &BaseRef<T> {
        &self.base
    }

    pub fn edges(&self) -> &[Edge<T>] {
        &self.edges
    }

    fn check_node(&self, node: usize) -> Result<()> {
        if node < self.nodes {
            Ok(())
        } else {
            Err(OfnError::NodeOutOfRange {
                node,
                nodes: self.nodes,
            })
        }
    }

    /// Adds an arc; its weight must share the graph's base or be
    /// rectangular.
    pub fn add_edge(&mut self, from: usize, to: usize, weight: TypedOfn<T>) -> Result<()> {
        self.check_node(from)?;
        self.check_node(to)?;
        if weight.base().tag() != self.base.tag() && !weight.is_rectangular() {
            return Err(OfnError::MixedType {
                left: self.base.tag().to_string(),
                right: weight.base().tag().to_string(),
            });
        }
        self.edges.push(Edge { from, to, weight });
        Ok(())
    }

    pub fn with_edge(mut self, from: usize, to: usize, weight: TypedOfn<T>) -> Result<Self> {
        self.add_edge(from, to, weight)?;
        Ok(self)
    }

    pub(crate) fn zero(&self) -> TypedOfn<T> {
        TypedOfn::crisp(self.base.clone(), T::zero()).expect("zero is finite")
    }
}

/// Distances and shortest-path tree from one source. Unreachable nodes
/// have no distance.
#[derive(Debug, Clone, PartialEq)]
pub struct ShortestPaths<T> {
    pub source: usize,
    pub dist: Vec<Option<TypedOfn<T>>>,
    pub pred: Vec<Option<usize>>,
}

impl<T: Real> ShortestPaths<T> {
    /// Node sequence from the source to `target`, if reachable.
    pub fn path_to(&self, target: usize) -> Option<Vec<usize>> {
        self.dist.get(target)?.as_ref()?;
        let mut path = vec![target];
        let mut at = target;
        while at != self.source {
            at = self.pred[at]?;
            path.push(at);
            if path.len() > self.dist.len() {
                return None;
            }
        }
        path.reverse();
        Some(path)
    }
}

pub fn shortest_paths<T: Real>(g: &FuzzyDigraph<T>, source: usize) -> Result<ShortestPaths<T>> {
    shortest_paths_by(g, source, rank)
}

/// Bellman–Ford relaxation under the order given by `rank_fn` (then the
/// tuple). Any cycle that still improves a distance after `n − 1` rounds
/// is reported as [`OfnError::NegativeCycle`].
pub fn shortest_paths_by<T: Real>(
    g: &FuzzyDigraph<T>,
    source: usize,
    rank_fn: impl Fn(&TypedOfn<T>) -> T,
) -> Result<ShortestPaths<T>> {
    g.check_node(source)?;
    let mut dist: Vec<Option<TypedOfn<T>>> = vec![None; g.nodes];
    let mut pred = vec![None; g.nodes];
    dist[source] = Some(g.zero());
    for round in 0..g.nodes {
        let mut changed = false;
        for e in &g.edges {
            let Some(du) = &dist[e.from] else { continue };
            let cand = du.add(&e.weight)?;
            let better = match &dist[e.to] {
                None => true,
                Some(dv) => rank_cmp(&cand, dv, &rank_fn) == Ordering::Less,
            };
            if better {
                if round + 1 == g.nodes {
                    return Err(OfnError::NegativeCycle);
                }
                dist[e.to] = Some(cand);
                pred[e.to] = Some(e.from);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(ShortestPaths { source, dist, pred })
}
