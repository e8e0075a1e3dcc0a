//! JSON documents read and written by the command-line tool.

use serde::{Deserialize, Serialize};

use ofn_core::{Bases, EssentialTuple, FuzzyDigraph, Ofn};

use crate::error::{CliError, CliResult};

/// `{"base": "identity", "tuple": [a_up, b_up, a_dn, b_dn]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OfnDocument {
    pub base: String,
    pub tuple: [f64; 4],
}

impl OfnDocument {
    pub fn from_ofn(x: &Ofn) -> Self {
        // normalise -0 so documents print as humans expect
        let tuple = x.tuple().to_array().map(|c| c + 0.0);
        Self {
            base: x.base().tag().to_string(),
            tuple,
        }
    }

    pub fn to_ofn(&self, bases: &Bases) -> CliResult<Ofn> {
        let base = bases
            .get(&self.base)
            .ok_or_else(|| CliError::UnknownBase(self.base.clone()))?;
        Ok(Ofn::new(base, EssentialTuple::from_array(self.tuple))?)
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Document(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeDocument {
    pub from: usize,
    pub to: usize,
    pub weight: OfnDocument,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub nodes: usize,
    pub edges: Vec<EdgeDocument>,
}

impl GraphDocument {
    pub fn parse(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Document(e.to_string()))
    }

    /// The graph's ring is that of its first non-rectangular weight.
    pub fn to_graph(&self, bases: &Bases) -> CliResult<FuzzyDigraph<f64>> {
        let weights = self
            .edges
            .iter()
            .map(|e| e.weight.to_ofn(bases))
            .collect::<CliResult<Vec<_>>>()?;
        let base = weights
            .iter()
            .find(|w| !w.is_rectangular())
            .map_or_else(|| bases.identity(), |w| w.base().clone());
        let mut g = FuzzyDigraph::new(self.nodes, base);
        for (e, w) in self.edges.iter().zip(weights) {
            g.add_edge(e.from, e.to, w)?;
        }
        Ok(g)
    }
}
