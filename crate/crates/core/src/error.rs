use thiserror::Error;

/// Errors raised by the fuzzy-number operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OfnError {
    #[error("alpha {0} is outside [0, 1]")]
    Domain(f64),
    #[error("value {value} is outside the range of base `{base}`")]
    Range { base: String, value: f64 },
    #[error("operands have mixed types `{left}` and `{right}`")]
    MixedType { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("ordered fuzzy number is improper")]
    Improper,
    #[error("expected pathology {expected}, found {found}")]
    WrongPathology {
        expected: &'static str,
        found: &'static str,
    },
    #[error("essential tuple component is not finite")]
    NonFinite,
    #[error("invalid base function `{tag}`: {reason}")]
    InvalidBase { tag: String, reason: String },
    #[error("polynomial degree {degree} exceeds cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("invalid piecewise polynomial: {0}")]
    InvalidPiecewise(String),
    #[error("spread families differ: `{0}` vs `{1}`")]
    FamilyMismatch(String, String),
    #[error("invalid fuzzy number: {0}")]
    InvalidNumber(String),
    #[error("graph contains a negative cycle")]
    NegativeCycle,
    #[error("node {node} out of range for graph with {nodes} nodes")]
    NodeOutOfRange { node: usize, nodes: usize },
}

pub type Result<T, E = OfnError> = std::result::Result<T, E>;
