//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("quantale mismatch: {0}")]
    QuantaleMismatch(String),
    #[error("value {0} is not an element of the ambient quantale")]
    NotInCarrier(String),
    #[error("table shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("metric axioms violated: {0}")]
    MetricAxiomsViolated(String),
    #[error("relation is not reflexive-transitive: {0}")]
    NotAPreorder(String),
    #[error("not a complete lattice")]
    NotACompleteLattice,
    #[error("not an op-continuous lattice")]
    NotOpContinuous,
    #[error("map tables have mismatched domains/codomains: {0}")]
    DomainMismatch(String),
    #[error("operation needs a finite chain quantale (enumeration over the exact rationals is unsupported)")]
    UnsupportedEnumeration,
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("space is not tensored")]
    NotTensored,
    #[error("space is not separated")]
    NotSeparated,
    #[error("space is not cocomplete")]
    NotCocomplete,
    #[error("closed colimit formula inapplicable: {0}")]
    FormulaInapplicable(String),
    #[error("action conditions violated: {0}")]
    ActionConditionsViolated(String),
    #[error("not a compact Hausdorff structure: {0}")]
    InvalidCompactStructure(String),
    #[error("invalid approach space: {0}")]
    InvalidApproachSpace(String),
    #[error("space is not T0")]
    NotT0,
    #[error("the two evaluation routes disagree: {0}")]
    RouteMismatch(String),
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("unknown element: {0}")]
    UnknownElement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
