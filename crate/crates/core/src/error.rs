use thiserror::Error;

/// Errors shared across the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("composition of consecutive differentials is nonzero")]
    CompositionNonzero,
    #[error("degree {0} is out of range")]
    DegreeOutOfRange(i64),
    #[error("the degree map of the two-term complex is not injective")]
    NotInjective,
    #[error("not a representation: {0}")]
    NotARepresentation(String),
    #[error("representation is not compatible with the morphism: {0}")]
    NotCompatible(String),
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("not a derivation: {0}")]
    NotADerivation(String),
    #[error("perturbation is not nilpotent (bound {0} exceeded)")]
    NotNilpotent(usize),
    #[error("perturbed operator does not square to zero")]
    NotADifferential,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("unsupported representation: {0}")]
    UnsupportedRepresentation(String),
    #[error("ambient dimension {0} exceeds cap {1}")]
    AmbientCapExceeded(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}
