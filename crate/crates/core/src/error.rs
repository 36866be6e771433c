use thiserror::Error;

/// Errors raised by the polynomial, root, lattice and search routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("discriminant undefined for degree {0}")]
    DiscriminantUndefined(usize),
    #[error("squarefree required")]
    SquarefreeRequired,
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("invalid family parameter: {0}")]
    InvalidFamilyParameter(String),
    #[error("reciprocal requires a nonzero constant term")]
    ZeroConstantTerm,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("root finding failed: {0}")]
    RootFindingFailed(String),
    #[error("signature classification failed: floating count {floating}, exact count {exact}")]
    SignatureClassificationFailed { floating: usize, exact: usize },
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("leading and constant coefficients must be nonzero")]
    ZeroEndCoefficient,
    #[error("inconclusive at tolerance: {0}")]
    Inconclusive(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("inconsistent profile: {0}")]
    InconsistentProfile(String),
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("root index must be odd, got {0}")]
    EvenRootIndex(u32),
    #[error("singular basis")]
    SingularBasis,
    #[error("basis does not span an order: {0}")]
    InvalidBasis(String),
    #[error("embedding inconsistent: |det| = {observed}, expected {expected}")]
    EmbeddingInconsistent { observed: f64, expected: f64 },
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    #[error("dimension {dimension} exceeds the cap {cap}")]
    DimensionCap { dimension: usize, cap: usize },
    #[error("degree {degree} outside the supported range {range}")]
    DegreeCap { degree: usize, range: &'static str },
    #[error("unsupported pattern: {0}")]
    UnsupportedPattern(String),
    #[error("irreducibility test beyond reach: {0}")]
    BeyondReach(String),
    #[error("at least two points are required")]
    TooFewPoints,
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
