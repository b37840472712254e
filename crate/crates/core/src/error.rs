use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolynomialError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coordinate index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("polynomial is not divisible by the linear form {form}")]
    NotDivisible { form: String },
    #[error("cannot divide by the linear form of the zero vector")]
    ZeroLinearForm,
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("root system is empty")]
    Empty,
    #[error("root {root} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        root: String,
        expected: usize,
        found: usize,
    },
    #[error("vector dimension mismatch: expected {expected}, found {found}")]
    VectorDimension { expected: usize, found: usize },
    #[error("root {0} has a non-real coordinate")]
    NonReal(String),
    #[error("root system contains the zero vector")]
    ContainsZero,
    #[error("MissingNegative: -{0} is not a root")]
    MissingNegative(String),
    #[error("LineConditionViolated: the line through {0} contains roots other than its negative")]
    LineConditionViolated(String),
    #[error("NotClosedUnderReflection: reflecting {v} in {u} leaves the root system")]
    NotClosedUnderReflection { u: String, v: String },
    #[error("cannot build a reflection from the zero vector")]
    ZeroVector,
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("unsupported catalog system {0}")]
    UnsupportedCatalog(String),
    #[error("OrderCapExceeded: group closure exceeded {0} elements")]
    OrderCapExceeded(usize),
    #[error("UnknownOrbitLabel: {0}")]
    UnknownOrbitLabel(String),
    #[error("MissingOrbit: no multiplicity given for orbit {0}")]
    MissingOrbit(String),
    #[error("orbit {0} was assigned more than once")]
    DuplicateOrbit(String),
    #[error("malformed root system JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DunklError {
    #[error(transparent)]
    Polynomial(#[from] PolynomialError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error("multiplicity function was built for a different orbit decomposition")]
    MultiplicityMismatch,
    #[error("PointOnHyperplane: sample point {point} is orthogonal to {root}")]
    PointOnHyperplane { point: String, root: String },
    #[error("difference quotient needs a nonzero real root, got {0}")]
    InvalidRoot(String),
    #[error("no admissible sample point found after {0} attempts")]
    SamplingExhausted(usize),
}
