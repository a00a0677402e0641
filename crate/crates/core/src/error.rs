use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coefficient a[{index}] = {value} must be finite and strictly positive")]
    NonPositiveCoefficient { index: usize, value: f64 },

    #[error("a scalar product space needs at least 2 dimensions, got {0}")]
    DimensionTooSmall(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector product in dimension {dim} takes {expected} vectors, got {found}")]
    WrongVectorCount {
        dim: usize,
        expected: usize,
        found: usize,
    },

    #[error("operation is undefined for the zero vector")]
    ZeroVector,

    #[error("rotation axis must be B-unit, its norm is {norm}")]
    AxisNotUnit { norm: f64 },

    #[error("matrix is not B-skew-symmetric (residual {residual:e})")]
    NotSkew { residual: f64 },

    #[error("matrix is not an elliptical rotation")]
    NotARotation,

    #[error("rotation is the identity; its axis is undetermined")]
    AmbiguousAxis,

    #[error("I - T is singular")]
    SingularResolvent,

    #[error("rotation by a half turn has no Cayley parameter (det(R + I) = {det:e})")]
    HalfTurn { det: f64 },

    #[error("vectors have different B-norms ({left} vs {right})")]
    NormMismatch { left: f64, right: f64 },

    #[error("y = -x: the two-reflection construction degenerates")]
    AntipodalInput,

    #[error("operands live in different scalar product spaces")]
    SpaceMismatch,

    #[error("the zero quaternion has no inverse or polar form")]
    ZeroQuaternion,

    #[error("quaternion must have unit norm, its norm is {norm}")]
    NotUnit { norm: f64 },

    #[error("{what} residual {residual:e} exceeds tolerance {tol:e}")]
    NumericalFailure {
        what: String,
        residual: f64,
        tol: f64,
    },
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonPositiveCoefficient { .. } => "NonPositiveCoefficient",
            Error::DimensionTooSmall(_) => "DimensionTooSmall",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::WrongVectorCount { .. } => "WrongVectorCount",
            Error::ZeroVector => "ZeroVector",
            Error::AxisNotUnit { .. } => "AxisNotUnit",
            Error::NotSkew { .. } => "NotSkew",
            Error::NotARotation => "NotARotation",
            Error::AmbiguousAxis => "AmbiguousAxis",
            Error::SingularResolvent => "SingularResolvent",
            Error::HalfTurn { .. } => "HalfTurn",
            Error::NormMismatch { .. } => "NormMismatch",
            Error::AntipodalInput => "AntipodalInput",
            Error::SpaceMismatch => "SpaceMismatch",
            Error::ZeroQuaternion => "ZeroQuaternion",
            Error::NotUnit { .. } => "NotUnit",
            Error::NumericalFailure { .. } => "NumericalFailure",
        }
    }

    /// True for failures caused by floating point residuals rather than bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NumericalFailure { .. } | Error::SingularResolvent
        )
    }
}
