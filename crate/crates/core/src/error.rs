use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in input: {0}")]
    NonFinite(&'static str),
    #[error("denominator is identically zero")]
    IdenticallyZeroDenominator,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("function is constant")]
    ConstantFunction,
    #[error("a zero or pole lies within the contour guard band")]
    ContourTooClose,
    #[error("contour integration did not converge")]
    QuadratureNotConverged,
    #[error("root on region boundary after {attempts} perturbation attempts")]
    RootOnBoundary { attempts: usize },
    #[error("subdivision depth exceeded at box width {width:e}")]
    SubdivisionDepthExceeded { width: f64 },
    #[error("root localization failed: {0}")]
    LocalizationFailed(Box<Error>),
    #[error("function is identically equal to the target value")]
    FunctionIdenticallyA,
    #[error("a-point at radius {point_radius:e} coincides with circle r = {r:e}")]
    BoundaryCoincidence { r: f64, point_radius: f64 },
    #[error("coefficient of z is nonzero ({magnitude:e})")]
    LinearCoefficientNonzero { magnitude: f64 },
    #[error("degree {degree} is too small, need at least 3")]
    DegreeTooSmall { degree: usize },
    #[error("polynomial is a binomial b0*z^m + bm")]
    BinomialShape,
    #[error("need at least 3 target values, got {0}")]
    TooFewTargets(usize),
    #[error("target values are not pairwise distinct")]
    DuplicateTargets,
    #[error("invalid radius grid: {0}")]
    InvalidGrid(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
}
