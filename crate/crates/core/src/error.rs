use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("the origin is not in the interior of the polytope")]
    OriginNotInterior,
    #[error("no L-reflexive polygon of even index (L = {0})")]
    EvenIndex(u64),
    #[error("index must be a positive odd integer, got {0}")]
    InvalidIndex(u64),
    #[error("face {0:?} is not in the triangulation")]
    FaceNotInTriangulation(Vec<usize>),
    #[error("height {q} does not clear the vertex denominators")]
    NonIntegralGenerator { q: u64 },
    #[error("generator heights must be positive")]
    NonPositiveHeight,
    #[error("point is outside the cone over the polytope")]
    PointOutsideCone,
    #[error("q = {q} is not a positive multiple of the denominator {denominator}")]
    InvalidDenominatorOverride { q: u64, denominator: u64 },
    #[error("ray point a/ell is not in the interior of the polytope")]
    RayNotInterior,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("polytope must be full-dimensional (dim {dim} in ambient dimension {ambient})")]
    NotFullDimensional { dim: usize, ambient: usize },
    #[error("triangulation does not match the polytope or the requested kind")]
    TriangulationMismatch,
    #[error("bounding-box scan of {volume} candidate points exceeds the limit {limit}")]
    ScanTooLarge { volume: u128, limit: u128 },
    #[error("engines disagree: {0}")]
    EngineMismatch(String),
    #[error("malformed input: {0}")]
    Parse(String),
}
