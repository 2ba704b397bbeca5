use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("grid size {0} must be a power of two and at least 4")]
    GridSize(usize),
    #[error("grid size {n} does not exceed degree {degree}: samples would alias")]
    Aliasing { n: usize, degree: usize },
    #[error("exponent p = {0} is outside [1, ∞]")]
    Exponent(f64),
    #[error("bound {kind} does not apply at p = {p}")]
    BoundMismatch { kind: &'static str, p: String },
    #[error("point {0} lies outside the unit disc")]
    OutsideDisc(String),
    #[error(
        "point {z} is closer to the circle than the grid resolves (|z| must be ≤ {max_radius})"
    )]
    TooCloseToBoundary { z: String, max_radius: f64 },
    #[error("grid has an exact zero at sample {0}; log|f| is undefined")]
    BoundaryZero(usize),
    #[error("outer part vanishes at {0}")]
    DegenerateOuter(String),
    #[error("function vanishes identically on the grid")]
    ZeroFunction,
    #[error("f(0) = {0} must be a nonnegative real number")]
    NegativeMean(f64),
    #[error("x = {0} is outside [0, 1]")]
    OutOfUnitInterval(f64),
    #[error("lambda = {0} is outside (0, 1)")]
    Lambda(f64),
    #[error("Blaschke zero {0} must satisfy 0 < |α| < 1")]
    BlaschkeZero(String),
    #[error("Blaschke zero multiplicity must be positive")]
    Multiplicity,
    #[error("extremal construction requires an inner function vanishing at the origin")]
    InnerNotVanishing,
    #[error("extremal constant C must be nonzero")]
    ZeroConstant,
    #[error("invalid search configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
