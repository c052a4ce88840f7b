use thiserror::Error;

/// Failures of the primitive constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("points coincide")]
    CoincidentPoints,
    #[error("lines are parallel")]
    ParallelLines,
    #[error("points are collinear")]
    CollinearPoints,
    #[error("point is not incident on both carriers")]
    NotIncident,
    #[error("circles are identical")]
    IdenticalCircles,
    #[error("point is not on the circle")]
    NotOnCircle,
    #[error("line coefficients (l, m) are both zero")]
    DegenerateLine,
    #[error("circle radius must be positive")]
    NonPositiveRadius,
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
