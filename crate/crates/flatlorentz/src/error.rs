use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero vector has no direction")]
    ZeroVector,
    #[error("segment endpoints coincide or are antipodal")]
    DegenerateSegment,
    #[error("point lies outside the closed hemisphere t >= 0")]
    OutsideHemisphere,
    #[error("direction lies in the kernel of the endomorphism")]
    Undefined,
    #[error("frame vectors are linearly dependent (|det| = {det:e})")]
    DegenerateFrame { det: f64 },
    #[error("point cloud is empty")]
    EmptySet,
    #[error("vertex {a} of the first body is antipodal to vertex {b} of the second")]
    AntipodalPair { a: usize, b: usize },
    #[error("points {0} and {1} prevent a hemisphere witness")]
    NotProperlyConvex(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("vector is not null")]
    NotNull,
    #[error("vector is not spacelike")]
    NotSpacelike,
    #[error("linear part does not preserve the Lorentz form (defect {defect:e})")]
    NotLorentz { defect: f64 },
    #[error("linear part is not positive hyperbolic")]
    NotBoost,
    #[error("linear part is not hyperbolic")]
    NotHyperbolic,
    #[error("compact set meets the repelling arc (distance {distance:e})")]
    RepellingArcHit { distance: f64 },
    #[error("ping-pong fails for generator {generator} at angle {angle}: {reason}")]
    PingPongViolation {
        generator: usize,
        angle: f64,
        reason: String,
    },
    #[error("need at least two limit points")]
    TooFewPoints,
    #[error("attractor estimates do not stabilize (spread {spread:e})")]
    InconclusiveSequence { spread: f64 },
    #[error("word {word} has a linear part that is not positive hyperbolic")]
    ParabolicEncountered { word: String },
    #[error("point is not on the boundary sphere t = 0")]
    NotOnBoundarySphere,
    #[error("point {index} of the compact set lies on an excluded arc")]
    DomainViolation { index: usize },
    #[error("attractor and repeller estimates coincide")]
    CoincidentAttractorRepeller,
    #[error("null directions are linearly dependent")]
    DependentDirections,
    #[error("chord endpoints coincide")]
    DegenerateChord,
    #[error("config parse error: {0}")]
    ConfigParse(String),
    #[error("schema mismatch: expected {expected}, found {found}")]
    SchemaMismatch { expected: String, found: String },
}
