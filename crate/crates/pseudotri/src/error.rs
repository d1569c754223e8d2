use thiserror::Error;

/// Unified error type for construction, search and verification entry points.
///
/// Geometric predicates themselves are total; errors arise from invalid
/// inputs (degenerate sets, out-of-range coordinates, violated preconditions)
/// or from I/O and parsing around them.
#[derive(Debug, Error)]
pub enum Error {
    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("duplicate point {0}")]
    DuplicatePoint(String),

    #[error("collinear points {0}")]
    CollinearPoints(String),

    #[error("coordinate out of range: {0} (|x|,|y| must be <= 2^20)")]
    CoordinateOutOfRange(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("expected {expected} pseudo-triangle, found {found}")]
    ClassMismatch { expected: String, found: String },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("unknown property: {0}")]
    UnknownProperty(String),

    #[error("certification failed: {0}")]
    CertificationFailed(String),

    #[error("missing fixture: {0}")]
    MissingFixture(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
