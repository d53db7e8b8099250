//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("region exceeds the reliable window (needs {needed}, reliable extent {available})")]
    RegionOutsideWindow { needed: String, available: String },

    #[error("margin too small: operation needs {required}, point set declares {available}")]
    MarginTooSmall { required: f64, available: f64 },

    #[error("sample window too small: need radius {required}, have {available}")]
    WindowTooSmall { required: f64, available: f64 },

    #[error("no point inside the selector ball")]
    EmptyBall,

    #[error("{count} points inside the selector ball; (r,R) declaration violated")]
    MultiplePoints { count: usize },

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("margin leaves no reliable interior to certify denseness on")]
    DensenessUnverifiable,

    #[error("pattern must contain a point at the origin")]
    PatternNotAnchored,

    #[error("query point is not a site of the point set")]
    NotASite,

    #[error("overlapping decorations disagree near {0}")]
    InconsistentDecorations(String),

    #[error("groupoid elements are not composable: source and range units differ")]
    NotComposable,

    #[error("kernel flagged symmetric but violates it by {max_dev}")]
    AsymmetricKernel { max_dev: f64 },

    #[error("matrix is not symmetric: max deviation {max_dev}")]
    NotSymmetric { max_dev: f64 },

    #[error("eigensolver failed to converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("bump integral is {integral}, expected 1 within 1e-8")]
    UnnormalizedBump { integral: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
