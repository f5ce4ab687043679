use thiserror::Error;

use crate::picard::SurfaceModel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor classes live on different surfaces ({left} vs {right})")]
    SurfaceMismatch {
        left: SurfaceModel,
        right: SurfaceModel,
    },
    #[error("operation not supported on {surface}: {reason}")]
    UnsupportedSurface {
        surface: SurfaceModel,
        reason: &'static str,
    },
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
