//! Error type shared across the crate.

use crate::isvd::IsvdResult;
use crate::stiefel::{KnTrace, StiefelPoint};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Final state of a fixed-point integration that hit its iteration cap.
///
/// The last iterate is still a valid orthonormal basis, so callers may keep
/// it; `result` is filled in when the surrounding pipeline completed its
/// remaining steps with the non-converged basis.
#[derive(Debug, Clone)]
pub struct KnPartial {
    pub qbar: StiefelPoint,
    pub trace: KnTrace,
    pub result: Option<IsvdResult>,
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("matrix has numerical rank {rank}, expected full column rank {wanted}")]
    RankDeficient { rank: usize, wanted: usize },

    #[error("{0} exceeded its sweep budget")]
    ConvergenceFailure(&'static str),

    #[error("matrix is not positive semidefinite (eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveSemiDefinite { min_eigenvalue: f64 },

    #[error("columns are not orthonormal (residual {residual:.3e})")]
    NotOrthonormal { residual: f64 },

    #[error("dimension {dim} exceeds the {limit} limit for dense computation")]
    DimensionTooLarge { dim: usize, limit: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(
        "integration stopped at the {iterations}-iteration cap with residual {residual:.3e}"
    )]
    MaxIterationsExceeded {
        iterations: usize,
        residual: f64,
        partial: Box<KnPartial>,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
