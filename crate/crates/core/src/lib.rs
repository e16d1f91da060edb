//! Low-rank SVD from Gaussian random sketches.
//!
//! Two entry points:
//!
//! * [`sketch::rsvd`] — the classic single-sketch randomized SVD: sketch,
//!   orthonormalize, solve a small SVD in the sketched subspace, map back.
//! * [`isvd::isvd`] — draws `N` independent sketches, integrates the `N`
//!   sketched subspaces into one subspace by averaging on the Stiefel
//!   manifold (lift to a tangent space, average, retract), then runs the
//!   same small SVD on the integrated basis.
//!
//! Supporting modules: [`dense`] holds the small dense kernels (QR,
//! symmetric eigendecomposition, one-sided Jacobi SVD) and the matrix-free
//! [`dense::LinearOperator`] abstraction; [`stiefel`] implements the
//! manifold machinery (lift, retraction, fixed-point integration);
//! [`stats`] provides the statistical verification helpers (projector
//! averaging, similarity, error decompositions, delta-method covariance);
//! [`harness`] builds Hadamard-factored test matrices and runs replicated
//! experiments with CSV output.
//!
//! Everything is deterministic: each sketch draws from a counter-based RNG
//! stream keyed by `(seed, sketch index)`, so results are bit-reproducible
//! regardless of thread count.

pub mod dense;
pub mod error;
pub mod harness;
pub mod isvd;
pub mod selftest;
pub mod sketch;
pub mod stats;
pub mod stiefel;

pub use dense::{DenseMatrix, DiagonalOperator, LinearOperator, SymEig};
pub use error::{Error, Result};
pub use isvd::{isvd, IsvdResult};
pub use sketch::{rsvd, SketchConfig, SvdApprox};
pub use stiefel::{KnTrace, ProjectorEnsemble, StiefelPoint, TangentVector};
