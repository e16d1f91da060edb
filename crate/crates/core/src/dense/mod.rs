//! Dense matrix storage, the matrix-free operator abstraction, and the
//! small factorization kernels everything else is built on.

mod factor;
mod matrix;
mod operator;

pub use factor::{
    orthonormalize, psd_sqrt, qr_orthonormalize, shifted_pinv, singular_values, sym_eig,
    thin_svd, SymEig,
};
pub use matrix::DenseMatrix;
pub use operator::{DiagonalOperator, LinearOperator};
