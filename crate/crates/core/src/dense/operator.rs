//! Matrix-free linear operators.
//!
//! A [`LinearOperator`] is a matrix known only through its action on thin
//! blocks. The sketching pipeline never needs the entries of the target
//! matrix, which is what makes Hadamard-factored test matrices at
//! `2^13 x 2^14` and beyond cheap to run.

use super::matrix::DenseMatrix;

/// A `rows x cols` linear map with access to products against thin dense
/// blocks and their adjoints.
///
/// Implementations must be linear and adjoint-consistent:
/// `<apply(X), Y> = <X, apply_transpose(Y)>`. The test suite probes both
/// properties with random blocks for every shipped operator.
pub trait LinearOperator: Sync {
    fn rows(&self) -> usize;
    fn cols(&self) -> usize;

    /// `A * x` for a `cols x t` block.
    fn apply(&self, x: &DenseMatrix) -> DenseMatrix;

    /// `A^T * x` for a `rows x t` block.
    fn apply_transpose(&self, x: &DenseMatrix) -> DenseMatrix;
}

impl LinearOperator for DenseMatrix {
    fn rows(&self) -> usize {
        self.rows()
    }

    fn cols(&self) -> usize {
        self.cols()
    }

    fn apply(&self, x: &DenseMatrix) -> DenseMatrix {
        self.matmul(x)
    }

    fn apply_transpose(&self, x: &DenseMatrix) -> DenseMatrix {
        self.matmul_tn(x)
    }
}

/// Rectangular diagonal operator: entry `(i, i)` is `diag[i]`, everything
/// else zero.
#[derive(Debug, Clone)]
pub struct DiagonalOperator {
    rows: usize,
    cols: usize,
    diag: Vec<f64>,
}

impl DiagonalOperator {
    pub fn new(rows: usize, cols: usize, diag: Vec<f64>) -> Self {
        assert_eq!(diag.len(), rows.min(cols));
        Self { rows, cols, diag }
    }

    /// Square operator from its diagonal.
    pub fn square(diag: Vec<f64>) -> Self {
        let n = diag.len();
        Self::new(n, n, diag)
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }
}

impl LinearOperator for DiagonalOperator {
    fn rows(&self) -> usize {
        self.rows
    }

    fn cols(&self) -> usize {
        self.cols
    }

    fn apply(&self, x: &DenseMatrix) -> DenseMatrix {
        assert_eq!(x.rows(), self.cols);
        DenseMatrix::from_fn(self.rows, x.cols(), |i, j| {
            if i < self.diag.len() {
                self.diag[i] * x.get(i, j)
            } else {
                0.0
            }
        })
    }

    fn apply_transpose(&self, x: &DenseMatrix) -> DenseMatrix {
        assert_eq!(x.rows(), self.rows);
        DenseMatrix::from_fn(self.cols, x.cols(), |i, j| {
            if i < self.diag.len() {
                self.diag[i] * x.get(i, j)
            } else {
                0.0
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_rectangular_action() {
        let a = DiagonalOperator::new(3, 5, vec![2.0, 3.0, 4.0]);
        let x = DenseMatrix::from_fn(5, 1, |i, _| i as f64 + 1.0);
        let y = a.apply(&x);
        assert_eq!(y.data(), &[2.0, 6.0, 12.0]);
        let z = a.apply_transpose(&y);
        assert_eq!(z.data(), &[4.0, 18.0, 48.0, 0.0, 0.0]);
    }
}
