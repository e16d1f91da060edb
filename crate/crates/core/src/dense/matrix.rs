//! Dense row-major matrix storage and arithmetic.
//!
//! Entries are stored row-major: entry `(i, j)` lives at `data[i * cols + j]`.
//! Products go through `matrixmultiply::dgemm`, everything else is plain
//! loops. Matrix products are bit-reproducible for fixed operand shapes
//! because the kernel's summation order does not depend on thread count.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    /// Wraps a row-major buffer. Panics if `data.len() != rows * cols` or a
    /// dimension is zero.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        assert_eq!(data.len(), rows * cols, "buffer length mismatch");
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![0.0; rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::new(rows, cols, data)
    }

    /// Column vector from a slice.
    pub fn column_vector(v: &[f64]) -> Self {
        Self::new(v.len(), 1, v.to_vec())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[f64]) {
        assert_eq!(v.len(), self.rows);
        for (i, &x) in v.iter().enumerate() {
            self.set(i, j, x);
        }
    }

    /// Copy of columns `lo..hi`.
    pub fn columns(&self, lo: usize, hi: usize) -> Self {
        assert!(lo < hi && hi <= self.cols);
        Self::from_fn(self.rows, hi - lo, |i, j| self.get(i, lo + j))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |a, &x| a.max(x.abs()))
    }

    pub fn frob_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Frobenius inner product `tr(self^T other)`.
    pub fn dot(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn trace(&self) -> f64 {
        let n = self.rows.min(self.cols);
        (0..n).map(|i| self.get(i, i)).sum()
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self::new(self.rows, self.cols, self.data.iter().map(|x| x * s).collect())
    }

    pub fn scale_in_place(&mut self, s: f64) {
        for x in &mut self.data {
            *x *= s;
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::new(
            self.rows,
            self.cols,
            self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::new(
            self.rows,
            self.cols,
            self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        )
    }

    /// `self += s * other`.
    pub fn axpy(&mut self, s: f64, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += s * b;
        }
    }

    /// `(self + self^T) / 2`; square matrices only.
    pub fn symmetrize(&self) -> Self {
        assert_eq!(self.rows, self.cols);
        Self::from_fn(self.rows, self.cols, |i, j| {
            0.5 * (self.get(i, j) + self.get(j, i))
        })
    }

    /// `‖self^T self − I‖_F`, the orthonormality residual of the columns.
    pub fn orthonormality_residual(&self) -> f64 {
        let g = self.matmul_tn(self);
        let mut acc = 0.0;
        for i in 0..g.rows {
            for j in 0..g.cols {
                let d = g.get(i, j) - if i == j { 1.0 } else { 0.0 };
                acc += d * d;
            }
        }
        acc.sqrt()
    }

    /// `self * other`.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        gemm(
            self.rows,
            self.cols,
            other.cols,
            &self.data,
            self.cols as isize,
            1,
            &other.data,
            other.cols as isize,
            1,
            &mut out.data,
        );
        out
    }

    /// `self^T * other` without materializing the transpose.
    pub fn matmul_tn(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "matmul_tn shape mismatch");
        let mut out = Self::zeros(self.cols, other.cols);
        gemm(
            self.cols,
            self.rows,
            other.cols,
            &self.data,
            1,
            self.cols as isize,
            &other.data,
            other.cols as isize,
            1,
            &mut out.data,
        );
        out
    }

    /// `self * other^T` without materializing the transpose.
    pub fn matmul_nt(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "matmul_nt shape mismatch");
        let mut out = Self::zeros(self.rows, other.rows);
        gemm(
            self.rows,
            self.cols,
            other.rows,
            &self.data,
            self.cols as isize,
            1,
            &other.data,
            1,
            other.cols as isize,
            &mut out.data,
        );
        out
    }

    /// Column-major flattening (columns stacked), the `vec(·)` used with
    /// Kronecker-product identities.
    pub fn vec_columns(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                v.push(self.get(i, j));
            }
        }
        v
    }

    /// Parses the plain text format: first line `rows cols`, then row-major
    /// whitespace-separated entries.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let rows: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse("missing row count".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad row count: {e}")))?;
        let cols: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse("missing column count".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad column count: {e}")))?;
        if rows == 0 || cols == 0 {
            return Err(Error::Parse("dimensions must be positive".into()));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for tok in tokens.by_ref().take(rows * cols) {
            let v: f64 = tok
                .parse()
                .map_err(|e| Error::Parse(format!("bad entry {tok:?}: {e}")))?;
            if !v.is_finite() {
                return Err(Error::Parse(format!("non-finite entry {tok:?}")));
            }
            data.push(v);
        }
        if data.len() != rows * cols {
            return Err(Error::Parse(format!(
                "expected {} entries, found {}",
                rows * cols,
                data.len()
            )));
        }
        if tokens.next().is_some() {
            return Err(Error::Parse("trailing entries after matrix".into()));
        }
        Ok(Self::new(rows, cols, data))
    }

    /// Inverse of `parse_text`, with shortest round-trip float formatting.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| format!("{v}")).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Row-major oriented dgemm wrapper: `C = A * B` with explicit strides, so
/// transposed views cost nothing.
#[allow(clippy::too_many_arguments)]
fn gemm(
    m: usize,
    k: usize,
    n: usize,
    a: &[f64],
    rsa: isize,
    csa: isize,
    b: &[f64],
    rsb: isize,
    csb: isize,
    c: &mut [f64],
) {
    unsafe {
        matrixmultiply::dgemm(
            m,
            k,
            n,
            1.0,
            a.as_ptr(),
            rsa,
            csa,
            b.as_ptr(),
            rsb,
            csb,
            0.0,
            c.as_mut_ptr(),
            n as isize,
            1,
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matmul_variants_agree() {
        let a = DenseMatrix::from_fn(4, 3, |i, j| (i * 3 + j) as f64 - 5.0);
        let b = DenseMatrix::from_fn(3, 5, |i, j| (i as f64 - j as f64) * 0.5);
        let c = a.matmul(&b);
        let c_tn = a.transpose().matmul_tn(&b);
        let c_nt = a.matmul_nt(&b.transpose());
        for (x, y) in c.data().iter().zip(c_tn.data()) {
            assert_eq!(x, y);
        }
        for (x, y) in c.data().iter().zip(c_nt.data()) {
            assert_eq!(x, y);
        }
        // Spot check one entry against a hand sum.
        let mut s = 0.0;
        for k in 0..3 {
            s += a.get(2, k) * b.get(k, 1);
        }
        assert!((c.get(2, 1) - s).abs() < 1e-14);
    }

    #[test]
    fn text_round_trip() {
        let m = DenseMatrix::from_fn(3, 2, |i, j| (i as f64 + 0.25) * (j as f64 - 1.5));
        let back = DenseMatrix::parse_text(&m.to_text()).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(DenseMatrix::parse_text("2 2\n1 2 3").is_err());
        assert!(DenseMatrix::parse_text("2 2\n1 2 3 4 5").is_err());
        assert!(DenseMatrix::parse_text("2\n").is_err());
        assert!(DenseMatrix::parse_text("2 2\n1 2 3 nan").is_err());
    }
}
