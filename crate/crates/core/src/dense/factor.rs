//! Small dense factorizations: Householder QR, symmetric eigendecomposition
//! (tridiagonalization + implicit-shift QL), and a QR-preconditioned
//! one-sided Jacobi SVD.
//!
//! These kernels only ever see skinny or small matrices (`m x l`, `l x n`,
//! `l x l` with `l` a few dozen), so plain loops over column-contiguous
//! scratch storage are fast enough. Correctness is pinned by reconstruction
//! oracles in the test suite rather than by the choice of kernel.
//!
//! Tolerances are relative to the input norm with an absolute floor of
//! 1e-14.

use crate::error::{Error, Result};
use crate::sketch::SvdApprox;
use crate::stiefel::StiefelPoint;

use super::matrix::DenseMatrix;

/// Rank tolerance for QR: `1e-12 * ||Y||_F`, floored at 1e-14.
const RANK_RTOL: f64 = 1e-12;
/// Eigenvalue clamping threshold for PSD checks, relative to the spectral norm.
const PSD_RTOL: f64 = 1e-10;
/// Absolute tolerance floor.
const ABS_FLOOR: f64 = 1e-14;
/// Jacobi sweep budget; typical inputs converge in well under ten sweeps.
const JACOBI_MAX_SWEEPS: usize = 64;
/// QL eigenvalue iteration budget per eigenvalue.
const QL_MAX_ITER: usize = 50;

/// Symmetric eigendecomposition `M = G diag(d) G^T` with `d` sorted
/// descending and `G` orthogonal. Ties keep the factorization's
/// first-occurrence order; downstream code only relies on spans within an
/// eigenspace.
#[derive(Debug, Clone)]
pub struct SymEig {
    pub values: Vec<f64>,
    pub vectors: DenseMatrix,
}

// ── column-major scratch ─────────────────────────────────────────────

/// Column-contiguous working storage: column `j` is
/// `data[j*col_len .. (j+1)*col_len]`.
struct ColMat {
    col_len: usize,
    ncols: usize,
    data: Vec<f64>,
}

impl ColMat {
    fn zeros(col_len: usize, ncols: usize) -> Self {
        Self { col_len, ncols, data: vec![0.0; col_len * ncols] }
    }

    /// Columns of the result are the columns of `a` (strided gather).
    fn from_dense(a: &DenseMatrix) -> Self {
        let (r, c) = (a.rows(), a.cols());
        let mut m = Self::zeros(r, c);
        for j in 0..c {
            let col = &mut m.data[j * r..(j + 1) * r];
            for (i, slot) in col.iter_mut().enumerate() {
                *slot = a.get(i, j);
            }
        }
        m
    }

    /// Columns of the result are the rows of `a` (contiguous copies), i.e.
    /// this is `a^T` in column-major form.
    fn from_dense_rows(a: &DenseMatrix) -> Self {
        Self {
            col_len: a.cols(),
            ncols: a.rows(),
            data: a.data().to_vec(),
        }
    }

    fn col(&self, j: usize) -> &[f64] {
        &self.data[j * self.col_len..(j + 1) * self.col_len]
    }

    fn col_mut(&mut self, j: usize) -> &mut [f64] {
        &mut self.data[j * self.col_len..(j + 1) * self.col_len]
    }

    fn two_cols_mut(&mut self, p: usize, q: usize) -> (&mut [f64], &mut [f64]) {
        debug_assert!(p < q);
        let (lo, hi) = self.data.split_at_mut(q * self.col_len);
        (
            &mut lo[p * self.col_len..(p + 1) * self.col_len],
            &mut hi[..self.col_len],
        )
    }

    /// Row-major matrix whose columns are this storage's columns.
    fn to_dense(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.col_len, self.ncols, |i, j| self.col(j)[i])
    }
}

#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

// ── Householder QR ───────────────────────────────────────────────────

/// Thin QR of column-major `m x l` storage with `m >= l`: returns `(Q, R)`
/// with `Q^T Q = I_l` (as a column-major factor) and `R` upper triangular.
fn householder_qr(mut a: ColMat) -> (ColMat, DenseMatrix) {
    let (m, l) = (a.col_len, a.ncols);
    assert!(m >= l, "QR requires rows >= cols");
    // Reflector k is stored with zeros above row k; a zero vector means the
    // column needed no reflection.
    let mut reflectors: Vec<(Vec<f64>, f64)> = Vec::with_capacity(l);

    for k in 0..l {
        let x = &a.col(k)[k..m];
        let normx = norm(x);
        if normx == 0.0 {
            reflectors.push((Vec::new(), 0.0));
            continue;
        }
        let alpha = if x[0] >= 0.0 { -normx } else { normx };
        let mut v = x.to_vec();
        v[0] -= alpha;
        let beta = 2.0 / dot(&v, &v);
        // Apply (I - beta v v^T) to the trailing columns.
        for j in k..l {
            let col = &mut a.col_mut(j)[k..m];
            let w = beta * dot(&v, col);
            for (c, vi) in col.iter_mut().zip(&v) {
                *c -= w * vi;
            }
        }
        // Column k is now [.., alpha, 0, ..]; force exact zeros below.
        let col = &mut a.col_mut(k)[k..m];
        col[0] = alpha;
        for c in col.iter_mut().skip(1) {
            *c = 0.0;
        }
        reflectors.push((v, beta));
    }

    let r = DenseMatrix::from_fn(l, l, |i, j| if i <= j { a.col(j)[i] } else { 0.0 });

    // Accumulate Q by applying the reflectors in reverse to I(:, 0..l).
    let mut q = ColMat::zeros(m, l);
    for j in 0..l {
        q.col_mut(j)[j] = 1.0;
    }
    for k in (0..l).rev() {
        let (v, beta) = &reflectors[k];
        if v.is_empty() {
            continue;
        }
        for j in 0..l {
            let col = &mut q.col_mut(j)[k..m];
            let w = beta * dot(v, col);
            for (c, vi) in col.iter_mut().zip(v) {
                *c -= w * vi;
            }
        }
    }
    (q, r)
}

/// Orthonormal basis of `span(Y)` with the triangular factor, via
/// Householder QR. Fails with `RankDeficient` when a diagonal of `R` falls
/// below `1e-12 * ||Y||_F`.
pub fn qr_orthonormalize(y: &DenseMatrix) -> Result<(StiefelPoint, DenseMatrix)> {
    let (q, r) = householder_qr(ColMat::from_dense(y));
    let tol = (RANK_RTOL * y.frob_norm()).max(ABS_FLOOR);
    let rank = (0..r.rows()).filter(|&k| r.get(k, k).abs() > tol).count();
    if rank < r.rows() {
        return Err(Error::RankDeficient { rank, wanted: r.rows() });
    }
    Ok((StiefelPoint::new(q.to_dense())?, r))
}

/// Orthonormal basis of `span(Y)`; `Q^T Q = I` and `span(Q) = span(Y)`.
pub fn orthonormalize(y: &DenseMatrix) -> Result<StiefelPoint> {
    qr_orthonormalize(y).map(|(q, _)| q)
}

// ── symmetric eigendecomposition ─────────────────────────────────────

/// Eigendecomposition of a symmetric matrix, values sorted descending.
///
/// The input is symmetrized (`(M + M^T)/2`) before factoring; callers are
/// expected to pass matrices that are symmetric up to roundoff.
pub fn sym_eig(m: &DenseMatrix) -> Result<SymEig> {
    assert_eq!(m.rows(), m.cols(), "sym_eig requires a square matrix");
    debug_assert!(
        m.sub(&m.transpose()).frob_norm() <= 1e-10 * m.frob_norm().max(1.0),
        "sym_eig input departs from symmetry beyond tolerance"
    );
    let n = m.rows();
    let mut v = m.symmetrize();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tred2(&mut v, &mut d, &mut e);
    tql2(&mut v, &mut d, &mut e)?;

    // Sort descending; stable in the factorization's output order.
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| d[b].partial_cmp(&d[a]).unwrap().then(a.cmp(&b)));
    let values: Vec<f64> = idx.iter().map(|&i| d[i]).collect();
    let vectors = DenseMatrix::from_fn(n, n, |i, j| v.get(i, idx[j]));
    Ok(SymEig { values, vectors })
}

/// Householder reduction to tridiagonal form, with accumulation. On return
/// `d` holds the diagonal, `e[1..]` the subdiagonal, and `v` the orthogonal
/// transformation.
fn tred2(v: &mut DenseMatrix, d: &mut [f64], e: &mut [f64]) {
    let n = v.rows();
    for j in 0..n {
        d[j] = v.get(n - 1, j);
    }
    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for item in d.iter().take(i) {
            scale += item.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v.get(i - 1, j);
                v.set(i, j, 0.0);
                v.set(j, i, 0.0);
            }
        } else {
            for item in d.iter_mut().take(i) {
                *item /= scale;
                h += *item * *item;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for item in e.iter_mut().take(i) {
                *item = 0.0;
            }
            for j in 0..i {
                f = d[j];
                v.set(j, i, f);
                g = e[j] + v.get(j, j) * f;
                for k in (j + 1)..i {
                    g += v.get(k, j) * d[k];
                    e[k] += v.get(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    let val = v.get(k, j) - (f * e[k] + g * d[k]);
                    v.set(k, j, val);
                }
                d[j] = v.get(i - 1, j);
                v.set(i, j, 0.0);
            }
        }
        d[i] = h;
    }
    for i in 0..n - 1 {
        v.set(n - 1, i, v.get(i, i));
        v.set(i, i, 1.0);
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v.get(k, i + 1) / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v.get(k, i + 1) * v.get(k, j);
                }
                for k in 0..=i {
                    let val = v.get(k, j) - g * d[k];
                    v.set(k, j, val);
                }
            }
        }
        for k in 0..=i {
            v.set(k, i + 1, 0.0);
        }
    }
    for j in 0..n {
        d[j] = v.get(n - 1, j);
        v.set(n - 1, j, 0.0);
    }
    v.set(n - 1, n - 1, 1.0);
    e[0] = 0.0;
}

/// Implicit-shift QL iteration on a symmetric tridiagonal matrix, updating
/// the accumulated transformation in `v`.
fn tql2(v: &mut DenseMatrix, d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = v.rows();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0_f64;
    let mut tst1 = 0.0_f64;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > QL_MAX_ITER {
                    return Err(Error::ConvergenceFailure("symmetric QL iteration"));
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0_f64;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0_f64;
                let mut s2 = 0.0_f64;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for k in 0..n {
                        h = v.get(k, i + 1);
                        v.set(k, i + 1, s * v.get(k, i) + c * h);
                        v.set(k, i, c * v.get(k, i) - s * h);
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

// ── PSD square root and shifted pseudo-inverse ───────────────────────

/// Unique symmetric PSD square root `T` with `T T = M`, via the spectrum.
/// Eigenvalues in `[-1e-10 * ||M||_sp, 0)` are clamped to zero; anything
/// more negative is rejected.
pub fn psd_sqrt(m: &DenseMatrix) -> Result<DenseMatrix> {
    let eig = sym_eig(m)?;
    let spectral = eig.values.iter().fold(0.0_f64, |a, &x| a.max(x.abs()));
    let tol = (PSD_RTOL * spectral).max(ABS_FLOOR);
    let mut roots = Vec::with_capacity(eig.values.len());
    for &d in &eig.values {
        if d < -tol {
            return Err(Error::NotPositiveSemiDefinite { min_eigenvalue: d });
        }
        roots.push(d.max(0.0).sqrt());
    }
    Ok(scaled_eigvec_product(&eig.vectors, &roots))
}

/// `(lambda I - M)^+` for symmetric `M`: eigenvalues with
/// `|lambda - d_i| > 1e-10 * max(1, |lambda|)` are inverted, the rest are
/// zeroed.
pub fn shifted_pinv(m: &DenseMatrix, lambda: f64) -> Result<DenseMatrix> {
    let eig = sym_eig(m)?;
    let tol = 1e-10 * lambda.abs().max(1.0);
    let weights: Vec<f64> = eig
        .values
        .iter()
        .map(|&d| {
            let shift = lambda - d;
            if shift.abs() > tol {
                1.0 / shift
            } else {
                0.0
            }
        })
        .collect();
    Ok(scaled_eigvec_product(&eig.vectors, &weights))
}

/// `G diag(w) G^T`.
fn scaled_eigvec_product(g: &DenseMatrix, w: &[f64]) -> DenseMatrix {
    let scaled = DenseMatrix::from_fn(g.rows(), g.cols(), |i, j| g.get(i, j) * w[j]);
    scaled.matmul_nt(g).symmetrize()
}

// ── one-sided Jacobi SVD ─────────────────────────────────────────────

/// Orthogonalizes the columns of `f` by Jacobi rotations, accumulating the
/// right factor into `j`. On return the columns of `f` are mutually
/// orthogonal and `f_in * j = f_out`.
fn jacobi_orthogonalize(f: &mut ColMat, j: &mut ColMat) -> Result<()> {
    let ncols = f.ncols;
    let conv = 1e-14;
    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut rotated = 0usize;
        for p in 0..ncols.saturating_sub(1) {
            for q in (p + 1)..ncols {
                let (fp, fq) = f.two_cols_mut(p, q);
                let alpha = dot(fp, fp);
                let beta = dot(fq, fq);
                let gamma = dot(fp, fq);
                if alpha == 0.0 || beta == 0.0 {
                    continue;
                }
                if gamma.abs() <= conv * (alpha * beta).sqrt() {
                    continue;
                }
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for (a, b) in fp.iter_mut().zip(fq.iter_mut()) {
                    let (x, y) = (*a, *b);
                    *a = c * x - s * y;
                    *b = s * x + c * y;
                }
                let (jp, jq) = j.two_cols_mut(p, q);
                for (a, b) in jp.iter_mut().zip(jq.iter_mut()) {
                    let (x, y) = (*a, *b);
                    *a = c * x - s * y;
                    *b = s * x + c * y;
                }
                rotated += 1;
            }
        }
        if rotated == 0 {
            return Ok(());
        }
    }
    Err(Error::ConvergenceFailure("one-sided Jacobi sweep"))
}

/// Singular values of any matrix, descending. Runs the one-sided Jacobi
/// iteration on a column-major copy and reads off the column norms.
pub fn singular_values(m: &DenseMatrix) -> Result<Vec<f64>> {
    let mut f = if m.rows() >= m.cols() {
        ColMat::from_dense(m)
    } else {
        ColMat::from_dense_rows(m)
    };
    let mut j = ColMat::zeros(f.ncols, f.ncols);
    for k in 0..f.ncols {
        j.col_mut(k)[k] = 1.0;
    }
    jacobi_orthogonalize(&mut f, &mut j)?;
    let mut s: Vec<f64> = (0..f.ncols).map(|k| norm(f.col(k))).collect();
    s.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(s)
}

/// Thin SVD of a wide matrix `B` (`l x n`, `l <= n`):
/// `B = W diag(s) V^T` with `s` descending, `W` an `l x l` orthogonal
/// matrix and `V` an `n x l` matrix with orthonormal columns.
///
/// Internally factors `B^T = Q R` by Householder QR and runs one-sided
/// Jacobi on the small `R`, so accuracy does not degrade with `n`.
pub fn thin_svd(b: &DenseMatrix) -> Result<SvdApprox> {
    let (l, n) = (b.rows(), b.cols());
    assert!(l <= n, "thin_svd expects a wide matrix");
    // B^T in column-major form is exactly B's row-major buffer.
    let (q, r) = householder_qr(ColMat::from_dense_rows(b));

    let mut f = ColMat::from_dense(&r);
    let mut j = ColMat::zeros(l, l);
    for k in 0..l {
        j.col_mut(k)[k] = 1.0;
    }
    jacobi_orthogonalize(&mut f, &mut j)?;

    // Sort columns by norm, descending; stable for ties.
    let col_norms: Vec<f64> = (0..l).map(|k| norm(f.col(k))).collect();
    let mut order: Vec<usize> = (0..l).collect();
    order.sort_by(|&a, &b| {
        col_norms[b]
            .partial_cmp(&col_norms[a])
            .unwrap()
            .then(a.cmp(&b))
    });
    let s: Vec<f64> = order.iter().map(|&k| col_norms[k]).collect();

    // Left factor of R: normalized columns of F, completing an orthonormal
    // basis where a singular value is exactly zero.
    let mut u_r = ColMat::zeros(l, l);
    let mut filled: Vec<usize> = Vec::new();
    for (new_col, &old_col) in order.iter().enumerate() {
        if s[new_col] > 0.0 {
            let inv = 1.0 / s[new_col];
            let src = f.col(old_col).to_vec();
            for (dst, x) in u_r.col_mut(new_col).iter_mut().zip(&src) {
                *dst = x * inv;
            }
            filled.push(new_col);
        }
    }
    for new_col in 0..l {
        if s[new_col] > 0.0 {
            continue;
        }
        // Gram-Schmidt a standard basis vector against the built columns.
        let mut chosen = None;
        for cand in 0..l {
            let mut g = vec![0.0; l];
            g[cand] = 1.0;
            for &c in &filled {
                let coef = dot(&g, u_r.col(c));
                for (gi, ui) in g.iter_mut().zip(u_r.col(c)) {
                    *gi -= coef * ui;
                }
            }
            let gn = norm(&g);
            if gn > 0.5 {
                for x in &mut g {
                    *x /= gn;
                }
                chosen = Some(g);
                break;
            }
        }
        let g = chosen.expect("orthonormal completion always exists");
        u_r.col_mut(new_col).copy_from_slice(&g);
        filled.push(new_col);
    }

    // W = J with columns permuted; V = Q * U_R.
    let w = DenseMatrix::from_fn(l, l, |i, jj| j.col(order[jj])[i]);
    let v = q.to_dense().matmul(&u_r.to_dense());
    SvdApprox::new(w, s, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn qr_axis_aligned() {
        let y = DenseMatrix::new(3, 2, vec![2.0, 0.0, 0.0, 3.0, 0.0, 0.0]);
        let q = orthonormalize(&y).unwrap();
        let proj = q.matrix().matmul_nt(q.matrix());
        // Projector onto the first two axes.
        let expect = DenseMatrix::new(3, 3, vec![1., 0., 0., 0., 1., 0., 0., 0., 0.]);
        assert!(proj.sub(&expect).frob_norm() < 1e-12);
    }

    #[test]
    fn qr_detects_rank_deficiency() {
        let y = DenseMatrix::new(3, 2, vec![1.0, 2.0, 1.0, 2.0, 1.0, 2.0]);
        match orthonormalize(&y) {
            Err(Error::RankDeficient { rank, wanted }) => {
                assert_eq!((rank, wanted), (1, 2));
            }
            other => panic!("expected RankDeficient, got {other:?}"),
        }
    }

    #[test]
    fn sym_eig_identity_and_diag() {
        let eig = sym_eig(&DenseMatrix::identity(3)).unwrap();
        for &v in &eig.values {
            approx(v, 1.0, 1e-14);
        }
        let m = DenseMatrix::new(2, 2, vec![4.0, 0.0, 0.0, 1.0]);
        let eig = sym_eig(&m).unwrap();
        approx(eig.values[0], 4.0, 1e-14);
        approx(eig.values[1], 1.0, 1e-14);
        // Eigenvectors are +-e1, +-e2.
        assert!(eig.vectors.get(0, 0).abs() > 1.0 - 1e-12);
        assert!(eig.vectors.get(1, 1).abs() > 1.0 - 1e-12);
    }

    #[test]
    fn psd_sqrt_diagonal() {
        let m = DenseMatrix::new(2, 2, vec![4.0, 0.0, 0.0, 9.0]);
        let t = psd_sqrt(&m).unwrap();
        approx(t.get(0, 0), 2.0, 1e-12);
        approx(t.get(1, 1), 3.0, 1e-12);
        approx(t.get(0, 1), 0.0, 1e-12);
        let id = psd_sqrt(&DenseMatrix::identity(4)).unwrap();
        assert!(id.sub(&DenseMatrix::identity(4)).frob_norm() < 1e-12);
    }

    #[test]
    fn psd_sqrt_rejects_indefinite() {
        let m = DenseMatrix::new(2, 2, vec![1.0, 0.0, 0.0, -0.5]);
        assert!(matches!(
            psd_sqrt(&m),
            Err(Error::NotPositiveSemiDefinite { .. })
        ));
    }

    #[test]
    fn shifted_pinv_exact_shift() {
        // (2I - diag([2,1]))^+ = diag([0, 1])
        let m = DenseMatrix::new(2, 2, vec![2.0, 0.0, 0.0, 1.0]);
        let p = shifted_pinv(&m, 2.0).unwrap();
        approx(p.get(0, 0), 0.0, 1e-12);
        approx(p.get(1, 1), 1.0, 1e-12);
        // (I - 0)^+ = I
        let z = DenseMatrix::zeros(3, 3);
        let p = shifted_pinv(&z, 1.0).unwrap();
        assert!(p.sub(&DenseMatrix::identity(3)).frob_norm() < 1e-12);
    }

    #[test]
    fn thin_svd_diagonal_and_zero() {
        let mut b = DenseMatrix::zeros(2, 4);
        b.set(0, 0, 3.0);
        b.set(1, 1, 1.0);
        let svd = thin_svd(&b).unwrap();
        approx(svd.s[0], 3.0, 1e-12);
        approx(svd.s[1], 1.0, 1e-12);
        assert!(svd.u.get(0, 0).abs() > 1.0 - 1e-12);

        let z = DenseMatrix::zeros(2, 4);
        let svd = thin_svd(&z).unwrap();
        assert_eq!(svd.s, vec![0.0, 0.0]);
        assert!(svd.v.orthonormality_residual() < 1e-12);
        assert!(svd.u.orthonormality_residual() < 1e-12);
    }
}
