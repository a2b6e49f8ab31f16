//! Row-major f32 matrices and the small set of vector kernels everything
//! else is built from.

use crate::error::{shape_err, Result};

/// Guard for cosine denominators.
pub const COSINE_EPS: f32 = 1e-8;

/// Dense row-major f32 matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(shape_err(
                "Matrix::from_vec",
                format!("{} values for {rows}x{cols}", data.len()),
            ));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[f32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [f32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f32] {
        &mut self.data
    }

    pub fn fill(&mut self, v: f32) {
        self.data.fill(v);
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// self += scale * other (shapes must match).
    pub fn add_scaled(&mut self, scale: f32, other: &Matrix) {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += scale * b;
        }
    }
}

/// Dot product with a fixed eight-lane summation order: lane `j` accumulates
/// elements `j, j+8, j+16, ...` and the lanes are added left to right.
/// The order is part of the crate's determinism contract.
pub fn dot(a: &[f32], b: &[f32]) -> f32 {
    debug_assert_eq!(a.len(), b.len());
    let n = a.len();
    let chunks = n / 8;
    let mut acc = [0.0f32; 8];
    for t in 0..chunks {
        let base = t * 8;
        for j in 0..8 {
            acc[j] += a[base + j] * b[base + j];
        }
    }
    for i in chunks * 8..n {
        acc[i % 8] += a[i] * b[i];
    }
    let mut total = 0.0f32;
    for lane in acc {
        total += lane;
    }
    total
}

/// y += s * x
pub fn axpy(y: &mut [f32], s: f32, x: &[f32]) {
    debug_assert_eq!(y.len(), x.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += s * xi;
    }
}

/// Matrix-vector product, one `dot` per row.
pub fn matvec(m: &Matrix, v: &[f32]) -> Result<Vec<f32>> {
    if m.cols() != v.len() {
        return Err(shape_err("matvec", format!("{}x{} * {}", m.rows(), m.cols(), v.len())));
    }
    Ok((0..m.rows()).map(|r| dot(m.row(r), v)).collect())
}

/// out += M^T v, accumulated row by row (out has length m.cols()).
pub fn matvec_t_accum(out: &mut [f32], m: &Matrix, v: &[f32]) {
    debug_assert_eq!(out.len(), m.cols());
    debug_assert_eq!(v.len(), m.rows());
    for r in 0..m.rows() {
        axpy(out, v[r], m.row(r));
    }
}

/// grads += u v^T (u indexes rows, v indexes columns).
pub fn outer_accum(grads: &mut Matrix, u: &[f32], v: &[f32]) {
    debug_assert_eq!(grads.rows(), u.len());
    debug_assert_eq!(grads.cols(), v.len());
    for (r, &ur) in u.iter().enumerate() {
        if ur != 0.0 {
            axpy(grads.row_mut(r), ur, v);
        }
    }
}

pub fn sigmoid(x: f32) -> f32 {
    1.0 / (1.0 + (-x).exp())
}

/// SiLU: x * sigmoid(x). Saturates gracefully at both ends.
pub fn silu(x: f32) -> f32 {
    x * sigmoid(x)
}

/// d/dx SiLU(x) = sigmoid(x) * (1 + x * (1 - sigmoid(x)))
pub fn silu_deriv(x: f32) -> f32 {
    let s = sigmoid(x);
    s * (1.0 + x * (1.0 - s))
}

/// Max-subtracted softmax over the full slice.
pub fn softmax(z: &[f32]) -> Vec<f32> {
    let mut out = z.to_vec();
    softmax_in_place(&mut out);
    out
}

/// In-place max-subtracted softmax.
pub fn softmax_in_place(z: &mut [f32]) {
    let max = z.iter().copied().fold(f32::NEG_INFINITY, f32::max);
    let mut sum = 0.0f32;
    for v in z.iter_mut() {
        *v = (*v - max).exp();
        sum += *v;
    }
    for v in z.iter_mut() {
        *v /= sum;
    }
}

/// Cosine similarity with an epsilon-guarded denominator. The all-zero /
/// all-zero pair returns 0 by convention.
pub fn cosine(a: &[f32], b: &[f32]) -> Result<f32> {
    if a.len() != b.len() {
        return Err(shape_err("cosine", format!("{} vs {}", a.len(), b.len())));
    }
    let mut num = 0.0f64;
    let mut na = 0.0f64;
    let mut nb = 0.0f64;
    for (&x, &y) in a.iter().zip(b) {
        num += x as f64 * y as f64;
        na += x as f64 * x as f64;
        nb += y as f64 * y as f64;
    }
    let denom = na.sqrt() * nb.sqrt();
    if denom < (COSINE_EPS as f64) * (COSINE_EPS as f64) {
        return Ok(0.0);
    }
    let c = (num / denom.max(COSINE_EPS as f64)) as f32;
    Ok(c.clamp(-1.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matvec_identity() {
        let m = Matrix::from_vec(2, 2, vec![1.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(matvec(&m, &[3.0, 4.0]).unwrap(), vec![3.0, 4.0]);
    }

    #[test]
    fn matvec_zero_matrix() {
        let m = Matrix::zeros(3, 2);
        assert_eq!(matvec(&m, &[5.0, -1.0]).unwrap(), vec![0.0; 3]);
    }

    #[test]
    fn matvec_hand_case() {
        let m = Matrix::from_vec(2, 2, vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(matvec(&m, &[1.0, 1.0]).unwrap(), vec![3.0, 7.0]);
    }

    #[test]
    fn matvec_shape_error() {
        let m = Matrix::zeros(2, 3);
        assert!(matvec(&m, &[1.0, 2.0]).is_err());
    }

    #[test]
    fn silu_values() {
        assert_eq!(silu(0.0), 0.0);
        assert!((silu(1.0) - 0.731059).abs() < 1e-5);
        assert!((silu_deriv(0.0) - 0.5).abs() < 1e-7);
    }

    #[test]
    fn softmax_symmetry_and_stability() {
        assert_eq!(softmax(&[0.0, 0.0]), vec![0.5, 0.5]);
        let big = softmax(&[1000.0, 1000.0]);
        assert!(big.iter().all(|v| v.is_finite()));
        assert_eq!(big, vec![0.5, 0.5]);
        let p = softmax(&[2.0, 3.0]);
        assert!((p[0] - 0.268941).abs() < 1e-5);
        assert!((p[1] - 0.731059).abs() < 1e-5);
    }

    #[test]
    fn cosine_conventions() {
        let v = [1.0, 2.0, -3.0];
        assert!((cosine(&v, &v).unwrap() - 1.0).abs() < 1e-6);
        assert!((cosine(&[1.0, 0.0], &[0.0, 1.0]).unwrap()).abs() < 1e-7);
        let neg: Vec<f32> = v.iter().map(|x| -x).collect();
        assert!((cosine(&v, &neg).unwrap() + 1.0).abs() < 1e-6);
        assert_eq!(cosine(&[0.0, 0.0], &[0.0, 0.0]).unwrap(), 0.0);
    }

    #[test]
    fn dot_matches_plain_sum_on_exact_values() {
        // Values exactly representable so any summation order agrees.
        let a: Vec<f32> = (0..19).map(|i| i as f32).collect();
        let b: Vec<f32> = (0..19).map(|i| (19 - i) as f32).collect();
        let plain: f32 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
        assert_eq!(dot(&a, &b), plain);
    }
}
