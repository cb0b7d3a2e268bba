//! Dense real square matrices (row-major `Vec<f64>`).
//!
//! Phase-space objects in this crate are all small dense `2n x 2n` matrices;
//! this module carries just the arithmetic they need. Evenness of the
//! dimension is enforced where the physics requires it (states, channels,
//! the symplectic form), not here.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

use crate::error::{Error, Result};

/// Dense real square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    dim: usize,
    data: Vec<f64>,
}

impl Mat {
    /// Builds a `dim x dim` matrix from row-major entries.
    pub fn from_vec(dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::BadShape {
                expected: dim * dim,
                got: data.len(),
            });
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFiniteEntry);
        }
        Ok(Mat { dim, data })
    }

    /// Builds a matrix from nested rows, checking squareness.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::BadShape {
                    expected: dim,
                    got: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Mat::from_vec(dim, data)
    }

    pub fn zeros(dim: usize) -> Self {
        Mat {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Mat::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// `c * I`.
    pub fn scaled_identity(dim: usize, c: f64) -> Self {
        let mut m = Mat::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = c;
        }
        m
    }

    pub fn diagonal(entries: &[f64]) -> Self {
        let mut m = Mat::zeros(entries.len());
        for (i, &x) in entries.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn transpose(&self) -> Mat {
        let n = self.dim;
        let mut t = Mat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn scale(&self, c: f64) -> Mat {
        Mat {
            dim: self.dim,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    /// Largest absolute entry of `self - other`.
    pub fn max_abs_diff(&self, other: &Mat) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    /// Max-abs deviation from `A = A^T`.
    pub fn symmetry_defect(&self) -> f64 {
        let n = self.dim;
        let mut d = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                d = d.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        d
    }

    /// Max-abs deviation from `A = -A^T` (diagonal included).
    pub fn antisymmetry_defect(&self) -> f64 {
        let n = self.dim;
        let mut d = 0.0f64;
        for i in 0..n {
            for j in i..n {
                d = d.max((self[(i, j)] + self[(j, i)]).abs());
            }
        }
        d
    }

    /// `(A + A^T) / 2`.
    pub fn symmetrize(&self) -> Mat {
        let n = self.dim;
        let mut s = Mat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                s[(i, j)] = 0.5 * (self[(i, j)] + self[(j, i)]);
            }
        }
        s
    }

    /// `(A - A^T) / 2`.
    pub fn antisymmetrize(&self) -> Mat {
        let n = self.dim;
        let mut s = Mat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                s[(i, j)] = 0.5 * (self[(i, j)] - self[(j, i)]);
            }
        }
        s
    }

    /// Matrix-vector product `A v`.
    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.dim);
        let n = self.dim;
        let mut out = vec![0.0; n];
        for i in 0..n {
            let mut acc = 0.0;
            for j in 0..n {
                acc += self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// Determinant via LU with partial pivoting.
    pub fn det(&self) -> f64 {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut det = 1.0f64;
        for k in 0..n {
            let mut piv = k;
            let mut best = a[k * n + k].abs();
            for i in (k + 1)..n {
                let x = a[i * n + k].abs();
                if x > best {
                    best = x;
                    piv = i;
                }
            }
            if best == 0.0 {
                return 0.0;
            }
            if piv != k {
                for j in 0..n {
                    a.swap(k * n + j, piv * n + j);
                }
                det = -det;
            }
            let pivot = a[k * n + k];
            det *= pivot;
            for i in (k + 1)..n {
                let factor = a[i * n + k] / pivot;
                for j in (k + 1)..n {
                    a[i * n + j] -= factor * a[k * n + j];
                }
            }
        }
        det
    }

    /// Rows as nested vectors (for serialization front ends).
    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|i| self.data[i * self.dim..(i + 1) * self.dim].to_vec())
            .collect()
    }

    pub(crate) fn as_slice(&self) -> &[f64] {
        &self.data
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!(self.dim, rhs.dim);
        Mat {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!(self.dim, rhs.dim);
        Mat {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self[(i, k)];
                if aik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += aik * rhs[(k, j)];
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_vec_rejects_bad_shape() {
        assert_eq!(
            Mat::from_vec(2, vec![1.0, 2.0, 3.0]),
            Err(Error::BadShape { expected: 4, got: 3 })
        );
    }

    #[test]
    fn from_vec_rejects_non_finite() {
        assert_eq!(
            Mat::from_vec(1, vec![f64::NAN]),
            Err(Error::NonFiniteEntry)
        );
    }

    #[test]
    fn multiply_and_transpose() {
        let a = Mat::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let b = Mat::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let ab = &a * &b;
        assert_eq!(ab, Mat::from_rows(&[vec![2.0, 1.0], vec![4.0, 3.0]]).unwrap());
        assert_eq!(
            a.transpose(),
            Mat::from_rows(&[vec![1.0, 3.0], vec![2.0, 4.0]]).unwrap()
        );
    }

    #[test]
    fn determinant() {
        let a = Mat::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert!((a.det() - 3.0).abs() < 1e-12);
        let rot = Mat::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]).unwrap();
        assert!((rot.det() - 1.0).abs() < 1e-12);
        assert_eq!(Mat::zeros(3).det(), 0.0);
    }

    #[test]
    fn symmetry_defects() {
        let a = Mat::from_rows(&[vec![1.0, 2.0], vec![2.0 + 1e-6, 1.0]]).unwrap();
        assert!((a.symmetry_defect() - 1e-6).abs() < 1e-12);
        let b = Mat::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]).unwrap();
        assert_eq!(b.antisymmetry_defect(), 0.0);
        assert_eq!(b.symmetrize(), Mat::zeros(2));
    }
}
