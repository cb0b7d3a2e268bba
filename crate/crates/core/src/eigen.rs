//! Symmetric eigendecomposition via cyclic Jacobi, and the matrix utilities
//! built on it.
//!
//! Jacobi is the simplest provably convergent method and the matrices in
//! scope are small (a few dozen rows at most), so nothing fancier is needed.
//! Sweeps run until the off-diagonal Frobenius norm drops below
//! [`tol::JACOBI_OFF_NORM`], which bounds the eigenvalue error by the same
//! amount.

use alloc::vec::Vec;

use libm::sqrt;

use crate::error::{Error, Result};
use crate::mat::Mat;
use crate::tol;

const MAX_SWEEPS: usize = 64;

/// Eigendecomposition of a real symmetric matrix.
///
/// Returns eigenvalues in ascending order and the matching orthonormal
/// eigenvectors as the columns of the second matrix. Symmetry is assumed,
/// not checked; only the lower triangle drives the rotations.
pub fn sym_eigen(m: &Mat) -> (Vec<f64>, Mat) {
    let n = m.dim();
    let mut a = m.clone();
    let mut v = Mat::identity(n);
    if n <= 1 {
        return (a.as_slice().to_vec(), v);
    }

    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) <= tol::JACOBI_OFF_NORM {
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let app = a[(p, p)];
                let aqq = a[(q, q)];
                // Rotation that annihilates a_pq, in the numerically stable form.
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + sqrt(theta * theta + 1.0))
                } else {
                    -1.0 / (-theta + sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / sqrt(t * t + 1.0);
                let s = t * c;
                let tau = s / (1.0 + c);

                a[(p, p)] = app - t * apq;
                a[(q, q)] = aqq + t * apq;
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for i in 0..n {
                    if i != p && i != q {
                        let aip = a[(i, p)];
                        let aiq = a[(i, q)];
                        let new_p = aip - s * (aiq + tau * aip);
                        let new_q = aiq + s * (aip - tau * aiq);
                        a[(i, p)] = new_p;
                        a[(p, i)] = new_p;
                        a[(i, q)] = new_q;
                        a[(q, i)] = new_q;
                    }
                }
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = vip - s * (viq + tau * vip);
                    v[(i, q)] = viq + s * (vip - tau * viq);
                }
            }
        }
    }

    let mut evals: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| evals[i].partial_cmp(&evals[j]).unwrap());
    evals.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut vecs = Mat::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        for i in 0..n {
            vecs[(i, col)] = v[(i, src)];
        }
    }
    (evals, vecs)
}

fn off_norm(a: &Mat) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            acc += a[(i, j)] * a[(i, j)];
        }
    }
    sqrt(2.0 * acc)
}

/// Largest eigenvalue of a symmetric positive-semidefinite matrix.
pub fn spectral_norm(y: &Mat) -> Result<f64> {
    let defect = y.symmetry_defect();
    if defect > tol::HERMITIAN_CONSTRUCTION {
        return Err(Error::NotSymmetric(defect));
    }
    let (evals, _) = sym_eigen(&y.symmetrize());
    Ok(*evals.last().expect("non-empty matrix"))
}

/// Matrix absolute value `(A^T A)^{1/2}` of a real antisymmetric `A`.
///
/// The result is symmetric positive semidefinite and dominates both `iA` and
/// `-iA` in the PSD order, which is what makes it the minimal admissible
/// noise for a given antisymmetric commutator defect.
pub fn matrix_abs_antisym(a: &Mat) -> Result<Mat> {
    let defect = a.antisymmetry_defect();
    if defect > tol::HERMITIAN_CONSTRUCTION {
        return Err(Error::NotAntisymmetric(defect));
    }
    let n = a.dim();
    let gram = &a.transpose() * a;
    let (evals, vecs) = sym_eigen(&gram.symmetrize());
    let mut abs = Mat::zeros(n);
    for k in 0..n {
        let lam = sqrt(evals[k].max(0.0));
        for i in 0..n {
            let vik = vecs[(i, k)];
            if vik == 0.0 {
                continue;
            }
            for j in 0..n {
                abs[(i, j)] += lam * vik * vecs[(j, k)];
            }
        }
    }
    Ok(abs.symmetrize())
}
