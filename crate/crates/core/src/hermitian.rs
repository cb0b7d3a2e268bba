//! Complex Hermitian matrices stored as real and imaginary parts.
//!
//! Every Hermitian matrix in this domain arises as `H = A + iB` with `A` real
//! symmetric and `B` real antisymmetric (characteristic matrices `Y - iX^T Ω X`,
//! covariance tests `V + iΩ`), so the split representation is exact and keeps
//! the arithmetic real.

use crate::eigen;
use crate::error::{Error, Result};
use crate::mat::Mat;
use crate::tol;

/// Hermitian matrix `H = re + i·im`, with `re` symmetric and `im` antisymmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMat {
    re: Mat,
    im: Mat,
}

impl HermitianMat {
    /// Builds `re + i·im`, rejecting inputs farther than `1e-12` from
    /// Hermitian and symmetrizing the remainder: `H <- (H + H^dagger)/2`.
    pub fn new(re: Mat, im: Mat) -> Result<Self> {
        if re.dim() != im.dim() {
            return Err(Error::DimensionMismatch {
                left: re.dim(),
                right: im.dim(),
            });
        }
        let defect = re.symmetry_defect().max(im.antisymmetry_defect());
        if defect > tol::HERMITIAN_CONSTRUCTION {
            return Err(Error::NotHermitian(defect));
        }
        Ok(HermitianMat {
            re: re.symmetrize(),
            im: im.antisymmetrize(),
        })
    }

    /// Embeds a real symmetric matrix as Hermitian (zero imaginary part).
    pub fn from_real(re: Mat) -> Result<Self> {
        let dim = re.dim();
        HermitianMat::new(re, Mat::zeros(dim))
    }

    pub fn dim(&self) -> usize {
        self.re.dim()
    }

    pub fn re(&self) -> &Mat {
        &self.re
    }

    pub fn im(&self) -> &Mat {
        &self.im
    }

    /// Real symmetric embedding `[[A, -B], [B, A]]` of `H = A + iB`; each
    /// eigenvalue of `H` appears twice in the embedding.
    pub fn real_embedding(&self) -> Mat {
        let d = self.dim();
        let mut m = Mat::zeros(2 * d);
        for i in 0..d {
            for j in 0..d {
                let a = self.re[(i, j)];
                let b = self.im[(i, j)];
                m[(i, j)] = a;
                m[(d + i, d + j)] = a;
                m[(i, d + j)] = -b;
                m[(d + i, j)] = b;
            }
        }
        m
    }

    /// Smallest eigenvalue, via cyclic Jacobi on the real embedding.
    pub fn min_eig(&self) -> f64 {
        let (evals, _) = eigen::sym_eigen(&self.real_embedding());
        evals[0]
    }

    /// `H >= c·I` in the positive-semidefinite order, up to `tol`.
    pub fn psd_geq(&self, c: f64, tol: f64) -> bool {
        self.min_eig() >= c - tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn construction_symmetrizes_small_defects() {
        let re = Mat::from_rows(&[vec![1.0, 2.0 + 1e-13], vec![2.0, 1.0]]).unwrap();
        let h = HermitianMat::from_real(re).unwrap();
        assert_eq!(h.re()[(0, 1)], h.re()[(1, 0)]);
    }

    #[test]
    fn construction_rejects_large_defects() {
        let re = Mat::from_rows(&[vec![1.0, 2.0], vec![2.1, 1.0]]).unwrap();
        assert!(matches!(
            HermitianMat::from_real(re),
            Err(Error::NotHermitian(_))
        ));
        let sym = Mat::identity(2);
        let not_antisym = Mat::identity(2);
        assert!(matches!(
            HermitianMat::new(sym, not_antisym),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn real_embedding_block_layout() {
        let re = Mat::zeros(2);
        let im = Mat::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]).unwrap();
        let h = HermitianMat::new(re, im).unwrap();
        let m = h.real_embedding();
        // [[0, -B], [B, 0]] with B = [[0,1],[-1,0]]
        assert_eq!(m[(0, 3)], -1.0);
        assert_eq!(m[(1, 2)], 1.0);
        assert_eq!(m[(2, 1)], 1.0);
        assert_eq!(m[(3, 0)], -1.0);
        assert_eq!(m.symmetry_defect(), 0.0);
    }
}
