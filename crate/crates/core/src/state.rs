//! Gaussian states by covariance matrix: classicality and nonclassicality
//! depth.
//!
//! A state is classical exactly when `V >= I`, and its nonclassicality depth
//! is `max(0, 1 - λ_min(V))`: the smallest isotropic noise `α·I` whose
//! addition makes the state classical. Displacements never affect either
//! quantity, so the mean vector is carried but ignored by every test here.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hermitian::HermitianMat;
use crate::mat::Mat;
use crate::symplectic::{is_orthosymplectic, is_symplectic, omega};
use crate::tol;

/// Additive-noise matrix: real symmetric `Y >= 0`.
///
/// This is the complete-positivity condition for the classical noise channel
/// that multiplies the characteristic function by `exp(-ξ^T Y ξ / 2)`, i.e.
/// adds `Y` to covariance matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseMatrix {
    y: Mat,
}

impl NoiseMatrix {
    pub fn new(y: Mat) -> Result<Self> {
        if y.dim() % 2 != 0 || y.dim() == 0 {
            return Err(Error::OddDimension(y.dim()));
        }
        let defect = y.symmetry_defect();
        if defect > tol::HERMITIAN_CONSTRUCTION {
            return Err(Error::NotSymmetric(defect));
        }
        let y = y.symmetrize();
        let min = HermitianMat::from_real(y.clone())?.min_eig();
        if min < -tol::PSD {
            return Err(Error::InvalidNoise(min));
        }
        Ok(NoiseMatrix { y })
    }

    /// Isotropic noise `α·I` on `n` modes.
    pub fn isotropic(n: usize, alpha: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModes);
        }
        if !(alpha >= 0.0) {
            return Err(Error::ParameterOutOfRange {
                name: "alpha",
                value: alpha,
            });
        }
        Ok(NoiseMatrix {
            y: Mat::scaled_identity(2 * n, alpha),
        })
    }

    pub fn matrix(&self) -> &Mat {
        &self.y
    }

    pub fn modes(&self) -> usize {
        self.y.dim() / 2
    }
}

/// Gaussian state: covariance matrix (vacuum = identity) and optional mean.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianState {
    n: usize,
    cov: Mat,
    mean: Option<Vec<f64>>,
}

impl GaussianState {
    /// Validates symmetry of `V` and the bona fide condition `V + iΩ >= 0`
    /// (minimum eigenvalue at least `-1e-9`, so boundary covariance matrices
    /// from experiment are admitted).
    pub fn new(cov: Mat, mean: Option<Vec<f64>>) -> Result<Self> {
        if cov.dim() % 2 != 0 || cov.dim() == 0 {
            return Err(Error::OddDimension(cov.dim()));
        }
        let n = cov.dim() / 2;
        let defect = cov.symmetry_defect();
        if defect > tol::HERMITIAN_CONSTRUCTION {
            return Err(Error::NotSymmetric(defect));
        }
        let cov = cov.symmetrize();
        if let Some(ref m) = mean {
            if m.len() != 2 * n {
                return Err(Error::BadShape {
                    expected: 2 * n,
                    got: m.len(),
                });
            }
            if m.iter().any(|x| !x.is_finite()) {
                return Err(Error::NonFiniteEntry);
            }
        }
        let bona_fide = HermitianMat::new(cov.clone(), omega(n)?)?;
        let min = bona_fide.min_eig();
        if min < -tol::PSD {
            return Err(Error::InvalidCovariance(min));
        }
        Ok(GaussianState { n, cov, mean })
    }

    /// The `n`-mode vacuum: `V = I`, zero displacement.
    pub fn vacuum(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModes);
        }
        Ok(GaussianState {
            n,
            cov: Mat::identity(2 * n),
            mean: None,
        })
    }

    pub fn modes(&self) -> usize {
        self.n
    }

    pub fn cov(&self) -> &Mat {
        &self.cov
    }

    pub fn mean(&self) -> Option<&[f64]> {
        self.mean.as_deref()
    }

    /// Smallest eigenvalue of the covariance matrix.
    pub fn min_variance(&self) -> f64 {
        HermitianMat::from_real(self.cov.clone())
            .expect("covariance is symmetric")
            .min_eig()
    }

    /// Classical iff `V >= I`; independent of the mean.
    pub fn is_classical(&self) -> bool {
        self.is_classical_tol(tol::PSD)
    }

    pub fn is_classical_tol(&self, tol: f64) -> bool {
        self.min_variance() >= 1.0 - tol
    }

    /// Nonclassicality depth `max(0, 1 - λ_min(V))`, in `[0, 1]`.
    pub fn depth(&self) -> f64 {
        (1.0 - self.min_variance()).max(0.0)
    }

    /// Output of the additive-noise channel: `V + Y`, mean unchanged.
    pub fn add_noise(&self, noise: &NoiseMatrix) -> Result<GaussianState> {
        if noise.modes() != self.n {
            return Err(Error::DimensionMismatch {
                left: 2 * self.n,
                right: 2 * noise.modes(),
            });
        }
        Ok(GaussianState {
            n: self.n,
            cov: self.cov() + noise.matrix(),
            mean: self.mean.clone(),
        })
    }

    /// Membership test for the set of noises that classicalize this state:
    /// `V + Y >= I`.
    pub fn noise_renders_classical(&self, noise: &NoiseMatrix) -> Result<bool> {
        Ok(self.add_noise(noise)?.is_classical())
    }

    /// Conjugation by a passive canonical transformation: `V -> R^T V R`,
    /// `mean -> R^T mean`. Leaves the depth invariant.
    pub fn apply_orthosymplectic(&self, r: &Mat) -> Result<GaussianState> {
        if r.dim() != 2 * self.n {
            return Err(Error::DimensionMismatch {
                left: 2 * self.n,
                right: r.dim(),
            });
        }
        if !is_orthosymplectic(r, tol::GROUP)? {
            return Err(Error::NotOrthosymplectic(tol::GROUP));
        }
        let rt = r.transpose();
        Ok(GaussianState {
            n: self.n,
            cov: (&(&rt * &self.cov) * r).symmetrize(),
            mean: self.mean.as_ref().map(|m| rt.mul_vec(m)),
        })
    }
}

/// Depth of a set of states: the maximum of the member depths.
pub fn depth_set(states: &[GaussianState]) -> Result<f64> {
    let first = states.first().ok_or(Error::EmptySet)?;
    let n = first.modes();
    let mut max = 0.0f64;
    for s in states {
        if s.modes() != n {
            return Err(Error::DimensionMismatch {
                left: 2 * n,
                right: 2 * s.modes(),
            });
        }
        max = max.max(s.depth());
    }
    Ok(max)
}

/// Pure-state covariance `V = S S^T` from a symplectic `S`; these are exactly
/// the minimal elements of the covariance-matrix cone.
pub fn pure_cov_from_symplectic(s: &Mat) -> Result<GaussianState> {
    if !is_symplectic(s, tol::GROUP)? {
        return Err(Error::NotSymplectic(tol::GROUP));
    }
    GaussianState::new((s * &s.transpose()).symmetrize(), None)
}
