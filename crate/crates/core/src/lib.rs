//! Classicality analysis for multimode Gaussian states and bosonic Gaussian
//! channels on phase space.
//!
//! Everything is expressed in dimensionless quadrature units where the vacuum
//! covariance matrix is the identity and quadratures are ordered
//! `(q1, p1, ..., qn, pn)`. A Gaussian state is classical when its covariance
//! matrix dominates the identity; a bosonic Gaussian channel `(X, Y)` is
//! nonclassicality breaking when its characteristic matrix `Y - i X^T Ω X`
//! dominates the identity. The nonclassicality depth is the smallest isotropic
//! noise `α·I` that pushes a state (or channel) across that boundary.
//!
//! The crate is `no_std` (with `alloc`); all IO, serialization, and the
//! command-line front end live in the companion `ncdepth-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod channel;
pub mod eigen;
pub mod error;
pub mod hermitian;
pub mod mat;
pub mod oracle;
pub mod sampling;
pub mod state;
pub mod symplectic;
pub mod tol;

pub use channel::{CanonicalKind, ChannelVerdict, GaussianChannel};
pub use eigen::{matrix_abs_antisym, spectral_norm, sym_eigen};
pub use error::{Error, Result};
pub use hermitian::HermitianMat;
pub use mat::Mat;
pub use oracle::{
    bisect_threshold, depth_bisection, gaussian_crosscheck, is_classical_after_noise, laguerre,
    min_over_grid, quasiprob_value, FockDiagonalState, RadialGrid,
};
pub use state::{depth_set, pure_cov_from_symplectic, GaussianState, NoiseMatrix};
pub use symplectic::{is_orthosymplectic, is_symplectic, omega, qpqp_to_qqpp, qqpp_to_qpqp};
