//! Default numerical tolerances.
//!
//! The Jacobi eigensolver is run to an off-diagonal norm of `1e-13`, giving
//! eigenvalues to better than `1e-10` absolute for the matrix sizes in scope;
//! the decision tolerances below sit two orders of magnitude above that.

/// Hermiticity / symmetry defect accepted at construction.
pub const HERMITIAN_CONSTRUCTION: f64 = 1e-12;

/// Positive-semidefinite decisions (classicality, complete positivity, NB).
pub const PSD: f64 = 1e-9;

/// Group-membership residuals (symplectic, orthosymplectic).
pub const GROUP: f64 = 1e-10;

/// Off-diagonal Frobenius norm at which Jacobi sweeps stop.
pub const JACOBI_OFF_NORM: f64 = 1e-13;

/// Absolute negativity below which a quasiprobability sample still counts as
/// non-negative (closed-form evaluation carries only rounding error).
pub const QUASIPROB_NEGATIVITY: f64 = 1e-10;
