//! Error type shared by the whole crate.

use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Invalid-argument conditions raised by constructors and operations.
///
/// Residuals carried by the variants are the measured defect (max-abs entry
/// deviation or offending eigenvalue) that triggered the rejection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// Mode count was zero.
    ZeroModes,
    /// Phase-space matrix dimension must be even (2n).
    OddDimension(usize),
    /// Entry count or vector length inconsistent with the declared dimension.
    BadShape { expected: usize, got: usize },
    /// Operands act on different mode counts.
    DimensionMismatch { left: usize, right: usize },
    /// Matrix entries must be finite.
    NonFiniteEntry,
    /// `H != H^dagger` beyond tolerance.
    NotHermitian(f64),
    /// `A != A^T` beyond tolerance.
    NotSymmetric(f64),
    /// `A != -A^T` beyond tolerance.
    NotAntisymmetric(f64),
    /// `S^T Ω S != Ω` beyond tolerance.
    NotSymplectic(f64),
    /// Not in `Sp(2n,R) ∩ SO(2n,R)` within tolerance.
    NotOrthosymplectic(f64),
    /// `V + iΩ >= 0` fails; carries the offending minimum eigenvalue.
    InvalidCovariance(f64),
    /// Noise matrix must be symmetric positive semidefinite.
    InvalidNoise(f64),
    /// Channel fails complete positivity; carries the minimum eigenvalue of
    /// the characteristic matrix plus `iΩ`.
    NotCompletelyPositive(f64),
    /// A set operation got an empty collection.
    EmptySet,
    /// Scalar parameter outside its admissible range.
    ParameterOutOfRange { name: &'static str, value: f64 },
    /// Fock probability vector is not a probability distribution.
    InvalidProbabilities(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroModes => write!(f, "mode count must be at least 1"),
            Error::OddDimension(d) => write!(f, "dimension {d} is odd, expected 2n"),
            Error::BadShape { expected, got } => {
                write!(f, "shape mismatch: expected {expected} entries, got {got}")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::NonFiniteEntry => write!(f, "matrix entries must be finite"),
            Error::NotHermitian(r) => write!(f, "matrix is not Hermitian (defect {r:.3e})"),
            Error::NotSymmetric(r) => write!(f, "matrix is not symmetric (defect {r:.3e})"),
            Error::NotAntisymmetric(r) => {
                write!(f, "matrix is not antisymmetric (defect {r:.3e})")
            }
            Error::NotSymplectic(r) => write!(f, "matrix is not symplectic (residual {r:.3e})"),
            Error::NotOrthosymplectic(r) => {
                write!(f, "matrix is not orthosymplectic (residual {r:.3e})")
            }
            Error::InvalidCovariance(e) => {
                write!(f, "invalid covariance matrix: min eig of V + iOmega = {e:.3e}")
            }
            Error::InvalidNoise(e) => {
                write!(f, "invalid noise matrix: min eigenvalue {e:.3e}")
            }
            Error::NotCompletelyPositive(e) => {
                write!(f, "channel is not completely positive: min eig of V(X,Y) + iOmega = {e:.3e}")
            }
            Error::EmptySet => write!(f, "expected a non-empty set of states"),
            Error::ParameterOutOfRange { name, value } => {
                write!(f, "parameter `{name}` out of range: {value}")
            }
            Error::InvalidProbabilities(why) => write!(f, "invalid probability vector: {why}"),
        }
    }
}

impl core::error::Error for Error {}
