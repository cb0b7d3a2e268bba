//! Phase-space oracle for single-mode Fock-diagonal states.
//!
//! The smoothed quasiprobability of a Fock-diagonal state at noise strength
//! `τ` (quasiprobability order `s = 1 - τ`) has a closed form in Laguerre
//! polynomials, and rotational symmetry reduces the positivity test over the
//! whole plane to a radial scan. Bisecting the noise strength at which the
//! scan stops finding negativity recovers the nonclassicality depth by a
//! route completely independent of the covariance-matrix formula, which is
//! what [`gaussian_crosscheck`] exploits in the other direction.

use alloc::vec;
use alloc::vec::Vec;

use libm::{exp, log, sqrt};

use crate::error::{Error, Result};
use crate::hermitian::HermitianMat;
use crate::mat::Mat;
use crate::state::GaussianState;
use crate::tol;

/// Mixture of Fock states `|0>..|N>`, given by its probability vector.
#[derive(Debug, Clone, PartialEq)]
pub struct FockDiagonalState {
    probs: Vec<f64>,
}

impl FockDiagonalState {
    /// Validates non-negativity and unit sum (within `1e-12`).
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidProbabilities("empty vector"));
        }
        if probs.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidProbabilities("non-finite entry"));
        }
        if probs.iter().any(|&p| p < 0.0) {
            return Err(Error::InvalidProbabilities("negative entry"));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidProbabilities("sum differs from 1"));
        }
        Ok(FockDiagonalState { probs })
    }

    /// The number state `|n>`.
    pub fn fock(n: usize) -> Self {
        let mut probs = vec![0.0; n + 1];
        probs[n] = 1.0;
        FockDiagonalState { probs }
    }

    pub fn vacuum() -> Self {
        FockDiagonalState::fock(0)
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Highest occupied Fock level.
    pub fn cutoff(&self) -> usize {
        self.probs.len() - 1
    }
}

/// Radial scan grid, uniform in `r²` so the oscillations near the origin are
/// resolved; quasiprobabilities of cutoff-`N` states are negligible beyond a
/// few phonon radii, hence the default `r_max = 2·sqrt(N+1) + 4`.
#[derive(Debug, Clone)]
pub struct RadialGrid {
    r_max: f64,
    radii: Vec<f64>,
}

impl RadialGrid {
    pub const DEFAULT_POINTS: usize = 4096;

    pub fn new(r_max: f64, points: usize) -> Result<Self> {
        if !(r_max > 0.0) || !r_max.is_finite() {
            return Err(Error::ParameterOutOfRange {
                name: "r_max",
                value: r_max,
            });
        }
        if points < 256 {
            return Err(Error::ParameterOutOfRange {
                name: "points",
                value: points as f64,
            });
        }
        let u_max = r_max * r_max;
        let radii = (0..points)
            .map(|i| sqrt(u_max * i as f64 / (points - 1) as f64))
            .collect();
        Ok(RadialGrid { r_max, radii })
    }

    pub fn default_for_cutoff(cutoff: usize) -> Self {
        let r_max = 2.0 * sqrt(cutoff as f64 + 1.0) + 4.0;
        RadialGrid::new(r_max, Self::DEFAULT_POINTS).expect("valid defaults")
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn points(&self) -> usize {
        self.radii.len()
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }
}

/// Laguerre polynomial `L_n(x)` by the three-term recurrence
/// `k·L_k = (2k-1-x)·L_{k-1} - (k-1)·L_{k-2}`.
pub fn laguerre(n: usize, x: f64) -> f64 {
    let mut prev = 1.0; // L_0
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 - x; // L_1
    for k in 2..=n {
        let k = k as f64;
        let next = ((2.0 * k - 1.0 - x) * cur - (k - 1.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    cur
}

fn check_tau(tau: f64) -> Result<()> {
    // τ = 0 is the bare (distributional) P-function; excluded.
    if !(tau > 0.0 && tau <= 2.0) {
        return Err(Error::ParameterOutOfRange {
            name: "tau",
            value: tau,
        });
    }
    Ok(())
}

/// Value at radius `r` of the τ-smoothed quasiprobability of a Fock-diagonal
/// state (order `s = 1 - τ`):
///
/// `W(r) = Σ_n p_n · 2/(π·τ) · (-(2-τ)/τ)^n · e^{-2r²/τ} · L_n(4r²/(τ(2-τ)))`,
///
/// with the Husimi limit `Σ_n p_n · e^{-r²} r^{2n} / (π·n!)` at `τ = 2`.
pub fn quasiprob_value(state: &FockDiagonalState, tau: f64, r: f64) -> Result<f64> {
    check_tau(tau)?;
    Ok(quasiprob_unchecked(state, tau, r))
}

fn quasiprob_unchecked(state: &FockDiagonalState, tau: f64, r: f64) -> f64 {
    let r2 = r * r;
    if tau == 2.0 {
        // Husimi limit; terms built iteratively to avoid 0·∞ at r = 0.
        let mut term = exp(-r2) / core::f64::consts::PI;
        let mut acc = 0.0;
        for (n, &p) in state.probs().iter().enumerate() {
            if n > 0 {
                term *= r2 / n as f64;
            }
            acc += p * term;
        }
        return acc;
    }

    let ratio_mag = (2.0 - tau) / tau; // |(s+1)/(s-1)| at s = 1-τ; the sign is (-1)^n
    let log_ratio = log(ratio_mag);
    let gauss_exponent = -2.0 * r2 / tau;
    let prefactor = 2.0 / (core::f64::consts::PI * tau);
    let x = 4.0 * r2 / (tau * (2.0 - tau));

    // One pass of the recurrence yields every order.
    let mut acc = 0.0;
    let mut l_prev = 1.0;
    let mut l_cur = 1.0 - x;
    for (n, &p) in state.probs().iter().enumerate() {
        let l_n = match n {
            0 => 1.0,
            1 => l_cur,
            _ => {
                let k = n as f64;
                let next = ((2.0 * k - 1.0 - x) * l_cur - (k - 1.0) * l_prev) / k;
                l_prev = l_cur;
                l_cur = next;
                next
            }
        };
        if p == 0.0 {
            continue;
        }
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        // Combined exponent keeps (ratio^n)·gauss finite whenever the true
        // value is representable.
        acc += p * sign * exp(n as f64 * log_ratio + gauss_exponent) * l_n;
    }
    prefactor * acc
}

/// Minimum of the quasiprobability over the grid radii. Rotational symmetry
/// of Fock-diagonal states makes the radial scan exhaustive.
pub fn min_over_grid(state: &FockDiagonalState, tau: f64, grid: &RadialGrid) -> Result<f64> {
    check_tau(tau)?;
    Ok(grid
        .radii()
        .iter()
        .map(|&r| quasiprob_unchecked(state, tau, r))
        .fold(f64::INFINITY, f64::min))
}

/// Does isotropic noise of strength `tau` make the state classical, i.e. is
/// the smoothed quasiprobability non-negative everywhere (within `tol`)?
pub fn is_classical_after_noise(
    state: &FockDiagonalState,
    tau: f64,
    grid: &RadialGrid,
    tol: f64,
) -> Result<bool> {
    Ok(min_over_grid(state, tau, grid)? >= -tol)
}

/// Bisects a monotone predicate (false at `lo`, true at `hi`) down to a
/// bracket of width `eps`; returns the bracket midpoint.
pub fn bisect_threshold(
    mut lo: f64,
    mut hi: f64,
    eps: f64,
    mut classical: impl FnMut(f64) -> bool,
) -> f64 {
    while hi - lo > eps {
        let mid = 0.5 * (lo + hi);
        if classical(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Noise threshold at which the state turns classical: bisects
/// `τ ∈ [eps, 2]` against the radial negativity scan. Returns `0` for states
/// already classical at the lower bracket; number states drive it to `2`.
pub fn depth_bisection(state: &FockDiagonalState, grid: &RadialGrid, eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps < 2.0) {
        return Err(Error::ParameterOutOfRange {
            name: "eps",
            value: eps,
        });
    }
    let classical = |tau: f64| {
        min_over_grid(state, tau, grid).expect("tau stays within (0, 2]")
            >= -tol::QUASIPROB_NEGATIVITY
    };
    if classical(eps) {
        return Ok(0.0);
    }
    // The Husimi function is non-negative in closed form, so τ = 2 is always
    // a classical bracket.
    Ok(bisect_threshold(eps, 2.0, eps, classical))
}

/// Independent check of the Gaussian depth formula: bisects `α ∈ [0, 2]`
/// against the classicality test `V + α·I >= I` for a single-mode covariance
/// matrix. Agrees with the closed-form depth to within `eps`.
pub fn gaussian_crosscheck(v: &Mat, eps: f64) -> Result<f64> {
    if v.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: 2,
            right: v.dim(),
        });
    }
    if !(eps > 0.0) {
        return Err(Error::ParameterOutOfRange {
            name: "eps",
            value: eps,
        });
    }
    // Validates symmetry and V + iΩ >= 0.
    let state = GaussianState::new(v.clone(), None)?;
    let classical = |alpha: f64| {
        let shifted = state.cov() + &Mat::scaled_identity(2, alpha);
        HermitianMat::from_real(shifted)
            .expect("symmetric by construction")
            .psd_geq(1.0, tol::PSD)
    };
    if classical(0.0) {
        return Ok(0.0);
    }
    Ok(bisect_threshold(0.0, 2.0, eps, classical))
}
