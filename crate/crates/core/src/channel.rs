//! Bosonic Gaussian channels as `(X, Y)` matrix pairs.
//!
//! The channel acts on covariance matrices as `V -> X^T V X + Y` (and on
//! characteristic functions as `χ(ξ) -> χ(Xξ)·exp(-ξ^T Y ξ / 2)`). Complete
//! positivity, the nonclassicality-breaking test, and the channel depth are
//! all read off the characteristic matrix `𝒱(X, Y) = Y - i X^T Ω X`:
//!
//! * CP  ⇔  `𝒱 + iΩ >= 0`
//! * NB  ⇔  `𝒱 >= I`
//! * depth = `max(0, 1 - λ_min(𝒱))`, in `[0, 2]`
//!
//! The quantum-limited noise for a given `X` is `Y_QL = |X^T Ω X - Ω|`, the
//! matrix absolute value of the commutator defect, which saturates the CP
//! bound.

use crate::eigen::matrix_abs_antisym;
use crate::error::{Error, Result};
use crate::hermitian::HermitianMat;
use crate::mat::Mat;
use crate::state::{GaussianState, NoiseMatrix};
use crate::symplectic::{is_orthosymplectic, is_symplectic, omega};
use crate::tol;

/// Canonical single-mode channel families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalKind {
    /// `(κ·I, (1-κ²)·I)` with `0 <= κ <= 1`; κ=1 is the identity channel.
    Attenuator,
    /// `(κ·I, (κ²-1)·I)` with `κ > 1`.
    Amplifier,
    /// `(κ·σ3, (κ²+1)·I)` with `κ > 0`.
    PhaseConjugation,
    /// `((I+σ3)/2, I)`; the parameter is ignored.
    Singular,
}

/// Combined diagnosis of a candidate `(X, Y)` pair.
///
/// For a non-CP pair only `cp` and `cp_min_eig` are meaningful; the
/// classicality fields stay `None` so that a tomography front end can still
/// report the CP violation.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelVerdict {
    pub cp: bool,
    /// Minimum eigenvalue of `𝒱(X,Y) + iΩ`; negative values witness the CP
    /// violation.
    pub cp_min_eig: f64,
    /// Nonclassicality breaking (classical in the output-nonclassicality
    /// sense).
    pub nb: Option<bool>,
    /// Classical in the coherent-input sense: `X^T X + Y >= I`.
    pub qpn_classical: Option<bool>,
    pub depth: Option<f64>,
}

/// Bosonic Gaussian channel `(X, Y)` on `n` modes.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianChannel {
    n: usize,
    x: Mat,
    y: Mat,
}

impl GaussianChannel {
    /// Builds a channel, enforcing symmetry of `Y` and complete positivity.
    pub fn new(x: Mat, y: Mat) -> Result<Self> {
        let ch = GaussianChannel::candidate(x, y)?;
        let min = ch.cp_min_eig();
        if min < -tol::PSD {
            return Err(Error::NotCompletelyPositive(min));
        }
        Ok(ch)
    }

    /// Builds a candidate pair with shape checks only, so that non-CP pairs
    /// (e.g. from tomography) can still be diagnosed via [`classify`].
    ///
    /// [`classify`]: GaussianChannel::classify
    pub fn candidate(x: Mat, y: Mat) -> Result<Self> {
        if x.dim() % 2 != 0 || x.dim() == 0 {
            return Err(Error::OddDimension(x.dim()));
        }
        if x.dim() != y.dim() {
            return Err(Error::DimensionMismatch {
                left: x.dim(),
                right: y.dim(),
            });
        }
        let defect = y.symmetry_defect();
        if defect > tol::HERMITIAN_CONSTRUCTION {
            return Err(Error::NotSymmetric(defect));
        }
        Ok(GaussianChannel {
            n: x.dim() / 2,
            x,
            y: y.symmetrize(),
        })
    }

    /// The identity channel `(I, 0)`.
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModes);
        }
        Ok(GaussianChannel {
            n,
            x: Mat::identity(2 * n),
            y: Mat::zeros(2 * n),
        })
    }

    /// The additive classical noise channel `(I, Y)`.
    pub fn additive_noise(noise: &NoiseMatrix) -> Self {
        GaussianChannel {
            n: noise.modes(),
            x: Mat::identity(2 * noise.modes()),
            y: noise.matrix().clone(),
        }
    }

    /// Quantum-limited channel for a given `X`: the minimal noise
    /// `Y_QL = |X^T Ω X - Ω|` saturating complete positivity.
    pub fn quantum_limited(x: Mat) -> Result<Self> {
        if x.dim() % 2 != 0 || x.dim() == 0 {
            return Err(Error::OddDimension(x.dim()));
        }
        let n = x.dim() / 2;
        let w = omega(n)?;
        let commutator_defect = &(&x.transpose() * &w) * &x;
        let y = matrix_abs_antisym(&(&commutator_defect - &w))?;
        Ok(GaussianChannel { n, x, y })
    }

    /// Canonical single-mode forms.
    pub fn canonical(kind: CanonicalKind, kappa: f64) -> Result<Self> {
        let id = Mat::identity(2);
        let sigma3 = Mat::diagonal(&[1.0, -1.0]);
        let out_of_range = Error::ParameterOutOfRange {
            name: "kappa",
            value: kappa,
        };
        let (x, y) = match kind {
            CanonicalKind::Attenuator => {
                if !(0.0..=1.0).contains(&kappa) {
                    return Err(out_of_range);
                }
                (id.scale(kappa), id.scale(1.0 - kappa * kappa))
            }
            CanonicalKind::Amplifier => {
                if !(kappa > 1.0) {
                    return Err(out_of_range);
                }
                (id.scale(kappa), id.scale(kappa * kappa - 1.0))
            }
            CanonicalKind::PhaseConjugation => {
                if !(kappa > 0.0) {
                    return Err(out_of_range);
                }
                (sigma3.scale(kappa), id.scale(kappa * kappa + 1.0))
            }
            CanonicalKind::Singular => {
                let x = Mat::diagonal(&[1.0, 0.0]);
                (x, id)
            }
        };
        Ok(GaussianChannel { n: 1, x, y })
    }

    pub fn modes(&self) -> usize {
        self.n
    }

    pub fn x(&self) -> &Mat {
        &self.x
    }

    pub fn y(&self) -> &Mat {
        &self.y
    }

    /// Characteristic matrix `𝒱(X, Y) = Y - i X^T Ω X`.
    pub fn characteristic_matrix(&self) -> HermitianMat {
        let w = omega(self.n).expect("n >= 1");
        let b = &(&self.x.transpose() * &w) * &self.x;
        HermitianMat::new(self.y.clone(), b.antisymmetrize().scale(-1.0))
            .expect("Y symmetric, X^T Ω X antisymmetric")
    }

    /// Minimum eigenvalue of `𝒱 + iΩ`; nonnegative (up to tolerance) iff CP.
    pub fn cp_min_eig(&self) -> f64 {
        let w = omega(self.n).expect("n >= 1");
        let v = self.characteristic_matrix();
        let shifted = HermitianMat::new(v.re().clone(), &w + v.im())
            .expect("imaginary part stays antisymmetric");
        shifted.min_eig()
    }

    pub fn is_cp(&self) -> bool {
        self.is_cp_tol(tol::PSD)
    }

    pub fn is_cp_tol(&self, tol: f64) -> bool {
        self.cp_min_eig() >= -tol
    }

    fn require_cp(&self) -> Result<()> {
        let min = self.cp_min_eig();
        if min < -tol::PSD {
            return Err(Error::NotCompletelyPositive(min));
        }
        Ok(())
    }

    /// Nonclassicality breaking: every output state is classical, i.e.
    /// `𝒱(X, Y) >= I`.
    pub fn is_nonclassicality_breaking(&self) -> Result<bool> {
        self.is_nonclassicality_breaking_tol(tol::PSD)
    }

    pub fn is_nonclassicality_breaking_tol(&self, tol: f64) -> Result<bool> {
        self.require_cp()?;
        Ok(self.characteristic_matrix().psd_geq(1.0, tol))
    }

    /// Classical in the coherent-input sense: every coherent state maps to a
    /// classical output, i.e. `X^T X + Y >= I` (mean-independent).
    pub fn is_qpn_classical(&self) -> Result<bool> {
        self.is_qpn_classical_tol(tol::PSD)
    }

    pub fn is_qpn_classical_tol(&self, tol: f64) -> Result<bool> {
        self.require_cp()?;
        let coherent_out = (&(&self.x.transpose() * &self.x) + &self.y).symmetrize();
        Ok(HermitianMat::from_real(coherent_out)?.psd_geq(1.0, tol))
    }

    /// Channel nonclassicality depth `max(0, 1 - λ_min(𝒱))`: the smallest
    /// isotropic noise `α·I` added to `Y` that makes the channel
    /// nonclassicality breaking. Ranges over `[0, 2]`.
    pub fn depth(&self) -> Result<f64> {
        self.require_cp()?;
        Ok((1.0 - self.characteristic_matrix().min_eig()).max(0.0))
    }

    /// Composition `self ∘ first`: `first` acts on the input, then `self`.
    pub fn compose(&self, first: &GaussianChannel) -> Result<GaussianChannel> {
        if self.n != first.n {
            return Err(Error::DimensionMismatch {
                left: 2 * self.n,
                right: 2 * first.n,
            });
        }
        first.require_cp()?;
        self.require_cp()?;
        let x = &first.x * &self.x;
        let y = (&(&(&self.x.transpose() * &first.y) * &self.x) + &self.y).symmetrize();
        Ok(GaussianChannel { n: self.n, x, y })
    }

    /// Does post-composed noise `Y'` make this channel nonclassicality
    /// breaking? Tests `𝒱(X, Y + Y') >= I`.
    pub fn noise_renders_nb(&self, noise: &NoiseMatrix) -> Result<bool> {
        if noise.modes() != self.n {
            return Err(Error::DimensionMismatch {
                left: 2 * self.n,
                right: 2 * noise.modes(),
            });
        }
        self.require_cp()?;
        let noisier = GaussianChannel {
            n: self.n,
            x: self.x.clone(),
            y: (&self.y + noise.matrix()).symmetrize(),
        };
        Ok(noisier.characteristic_matrix().psd_geq(1.0, tol::PSD))
    }

    /// Pre-processing by a canonical (symplectic) unitary: `(X, Y) -> (SX, Y)`.
    /// Leaves `𝒱` unchanged, since `S^T Ω S = Ω`.
    pub fn pre_process(&self, s: &Mat) -> Result<GaussianChannel> {
        if s.dim() != 2 * self.n {
            return Err(Error::DimensionMismatch {
                left: 2 * self.n,
                right: s.dim(),
            });
        }
        if !is_symplectic(s, tol::GROUP)? {
            return Err(Error::NotSymplectic(tol::GROUP));
        }
        Ok(GaussianChannel {
            n: self.n,
            x: s * &self.x,
            y: self.y.clone(),
        })
    }

    /// Post-processing by a passive canonical transformation:
    /// `(X, Y) -> (XR, R^T Y R)`, so `𝒱 -> R^T 𝒱 R`.
    pub fn post_process(&self, r: &Mat) -> Result<GaussianChannel> {
        if r.dim() != 2 * self.n {
            return Err(Error::DimensionMismatch {
                left: 2 * self.n,
                right: r.dim(),
            });
        }
        if !is_orthosymplectic(r, tol::GROUP)? {
            return Err(Error::NotOrthosymplectic(tol::GROUP));
        }
        Ok(GaussianChannel {
            n: self.n,
            x: &self.x * r,
            y: (&(&r.transpose() * &self.y) * r).symmetrize(),
        })
    }

    /// Channel action on a Gaussian state: `V -> X^T V X + Y`,
    /// `mean -> X^T mean`.
    pub fn apply(&self, state: &GaussianState) -> Result<GaussianState> {
        if state.modes() != self.n {
            return Err(Error::DimensionMismatch {
                left: 2 * self.n,
                right: 2 * state.modes(),
            });
        }
        self.require_cp()?;
        let xt = self.x.transpose();
        let cov = (&(&(&xt * state.cov()) * &self.x) + &self.y).symmetrize();
        let mean = state.mean().map(|m| xt.mul_vec(m));
        GaussianState::new(cov, mean)
    }

    /// Full diagnosis, with default tolerances.
    pub fn classify(&self) -> ChannelVerdict {
        self.classify_tol(tol::PSD)
    }

    /// Full diagnosis of the pair: CP first, then the classicality verdicts.
    /// Non-CP candidates get `None` for everything past `cp_min_eig`.
    pub fn classify_tol(&self, tol: f64) -> ChannelVerdict {
        let cp_min_eig = self.cp_min_eig();
        let cp = cp_min_eig >= -tol;
        if !cp {
            return ChannelVerdict {
                cp,
                cp_min_eig,
                nb: None,
                qpn_classical: None,
                depth: None,
            };
        }
        let v_min = self.characteristic_matrix().min_eig();
        let coherent_out = (&(&self.x.transpose() * &self.x) + &self.y).symmetrize();
        let qpn = HermitianMat::from_real(coherent_out)
            .expect("symmetrized")
            .psd_geq(1.0, tol);
        ChannelVerdict {
            cp,
            cp_min_eig,
            nb: Some(v_min >= 1.0 - tol),
            qpn_classical: Some(qpn),
            depth: Some((1.0 - v_min).max(0.0)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_cp_channel, random_orthosymplectic, random_psd, random_state, random_symplectic};
    use alloc::vec;

    fn attenuator(kappa: f64) -> GaussianChannel {
        GaussianChannel::canonical(CanonicalKind::Attenuator, kappa).unwrap()
    }

    #[test]
    fn characteristic_matrix_examples() {
        // X = 0, Y = I: 𝒱 = I.
        let ch = GaussianChannel::candidate(Mat::zeros(2), Mat::identity(2)).unwrap();
        let v = ch.characteristic_matrix();
        assert!(v.re().max_abs_diff(&Mat::identity(2)) < 1e-15);
        assert!(v.im().max_abs() < 1e-15);

        // Attenuator: 𝒱 = (1-κ²)I - iκ²Ω with eigenvalues (1-κ²) ± κ².
        let kappa = 0.5f64;
        let ch = attenuator(kappa);
        let v = ch.characteristic_matrix();
        let k2 = kappa * kappa;
        assert!((v.min_eig() - (1.0 - 2.0 * k2)).abs() < 1e-10);

        // Identity channel: 𝒱 = -iΩ with eigenvalues ±1.
        let id = GaussianChannel::identity(1).unwrap();
        assert!((id.characteristic_matrix().min_eig() + 1.0).abs() < 1e-10);
    }

    #[test]
    fn cp_examples() {
        assert!(GaussianChannel::identity(1).unwrap().is_cp());

        // Attenuating without adding noise is unphysical.
        let bare = GaussianChannel::candidate(Mat::scaled_identity(2, 0.5), Mat::zeros(2)).unwrap();
        assert!(!bare.is_cp());
        assert!(matches!(
            GaussianChannel::new(Mat::scaled_identity(2, 0.5), Mat::zeros(2)),
            Err(Error::NotCompletelyPositive(_))
        ));

        // The quantum-limited attenuator sits exactly on the CP boundary.
        let ch = attenuator(0.5);
        assert!(ch.is_cp());
        assert!(ch.cp_min_eig().abs() < 1e-10);
    }

    #[test]
    fn nb_examples() {
        let pc = GaussianChannel::canonical(CanonicalKind::PhaseConjugation, 1.0).unwrap();
        assert!(pc.is_nonclassicality_breaking().unwrap());

        let singular = GaussianChannel::canonical(CanonicalKind::Singular, 0.0).unwrap();
        assert!(singular.is_nonclassicality_breaking().unwrap());

        let id = GaussianChannel::identity(1).unwrap();
        assert!(!id.is_nonclassicality_breaking().unwrap());

        let bare = GaussianChannel::candidate(Mat::scaled_identity(2, 0.5), Mat::zeros(2)).unwrap();
        assert!(matches!(
            bare.is_nonclassicality_breaking(),
            Err(Error::NotCompletelyPositive(_))
        ));
    }

    #[test]
    fn qpn_examples() {
        let id = GaussianChannel::identity(1).unwrap();
        assert!(id.is_qpn_classical().unwrap());

        // Quantum-limited attenuator maps coherent states to coherent states.
        assert!(attenuator(0.5).is_qpn_classical().unwrap());

        // NB implies QPN-classical.
        for seed in 0..50 {
            let base = random_cp_channel(1, seed);
            let lift = NoiseMatrix::isotropic(1, 2.0).unwrap();
            let nb = GaussianChannel::new(base.x().clone(), base.y() + lift.matrix()).unwrap();
            if nb.is_nonclassicality_breaking().unwrap() {
                assert!(nb.is_qpn_classical().unwrap(), "seed={seed}");
            }
        }
    }

    #[test]
    fn depth_canonical_values() {
        for kappa in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let d = attenuator(kappa).depth().unwrap();
            assert!((d - 2.0 * kappa * kappa).abs() < 1e-10, "kappa={kappa}");
        }
        for kappa in [1.5, 2.0, 5.0] {
            let ch = GaussianChannel::canonical(CanonicalKind::Amplifier, kappa).unwrap();
            assert!((ch.depth().unwrap() - 2.0).abs() < 1e-10, "kappa={kappa}");
        }
        for kappa in [0.5, 1.0, 2.0] {
            let ch = GaussianChannel::canonical(CanonicalKind::PhaseConjugation, kappa).unwrap();
            assert!(ch.depth().unwrap() < 1e-10, "kappa={kappa}");
        }
        let singular = GaussianChannel::canonical(CanonicalKind::Singular, 0.0).unwrap();
        assert!(singular.depth().unwrap() < 1e-10);
    }

    #[test]
    fn compose_examples() {
        let ch = attenuator(0.7);
        let noise = NoiseMatrix::new(Mat::diagonal(&[0.3, 0.1])).unwrap();
        let post = GaussianChannel::additive_noise(&noise);
        let combined = post.compose(&ch).unwrap();
        assert_eq!(combined.x(), ch.x());
        assert!(combined.y().max_abs_diff(&(ch.y() + noise.matrix())) < 1e-12);

        // Attenuators compose into an attenuator with κ = κ1·κ2.
        let (k1, k2) = (0.8, 0.5);
        let composed = attenuator(k2).compose(&attenuator(k1)).unwrap();
        let expect = attenuator(k1 * k2);
        assert!(composed.x().max_abs_diff(expect.x()) < 1e-12);
        assert!(composed.y().max_abs_diff(expect.y()) < 1e-12);

        let id = GaussianChannel::identity(1).unwrap();
        let same = id.compose(&ch).unwrap();
        assert!(same.x().max_abs_diff(ch.x()) < 1e-12);
        assert!(same.y().max_abs_diff(ch.y()) < 1e-12);

        assert!(matches!(
            GaussianChannel::identity(2).unwrap().compose(&ch),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn noise_renders_nb_examples() {
        let id = GaussianChannel::identity(1).unwrap();
        let strong = NoiseMatrix::isotropic(1, 2.0).unwrap();
        assert!(id.noise_renders_nb(&strong).unwrap());
        let weak = NoiseMatrix::isotropic(1, 1.5).unwrap();
        assert!(!id.noise_renders_nb(&weak).unwrap());

        let pc = GaussianChannel::canonical(CanonicalKind::PhaseConjugation, 1.0).unwrap();
        let zero = NoiseMatrix::new(Mat::zeros(2)).unwrap();
        assert!(pc.noise_renders_nb(&zero).unwrap());
    }

    #[test]
    fn noise_renders_nb_matches_composition() {
        for seed in 0..30 {
            let ch = random_cp_channel(1, seed);
            let noise = NoiseMatrix::new(random_psd(2, seed.wrapping_add(500), 1.5)).unwrap();
            let direct = ch.noise_renders_nb(&noise).unwrap();
            let composed = GaussianChannel::additive_noise(&noise)
                .compose(&ch)
                .unwrap()
                .is_nonclassicality_breaking()
                .unwrap();
            assert_eq!(direct, composed, "seed={seed}");
        }
    }

    #[test]
    fn quantum_limited_table_rows() {
        // Attenuator row.
        let ql = GaussianChannel::quantum_limited(Mat::scaled_identity(2, 0.5)).unwrap();
        assert!(ql.y().max_abs_diff(&Mat::scaled_identity(2, 0.75)) < 1e-10);

        // Phase-conjugation row: X = κσ3 gives Y_QL = (κ²+1)I.
        let sigma3 = Mat::diagonal(&[1.0, -1.0]);
        let ql = GaussianChannel::quantum_limited(sigma3.scale(2.0)).unwrap();
        assert!(ql.y().max_abs_diff(&Mat::scaled_identity(2, 5.0)) < 1e-10);

        // Singular row: X = (I+σ3)/2 gives Y_QL = I.
        let ql = GaussianChannel::quantum_limited(Mat::diagonal(&[1.0, 0.0])).unwrap();
        assert!(ql.y().max_abs_diff(&Mat::identity(2)) < 1e-10);

        // Quantum-limited channels sit on the CP boundary when X is not symplectic.
        for seed in 0..20 {
            let mut x = random_psd(4, seed, 1.0);
            x[(0, 1)] += 0.3; // break symmetry, generic X
            let ql = GaussianChannel::quantum_limited(x).unwrap();
            assert!(ql.cp_min_eig().abs() < 1e-8, "seed={seed}");
        }
    }

    #[test]
    fn canonical_limits_and_ranges() {
        let id_like = attenuator(1.0);
        assert!(id_like.x().max_abs_diff(&Mat::identity(2)) < 1e-12);
        assert!(id_like.y().max_abs() < 1e-12);

        let full = attenuator(0.0);
        assert!(full.x().max_abs() < 1e-12);
        assert!(full.y().max_abs_diff(&Mat::identity(2)) < 1e-12);

        let amp = GaussianChannel::canonical(CanonicalKind::Amplifier, 2.0).unwrap();
        assert!(amp.x().max_abs_diff(&Mat::scaled_identity(2, 2.0)) < 1e-12);
        assert!(amp.y().max_abs_diff(&Mat::scaled_identity(2, 3.0)) < 1e-12);

        assert!(matches!(
            GaussianChannel::canonical(CanonicalKind::Amplifier, 0.5),
            Err(Error::ParameterOutOfRange { .. })
        ));
        assert!(matches!(
            GaussianChannel::canonical(CanonicalKind::Attenuator, 1.2),
            Err(Error::ParameterOutOfRange { .. })
        ));
        assert!(matches!(
            GaussianChannel::canonical(CanonicalKind::PhaseConjugation, 0.0),
            Err(Error::ParameterOutOfRange { .. })
        ));
    }

    #[test]
    fn pre_processing_leaves_characteristic_matrix_alone() {
        let id = GaussianChannel::identity(1).unwrap();
        let same = id.pre_process(&Mat::identity(2)).unwrap();
        assert_eq!(same.x(), id.x());

        for seed in 0..20 {
            let ch = random_cp_channel(1, seed);
            let s = random_symplectic(1, seed.wrapping_add(100));
            let pre = ch.pre_process(&s).unwrap();
            let v0 = ch.characteristic_matrix();
            let v1 = pre.characteristic_matrix();
            assert!(v0.re().max_abs_diff(v1.re()) < 1e-12);
            assert!(v0.im().max_abs_diff(v1.im()) < 1e-10, "seed={seed}");
            assert!((pre.depth().unwrap() - ch.depth().unwrap()).abs() < 1e-9);
        }

        // Squeezing before the identity channel does not hide its depth.
        let r = 0.9f64;
        let squeeze = Mat::diagonal(&[r.exp(), (-r).exp()]);
        let squeezed = id.pre_process(&squeeze).unwrap();
        assert!((squeezed.depth().unwrap() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn post_processing_preserves_depth() {
        let ch = attenuator(0.5);
        let same = ch.post_process(&Mat::identity(2)).unwrap();
        assert_eq!(same.y(), ch.y());

        let rot = Mat::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]).unwrap();
        let rotated = ch.post_process(&rot).unwrap();
        assert!((rotated.depth().unwrap() - 0.5).abs() < 1e-9);

        for seed in 0..20 {
            let ch = random_cp_channel(2, seed);
            let r = random_orthosymplectic(2, seed.wrapping_add(300));
            let post = ch.post_process(&r).unwrap();
            assert!(
                (post.depth().unwrap() - ch.depth().unwrap()).abs() < 1e-9,
                "seed={seed}"
            );
        }
    }

    #[test]
    fn output_states_respect_channel_depth() {
        for seed in 0..30 {
            let ch = random_cp_channel(1, seed);
            let input = random_state(1, seed.wrapping_add(900));
            let out = ch.apply(&input).unwrap();
            assert!(
                out.depth() <= ch.depth().unwrap() + 1e-9,
                "seed={seed}: {} > {}",
                out.depth(),
                ch.depth().unwrap()
            );
        }
    }

    #[test]
    fn classify_examples() {
        let id = GaussianChannel::identity(1).unwrap().classify();
        assert!(id.cp);
        assert_eq!(id.nb, Some(false));
        assert_eq!(id.qpn_classical, Some(true));
        assert!((id.depth.unwrap() - 2.0).abs() < 1e-10);

        let pc = GaussianChannel::canonical(CanonicalKind::PhaseConjugation, 1.0)
            .unwrap()
            .classify();
        assert!(pc.cp);
        assert_eq!(pc.nb, Some(true));
        assert_eq!(pc.qpn_classical, Some(true));
        assert!(pc.depth.unwrap() < 1e-10);

        // Quantum-limited amplifier: coherent outputs are thermal-like with
        // X^T X + Y = (2κ²-1)I >= I, so QPN-classical despite full depth.
        let amp = GaussianChannel::canonical(CanonicalKind::Amplifier, 2.0)
            .unwrap()
            .classify();
        assert!(amp.cp);
        assert_eq!(amp.nb, Some(false));
        assert_eq!(amp.qpn_classical, Some(true));
        assert!((amp.depth.unwrap() - 2.0).abs() < 1e-10);

        let bad = GaussianChannel::candidate(Mat::scaled_identity(2, 0.5), Mat::zeros(2))
            .unwrap()
            .classify();
        assert!(!bad.cp);
        assert!(bad.cp_min_eig < 0.0);
        assert_eq!(bad.nb, None);
        assert_eq!(bad.qpn_classical, None);
        assert_eq!(bad.depth, None);
    }

    #[test]
    fn nb_iff_zero_depth() {
        for seed in 0..60 {
            let base = random_cp_channel(1, seed);
            let alpha = (seed % 5) as f64 * 0.6;
            let lifted = GaussianChannel::new(
                base.x().clone(),
                base.y() + &Mat::scaled_identity(2, alpha),
            )
            .unwrap();
            let nb = lifted.is_nonclassicality_breaking().unwrap();
            let depth = lifted.depth().unwrap();
            assert_eq!(nb, depth <= 1e-9, "seed={seed} depth={depth}");
        }
    }

    #[test]
    fn quantum_limited_dominates_noisy_versions() {
        for seed in 0..40 {
            let ql = GaussianChannel::quantum_limited({
                let mut x = random_psd(2, seed, 1.2);
                x[(1, 0)] -= 0.4;
                x[(0, 1)] += 0.1;
                x
            })
            .unwrap();
            let extra = random_psd(2, seed.wrapping_add(123), 0.8);
            let noisy = GaussianChannel::new(ql.x().clone(), ql.y() + &extra).unwrap();
            assert!(
                noisy.depth().unwrap() <= ql.depth().unwrap() + 1e-9,
                "seed={seed}"
            );
        }
    }
}
