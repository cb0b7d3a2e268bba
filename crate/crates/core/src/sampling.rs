//! Seeded random generators for phase-space objects.
//!
//! Everything here is deterministic in the seed (ChaCha8), so property tests
//! and reproductions are stable across platforms and thread counts.
//!
//! Orthosymplectic draws use the standard bijection between `U(n)` and
//! `K(n)`: a Haar-ish unitary `U = A + iB` (Gram-Schmidt on complex Gaussian
//! entries) maps to the real block form `[[A, -B], [B, A]]` in `(q..q, p..p)`
//! ordering. Covariance matrices are drawn as `S S^T + δ` with `S` symplectic
//! and `δ >= 0`, and channels as `(X, Y_QL(X) + δ)`, both of which are valid
//! by construction.

use alloc::vec::Vec;

use libm::exp;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;
use rand_distr::{Distribution, StandardNormal};

use crate::channel::GaussianChannel;
use crate::mat::Mat;
use crate::state::GaussianState;
use crate::symplectic::qqpp_to_qpqp;

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    StandardNormal.sample(rng)
}

/// Random element of `K(n) = Sp(2n,R) ∩ SO(2n,R)`, deterministic in `seed`.
pub fn random_orthosymplectic(n: usize, seed: u64) -> Mat {
    assert!(n >= 1, "mode count must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a, b) = random_unitary(n, &mut rng);

    let mut qqpp = Mat::zeros(2 * n);
    for i in 0..n {
        for j in 0..n {
            qqpp[(i, j)] = a[(i, j)];
            qqpp[(i, n + j)] = -b[(i, j)];
            qqpp[(n + i, j)] = b[(i, j)];
            qqpp[(n + i, n + j)] = a[(i, j)];
        }
    }
    qqpp_to_qpqp(&qqpp).expect("even dimension")
}

/// Random unitary as (real, imaginary) parts: modified Gram-Schmidt on a
/// complex Gaussian matrix, with one re-orthogonalization pass.
fn random_unitary(n: usize, rng: &mut ChaCha8Rng) -> (Mat, Mat) {
    let mut re = Mat::zeros(n);
    let mut im = Mat::zeros(n);
    for i in 0..n {
        for j in 0..n {
            re[(i, j)] = normal(rng);
            im[(i, j)] = normal(rng);
        }
    }
    for j in 0..n {
        for _pass in 0..2 {
            for k in 0..j {
                // c = <u_k, v_j>
                let (mut cr, mut ci) = (0.0, 0.0);
                for i in 0..n {
                    cr += re[(i, k)] * re[(i, j)] + im[(i, k)] * im[(i, j)];
                    ci += re[(i, k)] * im[(i, j)] - im[(i, k)] * re[(i, j)];
                }
                for i in 0..n {
                    let (ur, ui) = (re[(i, k)], im[(i, k)]);
                    re[(i, j)] -= cr * ur - ci * ui;
                    im[(i, j)] -= cr * ui + ci * ur;
                }
            }
        }
        let mut norm_sq = 0.0;
        for i in 0..n {
            norm_sq += re[(i, j)] * re[(i, j)] + im[(i, j)] * im[(i, j)];
        }
        let inv = 1.0 / libm::sqrt(norm_sq);
        for i in 0..n {
            re[(i, j)] *= inv;
            im[(i, j)] *= inv;
        }
    }
    (re, im)
}

/// Random symplectic via the Euler decomposition `R1 · Z · R2` with single-mode
/// squeezers `Z = diag(e^{r}, e^{-r})`, `r` uniform in `[-1, 1]`.
pub fn random_symplectic(n: usize, seed: u64) -> Mat {
    assert!(n >= 1, "mode count must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5379_6d70_6c65_6374);
    let mut z = Vec::with_capacity(2 * n);
    for _ in 0..n {
        let r: f64 = 2.0 * uniform(&mut rng) - 1.0;
        z.push(exp(r));
        z.push(exp(-r));
    }
    let r1 = random_orthosymplectic(n, seed.wrapping_add(1));
    let r2 = random_orthosymplectic(n, seed.wrapping_add(2));
    &(&r1 * &Mat::diagonal(&z)) * &r2
}

/// Random symmetric PSD matrix `scale/dim · G^T G` with Gaussian `G`.
pub fn random_psd(dim: usize, seed: u64, scale: f64) -> Mat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5073_6400_0000_0000);
    let mut g = Mat::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            g[(i, j)] = normal(&mut rng);
        }
    }
    (&g.transpose() * &g).scale(scale / dim as f64).symmetrize()
}

/// Random valid covariance matrix `S S^T + δ`.
pub fn random_covariance(n: usize, seed: u64) -> Mat {
    let s = random_symplectic(n, seed);
    let pure = &s * &s.transpose();
    let noise = random_psd(2 * n, seed.wrapping_add(3), 0.5);
    (&pure + &noise).symmetrize()
}

/// Random valid Gaussian state with a random displacement.
pub fn random_state(n: usize, seed: u64) -> GaussianState {
    let cov = random_covariance(n, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5374_6174_6500_0000);
    let mean: Vec<f64> = (0..2 * n).map(|_| 2.0 * normal(&mut rng)).collect();
    GaussianState::new(cov, Some(mean)).expect("valid by construction")
}

/// Random CP channel `(X, Y_QL(X) + δ)`.
pub fn random_cp_channel(n: usize, seed: u64) -> GaussianChannel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4368_616e_0000_0000);
    let mut x = Mat::zeros(2 * n);
    for i in 0..2 * n {
        for j in 0..2 * n {
            x[(i, j)] = normal(&mut rng);
        }
    }
    let ql = GaussianChannel::quantum_limited(x).expect("even dimension");
    let extra = random_psd(2 * n, seed.wrapping_add(4), 0.5);
    let y = ql.y() + &extra;
    GaussianChannel::new(ql.x().clone(), y).expect("CP by construction")
}

fn uniform(rng: &mut ChaCha8Rng) -> f64 {
    use rand_core::RngCore;
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}
