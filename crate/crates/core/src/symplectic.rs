//! The symplectic form and group-membership predicates.
//!
//! Quadratures are ordered `(q1, p1, ..., qn, pn)` throughout, so the
//! symplectic form is the block-diagonal `⊕ [[0, 1], [-1, 0]]`. Inputs
//! prepared in `(q..q, p..p)` ordering can be converted with
//! [`qqpp_to_qpqp`].

use crate::error::{Error, Result};
use crate::mat::Mat;

/// Symplectic form `Ω` for `n` modes: block-diagonal `[[0, 1], [-1, 0]]`.
///
/// Antisymmetric and orthogonal, with `Ω² = -I`.
pub fn omega(n: usize) -> Result<Mat> {
    if n == 0 {
        return Err(Error::ZeroModes);
    }
    let mut w = Mat::zeros(2 * n);
    for k in 0..n {
        w[(2 * k, 2 * k + 1)] = 1.0;
        w[(2 * k + 1, 2 * k)] = -1.0;
    }
    Ok(w)
}

fn even_modes(m: &Mat) -> Result<usize> {
    if m.dim() % 2 != 0 || m.dim() == 0 {
        return Err(Error::OddDimension(m.dim()));
    }
    Ok(m.dim() / 2)
}

/// `S ∈ Sp(2n,R)` within `tol`: checks `‖S^T Ω S - Ω‖_max <= tol`.
pub fn is_symplectic(s: &Mat, tol: f64) -> Result<bool> {
    let n = even_modes(s)?;
    let w = omega(n)?;
    let residual = (&(&s.transpose() * &w) * s).max_abs_diff(&w);
    Ok(residual <= tol)
}

/// `R ∈ K(n) = Sp(2n,R) ∩ SO(2n,R)` within `tol`.
pub fn is_orthosymplectic(r: &Mat, tol: f64) -> Result<bool> {
    if !is_symplectic(r, tol)? {
        return Ok(false);
    }
    let id = Mat::identity(r.dim());
    let residual = (&r.transpose() * r).max_abs_diff(&id);
    Ok(residual <= tol && r.det() > 0.0)
}

fn mode_permutation(dim: usize) -> Result<impl Fn(usize) -> usize> {
    if dim % 2 != 0 || dim == 0 {
        return Err(Error::OddDimension(dim));
    }
    let n = dim / 2;
    // qpqp index -> qqpp index: q_k sits at k, p_k at n + k.
    Ok(move |i: usize| if i % 2 == 0 { i / 2 } else { n + i / 2 })
}

/// Re-indexes a matrix from `(q..q, p..p)` ordering to `(q1, p1, ...)`.
pub fn qqpp_to_qpqp(m: &Mat) -> Result<Mat> {
    let perm = mode_permutation(m.dim())?;
    let dim = m.dim();
    let mut out = Mat::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            out[(i, j)] = m[(perm(i), perm(j))];
        }
    }
    Ok(out)
}

/// Inverse of [`qqpp_to_qpqp`].
pub fn qpqp_to_qqpp(m: &Mat) -> Result<Mat> {
    let perm = mode_permutation(m.dim())?;
    let dim = m.dim();
    let mut out = Mat::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            out[(perm(i), perm(j))] = m[(i, j)];
        }
    }
    Ok(out)
}
