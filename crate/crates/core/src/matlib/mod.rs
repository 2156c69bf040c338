//! Small dense real/complex kernels for n ≤ 8.

mod complex;
mod decomp;
mod givens;
mod kron;
mod random;
mod real;

pub use complex::{ComplexMatrix, C64};
pub use decomp::{cs_decompose, expm_skew, polar, svd, sym_eigen, torus, CSFactors, Svd};
pub use givens::{givens_factorize, givens_product, plane_rotation, GivensFactor, SignDiagonal};
pub use kron::kron_factor;
pub use random::{random_skew, random_special_orthogonal, random_su2, random_symmetric, rng_from_seed};
pub use real::{projective_distance, RealMatrix};

pub(crate) use real::{dot, norm};

/// Membership tolerance for orthogonality / det checks.
pub const TOL_MEMBERSHIP: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MatError {
    #[error("matrix is not special orthogonal (defect {defect:.3e}, det {det:.6})")]
    NotSpecialOrthogonal { defect: f64, det: f64 },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("invalid block size p={p} for n={n}")]
    BadBlockSize { n: usize, p: usize },
    #[error("not a tensor product (residual {residual:.3e})")]
    NotTensorProduct { residual: f64 },
}

/// Returns `Ok(())` when `v` is in SO(n) within `tol`.
pub fn check_special_orthogonal(v: &RealMatrix, tol: f64) -> Result<(), MatError> {
    if !v.is_square() {
        return Err(MatError::DimensionMismatch);
    }
    let defect = v.orthogonality_defect();
    let det = v.det();
    if !v.is_finite() || defect > tol || det < 0.0 || (det - 1.0).abs() > tol.max(1e-9) {
        return Err(MatError::NotSpecialOrthogonal { defect, det });
    }
    Ok(())
}
