use super::CartanError;
use crate::matlib::{check_special_orthogonal, svd, MatError, RealMatrix, TOL_MEMBERSHIP};

/// A determinant sign; `Undetermined` when |det| < 1e-10 and then matches either sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignBit {
    Plus,
    Minus,
    Undetermined,
}

impl SignBit {
    const SNAP: f64 = 1e-10;

    pub fn of(x: f64) -> Self {
        if x.abs() < Self::SNAP {
            SignBit::Undetermined
        } else if x > 0.0 {
            SignBit::Plus
        } else {
            SignBit::Minus
        }
    }

    pub fn compatible(self, other: SignBit) -> bool {
        self == other || self == SignBit::Undetermined || other == SignBit::Undetermined
    }
}

fn compatible_opt(a: Option<SignBit>, b: Option<SignBit>) -> bool {
    match (a, b) {
        (None, None) => true,
        (Some(x), Some(y)) => x.compatible(y),
        _ => false,
    }
}

/// Invariants of the double coset K·U·K for K = SO(p) ⊕ SO(n−p), or its projective version.
///
/// Which sign fields are present:
///
/// | case                | non-projective      | projective              |
/// |---------------------|---------------------|-------------------------|
/// | p < n−p             | corner              | corner if p even, else none |
/// | p = n/2             | corner, anti        | both if p even, else product |
///
/// "corner" is det U_[p][p]; "anti" is det of the top-right p×p block.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalParams {
    pub p: usize,
    pub n: usize,
    pub sigma: Vec<f64>,
    pub sign_corner: Option<SignBit>,
    pub sign_anti: Option<SignBit>,
    pub sign_product: Option<SignBit>,
    pub projective: bool,
}

impl CanonicalParams {
    /// Equal sigma within `tol` and compatible sign bits.
    pub fn matches(&self, other: &Self, tol: f64) -> bool {
        self.p == other.p
            && self.n == other.n
            && self.projective == other.projective
            && self.sigma.iter().zip(&other.sigma).all(|(a, b)| (a - b).abs() <= tol)
            && compatible_opt(self.sign_corner, other.sign_corner)
            && compatible_opt(self.sign_anti, other.sign_anti)
            && compatible_opt(self.sign_product, other.sign_product)
    }
}

pub fn canonical_params(u: &RealMatrix, p: usize, projective: bool) -> Result<CanonicalParams, CartanError> {
    check_special_orthogonal(u, TOL_MEMBERSHIP)?;
    let n = u.n();
    if p == 0 || 2 * p > n {
        return Err(MatError::BadBlockSize { n, p }.into());
    }
    let corner = u.block(0, 0, p, p);
    let sigma: Vec<f64> = svd(&corner).sigma.into_iter().map(|s| s.min(1.0)).collect();
    let dc = SignBit::of(corner.det());
    let half = 2 * p == n;
    let da = half.then(|| SignBit::of(u.block(0, n - p, p, p).det()));
    let (sign_corner, sign_anti, sign_product) = match (projective, half, p.is_multiple_of(2)) {
        (false, false, _) => (Some(dc), None, None),
        (false, true, _) => (Some(dc), da, None),
        (true, false, true) => (Some(dc), None, None),
        (true, false, false) => (None, None, None),
        (true, true, true) => (Some(dc), da, None),
        (true, true, false) => {
            let prod = match (dc, da.expect("half case")) {
                (SignBit::Undetermined, _) | (_, SignBit::Undetermined) => SignBit::Undetermined,
                (a, b) if a == b => SignBit::Plus,
                _ => SignBit::Minus,
            };
            (None, None, Some(prod))
        }
    };
    Ok(CanonicalParams { p, n, sigma, sign_corner, sign_anti, sign_product, projective })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matlib::plane_rotation;

    #[test]
    fn rotation_n2() {
        let theta: f64 = 2.3;
        let u = plane_rotation(2, 1, 2, theta);
        let c = canonical_params(&u, 1, false).unwrap();
        assert!((c.sigma[0] - theta.cos().abs()).abs() < 1e-15);
        assert_eq!(c.sign_corner, Some(SignBit::of(theta.cos())));
        assert_eq!(c.sign_anti, Some(SignBit::of(u[(0, 1)])));
    }

    #[test]
    fn identity_p3() {
        let c = canonical_params(&RealMatrix::identity(8), 3, false).unwrap();
        assert_eq!(c.sigma, vec![1.0, 1.0, 1.0]);
        assert_eq!(c.sign_corner, Some(SignBit::Plus));
        assert_eq!(c.sign_anti, None);
    }

    #[test]
    fn projective_case_table() {
        let u = RealMatrix::identity(8);
        let c = canonical_params(&u, 3, true).unwrap();
        assert_eq!((c.sign_corner, c.sign_anti, c.sign_product), (None, None, None));
        let c = canonical_params(&u, 2, true).unwrap();
        assert_eq!(c.sign_corner, Some(SignBit::Plus));
        let c = canonical_params(&u, 4, true).unwrap();
        assert_eq!((c.sign_corner, c.sign_anti), (Some(SignBit::Plus), Some(SignBit::Undetermined)));
        let c = canonical_params(&RealMatrix::identity(6), 3, true).unwrap();
        assert_eq!(c.sign_product, Some(SignBit::Undetermined));
    }
}
