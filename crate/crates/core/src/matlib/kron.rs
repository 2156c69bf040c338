use super::{ComplexMatrix, MatError, C64};

/// Splits U ≈ A ⊗ B (A is m×m, B is n×n).
///
/// Uses the dominant entry of the rearranged mn² matrix as a rank-one pivot, then
/// normalizes det(B) = 1 and carries the remaining phase in A.
pub fn kron_factor(u: &ComplexMatrix, m: usize, n: usize, tol: f64) -> Result<(ComplexMatrix, ComplexMatrix), MatError> {
    if u.nrows() != m * n || u.ncols() != m * n {
        return Err(MatError::DimensionMismatch);
    }
    // R[(a1,a2),(b1,b2)] = U[a1*n+b1, a2*n+b2]; row index over A entries, column over B entries.
    let r = |ai: usize, bi: usize| u[((ai / m) * n + bi / n, (ai % m) * n + bi % n)];
    let (mut pa, mut pb, mut best) = (0, 0, -1.0);
    for ai in 0..m * m {
        for bi in 0..n * n {
            let v = r(ai, bi).norm();
            if v > best {
                best = v;
                pa = ai;
                pb = bi;
            }
        }
    }
    if best <= 0.0 {
        return Err(MatError::NotTensorProduct { residual: f64::INFINITY });
    }
    let pivot = r(pa, pb);
    let mut a = ComplexMatrix::from_fn(m, m, |i, j| r(i * m + j, pb) / pivot);
    let mut b = ComplexMatrix::from_fn(n, n, |i, j| r(pa, i * n + j));
    let det = b.det();
    if det.norm() < 1e-300 {
        return Err(MatError::NotTensorProduct { residual: f64::INFINITY });
    }
    let root = det.powf(1.0 / n as f64);
    b = b.scale(C64::new(1.0, 0.0) / root);
    a = a.scale(root);
    let residual = a.kron(&b).sub(u).frobenius_norm();
    if residual > tol {
        return Err(MatError::NotTensorProduct { residual });
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matlib::{random_su2, rng_from_seed};

    fn pauli_x() -> ComplexMatrix {
        let o = C64::new(0.0, 0.0);
        let l = C64::new(1.0, 0.0);
        ComplexMatrix::from_row_slice(2, 2, &[o, l, l, o])
    }

    fn pauli_z() -> ComplexMatrix {
        let o = C64::new(0.0, 0.0);
        let l = C64::new(1.0, 0.0);
        ComplexMatrix::from_row_slice(2, 2, &[l, o, o, -l])
    }

    #[test]
    fn identity_splits() {
        let (a, b) = kron_factor(&ComplexMatrix::identity(4), 2, 2, 1e-10).unwrap();
        assert!(a.sub(&ComplexMatrix::identity(2)).frobenius_norm() < 1e-15);
        assert!(b.sub(&ComplexMatrix::identity(2)).frobenius_norm() < 1e-15);
    }

    #[test]
    fn pauli_product() {
        let u = pauli_x().kron(&pauli_z());
        let (a, b) = kron_factor(&u, 2, 2, 1e-10).unwrap();
        // det σz = −1, so B = ±i σz and A = ∓i σx; the product is exact
        assert!(a.kron(&b).sub(&u).frobenius_norm() < 1e-14);
        assert!((b.det() - C64::new(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn random_su2_pairs() {
        let mut rng = rng_from_seed(3);
        for _ in 0..50 {
            let x = random_su2(&mut rng);
            let y = random_su2(&mut rng);
            let (a, b) = kron_factor(&x.kron(&y), 2, 2, 1e-10).unwrap();
            let same = a.sub(&x).frobenius_norm() < 1e-10 && b.sub(&y).frobenius_norm() < 1e-10;
            let flipped = a.add(&x).frobenius_norm() < 1e-10 && b.add(&y).frobenius_norm() < 1e-10;
            assert!(same || flipped);
        }
    }

    #[test]
    fn rejects_entangled() {
        let mut u = ComplexMatrix::identity(4);
        u[(2, 2)] = C64::new(0.0, 0.0);
        u[(3, 3)] = C64::new(0.0, 0.0);
        u[(2, 3)] = C64::new(1.0, 0.0);
        u[(3, 2)] = C64::new(1.0, 0.0);
        assert!(matches!(kron_factor(&u, 2, 2, 1e-10), Err(MatError::NotTensorProduct { .. })));
    }
}
