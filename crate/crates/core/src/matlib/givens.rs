use super::{check_special_orthogonal, MatError, RealMatrix, TOL_MEMBERSHIP};

/// Diagonal matrix with −1 exactly on the (1-based) positions in `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignDiagonal {
    pub n: usize,
    pub j: Vec<usize>,
}

impl SignDiagonal {
    pub fn new(n: usize, mut j: Vec<usize>) -> Self {
        j.sort_unstable();
        j.dedup();
        assert!(j.iter().all(|&k| (1..=n).contains(&k)), "sign position out of range");
        Self { n, j }
    }

    pub fn matrix(&self) -> RealMatrix {
        let d: Vec<f64> = (1..=self.n).map(|k| if self.j.contains(&k) { -1.0 } else { 1.0 }).collect();
        RealMatrix::diagonal(&d)
    }
}

/// exp(θ f_ji): rotation by θ in the (i, j) coordinate plane, indices 1-based with i < j.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GivensFactor {
    pub i: usize,
    pub j: usize,
    pub theta: f64,
}

impl GivensFactor {
    pub fn matrix(&self, n: usize) -> RealMatrix {
        plane_rotation(n, self.i, self.j, self.theta)
    }
}

/// exp(θ f_ji) as an n×n matrix.
pub fn plane_rotation(n: usize, i: usize, j: usize, theta: f64) -> RealMatrix {
    assert!(1 <= i && i < j && j <= n, "bad plane ({i},{j}) for n={n}");
    let (s, c) = theta.sin_cos();
    let mut g = RealMatrix::identity(n);
    g[(i - 1, i - 1)] = c;
    g[(j - 1, j - 1)] = c;
    g[(j - 1, i - 1)] = s;
    g[(i - 1, j - 1)] = -s;
    g
}

/// Column-major Givens elimination: V = G_1 G_2 ⋯ G_k.
///
/// Below-diagonal entries are zeroed column by column (j descending); the residual ±1
/// diagonal is absorbed as π-angle rotations pairing consecutive −1 positions.
pub fn givens_factorize(v: &RealMatrix) -> Result<Vec<GivensFactor>, MatError> {
    check_special_orthogonal(v, TOL_MEMBERSHIP)?;
    let n = v.n();
    let mut r = v.clone();
    let mut out = Vec::new();
    for i in 1..n {
        for j in (i + 1..=n).rev() {
            let b = r[(j - 1, i - 1)];
            if b == 0.0 {
                continue;
            }
            let a = r[(i - 1, i - 1)];
            let theta = b.atan2(a);
            let (s, c) = theta.sin_cos();
            // R ← Gᵀ R touches only rows i and j
            for col in 0..n {
                let ri = r[(i - 1, col)];
                let rj = r[(j - 1, col)];
                r[(i - 1, col)] = c * ri + s * rj;
                r[(j - 1, col)] = -s * ri + c * rj;
            }
            r[(j - 1, i - 1)] = 0.0;
            out.push(GivensFactor { i, j, theta });
        }
    }
    let neg: Vec<usize> = (1..=n).filter(|&k| r[(k - 1, k - 1)] < 0.0).collect();
    debug_assert!(neg.len().is_multiple_of(2), "odd number of −1 entries for det +1 input");
    for pair in neg.chunks_exact(2) {
        out.push(GivensFactor { i: pair[0], j: pair[1], theta: std::f64::consts::PI });
    }
    Ok(out)
}

/// Ordered product of Givens factors.
pub fn givens_product(n: usize, factors: &[GivensFactor]) -> RealMatrix {
    factors.iter().fold(RealMatrix::identity(n), |acc, f| &acc * &f.matrix(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matlib::random_special_orthogonal;

    #[test]
    fn identity_is_empty() {
        assert!(givens_factorize(&RealMatrix::identity(8)).unwrap().is_empty());
    }

    #[test]
    fn single_plane_rotation() {
        let f = givens_factorize(&plane_rotation(8, 1, 2, 0.7)).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!((f[0].i, f[0].j), (1, 2));
        assert!((f[0].theta - 0.7).abs() < 1e-15);
    }

    #[test]
    fn random_reassembly_and_count() {
        for seed in 0..50 {
            let v = random_special_orthogonal(8, seed);
            let f = givens_factorize(&v).unwrap();
            assert!(f.len() <= 35);
            assert!((&givens_product(8, &f) - &v).max_abs() < 1e-12);
        }
    }

    #[test]
    fn residual_signs_become_pi_rotations() {
        let d = SignDiagonal::new(8, vec![2, 5, 6, 8]).matrix();
        let f = givens_factorize(&d).unwrap();
        assert_eq!(f.len(), 2);
        assert!((&givens_product(8, &f) - &d).max_abs() < 1e-15);
    }

    #[test]
    fn rejects_reflection() {
        let d = SignDiagonal::new(3, vec![1]).matrix();
        assert!(matches!(givens_factorize(&d), Err(MatError::NotSpecialOrthogonal { .. })));
    }
}
