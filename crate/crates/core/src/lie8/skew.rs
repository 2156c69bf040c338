use std::ops::{Add, Mul, Sub};
use std::sync::OnceLock;

use super::LieError;
use crate::matlib::{MatError, RealMatrix};

/// Dimension of so(8).
pub const DIM: usize = 28;

/// The 28 index pairs (j, i), 1 ≤ i < j ≤ 8, in i-major order:
/// (2,1), (3,1), …, (8,1), (3,2), …, (8,7). This is the row/column order of the
/// printed 28×28 triality matrix.
pub fn basis_pairs() -> &'static [(usize, usize); DIM] {
    static PAIRS: OnceLock<[(usize, usize); DIM]> = OnceLock::new();
    PAIRS.get_or_init(|| {
        let mut out = [(0, 0); DIM];
        let mut k = 0;
        for i in 1..=8 {
            for j in i + 1..=8 {
                out[k] = (j, i);
                k += 1;
            }
        }
        out
    })
}

/// Position of f_ji in [`basis_pairs`].
pub fn pair_index(j: usize, i: usize) -> usize {
    assert!(1 <= i && i < j && j <= 8, "need 1 ≤ i < j ≤ 8, got ({j},{i})");
    // pairs with first index i' < i come first: Σ_{i'<i} (8 − i')
    (1..i).map(|k| 8 - k).sum::<usize>() + (j - i - 1)
}

/// f_ji: +1 at (j, i), −1 at (i, j).
pub fn f(j: usize, i: usize) -> RealMatrix {
    let mut m = RealMatrix::zeros(8, 8);
    m[(j - 1, i - 1)] = 1.0;
    m[(i - 1, j - 1)] = -1.0;
    m
}

/// Element of so(8) stored by its coordinates over {f_ji}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkewSym8 {
    pub coeffs: [f64; DIM],
}

impl SkewSym8 {
    pub fn zero() -> Self {
        Self { coeffs: [0.0; DIM] }
    }

    pub fn basis(j: usize, i: usize) -> Self {
        let mut x = Self::zero();
        x.coeffs[pair_index(j, i)] = 1.0;
        x
    }

    pub fn coeff(&self, j: usize, i: usize) -> f64 {
        self.coeffs[pair_index(j, i)]
    }

    pub fn from_matrix(m: &RealMatrix) -> Result<Self, LieError> {
        if m.nrows() != 8 || m.ncols() != 8 {
            return Err(MatError::DimensionMismatch.into());
        }
        if !m.is_skew_symmetric(1e-10 * m.max_abs().max(1.0)) {
            return Err(MatError::NotSkewSymmetric.into());
        }
        let mut x = Self::zero();
        for (k, &(j, i)) in basis_pairs().iter().enumerate() {
            x.coeffs[k] = 0.5 * (m[(j - 1, i - 1)] - m[(i - 1, j - 1)]);
        }
        Ok(x)
    }

    pub fn to_matrix(&self) -> RealMatrix {
        let mut m = RealMatrix::zeros(8, 8);
        for (k, &(j, i)) in basis_pairs().iter().enumerate() {
            m[(j - 1, i - 1)] = self.coeffs[k];
            m[(i - 1, j - 1)] = -self.coeffs[k];
        }
        m
    }

    /// Lie bracket [X, Y] = XY − YX.
    pub fn bracket(&self, other: &Self) -> Self {
        let a = self.to_matrix();
        let b = other.to_matrix();
        Self::from_matrix(&(&(&a * &b) - &(&b * &a))).expect("bracket of skew matrices is skew")
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

impl Add for SkewSym8 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { coeffs: std::array::from_fn(|k| self.coeffs[k] + rhs.coeffs[k]) }
    }
}

impl Sub for SkewSym8 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { coeffs: std::array::from_fn(|k| self.coeffs[k] - rhs.coeffs[k]) }
    }
}

impl Mul<f64> for SkewSym8 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self { coeffs: self.coeffs.map(|x| x * s) }
    }
}

/// tr(X·Y) of the 8×8 matrix forms.
pub fn trace_form(x: &SkewSym8, y: &SkewSym8) -> f64 {
    // tr(XY) = Σ_ab X_ab Y_ba = −2 Σ_{j>i} x_ji y_ji
    -2.0 * x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| a * b).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_order_is_i_major() {
        let p = basis_pairs();
        assert_eq!(p[0], (2, 1));
        assert_eq!(p[6], (8, 1));
        assert_eq!(p[7], (3, 2));
        assert_eq!(p[27], (8, 7));
        for (k, &(j, i)) in p.iter().enumerate() {
            assert_eq!(pair_index(j, i), k);
        }
    }

    #[test]
    fn matrix_round_trip() {
        let mut x = SkewSym8::zero();
        for k in 0..DIM {
            x.coeffs[k] = k as f64 * 0.25 - 3.0;
        }
        let m = x.to_matrix();
        assert_eq!(SkewSym8::from_matrix(&m).unwrap(), x);
        assert_eq!(m[(4, 0)], x.coeff(5, 1));
        assert_eq!(m[(0, 4)], -x.coeff(5, 1));
    }

    #[test]
    fn trace_form_matches_matrix_trace() {
        let x = SkewSym8::basis(5, 1) * 2.0 + SkewSym8::basis(3, 2);
        let y = SkewSym8::basis(5, 1) - SkewSym8::basis(8, 7);
        let direct = (&x.to_matrix() * &y.to_matrix()).trace();
        assert!((trace_form(&x, &y) - direct).abs() < 1e-15);
    }
}
