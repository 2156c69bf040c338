use std::ops::Mul;

use crate::matlib::RealMatrix;

/// x1 + x2·i + x3·j + x4·k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion(pub [f64; 4]);

impl Quaternion {
    pub const ONE: Quaternion = Quaternion([1.0, 0.0, 0.0, 0.0]);

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = self.0;
        Quaternion([a, -b, -c, -d])
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| (a - b).abs() <= tol)
    }

    /// Integer or half-integer coordinates throughout (Hurwitz order).
    pub fn is_hurwitz(&self) -> bool {
        let int = |x: f64| (x - x.round()).abs() < 1e-12;
        self.0.iter().all(|&x| int(x)) || self.0.iter().all(|&x| int(x - 0.5))
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, b: Quaternion) -> Quaternion {
        let [a1, a2, a3, a4] = self.0;
        let [b1, b2, b3, b4] = b.0;
        Quaternion([
            a1 * b1 - a2 * b2 - a3 * b3 - a4 * b4,
            a1 * b2 + a2 * b1 + a3 * b4 - a4 * b3,
            a1 * b3 - a2 * b4 + a3 * b1 + a4 * b2,
            a1 * b4 + a2 * b3 - a3 * b2 + a4 * b1,
        ])
    }
}

/// ω = (−1 + i + j + k)/2, a primitive cube root of unity among the Hurwitz units.
pub fn omega() -> Quaternion {
    Quaternion([-0.5, 0.5, 0.5, 0.5])
}

/// Matrix of left multiplication by ω on ℝ⁴ (columns are ω·e_k).
pub fn omega_matrix() -> RealMatrix {
    let w = omega();
    let mut m = RealMatrix::zeros(4, 4);
    for k in 0..4 {
        let mut e = [0.0; 4];
        e[k] = 1.0;
        let col = (w * Quaternion(e)).0;
        m.set_column(k, &col);
    }
    m
}

/// The 24 unit Hurwitz quaternions: ±1, ±i, ±j, ±k and (±1 ± i ± j ± k)/2.
pub fn hurwitz_units() -> Vec<Quaternion> {
    let mut out = Vec::with_capacity(24);
    for k in 0..4 {
        for s in [1.0, -1.0] {
            let mut v = [0.0; 4];
            v[k] = s;
            out.push(Quaternion(v));
        }
    }
    for bits in 0..16u32 {
        let v = std::array::from_fn(|k| if bits >> k & 1 == 1 { -0.5 } else { 0.5 });
        out.push(Quaternion(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_matrix_matches_printed() {
        let printed = [[-1.0, -1.0, -1.0, -1.0], [1.0, -1.0, -1.0, 1.0], [1.0, 1.0, -1.0, -1.0], [1.0, -1.0, 1.0, -1.0]];
        let m = omega_matrix();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m[(i, j)], 0.5 * printed[i][j]);
            }
        }
        let cube = &(&m * &m) * &m;
        assert!((&cube - &RealMatrix::identity(4)).max_abs() < 1e-15);
        assert!(m.is_special_orthogonal(1e-15));
    }

    #[test]
    fn omega_cubed_and_omega_i() {
        let w = omega();
        assert!((w * w * w).approx_eq(&Quaternion::ONE, 1e-15));
        let wi = w * Quaternion([0.0, 1.0, 0.0, 0.0]);
        assert!(wi.approx_eq(&Quaternion([-0.5, -0.5, 0.5, -0.5]), 0.0));
    }

    #[test]
    fn hurwitz_units_form_a_group() {
        let u = hurwitz_units();
        assert_eq!(u.len(), 24);
        assert!(u.iter().all(|q| q.is_hurwitz() && (q.norm() - 1.0).abs() < 1e-15));
        for a in &u {
            for b in &u {
                let p = *a * *b;
                assert!(u.iter().any(|c| c.approx_eq(&p, 1e-15)));
            }
        }
    }

    #[test]
    fn norm_is_multiplicative() {
        let a = Quaternion([0.3, -1.2, 2.0, 0.7]);
        let b = Quaternion([-0.4, 0.1, 0.9, -2.2]);
        assert!(((a * b).norm() - a.norm() * b.norm()).abs() < 1e-12 * a.norm() * b.norm());
    }
}
