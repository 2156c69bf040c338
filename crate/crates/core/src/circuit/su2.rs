use std::fmt;
use std::ops::Mul;

use crate::matlib::{ComplexMatrix, C64};

use super::CircuitError;

/// Rotation axis of R_a(θ) = exp(−iθσ_a/2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn from_index(k: usize) -> Axis {
        Axis::ALL[k]
    }

    pub fn letter(self) -> char {
        ['X', 'Y', 'Z'][self.index()]
    }
}

/// Element of SU(2) stored as a0·I − i(a1 σx + a2 σy + a3 σz) with Σ a_k² = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2(pub [f64; 4]);

impl Su2 {
    pub const IDENTITY: Su2 = Su2([1.0, 0.0, 0.0, 0.0]);

    pub fn rotation(axis: Axis, theta: f64) -> Su2 {
        let (s, c) = (theta / 2.0).sin_cos();
        let mut a = [c, 0.0, 0.0, 0.0];
        a[axis.index() + 1] = s;
        Su2(a)
    }

    pub fn rx(theta: f64) -> Su2 {
        Su2::rotation(Axis::X, theta)
    }

    pub fn ry(theta: f64) -> Su2 {
        Su2::rotation(Axis::Y, theta)
    }

    pub fn rz(theta: f64) -> Su2 {
        Su2::rotation(Axis::Z, theta)
    }

    /// Reads a 2×2 matrix, which must be special unitary within `tol`.
    pub fn from_matrix(m: &ComplexMatrix, tol: f64) -> Result<Su2, CircuitError> {
        if m.nrows() != 2 || m.ncols() != 2 {
            return Err(CircuitError::NotSpecialUnitary);
        }
        if m.unitarity_defect() > tol || (m.det() - C64::new(1.0, 0.0)).norm() > tol {
            return Err(CircuitError::NotSpecialUnitary);
        }
        Ok(Self::project(m))
    }

    /// Removes a global phase from a 2×2 unitary: returns (U/√det, √det).
    pub fn from_unitary(m: &ComplexMatrix) -> (Su2, C64) {
        let root = m.det().sqrt();
        (Self::project(&m.scale(C64::new(1.0, 0.0) / root)), root)
    }

    fn project(m: &ComplexMatrix) -> Su2 {
        let (m00, m01, m10, m11) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
        let a = [(m00 + m11).re / 2.0, -(m10 + m01).im / 2.0, (m10 - m01).re / 2.0, (m11 - m00).im / 2.0];
        Su2(a).normalized()
    }

    pub fn matrix(&self) -> ComplexMatrix {
        let [a0, a1, a2, a3] = self.0;
        ComplexMatrix::from_row_slice(
            2,
            2,
            &[C64::new(a0, -a3), C64::new(-a2, -a1), C64::new(a2, -a1), C64::new(a0, a3)],
        )
    }

    pub fn normalized(&self) -> Su2 {
        let n = self.0.iter().map(|x| x * x).sum::<f64>().sqrt();
        Su2(self.0.map(|x| x / n))
    }

    pub fn adjoint(&self) -> Su2 {
        let [a0, a1, a2, a3] = self.0;
        Su2([a0, -a1, -a2, -a3])
    }

    pub fn neg(&self) -> Su2 {
        Su2(self.0.map(|x| -x))
    }

    /// max |a_k − b_k| ignoring the ±1 ambiguity.
    pub fn projective_distance(&self, other: &Su2) -> f64 {
        let d = |s: f64| self.0.iter().zip(&other.0).map(|(a, b)| (a - s * b).abs()).fold(0.0, f64::max);
        d(1.0).min(d(-1.0))
    }

    pub fn distance(&self, other: &Su2) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    /// ±I within `tol`; returns the sign.
    pub fn as_scalar(&self, tol: f64) -> Option<f64> {
        (self.0[1..].iter().all(|x| x.abs() <= tol)).then(|| self.0[0].signum())
    }

    /// Single-axis rotation within `tol`; returns the axis and an exact angle in (−2π, 2π].
    pub fn as_axis_rotation(&self, tol: f64) -> Option<(Axis, f64)> {
        let v = &self.0[1..];
        let nz: Vec<usize> = (0..3).filter(|&k| v[k].abs() > tol).collect();
        match nz[..] {
            [k] => Some((Axis::from_index(k), 2.0 * v[k].atan2(self.0[0]))),
            _ => None,
        }
    }

    /// Diagonal in the computational basis (commutes with a CNOT control).
    pub fn is_z_type(&self, tol: f64) -> bool {
        self.0[1].abs() <= tol && self.0[2].abs() <= tol
    }

    /// Function of σx only (commutes with a CNOT target).
    pub fn is_x_type(&self, tol: f64) -> bool {
        self.0[2].abs() <= tol && self.0[3].abs() <= tol
    }

    /// Conjugation by the Hadamard gate: σx ↔ σz, σy ↦ −σy.
    pub fn hadamard_conjugate(&self) -> Su2 {
        let [a0, a1, a2, a3] = self.0;
        Su2([a0, a3, -a2, a1])
    }
}

impl Mul for Su2 {
    type Output = Su2;
    /// Matrix product (right factor applied first).
    fn mul(self, b: Su2) -> Su2 {
        let [a0, a1, a2, a3] = self.0;
        let [b0, b1, b2, b3] = b.0;
        Su2([
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + b0 * a1 + (a2 * b3 - a3 * b2),
            a0 * b2 + b0 * a2 + (a3 * b1 - a1 * b3),
            a0 * b3 + b0 * a3 + (a1 * b2 - a2 * b1),
        ])
    }
}

impl fmt::Display for Su2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a0, a1, a2, a3] = self.0;
        write!(f, "{a0:.6} - i({a1:.6} X + {a2:.6} Y + {a3:.6} Z)")
    }
}

/// U = R_z(φ) R_y(θ) R_z(ψ), exactly (no sign ambiguity), with θ ∈ [0, π].
pub fn su2_euler(u: &ComplexMatrix) -> Result<(f64, f64, f64), CircuitError> {
    Ok(zyz(&Su2::from_matrix(u, 1e-12)?))
}

/// ZYZ angles of an SU(2) element.
pub fn zyz(u: &Su2) -> (f64, f64, f64) {
    let [a0, a1, a2, a3] = u.0;
    let c = a0.hypot(a3);
    let s = a1.hypot(a2);
    let theta = 2.0 * s.atan2(c);
    // φ+ψ and φ−ψ from the phases of the diagonal and off-diagonal entries
    let mut sum = 2.0 * a3.atan2(a0);
    let mut diff = 2.0 * (-a1).atan2(a2);
    const EPS: f64 = 1e-15;
    if s <= EPS {
        diff = sum;
    } else if c <= EPS {
        sum = diff;
    }
    if s <= EPS && c <= EPS {
        sum = 0.0;
        diff = 0.0;
    }
    ((sum + diff) / 2.0, theta, (sum - diff) / 2.0)
}

/// Proper Euler angles for the word (outer, Y, outer) with outer ∈ {X, Z}:
/// U = R_outer(a) R_y(b) R_outer(c).
pub fn euler_outer_y(u: &Su2, outer: Axis) -> (f64, f64, f64) {
    match outer {
        Axis::Z => zyz(u),
        Axis::X => {
            // H R_x(a) R_y(b) R_x(c) H = R_z(a) R_y(−b) R_z(c)
            let (a, b, c) = zyz(&u.hadamard_conjugate());
            (a, -b, c)
        }
        Axis::Y => panic!("outer axis must differ from Y"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matlib::{random_su2, rng_from_seed};

    #[test]
    fn rotation_matrices() {
        let t = 0.7;
        let m = Su2::rx(t).matrix();
        let (s, c) = (t / 2.0).sin_cos();
        assert!((m[(0, 0)] - C64::new(c, 0.0)).norm() < 1e-16);
        assert!((m[(0, 1)] - C64::new(0.0, -s)).norm() < 1e-16);
        let m = Su2::ry(t).matrix();
        assert!((m[(1, 0)] - C64::new(s, 0.0)).norm() < 1e-16);
        let m = Su2::rz(t).matrix();
        assert!((m[(0, 0)] - C64::from_polar(1.0, -t / 2.0)).norm() < 1e-16);
    }

    #[test]
    fn product_matches_matrix_product() {
        let mut rng = rng_from_seed(1);
        for _ in 0..20 {
            let a = Su2::from_matrix(&random_su2(&mut rng), 1e-12).unwrap();
            let b = Su2::from_matrix(&random_su2(&mut rng), 1e-12).unwrap();
            let lhs = (a * b).matrix();
            let rhs = &a.matrix() * &b.matrix();
            assert!(lhs.sub(&rhs).frobenius_norm() < 1e-14);
        }
    }

    #[test]
    fn euler_trivial() {
        assert_eq!(zyz(&Su2::IDENTITY), (0.0, 0.0, 0.0));
        let (p, t, s) = zyz(&Su2::ry(0.4));
        assert!(p.abs() < 1e-16 && (t - 0.4).abs() < 1e-15 && s.abs() < 1e-16);
    }

    #[test]
    fn euler_rebuilds_exactly() {
        let mut rng = rng_from_seed(2);
        for _ in 0..200 {
            let m = random_su2(&mut rng);
            let (p, t, s) = su2_euler(&m).unwrap();
            assert!((0.0..=std::f64::consts::PI).contains(&t));
            let back = (Su2::rz(p) * Su2::ry(t) * Su2::rz(s)).matrix();
            assert!(back.sub(&m).frobenius_norm() < 1e-12);
        }
        for u in [Su2::rz(0.3), Su2::rz(0.3).neg(), Su2::rx(std::f64::consts::PI), Su2::ry(-2.0)] {
            let (p, t, s) = zyz(&u);
            assert!((Su2::rz(p) * Su2::ry(t) * Su2::rz(s)).distance(&u) < 1e-14, "{u}");
        }
    }

    #[test]
    fn xyx_euler() {
        let mut rng = rng_from_seed(5);
        for _ in 0..50 {
            let u = Su2::from_matrix(&random_su2(&mut rng), 1e-12).unwrap();
            let (a, b, c) = euler_outer_y(&u, Axis::X);
            assert!((Su2::rx(a) * Su2::ry(b) * Su2::rx(c)).distance(&u) < 1e-14);
        }
    }

    #[test]
    fn rejects_non_special() {
        let m = Su2::rx(0.3).matrix().scale(C64::new(0.0, 1.0));
        assert!(su2_euler(&m).is_err());
    }
}
