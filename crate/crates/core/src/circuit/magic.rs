use std::f64::consts::{FRAC_PI_2, PI};

use crate::matlib::{ComplexMatrix, C64};

use super::gate::{Circuit, Gate};

/// The fixed magic matrix Q (columns form the magic basis).
pub fn magic_q() -> ComplexMatrix {
    let h = 0.5;
    let (r, i) = (|x: f64| C64::new(x, 0.0), |x: f64| C64::new(0.0, x));
    ComplexMatrix::from_row_slice(
        4,
        4,
        &[
            r(h), r(h), i(h), i(h),
            r(h), r(-h), i(h), i(-h),
            r(-h), r(h), i(h), i(-h),
            r(h), r(h), i(-h), i(-h),
        ],
    )
}

/// M = I₂ ⊗ Q.
pub fn magic_m() -> ComplexMatrix {
    ComplexMatrix::identity(2).kron(&magic_q())
}

/// Q and M packaged together.
#[derive(Debug, Clone)]
pub struct MagicMatrices {
    pub q: ComplexMatrix,
    pub m: ComplexMatrix,
}

impl Default for MagicMatrices {
    fn default() -> Self {
        Self { q: magic_q(), m: magic_m() }
    }
}

/// μ(U) = M† U M.
pub fn mu(u: &ComplexMatrix) -> ComplexMatrix {
    let m = magic_m();
    &(&m.adjoint() * u) * &m
}

/// μ⁻¹(U) = M U M†.
pub fn mu_inv(u: &ComplexMatrix) -> ComplexMatrix {
    let m = magic_m();
    &(&m * u) * &m.adjoint()
}

fn magic_gates(a: usize, b: usize) -> Vec<Gate> {
    vec![
        Gate::rx(a, FRAC_PI_2),
        Gate::rz(b, -FRAC_PI_2),
        Gate::cx(a, b),
        Gate::rx(a, -PI),
        Gate::rx(b, FRAC_PI_2),
        Gate::rz(b, -FRAC_PI_2),
    ]
}

/// Two-qubit circuit with one CNOT evaluating exactly to Q.
pub fn magic_circuit() -> Circuit {
    Circuit::from_gates(2, magic_gates(1, 2))
}

/// Three-qubit circuit evaluating exactly to M = I₂ ⊗ Q (Q on qubits 2, 3).
pub fn magic_m_circuit() -> Circuit {
    Circuit::from_gates(3, magic_gates(2, 3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::evaluate;

    #[test]
    fn magic_circuit_is_q() {
        let c = magic_circuit();
        assert_eq!((c.cnot_count(), c.rotation_count()), (1, 5));
        let u = evaluate(&c).unwrap();
        assert!(u.sub(&magic_q()).frobenius_norm() < 1e-15);
    }

    #[test]
    fn m_circuit_is_m() {
        let u = evaluate(&magic_m_circuit()).unwrap();
        assert!(u.sub(&magic_m()).frobenius_norm() < 1e-15);
        assert!(magic_q().unitarity_defect() < 1e-15);
    }
}
