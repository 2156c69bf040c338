use crate::matlib::{ComplexMatrix, C64};

use super::su2::{Axis, Su2};
use super::CircuitError;

/// Tolerance under which a single-qubit gate is treated as an axis rotation when counting.
pub const AXIS_TOL: f64 = 1e-12;

/// Qubit indices are 1-based; qubit 1 is the most significant bit of the basis index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate {
    Cnot { control: usize, target: usize },
    AxisRotation { axis: Axis, qubit: usize, theta: f64 },
    SingleQubit { qubit: usize, matrix: Su2 },
}

impl Gate {
    pub fn cx(control: usize, target: usize) -> Gate {
        Gate::Cnot { control, target }
    }

    pub fn rx(qubit: usize, theta: f64) -> Gate {
        Gate::AxisRotation { axis: Axis::X, qubit, theta }
    }

    pub fn ry(qubit: usize, theta: f64) -> Gate {
        Gate::AxisRotation { axis: Axis::Y, qubit, theta }
    }

    pub fn rz(qubit: usize, theta: f64) -> Gate {
        Gate::AxisRotation { axis: Axis::Z, qubit, theta }
    }

    pub fn u(qubit: usize, matrix: Su2) -> Gate {
        Gate::SingleQubit { qubit, matrix }
    }

    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::Cnot { control, target } => vec![control, target],
            Gate::AxisRotation { qubit, .. } | Gate::SingleQubit { qubit, .. } => vec![qubit],
        }
    }

    /// The SU(2) element of a single-qubit gate.
    pub fn su2(&self) -> Option<Su2> {
        match *self {
            Gate::Cnot { .. } => None,
            Gate::AxisRotation { axis, theta, .. } => Some(Su2::rotation(axis, theta)),
            Gate::SingleQubit { matrix, .. } => Some(matrix),
        }
    }

    /// Inverse gate.
    pub fn inverse(&self) -> Gate {
        match *self {
            Gate::Cnot { .. } => *self,
            Gate::AxisRotation { axis, qubit, theta } => Gate::AxisRotation { axis, qubit, theta: -theta },
            Gate::SingleQubit { qubit, matrix } => Gate::SingleQubit { qubit, matrix: matrix.adjoint() },
        }
    }

    /// Rotation count: 1 per axis rotation; a general SU(2) gate counts 3 unless it is
    /// an axis rotation (1) or ±I (0) within [`AXIS_TOL`].
    pub fn rotation_count(&self) -> usize {
        match *self {
            Gate::Cnot { .. } => 0,
            Gate::AxisRotation { .. } => 1,
            Gate::SingleQubit { matrix, .. } => {
                if matrix.as_scalar(AXIS_TOL).is_some() {
                    0
                } else if matrix.as_axis_rotation(AXIS_TOL).is_some() {
                    1
                } else {
                    3
                }
            }
        }
    }
}

/// Ordered gate list; the first gate is applied first, so the circuit's matrix is
/// phase · G_k ⋯ G_2 G_1.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    pub n_qubits: usize,
    pub gates: Vec<Gate>,
    /// Global phase multiplying the gate product (1 unless a pass recorded otherwise).
    pub phase: C64,
    /// Free-form provenance label (e.g. "synthesize").
    pub source: Option<String>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Self {
        Self { n_qubits, gates: Vec::new(), phase: C64::new(1.0, 0.0), source: None }
    }

    pub fn from_gates(n_qubits: usize, gates: Vec<Gate>) -> Self {
        Self { gates, ..Self::new(n_qubits) }
    }

    pub fn push(&mut self, g: Gate) {
        self.gates.push(g);
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) {
        self.gates.extend(gates);
    }

    pub fn validate(&self) -> Result<(), CircuitError> {
        for (k, g) in self.gates.iter().enumerate() {
            let qs = g.qubits();
            if qs.iter().any(|&q| q == 0 || q > self.n_qubits) {
                return Err(CircuitError::BadQubitIndex { gate: k, n_qubits: self.n_qubits });
            }
            if qs.len() == 2 && qs[0] == qs[1] {
                return Err(CircuitError::BadQubitIndex { gate: k, n_qubits: self.n_qubits });
            }
        }
        Ok(())
    }

    /// Inverse circuit: reversed order, inverted gates, conjugated phase.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
            phase: self.phase.conj(),
            source: self.source.clone(),
        }
    }

    pub fn cnot_count(&self) -> usize {
        cnot_count(self)
    }

    pub fn rotation_count(&self) -> usize {
        rotation_count(self)
    }
}

pub fn cnot_count(c: &Circuit) -> usize {
    c.gates.iter().filter(|g| matches!(g, Gate::Cnot { .. })).count()
}

pub fn rotation_count(c: &Circuit) -> usize {
    c.gates.iter().map(Gate::rotation_count).sum()
}

/// The 2ⁿ×2ⁿ unitary of the circuit (including its recorded phase).
pub fn evaluate(c: &Circuit) -> Result<ComplexMatrix, CircuitError> {
    c.validate()?;
    let dim = 1usize << c.n_qubits;
    let mut u = ComplexMatrix::identity(dim).scale(c.phase);
    for g in &c.gates {
        apply_left(&mut u, g, c.n_qubits);
    }
    Ok(u)
}

/// U ← G·U, acting on rows.
fn apply_left(u: &mut ComplexMatrix, g: &Gate, n: usize) {
    let dim = 1usize << n;
    let bit = |q: usize| 1usize << (n - q);
    match *g {
        Gate::Cnot { control, target } => {
            let (cb, tb) = (bit(control), bit(target));
            for row in 0..dim {
                if row & cb != 0 && row & tb == 0 {
                    let other = row | tb;
                    for col in 0..dim {
                        let t = u[(row, col)];
                        u[(row, col)] = u[(other, col)];
                        u[(other, col)] = t;
                    }
                }
            }
        }
        _ => {
            let q = g.qubits()[0];
            let m = g.su2().expect("single-qubit gate").matrix();
            let qb = bit(q);
            for row in 0..dim {
                if row & qb != 0 {
                    continue;
                }
                let r1 = row | qb;
                for col in 0..dim {
                    let (x0, x1) = (u[(row, col)], u[(r1, col)]);
                    u[(row, col)] = m[(0, 0)] * x0 + m[(0, 1)] * x1;
                    u[(r1, col)] = m[(1, 0)] * x0 + m[(1, 1)] * x1;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_is_identity() {
        let u = evaluate(&Circuit::new(3)).unwrap();
        assert!(u.sub(&ComplexMatrix::identity(8)).frobenius_norm() == 0.0);
        assert_eq!((cnot_count(&Circuit::new(3)), rotation_count(&Circuit::new(3))), (0, 0));
    }

    #[test]
    fn cnot_matrix() {
        let u = evaluate(&Circuit::from_gates(2, vec![Gate::cx(1, 2)])).unwrap();
        let expect = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(u[(i, j)], C64::new(f64::from(expect[i][j]), 0.0));
            }
        }
    }

    #[test]
    fn order_contract() {
        let g1 = Gate::rx(1, 0.3);
        let g2 = Gate::cx(1, 2);
        let both = evaluate(&Circuit::from_gates(2, vec![g1, g2])).unwrap();
        let a = evaluate(&Circuit::from_gates(2, vec![g1])).unwrap();
        let b = evaluate(&Circuit::from_gates(2, vec![g2])).unwrap();
        assert!(both.sub(&(&b * &a)).frobenius_norm() == 0.0);
    }

    #[test]
    fn qubit_one_is_most_significant() {
        let u = evaluate(&Circuit::from_gates(2, vec![Gate::u(1, Su2::rx(0.5))])).unwrap();
        let expect = Su2::rx(0.5).matrix().kron(&ComplexMatrix::identity(2));
        assert!(u.sub(&expect).frobenius_norm() < 1e-16);
    }

    #[test]
    fn bad_index() {
        let c = Circuit::from_gates(3, vec![Gate::cx(1, 4)]);
        assert!(matches!(evaluate(&c), Err(CircuitError::BadQubitIndex { .. })));
        let c = Circuit::from_gates(3, vec![Gate::cx(2, 2)]);
        assert!(evaluate(&c).is_err());
    }

    #[test]
    fn counts_by_variant() {
        let c = Circuit::from_gates(
            2,
            vec![Gate::cx(1, 2), Gate::rx(1, 0.2), Gate::u(2, Su2::rz(0.4)), Gate::u(1, Su2::rx(0.1) * Su2::ry(0.3))],
        );
        assert_eq!((c.cnot_count(), c.rotation_count()), (1, 5));
    }
}
