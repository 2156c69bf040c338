//! Gate-level circuits on n qubits: gate set, statevector-free unitary evaluation,
//! magic-basis circuits, peephole simplification and text / QASM round-trips.

mod gate;
mod magic;
mod peephole;
mod su2;
mod text;

pub use gate::{cnot_count, evaluate, rotation_count, Circuit, Gate, AXIS_TOL};
pub use magic::{magic_circuit, magic_m, magic_m_circuit, magic_q, mu, mu_inv, MagicMatrices};
pub use peephole::{peephole, peephole_with_stats, PeepholeStats};
pub use su2::{euler_outer_y, su2_euler, zyz, Axis, Su2};
pub use text::{emit_qasm, emit_text, parse_text};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CircuitError {
    #[error("matrix is not in SU(2)")]
    NotSpecialUnitary,
    #[error("gate {gate} addresses a qubit outside 1..={n_qubits} (or repeats one)")]
    BadQubitIndex { gate: usize, n_qubits: usize },
    #[error("line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("rewrite changed the circuit unitary by {0:.3e}")]
    RewriteDrift(f64),
}
