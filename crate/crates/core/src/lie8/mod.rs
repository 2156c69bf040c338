//! so(8) structure: f-basis, Cartan subalgebra, D4 roots, Hurwitz quaternions,
//! the triality automorphism τ, its group-level lift T, and the Pauli dictionary.

mod group;
mod lattice;
mod pauli;
mod quaternion;
mod roots;
mod skew;
mod tau;

pub use group::{triality_group, triality_inverse, triality_of_factors};
pub use lattice::{dual_lattice_membership, root_lattice_membership};
pub use pauli::{pauli_triality_table, Pauli, PauliWord, TableEntry};
pub use quaternion::{hurwitz_units, omega, omega_matrix, Quaternion};
pub use roots::{build_root_vectors, cartan_basis, Root, RootVectorTable};
pub use skew::{basis_pairs, f, pair_index, trace_form, SkewSym8, DIM};
pub use tau::{build_tau, decode_reference_tau, tau, tau_apply, TrialityOperator, REFERENCE_TAU};

use crate::matlib::MatError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LieError {
    #[error(transparent)]
    Matrix(#[from] MatError),
    #[error("triality construction inconsistent: {0}")]
    ConstructionInconsistent(String),
    #[error("bad Pauli word {0:?}")]
    BadPauliWord(String),
}
