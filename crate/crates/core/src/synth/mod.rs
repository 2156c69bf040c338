//! The end-to-end pipeline: triality, two nested Cartan steps, template extraction,
//! circuit assembly and verification.

mod kchi;
mod levels;
mod pipeline;
mod templates;

pub use kchi::{quaternion_form_residual, is_symplectic, kchi_block_test, kchi_pauli_words, magic_pattern_residual};
pub use levels::{
    decompose_level1, decompose_level2, level1_partition, level2_partition, Level1, Level2, LEVEL2_INDEX, PERM1,
};
pub use pipeline::{
    census_circuit, raw_circuit, synthesize, synthesize_with, verify, Census, DecompositionTree, Synthesis,
    VerifyReport, INPUT_TOL, VERIFY_TOL,
};
pub use templates::{
    circuit_for_a, extract_b, extract_k_gates, magic_conjugate, solve_a_params, t_of_a, TemplateA, TemplateB,
    TemplateK,
};

use crate::cartan::CartanError;
use crate::circuit::CircuitError;
use crate::lie8::LieError;
use crate::matlib::MatError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SynthError {
    #[error("input is not special orthogonal: {0}")]
    NotSpecialOrthogonal(MatError),
    #[error(transparent)]
    Matrix(#[from] MatError),
    #[error(transparent)]
    Triality(#[from] LieError),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error("factor lies outside the block group (off-block residual {0:.3e})")]
    NotInBlockGroup(f64),
    #[error("factor is not of the expected template form: {0}")]
    NotInCartanSubgroup(String),
    #[error("template check failed: {0}")]
    TemplateVerificationFailed(String),
    #[error("synthesized circuit misses the target by {0:.3e}")]
    SynthesisVerificationFailed(f64),
    #[error("circuit acts on dimension {circuit}, matrix has dimension {matrix}")]
    DimensionMismatch { circuit: usize, matrix: usize },
}
