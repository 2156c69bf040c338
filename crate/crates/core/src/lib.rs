//! Synthesis of real 3-qubit gates (SO(8)) into circuits with at most 14 CNOTs.

pub mod matlib;
pub mod lie8;
pub mod cartan;
pub mod circuit;
pub mod synth;
pub mod batch;
