//! Batch synthesis over independent inputs.
//!
//! With the `parallel` feature (default) the work is spread over the rayon pool;
//! without it, or through [`synthesize_batch_sequential`], inputs run one by one.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::matlib::{random_special_orthogonal, RealMatrix};
use crate::synth::{synthesize, Synthesis, SynthError};

/// Deterministic SO(8) samples: entry k uses seed `seed + k`.
pub fn random_inputs(seed: u64, count: usize) -> Vec<RealMatrix> {
    (0..count as u64).map(|k| random_special_orthogonal(8, seed.wrapping_add(k))).collect()
}

/// Synthesizes every input; results keep the input order.
pub fn synthesize_batch(inputs: &[RealMatrix]) -> Vec<Result<Synthesis, SynthError>> {
    #[cfg(feature = "parallel")]
    {
        inputs.par_iter().map(synthesize).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        synthesize_batch_sequential(inputs)
    }
}

pub fn synthesize_batch_sequential(inputs: &[RealMatrix]) -> Vec<Result<Synthesis, SynthError>> {
    inputs.iter().map(synthesize).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_matches_sequential() {
        let inputs = random_inputs(40, 6);
        let a = synthesize_batch(&inputs);
        let b = synthesize_batch_sequential(&inputs);
        for (x, y) in a.iter().zip(&b) {
            let (x, y) = (x.as_ref().unwrap(), y.as_ref().unwrap());
            assert_eq!(x.circuit, y.circuit);
        }
    }

    #[test]
    fn inputs_are_deterministic() {
        let a = random_inputs(3, 2);
        assert_eq!(a[0].as_slice(), random_inputs(3, 1)[0].as_slice());
        assert_ne!(a[0].as_slice(), a[1].as_slice());
    }
}
