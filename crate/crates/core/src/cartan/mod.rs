//! Double cosets of block subgroups: partitions, PSO(π) membership, canonical
//! parameters and matching K1·V·K2 = U.

mod involution;
mod matching;
mod params;
mod partition;

pub use involution::{cartan_double, InvolutionSpec};
pub use matching::{lift_corner_positive, match_double_coset, DoubleCosetMatch};
pub use params::{canonical_params, CanonicalParams, SignBit};
pub use partition::{block_membership, partition_meet, BlockGroupSpec, Membership, Partition};

use crate::matlib::MatError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CartanError {
    #[error(transparent)]
    Matrix(#[from] MatError),
    #[error("partitions live on different ground sets ({0} vs {1})")]
    GroundSetMismatch(usize, usize),
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("canonical parameters differ: {0}")]
    ParameterMismatch(String),
    #[error("double-coset matching failed (residual {0:.3e})")]
    MatchFailed(f64),
}
