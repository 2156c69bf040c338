use std::fmt;
use std::str::FromStr;

use super::CartanError;
use crate::matlib::{MatError, RealMatrix};

/// Set partition of {1, …, n}. Blocks are sorted internally and by least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, CartanError> {
        let mut seen = vec![false; n + 1];
        let mut blocks: Vec<Vec<usize>> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        for b in &mut blocks {
            b.sort_unstable();
            for &k in b.iter() {
                if k == 0 || k > n || seen[k] {
                    return Err(CartanError::BadPartition(format!("element {k} repeated or out of range")));
                }
                seen[k] = true;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(CartanError::BadPartition("blocks do not cover the ground set".into()));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(Self { n, blocks })
    }

    /// The single-block partition of [n].
    pub fn trivial(n: usize) -> Self {
        Self { n, blocks: vec![(1..=n).collect()] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    fn block_of(&self) -> Vec<usize> {
        let mut owner = vec![0; self.n + 1];
        for (bi, b) in self.blocks.iter().enumerate() {
            for &k in b {
                owner[k] = bi;
            }
        }
        owner
    }

    /// True when (a, b) lie in a common block (1-based).
    pub fn same_block(&self, a: usize, b: usize) -> bool {
        let owner = self.block_of();
        owner[a] == owner[b]
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n > 9 { "," } else { "" };
        let parts: Vec<String> =
            self.blocks.iter().map(|b| b.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(sep)).collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl FromStr for Partition {
    type Err = CartanError;

    /// Parses the compact form `125|34678` (single-digit elements).
    fn from_str(s: &str) -> Result<Self, CartanError> {
        let blocks: Vec<Vec<usize>> = s
            .split('|')
            .map(|b| {
                b.trim()
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| CartanError::BadPartition(s.into())))
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let n = blocks.iter().map(Vec::len).sum();
        Partition::new(n, blocks)
    }
}

/// Blocks of π ∧ π′ are the nonempty pairwise intersections.
pub fn partition_meet(a: &Partition, b: &Partition) -> Result<Partition, CartanError> {
    if a.n != b.n {
        return Err(CartanError::GroundSetMismatch(a.n, b.n));
    }
    let mut blocks = Vec::new();
    for x in &a.blocks {
        for y in &b.blocks {
            let meet: Vec<usize> = x.iter().copied().filter(|k| y.contains(k)).collect();
            if !meet.is_empty() {
                blocks.push(meet);
            }
        }
    }
    Partition::new(a.n, blocks)
}

/// The block subgroup SO(π) (or PSO(π) when used projectively).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockGroupSpec {
    pub partition: Partition,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Membership {
    pub member: bool,
    /// Largest entry outside the block pattern.
    pub residual: f64,
}

impl BlockGroupSpec {
    pub fn new(partition: Partition) -> Self {
        Self { partition }
    }

    /// Zero pattern of the Lie algebra: allowed (row, col) pairs, 1-based.
    pub fn allowed(&self, a: usize, b: usize) -> bool {
        self.partition.same_block(a, b)
    }
}

/// Membership in SO(π) (projective: in PSO(π), i.e. V or −V qualifies).
///
/// Off-block entries must vanish within `tol`, the matrix must be orthogonal, and every
/// diagonal block must have det +1 for V or for −V.
pub fn block_membership(v: &RealMatrix, spec: &BlockGroupSpec, projective: bool, tol: f64) -> Result<Membership, MatError> {
    let n = spec.partition.n();
    if v.nrows() != n || v.ncols() != n {
        return Err(MatError::DimensionMismatch);
    }
    let owner = spec.partition.block_of();
    let mut residual: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            if owner[a + 1] != owner[b + 1] {
                residual = residual.max(v[(a, b)].abs());
            }
        }
    }
    let orthogonal = v.orthogonality_defect() <= tol.max(1e-10);
    let dets: Vec<f64> = spec
        .partition
        .blocks()
        .iter()
        .map(|blk| {
            let idx: Vec<usize> = blk.iter().map(|k| k - 1).collect();
            v.select(&idx, &idx).det()
        })
        .collect();
    let all_pos = dets.iter().all(|d| *d > 0.0);
    // −V negates a block determinant exactly when the block has odd size
    let neg_ok = spec.partition.blocks().iter().zip(&dets).all(|(b, d)| if b.len() % 2 == 1 { *d < 0.0 } else { *d > 0.0 });
    let member = residual <= tol && orthogonal && (all_pos || (projective && neg_ok));
    Ok(Membership { member, residual })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn meets() {
        assert_eq!(partition_meet(&p("123|45678"), &p("234|15678")).unwrap(), p("1|23|4|5678"));
        assert_eq!(partition_meet(&p("125|34678"), &p("123458|67")).unwrap(), p("125|348|67"));
        let x = p("125|348|67");
        assert_eq!(partition_meet(&x, &x).unwrap(), x);
        assert!(matches!(partition_meet(&p("12|3"), &p("1|2")), Err(CartanError::GroundSetMismatch(3, 2))));
    }

    #[test]
    fn display_round_trip() {
        assert_eq!(p("67|125|348").to_string(), "125|348|67");
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!("12|2".parse::<Partition>().is_err());
        assert!(Partition::new(4, vec![vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn identity_in_every_group() {
        for s in ["125|34678", "1|2|3|4|5|6|7|8", "12345678"] {
            let m = block_membership(&RealMatrix::identity(8), &BlockGroupSpec::new(p(s)), false, 1e-12).unwrap();
            assert!(m.member);
        }
    }

    #[test]
    fn projective_negation() {
        let spec = BlockGroupSpec::new(p("125|34678"));
        let m = RealMatrix::identity(8).scale(-1.0);
        assert!(!block_membership(&m, &spec, false, 1e-12).unwrap().member);
        assert!(block_membership(&m, &spec, true, 1e-12).unwrap().member);
    }
}
