use std::f64::consts::FRAC_PI_2;

use crate::cartan::{block_membership, BlockGroupSpec, Partition};
use crate::matlib::{cs_decompose, torus, RealMatrix};

use super::templates::t_of_a;
use super::SynthError;

/// Sends {1,2,5} to the first three coordinates (0-based: new k takes old PERM1[k]).
pub const PERM1: [usize; 8] = [0, 1, 4, 2, 3, 5, 6, 7];
/// The level-two 5×5 block {3,4,6,7,8}, relabeled so that {6,7} comes first.
pub const LEVEL2_INDEX: [usize; 5] = [5, 6, 2, 3, 7];
const OUTER_INDEX: [usize; 3] = [0, 1, 4];

const BLOCK_TOL: f64 = 1e-9;

/// k1 · t_of_a(α) · k2 = sign · W, with k1, k2 in the 125|34678 block group.
#[derive(Debug, Clone)]
pub struct Level1 {
    pub k1: RealMatrix,
    pub alpha: [f64; 3],
    pub k2: RealMatrix,
    pub sign: f64,
}

/// left · b · right = K, with left, right in the 125|348|67 block group and b the
/// level-two torus with angles `d`.
#[derive(Debug, Clone)]
pub struct Level2 {
    pub left: RealMatrix,
    pub d: [f64; 2],
    pub b: RealMatrix,
    pub right: RealMatrix,
}

pub fn level1_partition() -> Partition {
    "125|34678".parse().expect("static partition")
}

pub fn level2_partition() -> Partition {
    "125|348|67".parse().expect("static partition")
}

fn permuted(p: &RealMatrix, x: &RealMatrix) -> RealMatrix {
    &(p * x) * &p.transpose()
}

/// First Cartan step: W = K1' · T(A) · K2' (projectively).
///
/// The CS decomposition of the permuted W and of the permuted template share the torus,
/// so the coset representatives follow by multiplying the two decompositions together.
pub fn decompose_level1(w: &RealMatrix) -> Result<Level1, SynthError> {
    let p1 = RealMatrix::permutation(&PERM1);
    let mut wp = permuted(&p1, w);
    let mut sign = 1.0;
    if wp.block(0, 0, 3, 3).det() < 0.0 {
        wp = wp.scale(-1.0);
        sign = -1.0;
    }
    let cw = cs_decompose(&wp, 3)?;
    let mut alpha = [0.0; 3];
    for (a, d) in alpha.iter_mut().zip(&cw.d) {
        if !(-1e-12..=FRAC_PI_2 + 1e-12).contains(d) {
            return Err(SynthError::TemplateVerificationFailed(format!("torus angle {d} outside [0, π/2]")));
        }
        *a = d.clamp(0.0, FRAC_PI_2);
    }
    let ct = cs_decompose(&permuted(&p1, &t_of_a(alpha)), 3)?;
    let drift = cw.d.iter().zip(&ct.d).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    if drift > 1e-9 {
        return Err(SynthError::TemplateVerificationFailed(format!("template torus differs by {drift:.3e}")));
    }
    let k1 = &(&p1.transpose() * &(&cw.k1 * &ct.k1.transpose())) * &p1;
    let k2 = &(&p1.transpose() * &(&ct.k2.transpose() * &cw.k2)) * &p1;
    Ok(Level1 { k1, alpha, k2, sign })
}

fn embed(outer: &RealMatrix, inner: &RealMatrix) -> RealMatrix {
    let mut out = RealMatrix::identity(8);
    out.set_selected(&OUTER_INDEX, &OUTER_INDEX, outer);
    out.set_selected(&LEVEL2_INDEX, &LEVEL2_INDEX, inner);
    out
}

/// Second Cartan step on a factor of the 125|34678 block group.
pub fn decompose_level2(k: &RealMatrix) -> Result<Level2, SynthError> {
    let spec = BlockGroupSpec { partition: level1_partition() };
    let m = block_membership(k, &spec, false, BLOCK_TOL)?;
    if !m.member {
        return Err(SynthError::NotInBlockGroup(m.residual));
    }
    let k5 = k.select(&LEVEL2_INDEX, &LEVEL2_INDEX);
    let cs = cs_decompose(&k5, 2)?;
    let d = [cs.d[0], cs.d[1]];
    let left = embed(&k.select(&OUTER_INDEX, &OUTER_INDEX), &cs.k1);
    let right = embed(&RealMatrix::identity(3), &cs.k2);
    let b = embed(&RealMatrix::identity(3), &torus(5, 2, &d));
    Ok(Level2 { left, d, b, right })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::canonical_params;
    use crate::matlib::{projective_distance, random_special_orthogonal};

    fn in_group(k: &RealMatrix, part: Partition) -> bool {
        block_membership(k, &BlockGroupSpec { partition: part }, false, 1e-9).unwrap().member
    }

    #[test]
    fn level1_reassembles() {
        for seed in 0..20 {
            let w = random_special_orthogonal(8, 500 + seed);
            let l = decompose_level1(&w).unwrap();
            let back = &(&l.k1 * &t_of_a(l.alpha)) * &l.k2;
            assert!((&back - &w.scale(l.sign)).max_abs() < 1e-9);
            assert!(in_group(&l.k1, level1_partition()) && in_group(&l.k2, level1_partition()));
            // the corner singular values are the |cos α|
            let p1 = RealMatrix::permutation(&PERM1);
            let sigma = canonical_params(&permuted(&p1, &w), 3, true).unwrap().sigma;
            let mut cosines: Vec<f64> = l.alpha.iter().map(|a| a.cos()).collect();
            cosines.sort_by(|a, b| b.total_cmp(a));
            for (s, c) in sigma.iter().zip(&cosines) {
                assert!((s - c).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn level1_template_passthrough() {
        let t = t_of_a([0.1, 0.2, 0.3]);
        let l = decompose_level1(&t).unwrap();
        let back = &(&l.k1 * &t_of_a(l.alpha)) * &l.k2;
        assert!(projective_distance(&back, &t).unwrap() < 1e-12);
    }

    #[test]
    fn level2_reassembles() {
        for seed in 0..20 {
            let k = embed(&random_special_orthogonal(3, seed), &random_special_orthogonal(5, seed + 50));
            let l = decompose_level2(&k).unwrap();
            let back = &(&l.left * &l.b) * &l.right;
            assert!((&back - &k).max_abs() < 1e-12);
            assert!(in_group(&l.left, level2_partition()) && in_group(&l.right, level2_partition()));
        }
    }

    #[test]
    fn level2_on_subgroup_has_zero_angles() {
        let inner = random_special_orthogonal(2, 1).direct_sum(&random_special_orthogonal(3, 2));
        let k = embed(&random_special_orthogonal(3, 3), &inner);
        let l = decompose_level2(&k).unwrap();
        assert!(l.d.iter().all(|d| d.abs() < 1e-12), "{:?}", l.d);
    }

    #[test]
    fn level2_rejects_outside() {
        let v = random_special_orthogonal(8, 9);
        assert!(matches!(decompose_level2(&v), Err(SynthError::NotInBlockGroup(_))));
    }
}
