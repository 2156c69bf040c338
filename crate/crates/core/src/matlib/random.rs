use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{dot, norm, ComplexMatrix, RealMatrix, C64};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Haar-distributed SO(n) sample, deterministic per seed.
///
/// Gaussian matrix → modified Gram–Schmidt (twice, for orthogonality at the 1e-15 level);
/// a negative determinant is repaired by negating the first column.
pub fn random_special_orthogonal(n: usize, seed: u64) -> RealMatrix {
    assert!((1..=16).contains(&n), "dimension out of range");
    let mut rng = rng_from_seed(seed);
    let mut cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        for _ in 0..2 {
            for c in &cols {
                let d = dot(c, &v);
                v.iter_mut().zip(c).for_each(|(x, y)| *x -= d * y);
            }
        }
        let nv = norm(&v);
        if nv > 1e-8 {
            cols.push(v.iter().map(|x| x / nv).collect());
        }
    }
    let mut q = RealMatrix::zeros(n, n);
    for (j, c) in cols.iter().enumerate() {
        q.set_column(j, c);
    }
    if q.det() < 0.0 {
        for i in 0..n {
            q[(i, 0)] = -q[(i, 0)];
        }
    }
    q
}

pub fn random_symmetric(n: usize, rng: &mut impl Rng) -> RealMatrix {
    let a = RealMatrix::from_fn(n, n, |_, _| rng.sample(StandardNormal));
    (&a + &a.transpose()).scale(0.5)
}

pub fn random_skew(n: usize, rng: &mut impl Rng) -> RealMatrix {
    let a = RealMatrix::from_fn(n, n, |_, _| rng.sample(StandardNormal));
    (&a - &a.transpose()).scale(0.5)
}

/// Haar SU(2) element as a 2×2 complex matrix.
pub fn random_su2(rng: &mut impl Rng) -> ComplexMatrix {
    let mut q: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
    let nq = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    q.iter_mut().for_each(|x| *x /= nq);
    ComplexMatrix::from_row_slice(
        2,
        2,
        &[C64::new(q[0], -q[3]), C64::new(-q[2], -q[1]), C64::new(q[2], -q[1]), C64::new(q[0], q[3])],
    )
}
