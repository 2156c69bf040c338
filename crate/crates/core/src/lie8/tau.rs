use std::sync::OnceLock;

use super::quaternion::{omega, omega_matrix, Quaternion};
use super::roots::{build_root_vectors, cartan_basis, Root};
use super::skew::{basis_pairs, f, SkewSym8, DIM};
use super::LieError;
use crate::matlib::{givens_factorize, ComplexMatrix, GivensFactor, RealMatrix, C64};

/// The 28×28 triality matrix as a reference string: `+`/`-` are ±½, a digit d stands for d zeros,
/// read left to right across rows, rows and columns in i-major pair order.
pub const REFERENCE_TAU: &str = "-66-8-4-5-6+1-4+77-4-3+2+55+6-77+2-3+4+88--5+6-5-4+55+4+7+2+67+4+3+2+77-6+1+4-55-4-88--3+6-77-2+5-4-7+2+55+6-5+4-6+66-8-4+3-6-5+4+55+4-7-2+8+6+77+2+3-4+88-+6+4-7+2-55+6+5+4+8-4+88+-3-6-77+2+1+66+8-4-5+6+1+4+77-4+3+2-78-4+3-2+77-6-1+4+8+66-8+4-";

/// Decodes [`REFERENCE_TAU`] into a 28×28 matrix.
pub fn decode_reference_tau() -> RealMatrix {
    let mut vals = Vec::with_capacity(DIM * DIM);
    for ch in REFERENCE_TAU.chars() {
        match ch {
            '+' => vals.push(0.5),
            '-' => vals.push(-0.5),
            d => vals.extend(std::iter::repeat_n(0.0, d.to_digit(10).expect("digit") as usize)),
        }
    }
    assert_eq!(vals.len(), DIM * DIM, "reference string decodes to {} entries", vals.len());
    RealMatrix::from_row_slice(DIM, DIM, &vals)
}

/// Roots whose root vectors pick up a sign under τ (together with their negatives).
const NEGATED_ROOTS: [[i8; 4]; 4] = [[1, 0, -1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]];

/// τ in the f-basis plus the 8×8 images τ(f_ji).
#[derive(Debug, Clone)]
pub struct TrialityOperator {
    m28: RealMatrix,
    images: Vec<RealMatrix>,
}

impl TrialityOperator {
    /// 28×28 matrix; column k holds the coordinates of τ(f_k).
    pub fn m28(&self) -> &RealMatrix {
        &self.m28
    }

    /// τ(f_ji) as an 8×8 matrix.
    pub fn image(&self, j: usize, i: usize) -> &RealMatrix {
        &self.images[super::pair_index(j, i)]
    }

    pub fn apply(&self, x: &SkewSym8) -> SkewSym8 {
        let mut out = SkewSym8::zero();
        for r in 0..DIM {
            out.coeffs[r] = (0..DIM).map(|c| self.m28[(r, c)] * x.coeffs[c]).sum();
        }
        out
    }

    pub fn apply_matrix(&self, x: &RealMatrix) -> Result<RealMatrix, LieError> {
        Ok(self.apply(&SkewSym8::from_matrix(x)?).to_matrix())
    }

    /// Π (cos(θ/2)·I + 2 sin(θ/2)·τ(f_ji)) over the given Givens factors.
    pub fn of_factors(&self, factors: &[GivensFactor]) -> RealMatrix {
        let mut out = RealMatrix::identity(8);
        for g in factors {
            let (s, c) = (g.theta / 2.0).sin_cos();
            let step = &RealMatrix::identity(8).scale(c) + &self.image(g.j, g.i).scale(2.0 * s);
            out = &out * &step;
        }
        out
    }

    /// T(V) via the Givens path; a representative of a class in PSO(8).
    pub fn group(&self, v: &RealMatrix) -> Result<RealMatrix, LieError> {
        Ok(self.of_factors(&givens_factorize(v)?))
    }

    /// T⁻¹ = T∘T.
    pub fn inverse(&self, v: &RealMatrix) -> Result<RealMatrix, LieError> {
        self.group(&self.group(v)?)
    }

    /// Copy with the sign of one column flipped. Used only to check that the self-test
    /// actually detects a corrupted operator.
    pub fn with_column_sign_flipped(&self, k: usize) -> Self {
        let mut out = self.clone();
        for r in 0..DIM {
            out.m28[(r, k)] = -out.m28[(r, k)];
        }
        out.images[k] = out.images[k].scale(-1.0);
        out
    }

    /// Largest residual of τ[f_a, f_b] − [τ f_a, τ f_b] over all 378 pairs.
    pub fn automorphism_residual(&self) -> f64 {
        let fs: Vec<RealMatrix> = basis_pairs().iter().map(|&(j, i)| f(j, i)).collect();
        let mut worst: f64 = 0.0;
        for a in 0..DIM {
            for b in a + 1..DIM {
                let br = &(&fs[a] * &fs[b]) - &(&fs[b] * &fs[a]);
                let lhs = self.apply_matrix(&br).expect("bracket is skew");
                let (ta, tb) = (&self.images[a], &self.images[b]);
                let rhs = &(ta * tb) - &(tb * ta);
                worst = worst.max((&lhs - &rhs).max_abs());
            }
        }
        worst
    }
}

fn root_vector_with_sign(root: Root) -> (Root, f64) {
    let w = omega() * Quaternion(root.as_f64());
    let image = Root(w.0.map(|x| x.round() as i8));
    let neg = NEGATED_ROOTS.iter().any(|r| *r == root.0 || r.map(|x| -x) == root.0);
    (image, if neg { -1.0 } else { 1.0 })
}

/// Builds τ from its action on the Cartan basis (H ↦ ωH) and on root vectors
/// (X_α ↦ ±X_{ωα}), then checks realness and the automorphism identity.
pub fn build_tau() -> Result<TrialityOperator, LieError> {
    let roots = build_root_vectors();
    let hs = cartan_basis().map(|h| ComplexMatrix::from_real(&h));
    let om = omega_matrix();

    let mut basis: Vec<ComplexMatrix> = hs.to_vec();
    let mut images: Vec<ComplexMatrix> = (0..4)
        .map(|k| {
            (0..4).fold(ComplexMatrix::zeros(8, 8), |acc, l| acc.add(&hs[l].scale(C64::new(om[(l, k)], 0.0))))
        })
        .collect();
    for (root, x) in &roots.entries {
        let (target, sign) = root_vector_with_sign(*root);
        let y = roots
            .get(target)
            .ok_or_else(|| LieError::ConstructionInconsistent(format!("ω·{root:?} is not a root")))?;
        basis.push(x.clone());
        images.push(y.scale(C64::new(sign, 0.0)));
    }

    let inner = |a: &ComplexMatrix, b: &ComplexMatrix| -> C64 {
        a.as_slice().iter().zip(b.as_slice()).map(|(x, y)| x.conj() * y).sum()
    };
    let norms: Vec<C64> = basis.iter().map(|b| inner(b, b)).collect();

    let mut m28 = RealMatrix::zeros(DIM, DIM);
    let mut real_images = Vec::with_capacity(DIM);
    for (col, &(j, i)) in basis_pairs().iter().enumerate() {
        let fji = ComplexMatrix::from_real(&f(j, i));
        let mut y = ComplexMatrix::zeros(8, 8);
        for k in 0..basis.len() {
            let coeff = inner(&basis[k], &fji) / norms[k];
            if coeff.norm() > 0.0 {
                y = y.add(&images[k].scale(coeff));
            }
        }
        if y.max_imag() > 1e-12 {
            return Err(LieError::ConstructionInconsistent(format!("τ(f_{j}{i}) is not real")));
        }
        let y = y.real_part();
        for (row, &(jj, ii)) in basis_pairs().iter().enumerate() {
            m28[(row, col)] = y[(jj - 1, ii - 1)];
        }
        real_images.push(y);
    }
    let op = TrialityOperator { m28, images: real_images };
    let res = op.automorphism_residual();
    if res > 1e-12 {
        return Err(LieError::ConstructionInconsistent(format!("automorphism residual {res:.3e}")));
    }
    Ok(op)
}

/// Shared, lazily built operator.
pub fn tau() -> &'static TrialityOperator {
    static TAU: OnceLock<TrialityOperator> = OnceLock::new();
    TAU.get_or_init(|| build_tau().expect("triality construction is self-consistent"))
}

pub fn tau_apply(x: &SkewSym8) -> SkewSym8 {
    tau().apply(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_reference_string() {
        let printed = decode_reference_tau();
        assert!((&printed - tau().m28()).max_abs() < 1e-15);
    }

    #[test]
    fn orthogonal_of_order_three() {
        let m = tau().m28();
        assert!(m.orthogonality_defect() < 1e-12);
        let cube = &(m * m) * m;
        assert!((&cube - &RealMatrix::identity(DIM)).max_abs() < 1e-12);
    }

    #[test]
    fn images_square_to_minus_quarter() {
        let quarter = RealMatrix::identity(8).scale(-0.25);
        for &(j, i) in basis_pairs() {
            let t = tau().image(j, i);
            assert!((&(t * t) - &quarter).max_abs() < 1e-12);
        }
    }

    #[test]
    fn tau_of_zero() {
        assert_eq!(tau_apply(&SkewSym8::zero()), SkewSym8::zero());
    }

    #[test]
    fn flipped_operator_breaks_automorphism() {
        assert!(tau().with_column_sign_flipped(3).automorphism_residual() > 0.1);
    }
}
