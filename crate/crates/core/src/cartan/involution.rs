use crate::matlib::{RealMatrix, SignDiagonal};

/// An involutive automorphism of SO(n) given by conjugation with a fixed matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum InvolutionSpec {
    /// g ↦ Δ_S g Δ_S.
    SignDiagonal(SignDiagonal),
    /// g ↦ S g Sᵀ for an orthogonal S with S² = ±I.
    Conjugation(RealMatrix),
}

impl InvolutionSpec {
    pub fn matrix(&self) -> RealMatrix {
        match self {
            InvolutionSpec::SignDiagonal(d) => d.matrix(),
            InvolutionSpec::Conjugation(s) => s.clone(),
        }
    }

    pub fn apply(&self, g: &RealMatrix) -> RealMatrix {
        let s = self.matrix();
        &(&s * g) * &s.transpose()
    }
}

/// g · θ(g)⁻¹; for g = k₁ a k₂ this equals k₁ a² k₁⁻¹.
pub fn cartan_double(g: &RealMatrix, theta: &InvolutionSpec) -> RealMatrix {
    g * &theta.apply(g).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matlib::{random_special_orthogonal, sym_eigen, torus};

    fn psi() -> InvolutionSpec {
        InvolutionSpec::SignDiagonal(SignDiagonal::new(8, vec![1, 2, 3]))
    }

    #[test]
    fn involutive() {
        let g = random_special_orthogonal(8, 3);
        assert!((&psi().apply(&psi().apply(&g)) - &g).max_abs() < 1e-15);
    }

    #[test]
    fn fixed_points_have_trivial_double() {
        let k = random_special_orthogonal(3, 1).direct_sum(&random_special_orthogonal(5, 2));
        assert!((&cartan_double(&k, &psi()) - &RealMatrix::identity(8)).max_abs() < 1e-14);
    }

    #[test]
    fn torus_double_is_square() {
        let a = torus(8, 3, &[0.2, 0.5, 1.3]);
        assert!((&cartan_double(&a, &psi()) - &(&a * &a)).max_abs() < 1e-14);
    }

    #[test]
    fn double_spectrum_matches_torus_square() {
        let a = torus(8, 3, &[0.2, 0.5, 1.3]);
        let k1 = random_special_orthogonal(3, 4).direct_sum(&random_special_orthogonal(5, 5));
        let k2 = random_special_orthogonal(3, 6).direct_sum(&random_special_orthogonal(5, 7));
        let g = &(&k1 * &a) * &k2;
        let d = cartan_double(&g, &psi());
        let sym = |m: &RealMatrix| (m + &m.transpose()).scale(0.5);
        let (l1, _) = sym_eigen(&sym(&d)).unwrap();
        let a2 = &a * &a;
        let (l2, _) = sym_eigen(&sym(&a2)).unwrap();
        for (x, y) in l1.iter().zip(&l2) {
            assert!((x - y).abs() < 1e-12);
        }
    }
}
