use super::tau::tau;
use super::LieError;
use crate::matlib::{GivensFactor, RealMatrix};

/// T(V) = Π (cos(θ/2)·I + 2 sin(θ/2)·τ(f_ji)) over the Givens factorization of V.
/// Well-defined in PSO(8), i.e. up to a global sign.
pub fn triality_group(v: &RealMatrix) -> Result<RealMatrix, LieError> {
    tau().group(v)
}

/// T⁻¹ = T∘T, since T has order three.
pub fn triality_inverse(v: &RealMatrix) -> Result<RealMatrix, LieError> {
    tau().inverse(v)
}

/// T evaluated on an explicit product of Givens rotations.
pub fn triality_of_factors(factors: &[GivensFactor]) -> RealMatrix {
    tau().of_factors(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matlib::{plane_rotation, projective_distance, random_special_orthogonal};

    #[test]
    fn identity_maps_to_identity() {
        let t = triality_group(&RealMatrix::identity(8)).unwrap();
        assert!(projective_distance(&t, &RealMatrix::identity(8)).unwrap() < 1e-15);
    }

    #[test]
    fn homomorphism_and_order_three() {
        for seed in 0..10 {
            let v = random_special_orthogonal(8, seed);
            let w = random_special_orthogonal(8, seed + 1000);
            let lhs = triality_group(&(&v * &w)).unwrap();
            let rhs = &triality_group(&v).unwrap() * &triality_group(&w).unwrap();
            assert!(projective_distance(&lhs, &rhs).unwrap() < 1e-9);
            let back = triality_inverse(&triality_group(&v).unwrap()).unwrap();
            assert!(projective_distance(&back, &v).unwrap() < 1e-9);
        }
    }

    #[test]
    fn single_rotation_closed_form() {
        let theta: f64 = 0.8;
        let t = triality_group(&plane_rotation(8, 1, 5, theta)).unwrap();
        let expect = &RealMatrix::identity(8).scale((theta / 2.0).cos())
            + &tau().image(5, 1).scale(2.0 * (theta / 2.0).sin());
        assert!((&t - &expect).max_abs() < 1e-14);
    }
}
