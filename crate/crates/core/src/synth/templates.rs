use std::f64::consts::{FRAC_PI_2, PI};

use crate::cartan::CanonicalParams;
use crate::circuit::{evaluate, magic_m, Circuit, Gate, Su2};
use crate::matlib::{kron_factor, ComplexMatrix, RealMatrix, C64};

use super::SynthError;

/// Residual allowed when reading template parameters back off a unitary.
const EXTRACT_TOL: f64 = 1e-9;

/// The 8×8 signed-permutation-plus-rotations matrix T(A) for A in the central template set.
pub fn t_of_a(alpha: [f64; 3]) -> RealMatrix {
    let (s1, c1) = alpha[0].sin_cos();
    let (s2, c2) = alpha[1].sin_cos();
    let (s3, c3) = alpha[2].sin_cos();
    let mut m = RealMatrix::zeros(8, 8);
    for (i, j, x) in [
        (1, 1, -c1),
        (1, 7, s1),
        (2, 2, c2),
        (2, 4, -s2),
        (3, 3, 1.0),
        (4, 5, s3),
        (4, 6, -c3),
        (5, 5, -c3),
        (5, 6, -s3),
        (6, 1, s1),
        (6, 7, c1),
        (7, 2, -s2),
        (7, 4, -c2),
        (8, 8, 1.0),
    ] {
        m[(i - 1, j - 1)] = x;
    }
    m
}

/// α with |cos α_i| = σ_i (sorted as given) and sin α_i ≥ 0.
///
/// For the projective 3-canonical parameters no sign bit exists (p is odd), so every
/// σ triple is reachable with α ∈ [0, π/2]³.
pub fn solve_a_params(params: &CanonicalParams) -> Result<[f64; 3], SynthError> {
    if params.p != 3 || params.n != 8 {
        return Err(SynthError::TemplateVerificationFailed(format!(
            "expected 3-canonical parameters on 8 points, got p={} n={}",
            params.p, params.n
        )));
    }
    let mut alpha = [0.0; 3];
    for (a, s) in alpha.iter_mut().zip(&params.sigma) {
        *a = s.clamp(0.0, 1.0).acos();
    }
    Ok(alpha)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemplateA {
    pub alpha: [f64; 3],
}

/// Ry(β1) ⊗ Ry(β2) ⊗ I₂.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemplateB {
    pub beta1: f64,
    pub beta2: f64,
}

/// (C¹₂ (Rx(γ) ⊗ R1) C¹₂) ⊗ R2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemplateK {
    pub gamma: f64,
    pub r1: Su2,
    pub r2: Su2,
}

/// Four-CNOT circuit evaluating to i·M·T⁻¹(t_of_a(α))·M† (the sign of T⁻¹ being the one
/// fixed by the Givens product).
pub fn circuit_for_a(alpha: [f64; 3]) -> Circuit {
    Circuit::from_gates(3, a_gates(alpha, FRAC_PI_2))
}

/// Gates of [`circuit_for_a`] with the central Rx on qubit 2 replaced by `center`.
pub(crate) fn a_gates(alpha: [f64; 3], center: f64) -> Vec<Gate> {
    let [a1, a2, a3] = alpha;
    vec![
        Gate::cx(3, 1),
        Gate::rx(3, a2),
        Gate::rz(1, FRAC_PI_2),
        Gate::cx(3, 1),
        Gate::cx(1, 2),
        Gate::ry(1, -FRAC_PI_2),
        Gate::rz(1, a1 - PI),
        Gate::rx(2, center),
        Gate::rz(3, FRAC_PI_2),
        Gate::ry(3, -a3 - PI),
        Gate::cx(3, 1),
    ]
}

impl TemplateK {
    pub fn gates(&self) -> Vec<Gate> {
        vec![Gate::cx(1, 2), Gate::rx(1, self.gamma), Gate::u(2, self.r1), Gate::u(3, self.r2), Gate::cx(1, 2)]
    }
}

impl TemplateB {
    pub fn gates(&self) -> Vec<Gate> {
        vec![Gate::ry(1, self.beta1), Gate::ry(2, self.beta2)]
    }
}

/// M·K·M† for a real 8×8 K.
pub fn magic_conjugate(k: &RealMatrix) -> ComplexMatrix {
    let m = magic_m();
    &(&m * &ComplexMatrix::from_real(k)) * &m.adjoint()
}

fn cnot12() -> ComplexMatrix {
    let one = C64::new(1.0, 0.0);
    ComplexMatrix::from_fn(4, 4, |i, j| {
        let image = if i >= 2 { i ^ 1 } else { i };
        if image == j {
            one
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

fn check_template(gates: Vec<Gate>, u: &ComplexMatrix, what: &str) -> Result<(), SynthError> {
    let e = evaluate(&Circuit::from_gates(3, gates))?;
    let (d, _) = e.phase_distance(u);
    if d > EXTRACT_TOL {
        return Err(SynthError::NotInCartanSubgroup(format!("{what} template rebuild error {d:.3e}")));
    }
    Ok(())
}

fn factor(u: &ComplexMatrix, m: usize, n: usize, what: &str) -> Result<(ComplexMatrix, ComplexMatrix), SynthError> {
    kron_factor(u, m, n, EXTRACT_TOL).map_err(|e| SynthError::NotInCartanSubgroup(format!("{what}: {e}")))
}

/// Reads (γ, R1, R2) off K ∈ K_χ (a real 8×8 matrix on the circuit side of the triality).
pub fn extract_k_gates(k: &RealMatrix) -> Result<TemplateK, SynthError> {
    let u = magic_conjugate(k);
    let (a4, r2) = factor(&u, 4, 2, "K outer split")?;
    let c = cnot12();
    let (x1, r1) = factor(&(&(&c * &a4) * &c), 2, 2, "K inner split")?;
    let (x, _) = Su2::from_unitary(&x1);
    if x.0[2].abs() > EXTRACT_TOL || x.0[3].abs() > EXTRACT_TOL {
        return Err(SynthError::NotInCartanSubgroup(format!("control factor is not an Rx: {x}")));
    }
    let t = TemplateK { gamma: 2.0 * x.0[1].atan2(x.0[0]), r1: Su2::from_unitary(&r1).0, r2: Su2::from_unitary(&r2).0 };
    check_template(t.gates(), &u, "K")?;
    Ok(t)
}

/// Reads (β1, β2) off B with M·B·M† = Ry(β1) ⊗ Ry(β2) ⊗ I₂ up to phase.
pub fn extract_b(b: &RealMatrix) -> Result<TemplateB, SynthError> {
    let u = magic_conjugate(b);
    let (y1, rest) = factor(&u, 2, 4, "B first split")?;
    let (y2, _) = factor(&rest, 2, 2, "B second split")?;
    let mut beta = [0.0; 2];
    for (slot, y) in beta.iter_mut().zip([y1, y2]) {
        let (s, _) = Su2::from_unitary(&y);
        if s.0[1].abs() > EXTRACT_TOL || s.0[3].abs() > EXTRACT_TOL {
            return Err(SynthError::NotInCartanSubgroup(format!("B factor is not an Ry: {s}")));
        }
        *slot = 2.0 * s.0[2].atan2(s.0[0]);
    }
    let t = TemplateB { beta1: beta[0], beta2: beta[1] };
    check_template(t.gates(), &u, "B")?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::canonical_params;
    use crate::lie8::triality_group;
    use crate::matlib::{projective_distance, random_su2, rng_from_seed, RealMatrix};
    use rand::Rng;

    #[test]
    fn t_of_a_zero_and_corner() {
        let z = t_of_a([0.0; 3]);
        assert!(z.is_special_orthogonal(1e-15));
        assert!(z.as_slice().iter().all(|x| *x == 0.0 || x.abs() == 1.0));
        let a = [0.3, 0.2, 0.1];
        let t = t_of_a(a);
        assert!((t.det() - 1.0).abs() < 1e-14);
        let corner = t.select(&[0, 1, 4], &[0, 1, 4]);
        let expect = RealMatrix::diagonal(&[-a[0].cos(), a[1].cos(), -a[2].cos()]);
        assert!((&corner - &expect).max_abs() < 1e-16);
    }

    #[test]
    fn solve_recovers_angles() {
        let a = [0.3, 0.2, 0.1];
        let p = RealMatrix::permutation(&[0, 1, 4, 2, 3, 5, 6, 7]);
        let t = &(&p * &t_of_a(a)) * &p.transpose();
        let params = canonical_params(&t, 3, true).unwrap();
        let mut got = solve_a_params(&params).unwrap();
        got.sort_by(f64::total_cmp);
        for (g, e) in got.iter().zip([0.1, 0.2, 0.3]) {
            assert!((g - e).abs() < 1e-12);
        }
    }

    #[test]
    fn a_circuit_matches_template() {
        let mut rng = rng_from_seed(21);
        for _ in 0..20 {
            let a = [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)];
            let c = circuit_for_a(a);
            assert_eq!(c.cnot_count(), 4);
            let e = evaluate(&c).unwrap();
            let m = magic_m();
            let back = &(&m.adjoint() * &e) * &m;
            // μ(circuit) is i times a real matrix
            let real = back.scale(C64::new(0.0, -1.0));
            assert!(real.max_imag() < 1e-12);
            let t = triality_group(&real.real_part()).unwrap();
            assert!(projective_distance(&t, &t_of_a(a)).unwrap() < 1e-9);
        }
    }

    fn su2(rng: &mut impl Rng) -> Su2 {
        Su2::from_matrix(&random_su2(rng), 1e-12).unwrap()
    }

    fn real_of(c: &Circuit) -> RealMatrix {
        let m = magic_m();
        let u = evaluate(c).unwrap();
        let v = &(&m.adjoint() * &u) * &m;
        // strip a global phase so the matrix is real
        let (_, lambda) = v.phase_distance(&ComplexMatrix::from_real(&v.real_part()));
        let w = v.scale(lambda);
        assert!(w.max_imag() < 1e-12);
        w.real_part()
    }

    #[test]
    fn k_round_trip() {
        let mut rng = rng_from_seed(22);
        for _ in 0..20 {
            let t = TemplateK { gamma: rng.gen_range(-3.0..3.0), r1: su2(&mut rng), r2: su2(&mut rng) };
            let k = real_of(&Circuit::from_gates(3, t.gates()));
            let got = extract_k_gates(&k).unwrap();
            let d = evaluate(&Circuit::from_gates(3, got.gates()))
                .unwrap()
                .phase_distance(&evaluate(&Circuit::from_gates(3, t.gates())).unwrap())
                .0;
            assert!(d < 1e-10);
        }
        let id = extract_k_gates(&RealMatrix::identity(8)).unwrap();
        assert!(id.gamma.abs() < 1e-12);
        assert!(id.r1.as_scalar(1e-12).is_some() && id.r2.as_scalar(1e-12).is_some());
    }

    #[test]
    fn b_round_trip() {
        for (b1, b2) in [(0.3, -1.2), (2.5, 0.0), (0.0, 0.0)] {
            let t = TemplateB { beta1: b1, beta2: b2 };
            let got = extract_b(&real_of(&Circuit::from_gates(3, t.gates()))).unwrap();
            let d = evaluate(&Circuit::from_gates(3, got.gates()))
                .unwrap()
                .phase_distance(&evaluate(&Circuit::from_gates(3, t.gates())).unwrap())
                .0;
            assert!(d < 1e-12);
        }
    }

    #[test]
    fn generic_matrix_is_not_k() {
        let v = crate::matlib::random_special_orthogonal(8, 3);
        assert!(matches!(extract_k_gates(&v), Err(SynthError::NotInCartanSubgroup(_))));
        assert!(extract_b(&v).is_err());
    }
}
