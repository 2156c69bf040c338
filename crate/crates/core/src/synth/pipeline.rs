use std::f64::consts::{FRAC_PI_2, PI};

use crate::circuit::{euler_outer_y, evaluate, magic_m_circuit, peephole, Axis, Circuit, Gate, Su2};
use crate::lie8::{tau, TrialityOperator};
use crate::matlib::{check_special_orthogonal, ComplexMatrix, RealMatrix, C64};

use super::levels::{decompose_level1, decompose_level2};
use super::templates::{a_gates, extract_b, extract_k_gates, t_of_a, TemplateB, TemplateK};
use super::SynthError;

/// Input gate on special orthogonality.
pub const INPUT_TOL: f64 = 1e-10;
/// Largest accepted ‖evaluate(circuit) − V‖_F.
pub const VERIFY_TOL: f64 = 1e-8;

/// The free parameters of the emitted circuit: 16 angles and 4 SU(2) gates.
#[derive(Debug, Clone, PartialEq)]
pub struct Census {
    /// α1, α2, α3 of the central template and the merged central Rx angle α4.
    pub alpha: [f64; 4],
    /// (β1, β2) of B1 followed by those of B2.
    pub beta: [f64; 4],
    /// γ1..γ4 of the controlled-X rotations in K1..K4, then the two Euler angles left
    /// on qubit 2 in K2 and in K3.
    pub gamma: [f64; 8],
    /// Qubit-3 gate after the leading magic circuit, the qubit-2 gates of K4 and K1,
    /// and the qubit-3 gate before the trailing magic circuit.
    pub su2: [Su2; 4],
}

impl Census {
    pub fn angle_count(&self) -> usize {
        self.alpha.len() + self.beta.len() + self.gamma.len()
    }

    pub fn su2_count(&self) -> usize {
        self.su2.len()
    }

    /// Real parameters, counting 3 per SU(2) element.
    pub fn parameter_count(&self) -> usize {
        self.angle_count() + 3 * self.su2_count()
    }
}

/// V ≡ K1·B1·K2·A·K3·B2·K4 with every factor on the circuit side of the triality.
#[derive(Debug, Clone)]
pub struct DecompositionTree {
    pub source: RealMatrix,
    /// K1..K4 in product order.
    pub k: [RealMatrix; 4],
    /// B1, B2 in product order.
    pub b: [RealMatrix; 2],
    /// A, equal to T⁻¹(t_of_a(α)) up to sign.
    pub a: RealMatrix,
    pub alpha: [f64; 3],
    /// Level-two torus angles of B1 and B2 (triality side).
    pub level2_angles: [[f64; 2]; 2],
    pub templates_k: [TemplateK; 4],
    pub templates_b: [TemplateB; 2],
    /// −1 when the first Cartan step worked on −T(V).
    pub level1_sign: f64,
    pub census: Census,
}

impl DecompositionTree {
    /// Product K1·B1·K2·A·K3·B2·K4.
    pub fn product(&self) -> RealMatrix {
        let f = [&self.k[0], &self.b[0], &self.k[1], &self.a, &self.k[2], &self.b[1], &self.k[3]];
        f.iter().fold(RealMatrix::identity(8), |acc, x| &acc * *x)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    /// min over unit λ of ‖λ·evaluate(c) − V‖_F.
    pub error: f64,
    /// The minimizing λ.
    pub phase: C64,
    /// Largest imaginary entry of evaluate(c) (which includes the recorded phase).
    pub imag_residue: f64,
    pub cnots: usize,
    pub rotations: usize,
}

#[derive(Debug, Clone)]
pub struct Synthesis {
    pub circuit: Circuit,
    pub tree: DecompositionTree,
    pub report: VerifyReport,
}

pub fn verify(v: &RealMatrix, c: &Circuit) -> Result<VerifyReport, SynthError> {
    let e = evaluate(c)?;
    let target = ComplexMatrix::from_real(v);
    if e.nrows() != target.nrows() {
        return Err(SynthError::DimensionMismatch { circuit: e.nrows(), matrix: target.nrows() });
    }
    let (error, phase) = e.phase_distance(&target);
    Ok(VerifyReport { error, phase, imag_residue: e.max_imag(), cnots: c.cnot_count(), rotations: c.rotation_count() })
}

/// Synthesizes V ∈ SO(8) into a circuit with at most 14 CNOTs and 35 rotations.
pub fn synthesize(v: &RealMatrix) -> Result<Synthesis, SynthError> {
    synthesize_with(v, tau())
}

/// As [`synthesize`], with an explicit triality operator.
pub fn synthesize_with(v: &RealMatrix, t: &TrialityOperator) -> Result<Synthesis, SynthError> {
    check_special_orthogonal(v, INPUT_TOL).map_err(SynthError::NotSpecialOrthogonal)?;
    let w = t.group(v)?;
    let l1 = decompose_level1(&w)?;
    let outer = decompose_level2(&l1.k1)?;
    let inner = decompose_level2(&l1.k2)?;

    // product order K1 B1 K2 A K3 B2 K4, still on the triality side
    let side = [&outer.left, &outer.b, &outer.right, &inner.left, &inner.b, &inner.right];
    let mut back: Vec<RealMatrix> = Vec::with_capacity(6);
    for x in side {
        back.push(t.inverse(x)?);
    }
    let k = [back[0].clone(), back[2].clone(), back[3].clone(), back[5].clone()];
    let b = [back[1].clone(), back[4].clone()];
    let mut tk = Vec::with_capacity(4);
    for x in &k {
        tk.push(extract_k_gates(x)?);
    }
    let templates_k = [tk[0], tk[1], tk[2], tk[3]];
    let templates_b = [extract_b(&b[0])?, extract_b(&b[1])?];

    let (mut circuit, census) = census_circuit(&templates_k, &templates_b, l1.alpha);
    let e = evaluate(&circuit)?;
    let (_, lambda) = e.phase_distance(&ComplexMatrix::from_real(v));
    let lambda = snap_root_of_unity(lambda);
    let mut census = census;
    if (lambda + 1.0).norm() < 1e-6 {
        // −V: negate one SU(2) gate instead of recording a phase
        census.su2[3] = census.su2[3].neg();
        for g in circuit.gates.iter_mut().rev() {
            if let Gate::SingleQubit { qubit: 3, matrix } = g {
                *matrix = matrix.neg();
                break;
            }
        }
    } else if (lambda - 1.0).norm() >= 1e-6 {
        circuit.phase = lambda;
    }
    let mut circuit = peephole(&circuit);
    circuit.source = Some("synthesize".into());

    let report = verify(v, &circuit)?;
    let direct = evaluate(&circuit)?.sub(&ComplexMatrix::from_real(v)).frobenius_norm();
    if direct > VERIFY_TOL {
        return Err(SynthError::SynthesisVerificationFailed(direct));
    }
    let tree = DecompositionTree {
        source: v.clone(),
        k,
        b,
        a: t.inverse(&t_of_a(l1.alpha))?,
        alpha: l1.alpha,
        level2_angles: [outer.d, inner.d],
        templates_k,
        templates_b,
        level1_sign: l1.sign,
        census,
    };
    Ok(Synthesis { circuit, tree, report })
}

/// Nearest 8th root of unity when within 1e-6 (det V = 1 forces λ⁸ = 1).
fn snap_root_of_unity(l: C64) -> C64 {
    let k = (l.arg() / (PI / 4.0)).round();
    let r = C64::from_polar(1.0, k * PI / 4.0);
    if (r - l).norm() < 1e-6 {
        r
    } else {
        l
    }
}

/// Direct gate list of the factorization before any absorption.
///
/// Evaluates to T⁻¹ of the level factors' product, up to a unit phase.
pub fn raw_circuit(k: &[TemplateK; 4], b: &[TemplateB; 2], alpha: [f64; 3]) -> Circuit {
    let m = magic_m_circuit();
    let mut c = Circuit::new(3);
    c.extend(m.gates.iter().copied());
    c.extend(k[3].gates());
    c.extend(b[1].gates());
    c.extend(k[2].gates());
    c.extend(a_gates(alpha, FRAC_PI_2));
    c.extend(k[1].gates());
    c.extend(b[0].gates());
    c.extend(k[0].gates());
    c.extend(m.inverse().gates);
    c
}

/// [`raw_circuit`] after exact absorption of the magic-circuit rotations into the
/// neighbouring SU(2) gates and of the qubit-2 Rx factors of K2, K3 into the centre.
/// Same unitary, 14 CNOTs and 35 rotations.
pub fn census_circuit(k: &[TemplateK; 4], b: &[TemplateB; 2], alpha: [f64; 3]) -> (Circuit, Census) {
    let u2 = k[2].r2 * k[3].r2 * Su2::rz(-FRAC_PI_2) * Su2::rx(FRAC_PI_2);
    let r1_4 = k[3].r1 * Su2::rx(-PI);
    let (a3, b3, c3) = euler_outer_y(&k[2].r1, Axis::X);
    let (d2, e2, a2) = euler_outer_y(&k[1].r1, Axis::X);
    let alpha4 = a3 + FRAC_PI_2 + a2;
    let r1_1 = Su2::rx(PI) * k[0].r1;
    let u1 = Su2::rx(-FRAC_PI_2) * Su2::rz(FRAC_PI_2) * k[0].r2 * k[1].r2;

    let mut g = vec![Gate::rx(2, FRAC_PI_2), Gate::rz(3, -FRAC_PI_2), Gate::cx(2, 3), Gate::u(3, u2)];
    g.extend([Gate::cx(1, 2), Gate::rx(1, k[3].gamma), Gate::u(2, r1_4), Gate::cx(1, 2)]);
    g.extend(b[1].gates());
    g.extend([Gate::cx(1, 2), Gate::rx(1, k[2].gamma), Gate::rx(2, c3), Gate::ry(2, b3), Gate::cx(1, 2)]);
    g.extend(a_gates(alpha, alpha4));
    g.extend([Gate::cx(1, 2), Gate::rx(1, k[1].gamma), Gate::ry(2, e2), Gate::rx(2, d2), Gate::cx(1, 2)]);
    g.extend(b[0].gates());
    g.extend([Gate::cx(1, 2), Gate::rx(1, k[0].gamma), Gate::u(2, r1_1), Gate::cx(1, 2)]);
    g.extend([Gate::u(3, u1), Gate::cx(2, 3), Gate::rz(3, FRAC_PI_2), Gate::rx(2, -FRAC_PI_2)]);

    let census = Census {
        alpha: [alpha[0], alpha[1], alpha[2], alpha4],
        beta: [b[0].beta1, b[0].beta2, b[1].beta1, b[1].beta2],
        gamma: [k[0].gamma, k[1].gamma, k[2].gamma, k[3].gamma, d2, e2, c3, b3],
        su2: [u2, r1_4, r1_1, u1],
    };
    (Circuit::from_gates(3, g), census)
}
