//! Built-in invariant suite, parameterized by the triality operator under test.

use std::f64::consts::PI;

use triality_synth::batch::random_inputs;
use triality_synth::circuit::{evaluate, magic_circuit, magic_q};
use triality_synth::lie8::{basis_pairs, decode_reference_tau, f, PauliWord, TrialityOperator, DIM};
use triality_synth::matlib::{expm_skew, projective_distance, RealMatrix};
use triality_synth::synth::{synthesize_with, VERIFY_TOL};

pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, pass: bool, detail: String) -> Check {
    Check { name, pass, detail }
}

/// Runs every check against `t`; `count` random matrices go through the full pipeline.
pub fn run(t: &TrialityOperator, seed: u64, count: usize) -> Vec<Check> {
    let m = t.m28();
    let cube = &(m * m) * m;
    let cube_err = (&cube - &RealMatrix::identity(DIM)).max_abs();
    let square_err = basis_pairs()
        .iter()
        .map(|&(j, i)| {
            let x = t.image(j, i);
            (&(x * x) + &RealMatrix::identity(8).scale(0.25)).max_abs()
        })
        .fold(0.0, f64::max);
    let reference = (&decode_reference_tau() - m).max_abs();
    let auto = t.automorphism_residual();

    let mut golden: f64 = 0.0;
    for theta in [0.1, 1.0, PI - 0.01] {
        let (s, c) = (theta / 2.0).sin_cos();
        let mut want = RealMatrix::identity(8).scale(c);
        for (row, col, v) in [(0, 6, -1.0), (1, 7, -1.0), (2, 4, 1.0), (3, 5, -1.0), (4, 2, -1.0), (5, 3, 1.0), (6, 0, 1.0), (7, 1, 1.0)] {
            want[(row, col)] = s * v;
        }
        let got = t.group(&expm_skew(&f(5, 1).scale(theta)).expect("skew")).expect("SO(8)");
        golden = golden.max((&got - &want).max_abs());
    }

    let single = PauliWord::odd_y()
        .iter()
        .filter(|w| {
            let img = t.apply(&w.skew().expect("odd-Y"));
            let big: Vec<f64> = img.coeffs.iter().copied().filter(|c| c.abs() > 1e-9).collect();
            big.len() == 1 && (big[0].abs() - 2.0).abs() < 1e-12
        })
        .count();

    let (magic, _) = evaluate(&magic_circuit()).expect("magic circuit").phase_distance(&magic_q());

    let mut failures = 0;
    let mut worst: f64 = 0.0;
    let mut max_cx = 0;
    let mut max_rot = 0;
    for v in random_inputs(seed, count) {
        match synthesize_with(&v, t) {
            Ok(s) => {
                let ok = s.report.error <= VERIFY_TOL
                    && s.report.cnots <= 14
                    && s.report.rotations <= 35
                    && s.tree.census.parameter_count() == 28
                    && projective_distance(&s.tree.product(), &v).is_ok_and(|d| d <= VERIFY_TOL);
                failures += usize::from(!ok);
                worst = worst.max(s.report.error);
                max_cx = max_cx.max(s.report.cnots);
                max_rot = max_rot.max(s.report.rotations);
            }
            Err(_) => failures += 1,
        }
    }

    vec![
        check("tau orthogonal", m.orthogonality_defect() <= 1e-12, format!("{:.1e}", m.orthogonality_defect())),
        check("tau cubed is identity", cube_err <= 1e-12, format!("{cube_err:.1e}")),
        check("tau matches reference string", reference <= 1e-15, format!("{reference:.1e}")),
        check("automorphism identity", auto <= 1e-12, format!("{auto:.1e} over 378 pairs")),
        check("tau(f)^2 = -1/4", square_err <= 1e-12, format!("{square_err:.1e}")),
        check("golden T(exp θ f51)", golden <= 1e-12, format!("{golden:.1e}")),
        check("Pauli words map to ±2 f_ji", single == 28, format!("{single}/28")),
        check("magic circuit equals Q", magic <= 1e-12, format!("{magic:.1e}")),
        check(
            "random synthesis",
            failures == 0,
            format!("{count} matrices, {failures} failures, max error {worst:.1e}, max CNOTs {max_cx}, max rotations {max_rot}"),
        ),
    ]
}
