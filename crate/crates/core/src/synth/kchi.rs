//! Structural witnesses for the subgroup K_χ = μ(Sp(2) ⊗ SU(2)).

use crate::circuit::magic_q;
use crate::lie8::PauliWord;
use crate::matlib::{ComplexMatrix, RealMatrix, C64};

/// ±1 patterns of the coefficients a, b, c, d in
/// [[a,−b,−c,−d],[b,a,d,−c],[c,−d,a,b],[d,c,−b,a]].
const QUATERNION_FORM: [[[i8; 4]; 4]; 4] = [
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]],
    [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]],
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]],
];

/// Largest deviation of a 4×4 matrix from the quaternion-like form above (the commutant
/// of I₂⊗σ_y and σ_y⊗σ_z).
pub fn quaternion_form_residual(m: &RealMatrix) -> f64 {
    let mut fit = RealMatrix::zeros(4, 4);
    for pat in &QUATERNION_FORM {
        let coeff: f64 =
            (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).map(|(i, j)| m[(i, j)] * f64::from(pat[i][j])).sum::<f64>() / 4.0;
        fit = &fit + &RealMatrix::from_fn(4, 4, |i, j| coeff * f64::from(pat[i][j]));
    }
    (m - &fit).max_abs()
}

/// Block test for membership in K_χ: every product V_ij·V_klᵀ of 4×4 blocks must have
/// the form above. Returns the largest residual.
pub fn kchi_block_test(v: &RealMatrix) -> f64 {
    let blocks: Vec<RealMatrix> = (0..4).map(|k| v.block(4 * (k / 2), 4 * (k % 2), 4, 4)).collect();
    let mut worst: f64 = 0.0;
    for x in &blocks {
        for y in &blocks {
            worst = worst.max(quaternion_form_residual(&(x * &y.transpose())));
        }
    }
    worst
}

/// ‖Ω·conj(U)·Ωᵀ − U‖_F with Ω = I₂ ⊗ iσ_y; zero exactly on Sp(2).
pub fn is_symplectic(u: &ComplexMatrix) -> f64 {
    let one = C64::new(1.0, 0.0);
    let omega = ComplexMatrix::from_fn(4, 4, |i, j| match (i % 2, j % 2) {
        _ if i / 2 != j / 2 => C64::new(0.0, 0.0),
        (0, 1) => one,
        (1, 0) => -one,
        _ => C64::new(0.0, 0.0),
    });
    (&(&omega * &u.conj()) * &omega.transpose()).sub(u).frobenius_norm()
}

/// Q†(U⊗I₂)Q must be real orthogonal of the form above; returns the worse of the
/// imaginary residue and the form residual.
pub fn magic_pattern_residual(u: &ComplexMatrix) -> f64 {
    let q = magic_q();
    let x = &(&q.adjoint() * &u.kron(&ComplexMatrix::identity(2))) * &q;
    x.max_imag().max(quaternion_form_residual(&x.real_part()))
}

/// The 13 Pauli words spanning the Lie algebra of K_χ: those sent by τ into the
/// 125|34678 block pattern.
pub fn kchi_pauli_words() -> Vec<PauliWord> {
    ["IIY", "IYZ", "IYX", "ZZY", "XZY", "YII", "IYI", "ZXY", "XXY", "IXY", "ZYI", "XYI", "IZY"]
        .iter()
        .map(|s| s.parse().expect("static word"))
        .collect()
}
