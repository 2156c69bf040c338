use super::params::canonical_params;
use super::CartanError;
use crate::matlib::{cs_decompose, torus, RealMatrix, SignDiagonal};

/// Result of matching: k1 · template · k2 = sign · target.
#[derive(Debug, Clone)]
pub struct DoubleCosetMatch {
    pub k1: RealMatrix,
    pub k2: RealMatrix,
    /// ±1; always +1 in the non-projective case.
    pub sign: f64,
    pub residual: f64,
}

const SIGMA_TOL: f64 = 1e-9;
const ANGLE_TOL: f64 = 1e-6;
const RESIDUAL_TOL: f64 = 1e-8;

/// Returns the representative of ±U whose p×p corner has non-negative determinant.
pub fn lift_corner_positive(u: &RealMatrix, p: usize) -> (f64, RealMatrix) {
    if u.block(0, 0, p, p).det() < 0.0 {
        (-1.0, u.scale(-1.0))
    } else {
        (1.0, u.clone())
    }
}

/// Finds K1, K2 ∈ SO(p) ⊕ SO(n−p) with K1 · template · K2 = target (up to sign when
/// `projective`).
///
/// Both matrices are cosine-sine decomposed; equal canonical parameters give equal torus
/// angles except where a cosine vanishes, in which case the sign of that angle is aligned
/// by conjugating the torus with a sign diagonal of det +1 on each block.
pub fn match_double_coset(
    target: &RealMatrix,
    template: &RealMatrix,
    p: usize,
    projective: bool,
) -> Result<DoubleCosetMatch, CartanError> {
    let pu = canonical_params(target, p, projective)?;
    let pv = canonical_params(template, p, projective)?;
    if !pu.matches(&pv, SIGMA_TOL) {
        return Err(CartanError::ParameterMismatch(format!("{:?} vs {:?}", pu.sigma, pv.sigma)));
    }
    // odd p: −U flips the corner sign, so the corner-positive representative is canonical
    let lift = projective && p % 2 == 1;
    let (su, u) = if lift { lift_corner_positive(target, p) } else { (1.0, target.clone()) };
    let (sv, v) = if lift { lift_corner_positive(template, p) } else { (1.0, template.clone()) };

    let n = u.n();
    let r = n - 2 * p;
    let cu = cs_decompose(&u, p)?;
    let cv = cs_decompose(&v, p)?;

    let mut dv = cv.d.clone();
    let mut flips: Vec<usize> = Vec::new();
    let mut pending: Vec<usize> = Vec::new();
    for i in 0..p {
        if angle_close(cu.d[i], dv[i]) {
            continue;
        }
        if angle_close(cu.d[i], -dv[i]) {
            dv[i] = -dv[i];
            if r > 0 {
                // Δ on the paired coordinate flips the angle; Δ on a middle coordinate
                // commutes with the torus and restores det +1
                flips.extend([p + r + i + 1, p + 1]);
            } else {
                pending.push(i);
            }
            continue;
        }
        return Err(CartanError::ParameterMismatch(format!("torus angle {i}: {} vs {}", cu.d[i], cv.d[i])));
    }
    for pair in pending.chunks(2) {
        match pair {
            [a, b] => flips.extend([a + 1, b + 1]),
            _ => return Err(CartanError::MatchFailed(f64::INFINITY)),
        }
    }
    let e = SignDiagonal::new(n, flips_mod2(flips)).matrix();
    debug_assert!((&(&(&e * &torus(n, p, &cv.d)) * &e) - &torus(n, p, &dv)).max_abs() < 1e-14);

    let k1 = &(&cu.k1 * &e) * &cv.k1.transpose();
    let k2 = &(&cv.k2.transpose() * &e) * &cu.k2;
    let sign = su * sv;
    let residual = (&(&(&k1 * template) * &k2) - &target.scale(sign)).max_abs();
    if residual > RESIDUAL_TOL {
        return Err(CartanError::MatchFailed(residual));
    }
    Ok(DoubleCosetMatch { k1, k2, sign, residual })
}

fn angle_close(a: f64, b: f64) -> bool {
    (a.cos() - b.cos()).abs() <= ANGLE_TOL && (a.sin() - b.sin()).abs() <= ANGLE_TOL
}

/// Positions listed an odd number of times.
fn flips_mod2(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    let mut out: Vec<usize> = Vec::new();
    for k in v {
        if out.last() == Some(&k) {
            out.pop();
        } else {
            out.push(k);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matlib::random_special_orthogonal;

    fn random_k(n: usize, p: usize, seed: u64) -> RealMatrix {
        random_special_orthogonal(p, seed).direct_sum(&random_special_orthogonal(n - p, seed + 7))
    }

    #[test]
    fn self_match() {
        let u = random_special_orthogonal(8, 5);
        let m = match_double_coset(&u, &u, 3, false).unwrap();
        assert!(m.residual < 1e-12);
    }

    #[test]
    fn construct_then_recover() {
        for seed in 0..20 {
            let d = [0.3 + 0.01 * seed as f64, 1.1, 2.0];
            let a = torus(8, 3, &d);
            let u = &(&random_k(8, 3, seed) * &a) * &random_k(8, 3, seed + 100);
            let m = match_double_coset(&u, &a, 3, false).unwrap();
            assert!(m.residual < 1e-9);
        }
    }

    #[test]
    fn vanishing_cosine_is_aligned() {
        let half = std::f64::consts::FRAC_PI_2;
        let cases: [(usize, usize, Vec<f64>, Vec<f64>); 2] = [
            (8, 3, vec![0.4, 0.4, half], vec![0.4, 0.4, -half]),
            (4, 2, vec![half, half], vec![-half, -half]),
        ];
        for (n, p, d, dn) in cases {
            let a = torus(n, p, &d);
            let b = torus(n, p, &dn);
            let m = match_double_coset(&a, &b, p, false).unwrap();
            assert!(m.residual < 1e-12, "n={n} p={p}");
        }
    }

    #[test]
    fn mismatch_rejected() {
        let a = torus(8, 3, &[0.1, 0.2, 0.3]);
        let b = torus(8, 3, &[0.1, 0.2, 0.4]);
        assert!(matches!(match_double_coset(&a, &b, 3, false), Err(CartanError::ParameterMismatch(_))));
    }

    #[test]
    fn projective_odd_p() {
        let a = torus(8, 3, &[0.1, 0.2, 0.3]);
        let u = (&(&random_k(8, 3, 1) * &a) * &random_k(8, 3, 2)).scale(-1.0);
        assert!(match_double_coset(&u, &a, 3, false).is_err());
        let m = match_double_coset(&u, &a, 3, true).unwrap();
        assert_eq!(m.sign, -1.0);
        assert!(m.residual < 1e-9);
    }
}
