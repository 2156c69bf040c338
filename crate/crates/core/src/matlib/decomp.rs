use super::{check_special_orthogonal, dot, norm, MatError, RealMatrix, TOL_MEMBERSHIP};

const JACOBI_EPS: f64 = 1e-14;
const MAX_SWEEPS: usize = 100;

/// Cyclic two-sided Jacobi eigendecomposition of a symmetric matrix.
///
/// Returns eigenvalues sorted descending and Q with Q diag(λ) Qᵀ = S.
pub fn sym_eigen(s: &RealMatrix) -> Result<(Vec<f64>, RealMatrix), MatError> {
    if !s.is_symmetric(1e-10 * s.max_abs().max(1.0)) {
        return Err(MatError::NotSymmetric);
    }
    let n = s.n();
    let mut a = s.clone();
    let mut q = RealMatrix::identity(n);
    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)] * a[(i, j)])
            .sum::<f64>()
            .sqrt();
        if off <= JACOBI_EPS * scale {
            break;
        }
        for p in 0..n {
            for r in p + 1..n {
                let apr = a[(p, r)];
                if apr.abs() < f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (a[(r, r)] - a[(p, p)]) / (2.0 * apr);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akr = a[(k, r)];
                    a[(k, p)] = c * akp - sn * akr;
                    a[(k, r)] = sn * akp + c * akr;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let ark = a[(r, k)];
                    a[(p, k)] = c * apk - sn * ark;
                    a[(r, k)] = sn * apk + c * ark;
                }
                for k in 0..n {
                    let qkp = q[(k, p)];
                    let qkr = q[(k, r)];
                    q[(k, p)] = c * qkp - sn * qkr;
                    q[(k, r)] = sn * qkp + c * qkr;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(y, y)].total_cmp(&a[(x, x)]));
    let vals = order.iter().map(|&k| a[(k, k)]).collect();
    let vecs = RealMatrix::from_fn(n, n, |i, j| q[(i, order[j])]);
    Ok((vals, vecs))
}

/// A = U diag(σ) Vᵀ with σ descending; U and V orthogonal (det ±1).
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: RealMatrix,
    pub sigma: Vec<f64>,
    pub v: RealMatrix,
}

/// One-sided Jacobi SVD of a square matrix.
pub fn svd(a: &RealMatrix) -> Svd {
    assert!(a.is_square(), "svd implemented for square matrices");
    let n = a.n();
    let mut w = a.clone();
    let mut v = RealMatrix::identity(n);
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, 0.0);
                for k in 0..n {
                    alpha += w[(k, p)] * w[(k, p)];
                    beta += w[(k, q)] * w[(k, q)];
                    gamma += w[(k, p)] * w[(k, q)];
                }
                if gamma.abs() <= JACOBI_EPS * (alpha * beta).sqrt() || gamma == 0.0 {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for k in 0..n {
                    let wp = w[(k, p)];
                    let wq = w[(k, q)];
                    w[(k, p)] = c * wp - s * wq;
                    w[(k, q)] = s * wp + c * wq;
                    let vp = v[(k, p)];
                    let vq = v[(k, q)];
                    v[(k, p)] = c * vp - s * vq;
                    v[(k, q)] = s * vp + c * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sig: Vec<f64> = (0..n).map(|j| norm(&w.column(j))).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| sig[y].total_cmp(&sig[x]));
    let v = RealMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    sig = order.iter().map(|&k| sig[k]).collect();
    let scale = sig.first().copied().unwrap_or(0.0).max(1.0);
    let mut cols: Vec<Option<Vec<f64>>> = order
        .iter()
        .zip(&sig)
        .map(|(&k, &s)| (s > 1e-13 * scale).then(|| w.column(k).iter().map(|x| x / s).collect()))
        .collect();
    complete_basis(&mut cols, n);
    let mut u = RealMatrix::zeros(n, n);
    for (j, c) in cols.iter().enumerate() {
        u.set_column(j, c.as_ref().expect("basis completed"));
    }
    Svd { u, sigma: sig, v }
}

/// Fills `None` slots with unit vectors orthogonal to all others (Gram–Schmidt on e_k).
fn complete_basis(cols: &mut [Option<Vec<f64>>], n: usize) {
    let mut k = 0;
    for slot in 0..cols.len() {
        if cols[slot].is_some() {
            continue;
        }
        while k < n {
            let mut e = vec![0.0; n];
            e[k] = 1.0;
            k += 1;
            for _ in 0..2 {
                for c in cols.iter().flatten() {
                    let d = dot(c, &e);
                    e.iter_mut().zip(c).for_each(|(x, y)| *x -= d * y);
                }
            }
            let ne = norm(&e);
            if ne > 1e-6 {
                cols[slot] = Some(e.iter().map(|x| x / ne).collect());
                break;
            }
        }
    }
}

/// Nearest orthogonal matrix U Vᵀ.
pub fn polar(a: &RealMatrix) -> RealMatrix {
    let s = svd(a);
    &s.u * &s.v.transpose()
}

/// exp(X) for skew-symmetric X by scaling and squaring a Taylor series.
pub fn expm_skew(x: &RealMatrix) -> Result<RealMatrix, MatError> {
    if !x.is_skew_symmetric(1e-10 * x.max_abs().max(1.0)) {
        return Err(MatError::NotSkewSymmetric);
    }
    let n = x.n();
    let nrm = x.frobenius_norm();
    let mut squarings = 0;
    while nrm / f64::from(1u32 << squarings.min(30)) > 0.25 {
        squarings += 1;
    }
    let y = x.scale(1.0 / f64::from(1u32 << squarings));
    let mut term = RealMatrix::identity(n);
    let mut sum = RealMatrix::identity(n);
    for k in 1..=20 {
        term = (&term * &y).scale(1.0 / k as f64);
        sum = &sum + &term;
        if term.max_abs() < 1e-18 {
            break;
        }
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    Ok(sum)
}

/// K1 · A(D) · K2 with K1, K2 ∈ SO(p) ⊕ SO(n−p).
#[derive(Debug, Clone)]
pub struct CSFactors {
    pub p: usize,
    pub k1: RealMatrix,
    pub k2: RealMatrix,
    pub d: Vec<f64>,
}

impl CSFactors {
    pub fn torus(&self) -> RealMatrix {
        torus(self.k1.n(), self.p, &self.d)
    }

    pub fn reassemble(&self) -> RealMatrix {
        &(&self.k1 * &self.torus()) * &self.k2
    }
}

/// Torus element for the split p | n−p with q = min(p, n−p) angles.
///
/// For 2p ≤ n, coordinate i < p pairs with p + (n−2p) + i; for 2p > n, coordinate
/// (2p−n) + i pairs with p + i. Paired coordinates carry cos on the diagonal, −sin above
/// and +sin below; the remaining coordinates are fixed.
pub fn torus(n: usize, p: usize, d: &[f64]) -> RealMatrix {
    assert!(p <= n);
    let q = p.min(n - p);
    assert_eq!(d.len(), q);
    let mut a = RealMatrix::identity(n);
    for (i, &t) in d.iter().enumerate() {
        let (s, c) = t.sin_cos();
        let (x, y) = if 2 * p <= n { (i, n - p + i) } else { (2 * p - n + i, p + i) };
        a[(x, x)] = c;
        a[(y, y)] = c;
        a[(x, y)] = -s;
        a[(y, x)] = s;
    }
    a
}

/// Cosine-sine decomposition V = K1 · A(D) · K2 with every diagonal block of det +1.
///
/// The second block is ordered [middle (n−2p) | paired (p)], matching [`torus`].
/// D is returned with cos D descending in the first p−1 slots. A split with 2p > n is
/// reduced to the complementary one by swapping the blocks.
pub fn cs_decompose(v: &RealMatrix, p: usize) -> Result<CSFactors, MatError> {
    check_special_orthogonal(v, TOL_MEMBERSHIP)?;
    let n = v.n();
    if p == 0 || p >= n {
        return Err(MatError::BadBlockSize { n, p });
    }
    if 2 * p > n {
        let perm: Vec<usize> = (p..n).chain(0..p).collect();
        let s = RealMatrix::permutation(&perm);
        let back = |x: &RealMatrix| &(&s.transpose() * x) * &s;
        let inner = cs_decompose(&(&(&s * v) * &s.transpose()), n - p)?;
        // the swapped torus has +sin above the diagonal, hence the negated angles
        return Ok(CSFactors { p, k1: back(&inner.k1), k2: back(&inner.k2), d: inner.d.iter().map(|t| -t).collect() });
    }
    let m = n - p;
    let r = m - p;
    let v11 = v.block(0, 0, p, p);
    let v21 = v.block(p, 0, m, p);
    let v12 = v.block(0, p, p, m);
    let v22 = v.block(p, p, m, m);

    let Svd { u: mut u1, sigma: mut c, v: mut w1 } = svd(&v11);
    if u1.det() < 0.0 {
        negate_column(&mut u1, p - 1);
        c[p - 1] = -c[p - 1];
    }
    if w1.det() < 0.0 {
        negate_column(&mut w1, p - 1);
        c[p - 1] = -c[p - 1];
    }

    // paired columns of U2 are the normalized columns of V21·w1, orthogonalized largest first
    let z = &v21 * &w1;
    let s_norm: Vec<f64> = (0..p).map(|i| norm(&z.column(i))).collect();
    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by(|&x, &y| s_norm[y].total_cmp(&s_norm[x]));
    let mut paired: Vec<Option<Vec<f64>>> = vec![None; p];
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for &i in &order {
        let mut col = z.column(i);
        for _ in 0..2 {
            for b in &basis {
                let d = dot(b, &col);
                col.iter_mut().zip(b).for_each(|(x, y)| *x -= d * y);
            }
        }
        let nc = norm(&col);
        if nc > 1e-8 {
            let unit: Vec<f64> = col.iter().map(|x| x / nc).collect();
            basis.push(unit.clone());
            paired[i] = Some(unit);
        }
    }
    // unpaired slots prefer their own coordinate axis so that block-diagonal inputs give K = I
    for i in 0..p {
        if paired[i].is_none() {
            let e = unit_orthogonal_to(&basis, m, r + i);
            basis.push(e.clone());
            paired[i] = Some(e);
        }
    }
    let mut u2 = RealMatrix::zeros(m, m);
    for k in 0..r {
        let e = unit_orthogonal_to(&basis, m, k);
        basis.push(e.clone());
        u2.set_column(k, &e);
    }
    for (i, col) in paired.iter().enumerate() {
        u2.set_column(r + i, col.as_ref().expect("paired column"));
    }
    let mut s: Vec<f64> = (0..p).map(|i| dot(&u2.column(r + i), &z.column(i))).collect();

    let l = &u2.transpose() * &v22;
    let uu = &u1.transpose() * &v12;
    let mut w2t = RealMatrix::zeros(m, m);
    for row in 0..r {
        for col in 0..m {
            w2t[(row, col)] = l[(row, col)];
        }
    }
    for i in 0..p {
        for col in 0..m {
            w2t[(r + i, col)] = c[i] * l[(r + i, col)] - s[i] * uu[(i, col)];
        }
    }
    let mut w2t = polar(&w2t);
    if u2.det() < 0.0 {
        if r > 0 {
            negate_column(&mut u2, 0);
            negate_row(&mut w2t, 0);
        } else {
            negate_column(&mut u2, m - 1);
            negate_row(&mut w2t, m - 1);
            s[p - 1] = -s[p - 1];
        }
    }
    let d: Vec<f64> = (0..p).map(|i| canonical_angle(s[i].atan2(c[i]))).collect();
    let k1 = u1.direct_sum(&u2);
    let k2 = w1.transpose().direct_sum(&w2t);
    Ok(CSFactors { p, k1, k2, d })
}

/// Maps −π (from atan2 of a signed zero) to π so that D is continuous across the branch.
/// A unit vector orthogonal to `basis`, starting from e_prefer and falling back to e_0, e_1, ….
fn unit_orthogonal_to(basis: &[Vec<f64>], n: usize, prefer: usize) -> Vec<f64> {
    for k in std::iter::once(prefer).chain(0..n) {
        let mut e = vec![0.0; n];
        e[k] = 1.0;
        for _ in 0..2 {
            for b in basis {
                let d = dot(b, &e);
                e.iter_mut().zip(b).for_each(|(x, y)| *x -= d * y);
            }
        }
        let ne = norm(&e);
        if ne > 1e-6 {
            return e.iter().map(|x| x / ne).collect();
        }
    }
    unreachable!("basis already complete")
}

fn canonical_angle(t: f64) -> f64 {
    if t <= -std::f64::consts::PI + 1e-14 {
        t + 2.0 * std::f64::consts::PI
    } else {
        t
    }
}

fn negate_column(a: &mut RealMatrix, j: usize) {
    for i in 0..a.nrows() {
        a[(i, j)] = -a[(i, j)];
    }
}

fn negate_row(a: &mut RealMatrix, i: usize) {
    for j in 0..a.ncols() {
        a[(i, j)] = -a[(i, j)];
    }
}
