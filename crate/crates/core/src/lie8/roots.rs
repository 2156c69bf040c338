use crate::matlib::{ComplexMatrix, RealMatrix, C64};

use super::skew::f;

/// H_k = f_{2k,2k−1}, k = 1..4: a basis of the Cartan subalgebra.
pub fn cartan_basis() -> [RealMatrix; 4] {
    std::array::from_fn(|k| f(2 * k + 2, 2 * k + 1))
}

/// A root ±e_p ± e_q as an integer 4-vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Root(pub [i8; 4]);

impl Root {
    pub fn neg(self) -> Self {
        Root(self.0.map(|x| -x))
    }

    pub fn as_f64(self) -> [f64; 4] {
        self.0.map(f64::from)
    }

    /// α(a·H) coefficient vector: [a·H, X_α] = i·(α·a)·X_α.
    pub fn eval(self, a: &[f64; 4]) -> f64 {
        self.as_f64().iter().zip(a).map(|(x, y)| x * y).sum()
    }
}

/// The 24 root vectors X_α of so(8) ⊗ ℂ.
#[derive(Debug, Clone)]
pub struct RootVectorTable {
    pub entries: Vec<(Root, ComplexMatrix)>,
}

impl RootVectorTable {
    pub fn get(&self, r: Root) -> Option<&ComplexMatrix> {
        self.entries.iter().find(|(s, _)| *s == r).map(|(_, m)| m)
    }

    /// The 12 positive roots e_p ± e_q (p < q).
    pub fn positive_roots() -> Vec<Root> {
        let mut out = Vec::with_capacity(12);
        for p in 0..4 {
            for q in p + 1..4 {
                for s in [-1i8, 1] {
                    let mut v = [0i8; 4];
                    v[p] = 1;
                    v[q] = s;
                    out.push(Root(v));
                }
            }
        }
        out
    }
}

/// X_{e_p−e_q} fills rows/cols [2p−1,2p]×[2q−1,2q] with ½[[1,i],[−i,1]],
/// X_{e_p+e_q} with ½[[1,−i],[−i,−1]], each skew-symmetrized; X_{−α} = conj(X_α).
pub fn build_root_vectors() -> RootVectorTable {
    let mut entries = Vec::with_capacity(24);
    let h = 0.5;
    for root in RootVectorTable::positive_roots() {
        let p = root.0.iter().position(|&x| x != 0).expect("nonzero root");
        let q = root.0.iter().rposition(|&x| x != 0).expect("nonzero root");
        let block = if root.0[q] < 0 {
            [[C64::new(h, 0.0), C64::new(0.0, h)], [C64::new(0.0, -h), C64::new(h, 0.0)]]
        } else {
            [[C64::new(h, 0.0), C64::new(0.0, -h)], [C64::new(0.0, -h), C64::new(-h, 0.0)]]
        };
        let mut x = ComplexMatrix::zeros(8, 8);
        for a in 0..2 {
            for b in 0..2 {
                x[(2 * p + a, 2 * q + b)] = block[a][b];
                x[(2 * q + b, 2 * p + a)] = -block[a][b];
            }
        }
        entries.push((root.neg(), x.conj()));
        entries.push((root, x));
    }
    RootVectorTable { entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
        (a * b).sub(&(b * a))
    }

    #[test]
    fn cartan_commutes() {
        let h = cartan_basis();
        for a in &h {
            for b in &h {
                assert!((&(a * b) - &(b * a)).max_abs() < 1e-15);
            }
        }
    }

    #[test]
    fn eigen_relation_holds() {
        let table = build_root_vectors();
        assert_eq!(table.entries.len(), 24);
        let hs = cartan_basis().map(|h| ComplexMatrix::from_real(&h));
        for (root, x) in &table.entries {
            for (k, h) in hs.iter().enumerate() {
                let lhs = commutator(h, x);
                let rhs = x.scale(C64::new(0.0, f64::from(root.0[k])));
                assert!(lhs.sub(&rhs).frobenius_norm() < 1e-14);
            }
        }
    }

    #[test]
    fn e1_minus_e2_vector() {
        let table = build_root_vectors();
        let x = table.get(Root([1, -1, 0, 0])).unwrap();
        assert_eq!(x[(0, 2)], C64::new(0.5, 0.0));
        assert_eq!(x[(0, 3)], C64::new(0.0, 0.5));
        assert_eq!(x[(1, 2)], C64::new(0.0, -0.5));
        assert_eq!(x[(1, 3)], C64::new(0.5, 0.0));
        assert_eq!(x[(3, 0)], C64::new(0.0, -0.5));
        // [a·H, X] = i(a1 − a2) X
        let a = [0.3, -1.1, 0.7, 2.0];
        let h = cartan_basis();
        let mut ah = RealMatrix::zeros(8, 8);
        for k in 0..4 {
            ah = &ah + &h[k].scale(a[k]);
        }
        let ah = ComplexMatrix::from_real(&ah);
        let lhs = commutator(&ah, x);
        let rhs = x.scale(C64::new(0.0, a[0] - a[1]));
        assert!(lhs.sub(&rhs).frobenius_norm() < 1e-14);
    }

    #[test]
    fn conjugate_is_negative_root() {
        let table = build_root_vectors();
        for r in RootVectorTable::positive_roots() {
            let x = table.get(r).unwrap();
            let y = table.get(r.neg()).unwrap();
            assert!(x.conj().sub(y).frobenius_norm() == 0.0);
        }
    }
}
