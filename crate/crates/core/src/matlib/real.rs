use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// Dense row-major real matrix. Sized for the small (n ≤ 8) problems in this crate,
/// but rectangular shapes are allowed for intermediate blocks.
#[derive(Clone, PartialEq)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from a row-major slice.
    ///
    /// # Panics
    /// If `data.len() != rows * cols`.
    pub fn from_row_slice(rows: usize, cols: usize, data: &[f64]) -> Self {
        assert_eq!(data.len(), rows * cols, "row slice has wrong length");
        Self { rows, cols, data: data.to_vec() }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| rows[i][j])
    }

    pub fn diagonal(d: &[f64]) -> Self {
        Self::from_fn(d.len(), d.len(), |i, j| if i == j { d[i] } else { 0.0 })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Dimension of a square matrix.
    pub fn n(&self) -> usize {
        debug_assert_eq!(self.rows, self.cols);
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[f64]) {
        for (i, x) in v.iter().enumerate() {
            self[(i, j)] = *x;
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    /// Determinant by LU with partial pivoting.
    pub fn det(&self) -> f64 {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = 1.0;
        for k in 0..n {
            let piv = (k..n)
                .max_by(|&x, &y| a[x * n + k].abs().total_cmp(&a[y * n + k].abs()))
                .unwrap_or(k);
            if a[piv * n + k] == 0.0 {
                return 0.0;
            }
            if piv != k {
                for j in 0..n {
                    a.swap(k * n + j, piv * n + j);
                }
                det = -det;
            }
            let d = a[k * n + k];
            det *= d;
            for i in k + 1..n {
                let f = a[i * n + k] / d;
                for j in k..n {
                    a[i * n + j] -= f * a[k * n + j];
                }
            }
        }
        det
    }

    /// ‖AᵀA − I‖_F.
    pub fn orthogonality_defect(&self) -> f64 {
        (&self.transpose() * self - &RealMatrix::identity(self.cols)).frobenius_norm()
    }

    /// Orthogonal with determinant +1, both within `tol`.
    pub fn is_special_orthogonal(&self, tol: f64) -> bool {
        self.is_square() && self.orthogonality_defect() <= tol && (self.det() - 1.0).abs() <= tol
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.is_square() && (self - &self.transpose()).max_abs() <= tol
    }

    pub fn is_skew_symmetric(&self, tol: f64) -> bool {
        self.is_square() && (self + &self.transpose()).max_abs() <= tol
    }

    /// Submatrix on the given (0-based) rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])])
    }

    /// Contiguous block starting at (r0, c0).
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)])
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &RealMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)];
            }
        }
    }

    /// Writes `b` into the rows/columns listed (0-based), a scatter inverse of [`select`](Self::select).
    pub fn set_selected(&mut self, rows: &[usize], cols: &[usize], b: &RealMatrix) {
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                self[(r, c)] = b[(i, j)];
            }
        }
    }

    /// Block-diagonal direct sum A ⊕ B.
    pub fn direct_sum(&self, other: &RealMatrix) -> Self {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    /// Permutation matrix P with P·e_{perm[k]} = e_k, so that (P A Pᵀ)[k][l] = A[perm[k]][perm[l]].
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut p = Self::zeros(n, n);
        for (k, &old) in perm.iter().enumerate() {
            p[(k, old)] = 1.0;
        }
        p
    }
}

impl Index<(usize, usize)> for RealMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RealMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RealMatrix {
    type Output = RealMatrix;
    fn mul(self, rhs: &RealMatrix) -> RealMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = RealMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0.0 {
                    continue;
                }
                let row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }
}

impl Mul for RealMatrix {
    type Output = RealMatrix;
    fn mul(self, rhs: RealMatrix) -> RealMatrix {
        &self * &rhs
    }
}

impl Add for &RealMatrix {
    type Output = RealMatrix;
    fn add(self, rhs: &RealMatrix) -> RealMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in sum");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        RealMatrix { rows: self.rows, cols: self.cols, data }
    }
}

impl Sub for &RealMatrix {
    type Output = RealMatrix;
    fn sub(self, rhs: &RealMatrix) -> RealMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in difference");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        RealMatrix { rows: self.rows, cols: self.cols, data }
    }
}

impl Sub<&RealMatrix> for RealMatrix {
    type Output = RealMatrix;
    fn sub(self, rhs: &RealMatrix) -> RealMatrix {
        &self - rhs
    }
}

impl Add<&RealMatrix> for RealMatrix {
    type Output = RealMatrix;
    fn add(self, rhs: &RealMatrix) -> RealMatrix {
        &self + rhs
    }
}

impl Mul<&RealMatrix> for RealMatrix {
    type Output = RealMatrix;
    fn mul(self, rhs: &RealMatrix) -> RealMatrix {
        &self * rhs
    }
}

impl Neg for &RealMatrix {
    type Output = RealMatrix;
    fn neg(self) -> RealMatrix {
        self.scale(-1.0)
    }
}

impl fmt::Debug for RealMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RealMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x:>9.5}")).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// min(‖A − B‖_F, ‖A + B‖_F): distance in PSO(n), where A and −A are identified.
pub fn projective_distance(a: &RealMatrix, b: &RealMatrix) -> Result<f64, super::MatError> {
    if (a.rows, a.cols) != (b.rows, b.cols) {
        return Err(super::MatError::DimensionMismatch);
    }
    Ok((a - b).frobenius_norm().min((a + b).frobenius_norm()))
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}
