//! Dense complex matrices, LU factorization with partial pivoting and a
//! 1-norm condition estimator.

use crate::C64;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum LinalgError {
    /// A pivot fell below the breakdown threshold during elimination.
    Singular { step: usize },
    DimensionMismatch { expected: usize, got: usize },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::Singular { step } => {
                write!(f, "matrix is numerically singular (elimination step {step})")
            }
            LinalgError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
        }
    }
}

impl std::error::Error for LinalgError {}

/// Dense row-major complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMat {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMat { rows, cols, data: vec![C64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ComplexMat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [C64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [C64] {
        &mut self.data
    }

    pub fn matvec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(C64::new(0.0, 0.0), |acc, (a, x)| acc + a * x)
            })
            .collect()
    }

    pub fn matmul(&self, rhs: &ComplexMat) -> ComplexMat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = ComplexMat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                let rrow = rhs.row(k);
                let orow = out.row_mut(i);
                for (o, r) in orow.iter_mut().zip(rrow) {
                    *o += a * r;
                }
            }
        }
        out
    }

    pub fn scale(&mut self, s: C64) {
        for v in &mut self.data {
            *v *= s;
        }
    }

    pub fn scaled(&self, s: C64) -> ComplexMat {
        let mut out = self.clone();
        out.scale(s);
        out
    }

    pub fn add_assign(&mut self, other: &ComplexMat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }

    pub fn sub(&self, other: &ComplexMat) -> ComplexMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    /// Adds `s * I` in place.
    pub fn add_diagonal(&mut self, s: C64) {
        assert_eq!(self.rows, self.cols);
        for i in 0..self.rows {
            self[(i, i)] += s;
        }
    }

    /// Writes `block` into the submatrix with upper-left corner `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &ComplexMat) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            let src = block.row(i);
            let dst = &mut self.data[(r0 + i) * self.cols + c0..];
            dst[..block.cols].copy_from_slice(src);
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> ComplexMat {
        ComplexMat::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)])
    }

    /// Maximum absolute column sum.
    pub fn norm1(&self) -> f64 {
        let mut sums = vec![0.0; self.cols];
        for i in 0..self.rows {
            for (s, v) in sums.iter_mut().zip(self.row(i)) {
                *s += v.norm();
            }
        }
        sums.into_iter().fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMat {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

/// LU factorization `P A = L U` of a square complex matrix.
pub struct LuFactors {
    n: usize,
    lu: ComplexMat,
    /// Row interchange applied at each elimination step.
    piv: Vec<usize>,
}

/// Factors `a` with partial pivoting. The pivot breakdown threshold is
/// 1e-300; anything below reports the matrix as singular.
pub fn lu_factor(mut a: ComplexMat) -> Result<LuFactors, LinalgError> {
    assert_eq!(a.rows(), a.cols());
    let n = a.rows();
    let mut piv = vec![0usize; n];
    for k in 0..n {
        // pivot search in column k
        let mut p = k;
        let mut pmax = a[(k, k)].norm();
        for i in k + 1..n {
            let v = a[(i, k)].norm();
            if v > pmax {
                pmax = v;
                p = i;
            }
        }
        if !(pmax > 1e-300) {
            return Err(LinalgError::Singular { step: k });
        }
        piv[k] = p;
        if p != k {
            for j in 0..n {
                let tmp = a[(k, j)];
                a[(k, j)] = a[(p, j)];
                a[(p, j)] = tmp;
            }
        }
        let inv_pivot = C64::new(1.0, 0.0) / a[(k, k)];
        for i in k + 1..n {
            let l = a[(i, k)] * inv_pivot;
            a[(i, k)] = l;
            if l == C64::new(0.0, 0.0) {
                continue;
            }
            // row update on the trailing columns; split_at_mut gives disjoint
            // views of rows k and i
            let (top, bottom) = a.data.split_at_mut(i * n);
            let krow = &top[k * n + k + 1..k * n + n];
            let irow = &mut bottom[k + 1..n];
            for (x, y) in irow.iter_mut().zip(krow) {
                *x -= l * y;
            }
        }
    }
    Ok(LuFactors { n, lu: a, piv })
}

impl LuFactors {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Solves `A x = b`.
    pub fn solve(&self, b: &[C64]) -> Result<Vec<C64>, LinalgError> {
        if b.len() != self.n {
            return Err(LinalgError::DimensionMismatch { expected: self.n, got: b.len() });
        }
        let n = self.n;
        let mut x = b.to_vec();
        for k in 0..n {
            x.swap(k, self.piv[k]);
            let xk = x[k];
            if xk == C64::new(0.0, 0.0) {
                continue;
            }
            for i in k + 1..n {
                let l = self.lu[(i, k)];
                x[i] -= l * xk;
            }
        }
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in i + 1..n {
                s -= self.lu[(i, j)] * x[j];
            }
            x[i] = s / self.lu[(i, i)];
        }
        Ok(x)
    }

    /// Solves the adjoint system `A^H x = b`.
    pub fn solve_adjoint(&self, b: &[C64]) -> Result<Vec<C64>, LinalgError> {
        if b.len() != self.n {
            return Err(LinalgError::DimensionMismatch { expected: self.n, got: b.len() });
        }
        let n = self.n;
        // A = P^T L U  =>  A^H = U^H L^H P. Solve U^H y = b, L^H z = y,
        // then x = P^T z (undo the interchanges in reverse order).
        let mut y = b.to_vec();
        for i in 0..n {
            let mut s = y[i];
            for j in 0..i {
                s -= self.lu[(j, i)].conj() * y[j];
            }
            y[i] = s / self.lu[(i, i)].conj();
        }
        for i in (0..n).rev() {
            let mut s = y[i];
            for j in i + 1..n {
                s -= self.lu[(j, i)].conj() * y[j];
            }
            y[i] = s;
        }
        for k in (0..n).rev() {
            y.swap(k, self.piv[k]);
        }
        Ok(y)
    }

    /// Estimates the 1-norm of `A^{-1}` (Hager's algorithm adapted to complex
    /// matrices). Multiply by `norm1(A)` for a condition estimate.
    pub fn inverse_norm1_estimate(&self) -> f64 {
        let n = self.n;
        let mut x = vec![C64::new(1.0 / n as f64, 0.0); n];
        let mut best = 0.0f64;
        let mut last_j = usize::MAX;
        for _ in 0..5 {
            let y = match self.solve(&x) {
                Ok(y) => y,
                Err(_) => return f64::INFINITY,
            };
            let est: f64 = y.iter().map(|v| v.norm()).sum();
            if est > best {
                best = est;
            }
            // steepest-ascent direction: sign vector of y
            let xi: Vec<C64> = y
                .iter()
                .map(|v| if v.norm() > 0.0 { v / v.norm() } else { C64::new(1.0, 0.0) })
                .collect();
            let z = match self.solve_adjoint(&xi) {
                Ok(z) => z,
                Err(_) => return f64::INFINITY,
            };
            let (j, _) = z
                .iter()
                .enumerate()
                .fold((0, 0.0), |(bj, bv), (i, v)| if v.norm() > bv { (i, v.norm()) } else { (bj, bv) });
            if j == last_j {
                break;
            }
            last_j = j;
            x.iter_mut().for_each(|v| *v = C64::new(0.0, 0.0));
            x[j] = C64::new(1.0, 0.0);
        }
        best
    }
}

/// Relative residual `||A x - b|| / ||b||` in the Euclidean norm.
pub fn relative_residual(a: &ComplexMat, x: &[C64], b: &[C64]) -> f64 {
    let ax = a.matvec(x);
    let num: f64 = ax.iter().zip(b).map(|(p, q)| (p - q).norm_sqr()).sum::<f64>().sqrt();
    let den: f64 = b.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt();
    if den == 0.0 {
        num
    } else {
        num / den
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    // deterministic pseudo-random complex entries
    fn lcg_mat(n: usize, seed: &mut u64) -> ComplexMat {
        let mut next = || {
            *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((*seed >> 11) as f64) / (1u64 << 53) as f64 - 0.5
        };
        ComplexMat::from_fn(n, n, |_, _| c(next(), next()))
    }

    #[test]
    fn identity_solve_returns_rhs() {
        let a = ComplexMat::identity(5);
        let b: Vec<C64> = (0..5).map(|i| c(i as f64, -(i as f64))).collect();
        let lu = lu_factor(a).unwrap();
        let x = lu.solve(&b).unwrap();
        for (xi, bi) in x.iter().zip(&b) {
            assert!((xi - bi).norm() < 1e-15);
        }
    }

    #[test]
    fn random_system_residual_small() {
        let mut seed = 42u64;
        let a = lcg_mat(40, &mut seed);
        let b: Vec<C64> = (0..40).map(|i| c((i as f64).sin(), (i as f64).cos())).collect();
        let lu = lu_factor(a.clone()).unwrap();
        let x = lu.solve(&b).unwrap();
        assert!(relative_residual(&a, &x, &b) < 1e-12);
    }

    #[test]
    fn adjoint_solve_consistent() {
        let mut seed = 7u64;
        let a = lcg_mat(20, &mut seed);
        let b: Vec<C64> = (0..20).map(|i| c(1.0 + i as f64, 0.5)).collect();
        let lu = lu_factor(a.clone()).unwrap();
        let x = lu.solve_adjoint(&b).unwrap();
        // residual of A^H x = b
        let ah = ComplexMat::from_fn(20, 20, |i, j| a[(j, i)].conj());
        assert!(relative_residual(&ah, &x, &b) < 1e-12);
    }

    #[test]
    fn condition_estimate_identity_and_diagonal() {
        let lu = lu_factor(ComplexMat::identity(8)).unwrap();
        let est = lu.inverse_norm1_estimate();
        assert!((est - 1.0).abs() < 1e-14);

        let mut d = ComplexMat::identity(8);
        d[(3, 3)] = c(1e-6, 0.0);
        let norm1 = d.norm1();
        let lu = lu_factor(d).unwrap();
        let cond = lu.inverse_norm1_estimate() * norm1;
        assert!((cond - 1e6).abs() / 1e6 < 1e-10);
    }

    #[test]
    fn singular_matrix_reported() {
        let a = ComplexMat::zeros(4, 4);
        assert!(matches!(lu_factor(a), Err(LinalgError::Singular { .. })));
    }

    #[test]
    fn matmul_known_product() {
        let a = ComplexMat::from_fn(2, 2, |i, j| c((i + j) as f64, 0.0));
        let b = ComplexMat::from_fn(2, 2, |i, j| c(0.0, (i * 2 + j) as f64));
        let p = a.matmul(&b);
        // a = [[0,1],[1,2]], b = i*[[0,1],[2,3]]
        assert_eq!(p[(0, 0)], c(0.0, 2.0));
        assert_eq!(p[(0, 1)], c(0.0, 3.0));
        assert_eq!(p[(1, 0)], c(0.0, 4.0));
        assert_eq!(p[(1, 1)], c(0.0, 7.0));
    }
}
