//! Dense base-field matrices and exact row reduction.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::{FromScalar, Scalar};

/// Row-major dense matrix over a [`Scalar`] backend.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for r in 0..self.rows {
            list.entry(&&self.data[r * self.cols..(r + 1) * self.cols]);
        }
        list.finish()
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn diagonal(diag: &[S]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Builds a matrix from rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn as_slice(&self) -> &[S] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Matrix product. Panics on inner dimension mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero_tol(0.0) {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out[(r, c)].clone() + a.clone() * other[(k, c)].clone();
                    out[(r, c)] = v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "vector length differs");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|a| a.clone() * s.clone())
    }

    pub fn map<T>(&self, f: impl FnMut(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn convert<T: Scalar + FromScalar<S>>(&self) -> Matrix<T> {
        self.map(T::from_scalar)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.data.iter().all(|a| a.is_zero_tol(tol))
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    ///
    /// The pivot of each column is the first nonzero entry in row order.
    pub fn rref(&self, tol: f64) -> Echelon<S> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero_tol(tol)) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = S::one() / m[(row, col)].clone();
            for c in col..m.cols {
                let v = m[(row, c)].clone() * inv.clone();
                m[(row, c)] = v;
            }
            m[(row, col)] = S::one();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m[(r, col)].clone();
                if factor.is_zero_tol(0.0) {
                    continue;
                }
                for c in col..m.cols {
                    let v = m[(r, c)].clone() - factor.clone() * m[(row, c)].clone();
                    m[(r, c)] = v;
                }
                m[(r, col)] = S::zero();
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self, tol: f64) -> usize {
        self.rref(tol).pivots.len()
    }

    /// Basis of `{v : self * v = 0}` in reduced form: one vector per free
    /// column, carrying a 1 in that column and 0 in every other free column.
    pub fn kernel(&self, tol: f64) -> Vec<Vec<S>> {
        self.rref(tol).kernel()
    }

    /// Affine solution set of `self * v = rhs`, or `None` if inconsistent.
    ///
    /// The particular solution sets every free variable to zero.
    pub fn solve(&self, rhs: &[S], tol: f64) -> Option<AffineSolution<S>> {
        assert_eq!(rhs.len(), self.rows, "rhs length differs from row count");
        let augmented = Self::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                rhs[r].clone()
            }
        });
        let ech = augmented.rref(tol);
        if ech.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut particular = vec![S::zero(); self.cols];
        for (r, &p) in ech.pivots.iter().enumerate() {
            particular[p] = ech.reduced[(r, self.cols)].clone();
        }
        let coeff = Echelon {
            reduced: Self::from_fn(self.rows, self.cols, |r, c| ech.reduced[(r, c)].clone()),
            pivots: ech.pivots,
        };
        Some(AffineSolution {
            particular,
            kernel: coeff.kernel(),
        })
    }

    pub fn inverse(&self, tol: f64) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let augmented = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                S::one()
            } else {
                S::zero()
            }
        });
        let ech = augmented.rref(tol);
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| ech.reduced[(r, c + n)].clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<S> core::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;

    fn index(&self, (r, c): (usize, usize)) -> &S {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.data[r * self.cols + c]
    }
}

impl<S> core::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &mut self.data[r * self.cols + c]
    }
}

/// Result of [`Matrix::rref`].
#[derive(Debug, Clone)]
pub struct Echelon<S> {
    pub reduced: Matrix<S>,
    /// Pivot column of each nonzero row, increasing.
    pub pivots: Vec<usize>,
}

impl<S: Scalar> Echelon<S> {
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let cols = self.reduced.cols();
        let mut is_pivot = vec![false; cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![S::zero(); cols];
                v[free] = S::one();
                for (r, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.reduced[(r, free)].clone();
                }
                v
            })
            .collect()
    }
}

/// `particular + span(kernel)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineSolution<S> {
    pub particular: Vec<S>,
    pub kernel: Vec<Vec<S>>,
}

impl<S: Scalar> AffineSolution<S> {
    /// Membership test for `v` in the affine set.
    pub fn contains(&self, v: &[S], tol: f64) -> bool {
        if v.len() != self.particular.len() {
            return false;
        }
        let diff: Vec<S> = v
            .iter()
            .zip(&self.particular)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        if diff.iter().all(|d| d.is_zero_tol(tol)) {
            return true;
        }
        if self.kernel.is_empty() {
            return false;
        }
        // Columns are kernel vectors; diff must be in their span.
        let k = Matrix::from_fn(diff.len(), self.kernel.len(), |r, c| self.kernel[c][r].clone());
        k.solve(&diff, tol).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect())
    }

    #[test]
    fn rref_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let ech = a.rref(0.0);
        assert_eq!(ech.pivots, vec![0, 1]);
        assert_eq!(a.rank(0.0), 2);
        assert_eq!(ech.reduced, m(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 0]]));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let k = a.kernel(0.0);
        assert_eq!(k, vec![vec![q(-1), q(-1), q(1)]]);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero_tol(0.0)));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, 1]]);
        assert!(a.solve(&[q(1), q(2)], 0.0).is_none());
        let sol = a.solve(&[q(2), q(2)], 0.0).unwrap();
        assert_eq!(sol.particular, vec![q(2), q(0)]);
        assert_eq!(sol.kernel, vec![vec![q(-1), q(1)]]);
        assert!(sol.contains(&[q(0), q(2)], 0.0));
        assert!(!sol.contains(&[q(0), q(1)], 0.0));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse(0.0).unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse(0.0).is_none());
    }

    #[test]
    fn float_elimination_uses_tolerance() {
        let a = Matrix::from_rows(vec![vec![1.0, 1.0], vec![1.0, 1.0 + 1e-12]]);
        assert_eq!(a.rank(1e-9), 1);
        assert_eq!(a.rank(0.0), 2);
    }
}
