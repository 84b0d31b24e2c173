//! Matrices over an algebra and their two products.
//!
//! The row-by-column product `rc` multiplies entries in written order. The
//! column-by-row product `cr` is its mirror under transposition:
//! `cr(A, B) = rc(B^T, A^T)^T`, which multiplies entries in reversed order.
//! Over a commutative algebra the two coincide.

use alloc::vec::Vec;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Row-major matrix of algebra elements.
#[derive(Debug, Clone, PartialEq)]
pub struct DMatrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<Element<S>>,
}

impl<S: Scalar> DMatrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<Element<S>>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::ShapeMismatch("entry count must equal rows * cols"));
        }
        let dim = entries[0].dim();
        if let Some(bad) = entries.iter().find(|e| e.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Element<S>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows"));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Square matrix with the algebra's unit on the diagonal.
    pub fn identity(alg: &Algebra<S>, n: usize) -> Self {
        let entries = (0..n * n)
            .map(|idx| if idx / n == idx % n { alg.unit() } else { alg.zero() })
            .collect();
        Self { rows: n, cols: n, entries }
    }

    pub fn zeros(alg: &Algebra<S>, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: (0..rows * cols).map(|_| alg.zero()).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Element<S> {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Element<S>] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Element<S>] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.rows * self.cols)
            .map(|idx| self.get(idx % self.rows, idx / self.rows).clone())
            .collect();
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch("addition needs equal shapes"));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Base-field scalar multiple.
    pub fn scale(&self, s: &S) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
        }
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols)
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a.approx_eq(b, tol))
    }
}

/// `C[i][j] = sum_k A[i][k] B[k][j]`; needs `A.cols == B.rows`.
pub fn rc_product<S: Scalar>(alg: &Algebra<S>, a: &DMatrix<S>, b: &DMatrix<S>) -> Result<DMatrix<S>> {
    product(alg, a, b, false)
}

/// `C[i][j] = sum_k B[k][j] A[i][k]`, i.e. `rc(B^T, A^T)^T`; needs
/// `A.cols == B.rows`.
pub fn cr_product<S: Scalar>(alg: &Algebra<S>, a: &DMatrix<S>, b: &DMatrix<S>) -> Result<DMatrix<S>> {
    product(alg, a, b, true)
}

fn product<S: Scalar>(alg: &Algebra<S>, a: &DMatrix<S>, b: &DMatrix<S>, reversed: bool) -> Result<DMatrix<S>> {
    if a.cols != b.rows {
        return Err(Error::ShapeMismatch("left columns must equal right rows"));
    }
    let mut entries = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = alg.zero();
            for k in 0..a.cols {
                let t = if reversed {
                    alg.mul(b.get(k, j), a.get(i, k))?
                } else {
                    alg.mul(a.get(i, k), b.get(k, j))?
                };
                acc = &acc + &t;
            }
            entries.push(acc);
        }
    }
    Ok(DMatrix {
        rows: a.rows,
        cols: b.cols,
        entries,
    })
}

/// `sum_i c_i v_i` with each coefficient multiplying the entries of its
/// vector from the left. The vectors are the rows of `vectors`; the result is
/// a single row.
pub fn rcd_combination<S: Scalar>(alg: &Algebra<S>, coeffs: &[Element<S>], vectors: &DMatrix<S>) -> Result<DMatrix<S>> {
    if coeffs.len() != vectors.rows {
        return Err(Error::ShapeMismatch("one coefficient per vector"));
    }
    let row = DMatrix::new(1, coeffs.len(), coeffs.to_vec())?;
    rc_product(alg, &row, vectors)
}
