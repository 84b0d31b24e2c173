//! Exact linear equations over an algebra, solved by reduction to the base
//! field through multiplication matrices.

use alloc::vec::Vec;

use crate::algebra::{Algebra, Element};
use crate::biring::DMatrix;
use crate::error::{Error, Result};
use crate::matrix::{AffineSolution, Matrix};
use crate::scalar::Scalar;

/// `sum_s a_s x b_s = rhs` in one unknown `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct SandwichEquation<S> {
    pub terms: Vec<(Element<S>, Element<S>)>,
    pub rhs: Element<S>,
}

impl<S: Scalar> SandwichEquation<S> {
    pub fn new(terms: Vec<(Element<S>, Element<S>)>, rhs: Element<S>) -> Self {
        Self { terms, rhs }
    }

    /// The base-field operator `sum_s L(a_s) R(b_s)` acting on column vectors.
    pub fn operator(&self, alg: &Algebra<S>) -> Result<Matrix<S>> {
        if self.terms.is_empty() {
            return Err(Error::EmptyEquation);
        }
        let n = alg.dim();
        let mut op = Matrix::zeros(n, n);
        for (a, b) in &self.terms {
            op = op.add(&alg.left_mult_matrix(a)?.mul(&alg.right_mult_matrix(b)?));
        }
        Ok(op)
    }

    pub fn evaluate(&self, alg: &Algebra<S>, x: &Element<S>) -> Result<Element<S>> {
        let mut out = alg.zero();
        for (a, b) in &self.terms {
            out = &out + &alg.mul3(a, x, b)?;
        }
        Ok(out)
    }
}

/// `sum_i x^i A[i][j] = b^j` for an `m x n` coefficient matrix: `m`
/// unknowns, `n` equations, coefficients on the right of the unknowns.
#[derive(Debug, Clone, PartialEq)]
pub struct RcdSystem<S> {
    pub matrix: DMatrix<S>,
    pub rhs: Vec<Element<S>>,
}

impl<S: Scalar> RcdSystem<S> {
    pub fn new(matrix: DMatrix<S>, rhs: Vec<Element<S>>) -> Result<Self> {
        if rhs.len() != matrix.cols() {
            return Err(Error::ShapeMismatch("one right-hand side per coefficient column"));
        }
        Ok(Self { matrix, rhs })
    }

    pub fn unknowns(&self) -> usize {
        self.matrix.rows()
    }

    /// The `(n dim) x (m dim)` base-field matrix of the system.
    pub fn operator(&self, alg: &Algebra<S>) -> Result<Matrix<S>> {
        let d = alg.dim();
        let (m, n) = (self.matrix.rows(), self.matrix.cols());
        let mut big = Matrix::zeros(n * d, m * d);
        for i in 0..m {
            for j in 0..n {
                let r = alg.right_mult_matrix(self.matrix.get(i, j))?;
                for k in 0..d {
                    for l in 0..d {
                        big[(j * d + k, i * d + l)] = r[(k, l)].clone();
                    }
                }
            }
        }
        Ok(big)
    }

    pub fn evaluate(&self, alg: &Algebra<S>, x: &[Element<S>]) -> Result<Vec<Element<S>>> {
        if x.len() != self.unknowns() {
            return Err(Error::ShapeMismatch("one value per unknown"));
        }
        let row = DMatrix::new(1, x.len(), x.to_vec())?;
        Ok(crate::biring::rc_product(alg, &row, &self.matrix)?.entries().to_vec())
    }
}

/// Affine solution set `particular + span(kernel_basis)` over the base field.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult<T, S> {
    pub particular: T,
    pub kernel_basis: Vec<T>,
    field: AffineSolution<S>,
    tol: f64,
}

impl<T, S: Scalar> SolveResult<T, S> {
    pub fn kernel_dim(&self) -> usize {
        self.kernel_basis.len()
    }

    /// The same set as base-field coordinate vectors.
    pub fn field_solution(&self) -> &AffineSolution<S> {
        &self.field
    }
}

impl<S: Scalar> SolveResult<Element<S>, S> {
    pub fn contains(&self, x: &Element<S>) -> bool {
        self.field.contains(x.coords(), self.tol)
    }
}

impl<S: Scalar> SolveResult<Vec<Element<S>>, S> {
    pub fn contains(&self, x: &[Element<S>]) -> bool {
        let flat: Vec<S> = x.iter().flat_map(|e| e.coords().iter().cloned()).collect();
        self.field.contains(&flat, self.tol)
    }
}

pub fn solve_sandwich<S: Scalar>(alg: &Algebra<S>, eq: &SandwichEquation<S>) -> Result<SolveResult<Element<S>, S>> {
    alg.conform(&eq.rhs)?;
    for (a, b) in &eq.terms {
        alg.conform(a)?;
        alg.conform(b)?;
    }
    let op = eq.operator(alg)?;
    let field = op.solve(eq.rhs.coords(), alg.tol()).ok_or(Error::NoSolution)?;
    Ok(SolveResult {
        particular: Element::new(field.particular.clone()),
        kernel_basis: field.kernel.iter().cloned().map(Element::new).collect(),
        field,
        tol: alg.tol(),
    })
}

pub fn solve_rcd<S: Scalar>(alg: &Algebra<S>, sys: &RcdSystem<S>) -> Result<SolveResult<Vec<Element<S>>, S>> {
    for x in sys.rhs.iter().chain(sys.matrix.entries()) {
        alg.conform(x)?;
    }
    let rhs: Vec<S> = sys.rhs.iter().flat_map(|e| e.coords().iter().cloned()).collect();
    let field = sys.operator(alg)?.solve(&rhs, alg.tol()).ok_or(Error::NoSolution)?;
    let d = alg.dim();
    let unpack = |v: &[S]| v.chunks(d).map(|c| Element::new(c.to_vec())).collect::<Vec<_>>();
    Ok(SolveResult {
        particular: unpack(&field.particular),
        kernel_basis: field.kernel.iter().map(|v| unpack(v)).collect(),
        field,
        tol: alg.tol(),
    })
}
