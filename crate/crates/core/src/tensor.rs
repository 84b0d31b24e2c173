//! Tensors in `D (x) D` over the base field.
//!
//! A tensor given as a formal sum of pure tensors has many representations;
//! its standard components `t^{kr}` in `sum t^{kr} e_k (x) e_r` do not depend
//! on the representation, only on the basis.

use alloc::vec::Vec;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Formal sum `sum_s a_s (x) b_s`; the empty sum is the zero tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor2<S> {
    pub terms: Vec<(Element<S>, Element<S>)>,
}

impl<S: Scalar> Tensor2<S> {
    pub fn new(terms: Vec<(Element<S>, Element<S>)>) -> Self {
        Self { terms }
    }

    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn pure(a: Element<S>, b: Element<S>) -> Self {
        Self { terms: alloc::vec![(a, b)] }
    }

    /// `1 (x) 1`.
    pub fn unit(alg: &Algebra<S>) -> Self {
        Self::pure(alg.unit(), alg.unit())
    }

    pub fn push(&mut self, a: Element<S>, b: Element<S>) {
        self.terms.push((a, b));
    }

    /// Concatenation of the term lists, i.e. the tensor sum.
    pub fn concat(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { terms }
    }
}

/// Standard components `t^{kr}`, a dense `n x n` array.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorComponents<S>(Matrix<S>);

impl<S: Scalar> TensorComponents<S> {
    pub fn comps(&self) -> &Matrix<S> {
        &self.0
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.0.is_zero_tol(tol)
    }
}

/// `t^{kr} = sum_s a_s^k b_s^r`.
pub fn canonicalize<S: Scalar>(alg: &Algebra<S>, t: &Tensor2<S>) -> Result<TensorComponents<S>> {
    let n = alg.dim();
    let mut m: Matrix<S> = Matrix::zeros(n, n);
    for (a, b) in &t.terms {
        alg.conform(a)?;
        alg.conform(b)?;
        for (k, ak) in a.coords().iter().enumerate() {
            if ak.is_zero_tol(0.0) {
                continue;
            }
            for (r, br) in b.coords().iter().enumerate() {
                let v = m[(k, r)].clone() + ak.clone() * br.clone();
                m[(k, r)] = v;
            }
        }
    }
    Ok(TensorComponents(m))
}

pub fn is_zero<S: Scalar>(alg: &Algebra<S>, t: &Tensor2<S>) -> Result<bool> {
    Ok(canonicalize(alg, t)?.is_zero_tol(alg.tol()))
}

/// Componentwise product: `(a (x) b)(c (x) d) = (a c) (x) (b d)`, over all pairs
/// of terms.
pub fn tensor_mul<S: Scalar>(alg: &Algebra<S>, s: &Tensor2<S>, t: &Tensor2<S>) -> Result<Tensor2<S>> {
    let mut out = Tensor2::zero();
    for (a, b) in &s.terms {
        for (c, d) in &t.terms {
            out.push(alg.mul(a, c)?, alg.mul(b, d)?);
        }
    }
    Ok(out)
}

/// Expands canonical components back into pure basis tensors.
pub fn from_components<S: Scalar>(alg: &Algebra<S>, c: &TensorComponents<S>) -> Result<Tensor2<S>> {
    let n = alg.dim();
    if c.comps().rows() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: c.comps().rows(),
        });
    }
    let mut t = Tensor2::zero();
    for k in 0..n {
        for r in 0..n {
            let v = &c.comps()[(k, r)];
            if !v.is_zero_tol(0.0) {
                t.push(alg.basis(k).scale(v), alg.basis(r));
            }
        }
    }
    Ok(t)
}
