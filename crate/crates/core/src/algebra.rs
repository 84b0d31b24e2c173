//! Finite-dimensional algebras presented by structural constants.
//!
//! An algebra of dimension `n` over the base field is fixed by a basis
//! `e_0..e_{n-1}` and constants `C[i][j][k]` with `e_i e_j = sum_k C[i][j][k] e_k`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{FromScalar, Scalar, DEFAULT_FLOAT_TOL};

/// Coordinates of an algebra element relative to the algebra's basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Element<S> {
    coords: Vec<S>,
}

impl<S: Scalar> Element<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![S::zero(); dim])
    }

    /// The `index`-th basis vector.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coords[index] = S::one();
        e
    }

    pub fn from_i64s(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| S::from_i64(v)).collect())
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(self.coords.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.coords.iter().all(|c| c.is_zero_tol(tol))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim() == other.dim()
            && self.coords.iter().zip(&other.coords).all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn convert<T: Scalar + FromScalar<S>>(&self) -> Element<T> {
        Element::new(self.coords.iter().map(T::from_scalar).collect())
    }
}

impl<S: Scalar> Add for &Element<S> {
    type Output = Element<S>;

    /// Panics if the dimensions differ.
    fn add(self, rhs: Self) -> Element<S> {
        assert_eq!(self.dim(), rhs.dim(), "element dimensions differ");
        Element::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<S: Scalar> Add for Element<S> {
    type Output = Element<S>;

    fn add(self, rhs: Self) -> Element<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for &Element<S> {
    type Output = Element<S>;

    /// Panics if the dimensions differ.
    fn sub(self, rhs: Self) -> Element<S> {
        assert_eq!(self.dim(), rhs.dim(), "element dimensions differ");
        Element::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<S: Scalar> Sub for Element<S> {
    type Output = Element<S>;

    fn sub(self, rhs: Self) -> Element<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for &Element<S> {
    type Output = Element<S>;

    fn neg(self) -> Element<S> {
        Element::new(self.coords.iter().map(|c| -c.clone()).collect())
    }
}

impl<S: Scalar> Neg for Element<S> {
    type Output = Element<S>;

    fn neg(self) -> Element<S> {
        -&self
    }
}

/// First index quadruple `(i, j, k, l)` where `((e_i e_j) e_k)^l != (e_i (e_j e_k))^l`.
#[derive(Debug, Clone, PartialEq)]
pub struct AssociativityViolation<S> {
    pub indices: [usize; 4],
    /// Coordinate `l` of `(e_i e_j) e_k`.
    pub left: S,
    /// Coordinate `l` of `e_i (e_j e_k)`.
    pub right: S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The designated unit fails `u e_j = e_j` (side `Left`) or `e_j u = e_j`
/// (side `Right`) in coordinate `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitViolation {
    pub side: Side,
    pub j: usize,
    pub k: usize,
}

/// Algebra over a field presented by structural constants.
#[derive(Debug, Clone)]
pub struct Algebra<S> {
    dim: usize,
    labels: Vec<String>,
    constants: BTreeMap<(usize, usize, usize), S>,
    unit: usize,
    tol: f64,
}

impl<S: Scalar> Algebra<S> {
    /// Builds an algebra from `(i, j, k, C[i][j][k])` entries; absent entries
    /// are zero. Axioms are not checked here.
    pub fn new(
        dim: usize,
        constants: impl IntoIterator<Item = (usize, usize, usize, S)>,
        unit: usize,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::IndexOutOfRange { index: 0, dim });
        }
        if unit >= dim {
            return Err(Error::IndexOutOfRange { index: unit, dim });
        }
        let mut table = BTreeMap::new();
        for (i, j, k, c) in constants {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            if table.insert((i, j, k), c).is_some() {
                return Err(Error::DuplicateConstantEntry { i, j, k });
            }
        }
        table.retain(|_, c: &mut S| !c.is_zero_tol(0.0));
        let labels = (0..dim).map(|i| format!("e{i}")).collect();
        Ok(Self {
            dim,
            labels,
            constants: table,
            unit,
            tol: if S::EXACT { 0.0 } else { DEFAULT_FLOAT_TOL },
        })
    }

    /// The base field as a 1-dimensional algebra.
    pub fn base_field() -> Self {
        Self::new(1, [(0, 0, 0, S::one())], 0)
            .expect("valid table")
            .with_labels(["1"])
            .expect("one label")
    }

    /// Complex numbers as a 2-dimensional algebra with basis `1, i`.
    pub fn complex() -> Self {
        let one = S::one;
        Self::new(
            2,
            [(0, 0, 0, one()), (0, 1, 1, one()), (1, 0, 1, one()), (1, 1, 0, -one())],
            0,
        )
        .expect("valid table")
        .with_labels(["1", "i"])
        .expect("two labels")
    }

    pub fn with_labels<L: Into<String>>(mut self, labels: impl IntoIterator<Item = L>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Sets the absolute tolerance for float comparisons. Ignored by exact scalars.
    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// `C[i][j][k]`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> S {
        self.constants.get(&(i, j, k)).cloned().unwrap_or_else(S::zero)
    }

    /// Nonzero constants in lexicographic `(i, j, k)` order.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &S)> + '_ {
        self.constants.iter().map(|(&(i, j, k), c)| (i, j, k, c))
    }

    pub fn unit(&self) -> Element<S> {
        Element::basis(self.dim, self.unit)
    }

    pub fn basis(&self, index: usize) -> Element<S> {
        Element::basis(self.dim, index)
    }

    pub fn zero(&self) -> Element<S> {
        Element::zero(self.dim)
    }

    pub fn element(&self, coords: Vec<S>) -> Result<Element<S>> {
        self.conform_len(coords.len())?;
        Ok(Element::new(coords))
    }

    pub fn scalar(&self, s: S) -> Element<S> {
        self.unit().scale(&s)
    }

    pub fn conform(&self, x: &Element<S>) -> Result<()> {
        self.conform_len(x.dim())
    }

    fn conform_len(&self, found: usize) -> Result<()> {
        if found == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found,
            })
        }
    }

    pub fn elements_eq(&self, x: &Element<S>, y: &Element<S>) -> bool {
        x.approx_eq(y, self.tol)
    }

    pub fn is_zero(&self, x: &Element<S>) -> bool {
        x.is_zero_tol(self.tol)
    }

    /// `(x y)^k = sum_{i,j} x^i y^j C[i][j][k]`.
    pub fn mul(&self, x: &Element<S>, y: &Element<S>) -> Result<Element<S>> {
        self.conform(x)?;
        self.conform(y)?;
        let mut out = vec![S::zero(); self.dim];
        for (&(i, j, k), c) in &self.constants {
            let (xi, yj) = (&x.coords()[i], &y.coords()[j]);
            if xi.is_zero_tol(0.0) || yj.is_zero_tol(0.0) {
                continue;
            }
            out[k] = out[k].clone() + xi.clone() * yj.clone() * c.clone();
        }
        Ok(Element::new(out))
    }

    /// `x y z`, grouped as `(x y) z`.
    pub fn mul3(&self, x: &Element<S>, y: &Element<S>, z: &Element<S>) -> Result<Element<S>> {
        self.mul(&self.mul(x, y)?, z)
    }

    /// Coordinate `l` of `(e_i e_j) e_k - e_i (e_j e_k)` as a pair of sides.
    pub fn associator_entry(&self, i: usize, j: usize, k: usize, l: usize) -> (S, S) {
        let left = (0..self.dim).fold(S::zero(), |acc, p| {
            acc + self.constant(i, j, p) * self.constant(p, k, l)
        });
        let right = (0..self.dim).fold(S::zero(), |acc, p| {
            acc + self.constant(j, k, p) * self.constant(i, p, l)
        });
        (left, right)
    }

    /// Checks `sum_p C[i][j][p] C[p][k][l] = sum_p C[j][k][p] C[i][p][l]` for all
    /// quadruples in lexicographic order; reports the first failure.
    pub fn check_associativity(&self) -> core::result::Result<(), AssociativityViolation<S>> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let (left, right) = self.associator_entry(i, j, k, l);
                        if !left.approx_eq(&right, self.tol) {
                            return Err(AssociativityViolation {
                                indices: [i, j, k, l],
                                left,
                                right,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks `C[u][j][k] = C[j][u][k] = delta(j, k)` for the unit index `u`.
    pub fn check_unit(&self) -> core::result::Result<(), UnitViolation> {
        let u = self.unit;
        for j in 0..self.dim {
            for k in 0..self.dim {
                let delta = if j == k { S::one() } else { S::zero() };
                if !self.constant(u, j, k).approx_eq(&delta, self.tol) {
                    return Err(UnitViolation { side: Side::Left, j, k });
                }
                if !self.constant(j, u, k).approx_eq(&delta, self.tol) {
                    return Err(UnitViolation { side: Side::Right, j, k });
                }
            }
        }
        Ok(())
    }

    /// Matrix `L` with `coords(a x) = L coords(x)`: `L[k][j] = sum_i a^i C[i][j][k]`.
    pub fn left_mult_matrix(&self, a: &Element<S>) -> Result<Matrix<S>> {
        self.conform(a)?;
        let mut m: Matrix<S> = Matrix::zeros(self.dim, self.dim);
        for (&(i, j, k), c) in &self.constants {
            let v = m[(k, j)].clone() + a.coords()[i].clone() * c.clone();
            m[(k, j)] = v;
        }
        Ok(m)
    }

    /// Matrix `R` with `coords(x a) = R coords(x)`: `R[k][i] = sum_j a^j C[i][j][k]`.
    pub fn right_mult_matrix(&self, a: &Element<S>) -> Result<Matrix<S>> {
        self.conform(a)?;
        let mut m: Matrix<S> = Matrix::zeros(self.dim, self.dim);
        for (&(i, j, k), c) in &self.constants {
            let v = m[(k, i)].clone() + a.coords()[j].clone() * c.clone();
            m[(k, i)] = v;
        }
        Ok(m)
    }

    /// Re-presents the algebra in the basis `e'_j = sum_i T[i][j] e_i`.
    ///
    /// Old coordinates relate to new ones by `x = T x'`. The unit must be one
    /// of the new basis vectors.
    pub fn change_basis(&self, t: &Matrix<S>) -> Result<Self> {
        let n = self.dim;
        if t.rows() != n || t.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: if t.rows() != n { t.rows() } else { t.cols() },
            });
        }
        let t_inv = t.inverse(self.tol).ok_or(Error::SingularTransform)?;
        let unit = (0..n)
            .find(|&j| (0..n).all(|i| {
                let want = if i == self.unit { S::one() } else { S::zero() };
                t[(i, j)].approx_eq(&want, self.tol)
            }))
            .ok_or(Error::UnitNotInNewBasis)?;

        let mut constants = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let product = self.mul(&column(t, i), &column(t, j))?;
                let new_coords = t_inv.mul_vec(product.coords());
                for (k, c) in new_coords.into_iter().enumerate() {
                    if !c.is_zero_tol(0.0) {
                        constants.push((i, j, k, c));
                    }
                }
            }
        }
        let labels = self.labels.iter().map(|l| format!("{l}'"));
        Ok(Self::new(n, constants, unit)?
            .with_labels(labels)?
            .with_tolerance(self.tol))
    }

    /// Same table over another scalar backend.
    pub fn convert<T: Scalar + FromScalar<S>>(&self) -> Algebra<T> {
        Algebra {
            dim: self.dim,
            labels: self.labels.clone(),
            constants: self
                .constants
                .iter()
                .map(|(&key, c)| (key, T::from_scalar(c)))
                .collect(),
            unit: self.unit,
            tol: if T::EXACT { 0.0 } else { DEFAULT_FLOAT_TOL },
        }
    }

    /// `true` when both algebras have the same dimension, unit and constants.
    pub fn same_table(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.unit == other.unit
            && (0..self.dim).all(|i| {
                (0..self.dim).all(|j| {
                    (0..self.dim).all(|k| self.constant(i, j, k).approx_eq(&other.constant(i, j, k), self.tol))
                })
            })
    }
}

fn column<S: Scalar>(t: &Matrix<S>, j: usize) -> Element<S> {
    Element::new((0..t.rows()).map(|i| t[(i, j)].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::hamilton;
    use crate::scalar::Rational;

    type Q = Rational;

    fn e(values: &[i64]) -> Element<Q> {
        Element::from_i64s(values)
    }

    fn int_matrix(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Q::from_i64(v)).collect()).collect())
    }

    #[test]
    fn complex_presentation() {
        let c = Algebra::<Q>::complex();
        assert_eq!(c.mul(&e(&[0, 1]), &e(&[0, 1])).unwrap(), e(&[-1, 0]));
        assert!(c.check_associativity().is_ok());
        assert!(c.check_unit().is_ok());
    }

    #[test]
    fn base_field_is_trivial() {
        let f = Algebra::<Q>::base_field();
        assert_eq!(f.mul(&e(&[3]), &e(&[-2])).unwrap(), e(&[-6]));
        assert!(f.check_associativity().is_ok());
        assert!(f.check_unit().is_ok());
        assert_eq!(f.left_mult_matrix(&f.unit()).unwrap(), Matrix::identity(1));
    }

    #[test]
    fn construction_errors() {
        let one = Q::from_i64(1);
        assert_eq!(
            Algebra::new(2, [(0, 2, 0, one.clone())], 0).unwrap_err(),
            Error::IndexOutOfRange { index: 2, dim: 2 }
        );
        assert_eq!(
            Algebra::<Q>::new(2, [], 2).unwrap_err(),
            Error::IndexOutOfRange { index: 2, dim: 2 }
        );
        assert_eq!(
            Algebra::new(2, [(0, 0, 0, one.clone()), (0, 0, 0, one)], 0).unwrap_err(),
            Error::DuplicateConstantEntry { i: 0, j: 0, k: 0 }
        );
    }

    #[test]
    fn multiply_rejects_wrong_dimension() {
        let h = hamilton::<Q>();
        assert_eq!(
            h.mul(&e(&[1, 0]), &h.unit()).unwrap_err(),
            Error::DimensionMismatch { expected: 4, found: 2 }
        );
    }

    #[test]
    fn unit_multiplies_trivially() {
        let h = hamilton::<Q>();
        let x = e(&[3, -1, 4, 2]);
        assert_eq!(h.mul(&h.unit(), &x).unwrap(), x);
        assert_eq!(h.mul(&x, &h.unit()).unwrap(), x);
    }

    #[test]
    fn hamilton_product_expansion() {
        let h = hamilton::<Q>();
        // (1+i)(1+j) = 1 + j + i + ij = 1 + i + j + k
        assert_eq!(h.mul(&e(&[1, 1, 0, 0]), &e(&[1, 0, 1, 0])).unwrap(), e(&[1, 1, 1, 1]));
    }

    /// Brute-force associativity on basis triples via full multiplication,
    /// independent of the constant-level identity.
    fn first_violation_by_products(alg: &Algebra<Q>) -> Option<[usize; 4]> {
        let n = alg.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (a, b, c) = (alg.basis(i), alg.basis(j), alg.basis(k));
                    let lhs = alg.mul(&alg.mul(&a, &b).unwrap(), &c).unwrap();
                    let rhs = alg.mul(&a, &alg.mul(&b, &c).unwrap()).unwrap();
                    if let Some(l) = (0..n).find(|&l| lhs.coords()[l] != rhs.coords()[l]) {
                        return Some([i, j, k, l]);
                    }
                }
            }
        }
        None
    }

    fn tampered_hamilton() -> Algebra<Q> {
        let h = hamilton::<Q>();
        let entries = h.constants().map(|(i, j, k, c)| {
            let c = if (i, j, k) == (1, 2, 3) { -c.clone() } else { c.clone() };
            (i, j, k, c)
        });
        Algebra::new(4, entries.collect::<Vec<_>>(), 0).unwrap()
    }

    #[test]
    fn tampered_table_is_not_associative() {
        let bad = tampered_hamilton();
        let violation = bad.check_associativity().unwrap_err();
        assert_eq!(Some(violation.indices), first_violation_by_products(&bad));
        assert_eq!(violation.indices, [1, 1, 2, 2]);
        assert_eq!((violation.left, violation.right), (Q::from_i64(-1), Q::from_i64(1)));
        // (ij)k = 1 but i(jk) = -1 once ij = -k
        let (left, right) = bad.associator_entry(1, 2, 3, 0);
        assert_eq!((left, right), (Q::from_i64(1), Q::from_i64(-1)));
        assert!(bad.check_unit().is_ok());
    }

    #[test]
    fn unit_check_detects_wrong_index() {
        let h = hamilton::<Q>();
        let moved = Algebra::new(4, h.constants().map(|(i, j, k, c)| (i, j, k, c.clone())).collect::<Vec<_>>(), 1)
            .unwrap();
        let err = moved.check_unit().unwrap_err();
        assert_eq!(err, UnitViolation { side: Side::Left, j: 0, k: 0 });
    }

    #[test]
    fn left_and_right_matrices_of_i() {
        let h = hamilton::<Q>();
        let i = h.basis(1);
        let l = int_matrix(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        let r = int_matrix(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
        assert_eq!(h.left_mult_matrix(&i).unwrap(), l);
        assert_eq!(h.right_mult_matrix(&i).unwrap(), r);
        assert_eq!(h.left_mult_matrix(&h.unit()).unwrap(), Matrix::identity(4));
        assert_eq!(h.right_mult_matrix(&h.unit()).unwrap(), Matrix::identity(4));
    }

    #[test]
    fn multiplication_matrices_respect_products() {
        let h = hamilton::<Q>();
        let (a, b) = (h.basis(1), h.basis(2));
        let ab = h.mul(&a, &b).unwrap();
        let la = h.left_mult_matrix(&a).unwrap();
        let lb = h.left_mult_matrix(&b).unwrap();
        assert_eq!(h.left_mult_matrix(&ab).unwrap(), la.mul(&lb));
        let ra = h.right_mult_matrix(&a).unwrap();
        let rb = h.right_mult_matrix(&b).unwrap();
        assert_eq!(h.right_mult_matrix(&ab).unwrap(), rb.mul(&ra));
    }

    #[test]
    fn scaling_a_basis_vector() {
        let c = Algebra::<Q>::complex();
        let t = int_matrix(&[&[1, 0], &[0, 2]]);
        let c2 = c.change_basis(&t).unwrap();
        assert_eq!(c2.constant(1, 1, 0), Q::from_i64(-4));
        assert_eq!(c2.constant(0, 1, 1), Q::from_i64(1));
        assert_eq!(c2.unit_index(), 0);
        assert!(c2.check_associativity().is_ok());
        assert!(c2.check_unit().is_ok());
    }

    #[test]
    fn identity_basis_change_keeps_table() {
        let h = hamilton::<Q>();
        let same = h.change_basis(&Matrix::identity(4)).unwrap();
        assert!(same.same_table(&h));
    }

    #[test]
    fn basis_change_errors() {
        let c = Algebra::<Q>::complex();
        assert_eq!(c.change_basis(&int_matrix(&[&[1, 2], &[2, 4]])).unwrap_err(), Error::SingularTransform);
        assert_eq!(c.change_basis(&int_matrix(&[&[1, 1], &[1, -1]])).unwrap_err(), Error::UnitNotInNewBasis);
        // unit moves to index 1
        let swapped = c.change_basis(&int_matrix(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(swapped.unit_index(), 1);
        assert!(swapped.check_unit().is_ok());
    }
}
