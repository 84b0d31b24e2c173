//! Base-field-linear endomorphisms of an algebra in two representations.
//!
//! * [`LinearMapMatrix`]: entry `(i, j)` is `f_i^j`, so `y^j = sum_i x^i f_i^j`.
//!   Rows index the input coordinate, columns the output coordinate.
//! * [`StandardComponents`]: entry `(k, r)` is `f^{kr}`, so
//!   `f(x) = sum_{k,r} f^{kr} e_k x e_r`.
//!
//! The two are related by `f_i^j = sum_{k,r,p} f^{kr} C[k][i][p] C[p][r][j]`.
//! Over a central simple algebra such as the quaternions this relation is a
//! bijection; over a commutative algebra only the maps that commute with the
//! algebra's own multiplication are representable, and standard components
//! are no longer unique.

use alloc::vec::Vec;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Coordinate matrix `f_i^j` of a linear map.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMapMatrix<S>(Matrix<S>);

impl<S: Scalar> LinearMapMatrix<S> {
    /// Panics unless `entries` is square.
    pub fn new(entries: Matrix<S>) -> Self {
        assert!(entries.is_square(), "linear map matrix must be square");
        Self(entries)
    }

    pub fn identity(n: usize) -> Self {
        Self(Matrix::identity(n))
    }

    /// From a matrix acting on column vectors, `coords(f(x)) = A coords(x)`.
    pub fn from_operator(a: &Matrix<S>) -> Self {
        Self::new(a.transpose())
    }

    /// The matrix acting on column vectors.
    pub fn to_operator(&self) -> Matrix<S> {
        self.0.transpose()
    }

    pub fn entries(&self) -> &Matrix<S> {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.0.approx_eq(&other.0, tol)
    }
}

/// Standard components `f^{kr}` of a linear map.
#[derive(Debug, Clone, PartialEq)]
pub struct StandardComponents<S>(Matrix<S>);

impl<S: Scalar> StandardComponents<S> {
    /// Panics unless `comps` is square.
    pub fn new(comps: Matrix<S>) -> Self {
        assert!(comps.is_square(), "standard components must be square");
        Self(comps)
    }

    pub fn zero(n: usize) -> Self {
        Self(Matrix::zeros(n, n))
    }

    /// Components of the identity map relative to `alg`'s unit.
    pub fn identity(alg: &Algebra<S>) -> Self {
        let mut m = Matrix::zeros(alg.dim(), alg.dim());
        m[(alg.unit_index(), alg.unit_index())] = S::one();
        Self(m)
    }

    pub fn comps(&self) -> &Matrix<S> {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.0.approx_eq(&other.0, tol)
    }

    fn to_vec(&self) -> Vec<S> {
        self.0.as_slice().to_vec()
    }

    fn from_vec(n: usize, v: &[S]) -> Self {
        Self(Matrix::from_fn(n, n, |k, r| v[k * n + r].clone()))
    }
}

/// Standard components of a map: one particular representative plus a basis
/// of the components that represent the zero map.
#[derive(Debug, Clone, PartialEq)]
pub struct ConversionSolution<S> {
    pub particular: StandardComponents<S>,
    pub kernel_basis: Vec<StandardComponents<S>>,
}

impl<S: Scalar> ConversionSolution<S> {
    pub fn is_unique(&self) -> bool {
        self.kernel_basis.is_empty()
    }
}

fn conform_map<S: Scalar>(alg: &Algebra<S>, n: usize) -> Result<()> {
    if n == alg.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: n,
        })
    }
}

/// `y^j = sum_i x^i f_i^j`.
pub fn apply_coords<S: Scalar>(alg: &Algebra<S>, m: &LinearMapMatrix<S>, x: &Element<S>) -> Result<Element<S>> {
    conform_map(alg, m.dim())?;
    alg.conform(x)?;
    Ok(Element::new(m.to_operator().mul_vec(x.coords())))
}

/// `sum_{k,r} f^{kr} e_k x e_r`.
pub fn apply_standard<S: Scalar>(alg: &Algebra<S>, s: &StandardComponents<S>, x: &Element<S>) -> Result<Element<S>> {
    conform_map(alg, s.dim())?;
    alg.conform(x)?;
    let n = alg.dim();
    let mut out = alg.zero();
    for k in 0..n {
        let left = alg.mul(&alg.basis(k), x)?;
        for r in 0..n {
            let f = &s.comps()[(k, r)];
            if f.is_zero_tol(0.0) {
                continue;
            }
            let term = alg.mul(&left, &alg.basis(r))?;
            out = &out + &term.scale(f);
        }
    }
    Ok(out)
}

/// The `n^2 x n^2` matrix with `vec(f_i^j) = M vec(f^{kr})`, rows indexed by
/// `(i, j)` and columns by `(k, r)`, both lexicographic:
/// `M[(i,j),(k,r)] = sum_p C[k][i][p] C[p][r][j]`.
pub fn conversion_matrix<S: Scalar>(alg: &Algebra<S>) -> Matrix<S> {
    let n = alg.dim();
    let mut m: Matrix<S> = Matrix::zeros(n * n, n * n);
    for (k, i, p, c1) in alg.constants() {
        for r in 0..n {
            for j in 0..n {
                let c2 = alg.constant(p, r, j);
                if c2.is_zero_tol(0.0) {
                    continue;
                }
                let (row, col) = (i * n + j, k * n + r);
                let v = m[(row, col)].clone() + c1.clone() * c2;
                m[(row, col)] = v;
            }
        }
    }
    m
}

pub fn standard_to_coords<S: Scalar>(alg: &Algebra<S>, s: &StandardComponents<S>) -> Result<LinearMapMatrix<S>> {
    conform_map(alg, s.dim())?;
    let n = alg.dim();
    let v = conversion_matrix(alg).mul_vec(&s.to_vec());
    Ok(LinearMapMatrix::new(Matrix::from_fn(n, n, |i, j| v[i * n + j].clone())))
}

/// Solves for standard components of `m`.
///
/// The particular solution is the reduced-echelon one: every free `(k, r)`
/// position (in lexicographic order) is zero. Fails with
/// [`Error::NoSolution`] when `m` has no standard representation.
pub fn coords_to_standard<S: Scalar>(alg: &Algebra<S>, m: &LinearMapMatrix<S>) -> Result<ConversionSolution<S>> {
    conform_map(alg, m.dim())?;
    let n = alg.dim();
    let rhs = m.entries().as_slice().to_vec();
    let sol = conversion_matrix(alg)
        .solve(&rhs, alg.tol())
        .ok_or(Error::NoSolution)?;
    Ok(ConversionSolution {
        particular: StandardComponents::from_vec(n, &sol.particular),
        kernel_basis: sol.kernel.iter().map(|v| StandardComponents::from_vec(n, v)).collect(),
    })
}

/// Components of `g o f`, via the product of the coordinate matrices.
pub fn compose<S: Scalar>(
    alg: &Algebra<S>,
    g: &StandardComponents<S>,
    f: &StandardComponents<S>,
) -> Result<StandardComponents<S>> {
    let gm = standard_to_coords(alg, g)?;
    let fm = standard_to_coords(alg, f)?;
    // rows are inputs, so applying f first means F * G
    let h = LinearMapMatrix::new(fm.entries().mul(gm.entries()));
    Ok(coords_to_standard(alg, &h)?.particular)
}

/// `f(x e_k) = f(x) e_k` for every basis element: the operator commutes with
/// every right multiplication.
pub fn is_left_linear<S: Scalar>(alg: &Algebra<S>, m: &LinearMapMatrix<S>) -> Result<bool> {
    commutes_with(alg, m, |a| alg.right_mult_matrix(a))
}

/// `f(e_k x) = e_k f(x)` for every basis element: the operator commutes with
/// every left multiplication.
pub fn is_right_linear<S: Scalar>(alg: &Algebra<S>, m: &LinearMapMatrix<S>) -> Result<bool> {
    commutes_with(alg, m, |a| alg.left_mult_matrix(a))
}

fn commutes_with<S: Scalar>(
    alg: &Algebra<S>,
    m: &LinearMapMatrix<S>,
    mult: impl Fn(&Element<S>) -> Result<Matrix<S>>,
) -> Result<bool> {
    conform_map(alg, m.dim())?;
    let op = m.to_operator();
    for k in 0..alg.dim() {
        let e = mult(&alg.basis(k))?;
        if !op.mul(&e).approx_eq(&e.mul(&op), alg.tol()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::{conjugate, hamilton};
    use crate::scalar::Rational;

    type Q = Rational;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    fn half(v: i64) -> Q {
        q(v) / q(2)
    }

    fn e(values: &[i64]) -> Element<Q> {
        Element::from_i64s(values)
    }

    fn int_matrix(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect())
    }

    fn diag(values: &[i64]) -> LinearMapMatrix<Q> {
        LinearMapMatrix::new(Matrix::diagonal(&values.iter().map(|&v| q(v)).collect::<Vec<_>>()))
    }

    fn conj_components() -> StandardComponents<Q> {
        StandardComponents::new(Matrix::diagonal(&[half(-1), half(-1), half(-1), half(-1)]))
    }

    fn single(n: usize, k: usize, r: usize) -> StandardComponents<Q> {
        let mut m = Matrix::zeros(n, n);
        m[(k, r)] = q(1);
        StandardComponents::new(m)
    }

    #[test]
    fn apply_coordinate_matrices() {
        let h = hamilton::<Q>();
        let x = e(&[1, 2, 3, 4]);
        assert_eq!(apply_coords(&h, &LinearMapMatrix::identity(4), &x).unwrap(), x);
        assert_eq!(apply_coords(&h, &diag(&[1, -1, -1, -1]), &x).unwrap(), e(&[1, -2, -3, -4]));
        let c = Algebra::<Q>::complex();
        assert_eq!(apply_coords(&c, &diag(&[1, -1]), &e(&[5, 7])).unwrap(), e(&[5, -7]));
        assert_eq!(
            apply_coords(&c, &diag(&[1, -1, 1]), &e(&[5, 7])).unwrap_err(),
            Error::DimensionMismatch { expected: 2, found: 3 }
        );
    }

    #[test]
    fn apply_standard_components() {
        let h = hamilton::<Q>();
        let x = e(&[2, -1, 0, 3]);
        assert_eq!(apply_standard(&h, &StandardComponents::identity(&h), &x).unwrap(), x);
        assert_eq!(apply_standard(&h, &conj_components(), &h.basis(1)).unwrap(), e(&[0, -1, 0, 0]));
        assert_eq!(apply_standard(&h, &conj_components(), &e(&[1, 1, 1, 1])).unwrap(), e(&[1, -1, -1, -1]));
    }

    #[test]
    fn conversion_matrix_ranks() {
        assert_eq!(conversion_matrix(&hamilton::<Q>()).rank(0.0), 16);
        assert_eq!(conversion_matrix(&Algebra::<Q>::complex()).rank(0.0), 2);
        assert_eq!(conversion_matrix(&Algebra::<Q>::base_field()), Matrix::identity(1));
    }

    #[test]
    fn standard_to_coordinate_matrices() {
        let h = hamilton::<Q>();
        assert_eq!(standard_to_coords(&h, &StandardComponents::identity(&h)).unwrap(), LinearMapMatrix::identity(4));
        assert_eq!(standard_to_coords(&h, &conj_components()).unwrap(), diag(&[1, -1, -1, -1]));
        let c = Algebra::<Q>::complex();
        // x -> x i
        let m = standard_to_coords(&c, &single(2, 0, 1)).unwrap();
        assert_eq!(m.entries(), &int_matrix(&[&[0, 1], &[-1, 0]]));
    }

    #[test]
    fn quaternion_conjugation_components() {
        let h = hamilton::<Q>();
        let sol = coords_to_standard(&h, &diag(&[1, -1, -1, -1])).unwrap();
        assert_eq!(sol.particular, conj_components());
        assert!(sol.is_unique());
        let id = coords_to_standard(&h, &LinearMapMatrix::identity(4)).unwrap();
        assert_eq!(id.particular, StandardComponents::identity(&h));
        assert!(id.is_unique());
    }

    #[test]
    fn complex_conjugation_has_no_standard_form() {
        let c = Algebra::<Q>::complex();
        assert_eq!(coords_to_standard(&c, &diag(&[1, -1])).unwrap_err(), Error::NoSolution);
    }

    #[test]
    fn complex_zero_map_components() {
        let c = Algebra::<Q>::complex();
        let sol = coords_to_standard(&c, &LinearMapMatrix::new(Matrix::zeros(2, 2))).unwrap();
        assert_eq!(sol.kernel_basis.len(), 2);
        for z in &sol.kernel_basis {
            let m = z.comps();
            assert_eq!(m[(0, 0)], m[(1, 1)]);
            assert_eq!(m[(0, 1)], -m[(1, 0)].clone());
            for b in 0..2 {
                assert!(c.is_zero(&apply_standard(&c, z, &c.basis(b)).unwrap()));
            }
        }
    }

    #[test]
    fn composition() {
        let h = hamilton::<Q>();
        let id = StandardComponents::identity(&h);
        assert_eq!(compose(&h, &conj_components(), &conj_components()).unwrap(), id);
        let c = Algebra::<Q>::complex();
        let times_i = single(2, 0, 1);
        let sq = compose(&c, &times_i, &times_i).unwrap();
        let minus_one = LinearMapMatrix::new(Matrix::diagonal(&[q(-1), q(-1)]));
        assert_eq!(standard_to_coords(&c, &sq).unwrap(), minus_one);
        // canonical representative puts everything on the first pivot
        assert_eq!(sq.comps(), &int_matrix(&[&[-1, 0], &[0, 0]]));
    }

    #[test]
    fn composition_order_matters_over_quaternions() {
        let h = hamilton::<Q>();
        // f(x) = i x, g(x) = x j
        let f = single(4, 1, 0);
        let g = single(4, 0, 2);
        let gf = compose(&h, &g, &f).unwrap();
        for b in 0..4 {
            let x = h.basis(b);
            let want = apply_standard(&h, &g, &apply_standard(&h, &f, &x).unwrap()).unwrap();
            assert_eq!(apply_standard(&h, &gf, &x).unwrap(), want);
        }
        // f(x) = i x, g(x) = conj(x): g o f != f o g
        let conj = conj_components();
        let a = compose(&h, &conj, &f).unwrap();
        let b = compose(&h, &f, &conj).unwrap();
        assert_ne!(a, b);
        let x = e(&[1, 2, 3, 4]);
        let want = conjugate(&h, &h.mul(&h.basis(1), &x).unwrap()).unwrap();
        assert_eq!(apply_standard(&h, &a, &x).unwrap(), want);
    }

    #[test]
    fn cauchy_riemann() {
        let c = Algebra::<Q>::complex();
        let m = LinearMapMatrix::new(int_matrix(&[&[3, -5], &[5, 3]]));
        assert!(is_right_linear(&c, &m).unwrap());
        assert!(is_left_linear(&c, &m).unwrap());
        assert!(!is_right_linear(&c, &diag(&[1, -1])).unwrap());
        assert!(is_right_linear(&c, &LinearMapMatrix::identity(2)).unwrap());
    }

    #[test]
    fn sidedness_over_quaternions() {
        let h = hamilton::<Q>();
        // x -> i x commutes with right multiplications only
        let lm = LinearMapMatrix::from_operator(&h.left_mult_matrix(&h.basis(1)).unwrap());
        assert!(is_left_linear(&h, &lm).unwrap());
        assert!(!is_right_linear(&h, &lm).unwrap());
        let rm = LinearMapMatrix::from_operator(&h.right_mult_matrix(&h.basis(1)).unwrap());
        assert!(is_right_linear(&h, &rm).unwrap());
        assert!(!is_left_linear(&h, &rm).unwrap());
        assert!(!is_left_linear(&h, &diag(&[1, -1, -1, -1])).unwrap());
    }

    #[test]
    fn operator_form_roundtrip() {
        let h = hamilton::<Q>();
        let a = e(&[1, 2, 0, -1]);
        let op = h.left_mult_matrix(&a).unwrap();
        let m = LinearMapMatrix::from_operator(&op);
        let x = e(&[3, 1, 4, 1]);
        assert_eq!(apply_coords(&h, &m, &x).unwrap(), h.mul(&a, &x).unwrap());
        assert_eq!(m.to_operator(), op);
        assert_eq!(m.dim(), 4);
    }
}
