//! Generalized quaternion algebras `E(F, a, b)` and Hamilton's quaternions.
//!
//! Basis `1, i, j, k` with `i^2 = a`, `j^2 = b`, `k = ij = -ji`. The remaining
//! products follow from associativity:
//!
//! | .   | i     | j     | k      |
//! |-----|-------|-------|--------|
//! | i   | a     | k     | a j    |
//! | j   | -k    | b     | -b i   |
//! | k   | -a j  | b i   | -a b   |

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Parameters `(a, b)` of `E(F, a, b)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuaternionParams<S> {
    pub a: S,
    pub b: S,
}

impl<S: Scalar> QuaternionParams<S> {
    pub fn new(a: S, b: S) -> Self {
        Self { a, b }
    }

    pub fn hamilton() -> Self {
        Self::new(-S::one(), -S::one())
    }

    /// Division algebra over an ordered base field iff `a < 0` and `b < 0`.
    pub fn is_division(&self) -> bool {
        self.a.is_negative() && self.b.is_negative()
    }
}

/// Pure-imaginary vector `x i + y j + z k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector3<S> {
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> Vector3<S> {
    pub fn new(x: S, y: S, z: S) -> Self {
        Self { x, y, z }
    }

    pub fn norm_sq(&self) -> S {
        self.x.clone() * self.x.clone() + self.y.clone() * self.y.clone() + self.z.clone() * self.z.clone()
    }

    pub fn to_element(&self) -> Element<S> {
        Element::new(alloc::vec![S::zero(), self.x.clone(), self.y.clone(), self.z.clone()])
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.x.approx_eq(&other.x, tol) && self.y.approx_eq(&other.y, tol) && self.z.approx_eq(&other.z, tol)
    }
}

/// Builds `E(F, a, b)` with unit `e_0 = 1`. Fails when `a b = 0`.
pub fn e_algebra<S: Scalar>(params: &QuaternionParams<S>) -> Result<Algebra<S>> {
    let (a, b) = (params.a.clone(), params.b.clone());
    if (a.clone() * b.clone()).is_zero_tol(0.0) {
        return Err(Error::DegenerateParams);
    }
    let one = S::one();
    let mut entries = alloc::vec::Vec::with_capacity(16);
    entries.push((0, 0, 0, one.clone()));
    for x in 1..4 {
        entries.push((0, x, x, one.clone()));
        entries.push((x, 0, x, one.clone()));
    }
    entries.extend([
        (1, 1, 0, a.clone()),
        (2, 2, 0, b.clone()),
        (3, 3, 0, -(a.clone() * b.clone())),
        (1, 2, 3, one.clone()),
        (2, 1, 3, -one),
        (1, 3, 2, a.clone()),
        (3, 1, 2, -a),
        (2, 3, 1, -b.clone()),
        (3, 2, 1, b),
    ]);
    Algebra::new(4, entries, 0)?.with_labels(["1", "i", "j", "k"])
}

/// Hamilton's quaternions `E(F, -1, -1)`.
pub fn hamilton<S: Scalar>() -> Algebra<S> {
    e_algebra(&QuaternionParams::hamilton()).expect("-1 * -1 is nonzero")
}

fn require_conjugation_shape<S: Scalar>(alg: &Algebra<S>) -> Result<()> {
    if matches!(alg.dim(), 1 | 2 | 4) && alg.unit_index() == 0 {
        Ok(())
    } else {
        Err(Error::WrongAlgebra("an algebra of dimension 1, 2 or 4 with unit e0"))
    }
}

fn require_hamilton<S: Scalar>(alg: &Algebra<S>) -> Result<()> {
    if alg.dim() == 4 && alg.same_table(&hamilton()) {
        Ok(())
    } else {
        Err(Error::WrongAlgebra("Hamilton's quaternions"))
    }
}

/// `x^0 - x^1 i - x^2 j - x^3 k`, and likewise `x^0 - x^1 i` over complex
/// numbers and `x^0` over the base field.
pub fn conjugate<S: Scalar>(alg: &Algebra<S>, x: &Element<S>) -> Result<Element<S>> {
    require_conjugation_shape(alg)?;
    alg.conform(x)?;
    let c = x.coords();
    Ok(Element::new(
        c.iter().enumerate().map(|(n, v)| if n == 0 { v.clone() } else { -v.clone() }).collect(),
    ))
}

/// Real part of `x conj(x)`; errors if the product is not real.
pub fn norm_sq<S: Scalar>(alg: &Algebra<S>, x: &Element<S>) -> Result<S> {
    let product = alg.mul(x, &conjugate(alg, x)?)?;
    real_part(alg, &product)
}

pub(crate) fn real_part<S: Scalar>(alg: &Algebra<S>, x: &Element<S>) -> Result<S> {
    let c = x.coords();
    if c[1..].iter().any(|v| !v.is_zero_tol(alg.tol())) {
        return Err(Error::NonRealProduct);
    }
    Ok(c[0].clone())
}

/// `conj(x) / |x|^2`.
pub fn inverse<S: Scalar>(alg: &Algebra<S>, x: &Element<S>) -> Result<Element<S>> {
    let n = norm_sq(alg, x)?;
    let inv = n.recip(alg.tol()).ok_or(Error::NotInvertible)?;
    Ok(conjugate(alg, x)?.scale(&inv))
}

/// Imaginary part of `q v q^-1`: rotation of `v` about the axis of `q` by
/// twice the angle of `q`. The norm of `q` does not matter.
pub fn rotate<S: Scalar>(alg: &Algebra<S>, q: &Element<S>, v: &Vector3<S>) -> Result<Vector3<S>> {
    require_hamilton(alg)?;
    let q_inv = inverse(alg, q)?;
    let rotated = alg.mul3(q, &v.to_element(), &q_inv)?;
    let c = rotated.coords();
    Ok(Vector3::new(c[1].clone(), c[2].clone(), c[3].clone()))
}

/// Jacobian of `x -> a x` over Hamilton's quaternions.
pub fn left_jacobian<S: Scalar>(alg: &Algebra<S>, a: &Element<S>) -> Result<Matrix<S>> {
    require_hamilton(alg)?;
    alg.left_mult_matrix(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use alloc::vec;

    type Q = Rational;

    fn e(values: &[i64]) -> Element<Q> {
        Element::from_i64s(values)
    }

    fn frac(p: i64, d: i64) -> Q {
        Q::from_i64(p) / Q::from_i64(d)
    }

    #[test]
    fn hamilton_table() {
        let h = hamilton::<Q>();
        let (one, i, j, k) = (h.basis(0), h.basis(1), h.basis(2), h.basis(3));
        let m = |x: &Element<Q>, y: &Element<Q>| h.mul(x, y).unwrap();
        assert_eq!(m(&i, &j), k);
        assert_eq!(m(&j, &k), i);
        assert_eq!(m(&k, &i), j);
        assert_eq!(m(&j, &i), -&k);
        assert_eq!(m(&k, &j), -&i);
        assert_eq!(m(&i, &k), -&j);
        for x in [&i, &j, &k] {
            assert_eq!(m(x, x), -&one);
        }
    }

    #[test]
    fn split_quaternions_have_zero_divisors() {
        let params = QuaternionParams::new(Q::from_i64(1), Q::from_i64(1));
        assert!(!params.is_division());
        let alg = e_algebra(&params).unwrap();
        let p = alg.mul(&e(&[1, 1, 0, 0]), &e(&[1, -1, 0, 0])).unwrap();
        assert!(alg.is_zero(&p));
        assert_eq!(inverse(&alg, &e(&[1, 1, 0, 0])).unwrap_err(), Error::NotInvertible);
    }

    #[test]
    fn degenerate_params_rejected() {
        let params = QuaternionParams::new(Q::from_i64(0), Q::from_i64(3));
        assert_eq!(e_algebra(&params).unwrap_err(), Error::DegenerateParams);
    }

    #[test]
    fn e_algebras_are_associative_with_unit() {
        for (a, b) in [(-1, -1), (1, 1), (2, -3), (-5, 7)] {
            let alg = e_algebra(&QuaternionParams::new(Q::from_i64(a), Q::from_i64(b))).unwrap();
            assert!(alg.check_associativity().is_ok(), "E({a},{b})");
            assert!(alg.check_unit().is_ok());
        }
        assert!(QuaternionParams::<Q>::hamilton().is_division());
    }

    #[test]
    fn norm_form_of_e_algebra() {
        // x conj(x) = x0^2 - a x1^2 - b x2^2 + ab x3^2
        let alg = e_algebra(&QuaternionParams::new(Q::from_i64(2), Q::from_i64(-3))).unwrap();
        let x = e(&[1, 2, 3, 4]);
        assert_eq!(norm_sq(&alg, &x).unwrap(), Q::from_i64(1 - 8 + 27 - 96));
    }

    #[test]
    fn conjugation() {
        let h = hamilton::<Q>();
        assert_eq!(conjugate(&h, &e(&[1, 2, 3, 4])).unwrap(), e(&[1, -2, -3, -4]));
        assert_eq!(conjugate(&h, &e(&[5, 0, 0, 0])).unwrap(), e(&[5, 0, 0, 0]));
        let c = Algebra::<Q>::complex();
        assert_eq!(conjugate(&c, &e(&[1, 1])).unwrap(), e(&[1, -1]));
        assert_eq!(norm_sq(&c, &e(&[3, 4])).unwrap(), Q::from_i64(25));
        let three = Algebra::<Q>::new(3, [(0, 0, 0, Q::from_i64(1))], 0).unwrap();
        assert!(matches!(conjugate(&three, &three.unit()), Err(Error::WrongAlgebra(_))));
    }

    #[test]
    fn norms() {
        let h = hamilton::<Q>();
        assert_eq!(norm_sq(&h, &e(&[1, 1, 1, 1])).unwrap(), Q::from_i64(4));
        assert_eq!(norm_sq(&h, &h.zero()).unwrap(), Q::from_i64(0));
        let (x, y) = (e(&[1, 1, 0, 0]), e(&[0, 0, 1, 1]));
        // (1+i)(j+k) = 2k
        let xy = h.mul(&x, &y).unwrap();
        assert_eq!(xy, e(&[0, 0, 0, 2]));
        assert_eq!(norm_sq(&h, &xy).unwrap(), Q::from_i64(4));
        assert_eq!(norm_sq(&h, &x).unwrap() * norm_sq(&h, &y).unwrap(), Q::from_i64(4));
    }

    #[test]
    fn broken_table_is_caught_by_norm() {
        // j^2 = +1 but norm computed with the standard conjugation and i*j flipped
        let h = hamilton::<Q>();
        let entries: vec::Vec<_> = h
            .constants()
            .map(|(i, j, k, c)| (i, j, k, if (i, j) == (2, 1) { -c.clone() } else { c.clone() }))
            .collect();
        let broken = Algebra::new(4, entries, 0).unwrap();
        assert_eq!(norm_sq(&broken, &e(&[0, 1, 1, 0])).unwrap_err(), Error::NonRealProduct);
    }

    #[test]
    fn inverses() {
        let h = hamilton::<Q>();
        assert_eq!(inverse(&h, &h.basis(1)).unwrap(), e(&[0, -1, 0, 0]));
        let x = e(&[1, 1, 0, 0]);
        let inv = inverse(&h, &x).unwrap();
        assert_eq!(inv, Element::new(vec![frac(1, 2), frac(-1, 2), Q::from_i64(0), Q::from_i64(0)]));
        assert_eq!(h.mul(&x, &inv).unwrap(), h.unit());
        assert_eq!(h.mul(&inv, &x).unwrap(), h.unit());
        assert_eq!(inverse(&h, &h.zero()).unwrap_err(), Error::NotInvertible);
    }

    #[test]
    fn rotation_about_z() {
        let h = hamilton::<Q>();
        // 1 + k has angle 45 degrees, so rotates by 90 degrees about z
        let q = e(&[1, 0, 0, 1]);
        let v = Vector3::new(Q::from_i64(1), Q::from_i64(0), Q::from_i64(0));
        let r = rotate(&h, &q, &v).unwrap();
        assert_eq!(r, Vector3::new(Q::from_i64(0), Q::from_i64(1), Q::from_i64(0)));
        assert_eq!(rotate(&h, &h.unit(), &v).unwrap(), v);
        assert_eq!(rotate(&h, &h.zero(), &v).unwrap_err(), Error::NotInvertible);
    }

    #[test]
    fn rotation_float_normalized_quaternion() {
        let h = hamilton::<f64>();
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let q = Element::new(vec![s, 0.0, 0.0, s]);
        let r = rotate(&h, &q, &Vector3::new(1.0, 0.0, 0.0)).unwrap();
        assert!(r.approx_eq(&Vector3::new(0.0, 1.0, 0.0), 1e-12));
    }

    #[test]
    fn rotation_requires_hamilton() {
        let alg = e_algebra(&QuaternionParams::new(Q::from_i64(1), Q::from_i64(-1))).unwrap();
        let v = Vector3::new(Q::from_i64(1), Q::from_i64(0), Q::from_i64(0));
        assert!(matches!(rotate(&alg, &alg.unit(), &v), Err(Error::WrongAlgebra(_))));
    }

    #[test]
    fn jacobians_multiply() {
        let h = hamilton::<Q>();
        assert_eq!(left_jacobian(&h, &h.unit()).unwrap(), Matrix::identity(4));
        let ji = left_jacobian(&h, &h.basis(1)).unwrap();
        let jj = left_jacobian(&h, &h.basis(2)).unwrap();
        let jk = left_jacobian(&h, &h.basis(3)).unwrap();
        assert_eq!(ji, h.left_mult_matrix(&h.basis(1)).unwrap());
        assert_eq!(ji.mul(&jj), jk);
    }
}
