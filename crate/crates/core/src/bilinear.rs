//! Bilinear maps in standard form.
//!
//! Over a noncommutative algebra the two arguments may appear in either
//! order inside a sandwich, so a bilinear map is
//!
//! ```text
//! f(x, y) = sum f[xy](p,q,r) e_p x e_q y e_r + sum f[yx](p,q,r) e_p y e_q x e_r
//! ```

use alloc::collections::BTreeMap;

use crate::algebra::{Algebra, Element};
use crate::error::Result;
use crate::scalar::Scalar;

/// Order in which the arguments appear in a sandwich term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ArgOrder {
    /// `e_p x e_q y e_r`
    Xy,
    /// `e_p y e_q x e_r`
    Yx,
}

impl ArgOrder {
    pub fn swapped(self) -> Self {
        match self {
            ArgOrder::Xy => ArgOrder::Yx,
            ArgOrder::Yx => ArgOrder::Xy,
        }
    }
}

/// Sparse standard components of a bilinear map.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BilinearComponents<S> {
    comps: BTreeMap<(ArgOrder, usize, usize, usize), S>,
}

impl<S: Scalar> BilinearComponents<S> {
    pub fn new() -> Self {
        Self { comps: BTreeMap::new() }
    }

    /// Adds `c` to the component `(order, p, q, r)`.
    pub fn add_term(&mut self, order: ArgOrder, p: usize, q: usize, r: usize, c: S) {
        let entry = self.comps.entry((order, p, q, r)).or_insert_with(S::zero);
        *entry = entry.clone() + c;
    }

    pub fn with_term(mut self, order: ArgOrder, p: usize, q: usize, r: usize, c: S) -> Self {
        self.add_term(order, p, q, r, c);
        self
    }

    pub fn get(&self, order: ArgOrder, p: usize, q: usize, r: usize) -> S {
        self.comps.get(&(order, p, q, r)).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (ArgOrder, usize, usize, usize, &S)> + '_ {
        self.comps.iter().map(|(&(o, p, q, r), c)| (o, p, q, r, c))
    }

    /// Exchanges the two order classes: the result evaluates to `f(y, x)`.
    pub fn swapped(&self) -> Self {
        Self {
            comps: self
                .comps
                .iter()
                .map(|(&(o, p, q, r), c)| ((o.swapped(), p, q, r), c.clone()))
                .collect(),
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (o, p, q, r, c) in other.terms() {
            out.add_term(o, p, q, r, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        Self {
            comps: self.comps.iter().map(|(&k, c)| (k, c.clone() * s.clone())).collect(),
        }
    }

    /// `(f(x, y) + f(y, x)) / 2`
    pub fn symmetrize(&self) -> Self {
        self.plus(&self.swapped()).scale(&half())
    }

    /// `(f(x, y) - f(y, x)) / 2`
    pub fn antisymmetrize(&self) -> Self {
        self.plus(&self.swapped().scale(&-S::one())).scale(&half())
    }
}

fn half<S: Scalar>() -> S {
    S::one() / (S::one() + S::one())
}

pub fn apply_bilinear<S: Scalar>(
    alg: &Algebra<S>,
    b: &BilinearComponents<S>,
    x: &Element<S>,
    y: &Element<S>,
) -> Result<Element<S>> {
    alg.conform(x)?;
    alg.conform(y)?;
    let mut out = alg.zero();
    for (order, p, q, r, c) in b.terms() {
        let (first, second) = match order {
            ArgOrder::Xy => (x, y),
            ArgOrder::Yx => (y, x),
        };
        let t = alg.mul(&alg.basis(p), first)?;
        let t = alg.mul(&t, &alg.basis(q))?;
        let t = alg.mul(&t, second)?;
        let t = alg.mul(&t, &alg.basis(r))?;
        out = &out + &t.scale(c);
    }
    Ok(out)
}

/// `f(e_a, e_b) = f(e_b, e_a)` on all basis pairs, which suffices by bilinearity.
pub fn check_symmetric<S: Scalar>(alg: &Algebra<S>, b: &BilinearComponents<S>) -> Result<bool> {
    check_pairs(alg, b, false)
}

/// `f(e_a, e_b) = -f(e_b, e_a)` on all basis pairs.
pub fn check_skew<S: Scalar>(alg: &Algebra<S>, b: &BilinearComponents<S>) -> Result<bool> {
    check_pairs(alg, b, true)
}

fn check_pairs<S: Scalar>(alg: &Algebra<S>, b: &BilinearComponents<S>, skew: bool) -> Result<bool> {
    let n = alg.dim();
    for a in 0..n {
        for c in a..n {
            let (x, y) = (alg.basis(a), alg.basis(c));
            let fxy = apply_bilinear(alg, b, &x, &y)?;
            let fyx = apply_bilinear(alg, b, &y, &x)?;
            let target = if skew { -fyx } else { fyx };
            if !alg.elements_eq(&fxy, &target) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::hamilton;
    use crate::scalar::Rational;

    type Q = Rational;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    fn product() -> BilinearComponents<Q> {
        BilinearComponents::new().with_term(ArgOrder::Xy, 0, 0, 0, q(1))
    }

    fn reversed() -> BilinearComponents<Q> {
        BilinearComponents::new().with_term(ArgOrder::Yx, 0, 0, 0, q(1))
    }

    #[test]
    fn product_and_reversed_product() {
        let h = hamilton::<Q>();
        let (i, j, k) = (h.basis(1), h.basis(2), h.basis(3));
        assert_eq!(apply_bilinear(&h, &product(), &i, &j).unwrap(), k);
        assert_eq!(apply_bilinear(&h, &reversed(), &i, &j).unwrap(), -&k);
    }

    #[test]
    fn anticommutator_is_symmetric() {
        let h = hamilton::<Q>();
        let b = product().plus(&reversed());
        assert!(check_symmetric(&h, &b).unwrap());
        assert!(!check_skew(&h, &b).unwrap());
    }

    #[test]
    fn commutator_is_skew() {
        let h = hamilton::<Q>();
        let b = product().plus(&reversed().scale(&q(-1)));
        assert!(check_skew(&h, &b).unwrap());
        assert!(!check_symmetric(&h, &b).unwrap());
        let v = apply_bilinear(&h, &b, &h.basis(1), &h.basis(2)).unwrap();
        assert_eq!(v, h.basis(3).scale(&q(2)));
    }

    #[test]
    fn zero_map_is_both() {
        let h = hamilton::<Q>();
        let z = BilinearComponents::<Q>::new();
        assert!(check_symmetric(&h, &z).unwrap());
        assert!(check_skew(&h, &z).unwrap());
    }

    #[test]
    fn sandwiched_terms() {
        let h = hamilton::<Q>();
        // f(x, y) = i x j y k at x = y = 1 gives ijk = -1
        let b = BilinearComponents::new().with_term(ArgOrder::Xy, 1, 2, 3, q(1));
        assert_eq!(apply_bilinear(&h, &b, &h.unit(), &h.unit()).unwrap(), -h.unit());
        assert_eq!(b.get(ArgOrder::Xy, 1, 2, 3), q(1));
        assert_eq!(b.get(ArgOrder::Yx, 1, 2, 3), q(0));
    }
}
