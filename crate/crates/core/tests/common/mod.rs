#![allow(dead_code)]

use dring_core::{Element, Rational, Scalar};
use proptest::prelude::*;

pub type Q = Rational;

pub fn q(v: i64) -> Q {
    Q::from_i64(v)
}

pub fn frac(p: i64, d: i64) -> Q {
    q(p) / q(d)
}

pub fn rational() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, d)| frac(p, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Q> {
    rational().prop_filter("nonzero", |v| !v.is_zero_tol(0.0))
}

pub fn element(dim: usize) -> impl Strategy<Value = Element<Q>> {
    proptest::collection::vec(rational(), dim).prop_map(Element::new)
}

pub fn nonzero_element(dim: usize) -> impl Strategy<Value = Element<Q>> {
    element(dim).prop_filter("nonzero", |x| !x.is_zero_tol(0.0))
}
