//! Base-field scalars.
//!
//! Two backends share the [`Scalar`] interface: exact rationals
//! ([`Rational`]) and `f64`. Exact scalars compare literally; floats compare
//! within an absolute tolerance supplied by the caller (usually the owning
//! [`Algebra`](crate::Algebra)).

use alloc::string::String;
use core::fmt::{Debug, Display};
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Absolute tolerance used by the float backend unless overridden.
pub const DEFAULT_FLOAT_TOL: f64 = 1e-9;

/// Field element usable as the base field of an algebra.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Div<Output = Self>
{
    /// `true` for backends with exact arithmetic.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;

    /// Zero test. Exact backends ignore `tol`.
    fn is_zero_tol(&self, tol: f64) -> bool;

    fn is_negative(&self) -> bool;

    fn to_f64(&self) -> f64;

    /// Parses integers, `p/q` fractions and decimal literals.
    fn parse(s: &str) -> Option<Self>;

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.clone() - other.clone()).is_zero_tol(tol)
    }

    /// Multiplicative inverse, `None` for (approximate) zero.
    fn recip(&self, tol: f64) -> Option<Self> {
        if self.is_zero_tol(tol) {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        <Rational as Zero>::zero()
    }

    fn one() -> Self {
        <Rational as One>::one()
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn is_zero_tol(&self, _tol: f64) -> bool {
        Zero::is_zero(self)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn parse(s: &str) -> Option<Self> {
        parse_rational(s)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn is_zero_tol(&self, tol: f64) -> bool {
        self.abs() <= tol
    }

    fn is_negative(&self) -> bool {
        *self < 0.0
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: f64 = p.trim().parse().ok()?;
            let q: f64 = q.trim().parse().ok()?;
            return if q == 0.0 { None } else { Some(p / q) };
        }
        s.parse().ok()
    }
}

/// Conversion between scalar backends.
pub trait FromScalar<T> {
    fn from_scalar(v: &T) -> Self;
}

impl FromScalar<Rational> for Rational {
    fn from_scalar(v: &Rational) -> Self {
        v.clone()
    }
}

impl FromScalar<f64> for f64 {
    fn from_scalar(v: &f64) -> Self {
        *v
    }
}

impl FromScalar<Rational> for f64 {
    fn from_scalar(v: &Rational) -> Self {
        Scalar::to_f64(v)
    }
}

impl FromScalar<f64> for Rational {
    /// Exact binary expansion; non-finite values map to zero.
    fn from_scalar(v: &f64) -> Self {
        rational_from_f64(*v).unwrap_or_else(<Rational as Zero>::zero)
    }
}

/// Exact value of a finite `f64` as a rational.
pub fn rational_from_f64(v: f64) -> Option<Rational> {
    Rational::from_float(v)
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if Zero::is_zero(&q) {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let (neg, int_part) = match int_part.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if !frac_part.chars().all(|c| c.is_ascii_digit())
            || !int_part.chars().all(|c| c.is_ascii_digit())
            || (int_part.is_empty() && frac_part.is_empty())
        {
            return None;
        }
        let mut digits = String::from(int_part);
        digits.push_str(frac_part);
        let num: BigInt = if digits.is_empty() {
            BigInt::from(0)
        } else {
            digits.parse().ok()?
        };
        let den = num_traits::pow(BigInt::from(10), frac_part.len());
        let r = Rational::new(num, den);
        return Some(if neg { -r } else { r });
    }
    let p: BigInt = s.parse().ok()?;
    Some(Rational::from_integer(p))
}

/// Closest rational to `v` whose denominator does not exceed `max_den`.
///
/// Continued-fraction convergents plus the best semiconvergent, so the
/// result is the best approximation with a bounded denominator.
pub fn limit_denominator(v: &Rational, max_den: &BigInt) -> Rational {
    if v.denom() <= max_den {
        return v.clone();
    }
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let (mut p0, mut q0, mut p1, mut q1) = (zero.clone(), one.clone(), one.clone(), zero.clone());
    let mut n = v.numer().clone();
    let mut d = v.denom().clone();
    loop {
        let (a, r) = n.div_mod_floor(&d);
        let q2 = &q0 + &a * &q1;
        if &q2 > max_den {
            break;
        }
        let p2 = &p0 + &a * &p1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        n = d;
        d = r;
        if Zero::is_zero(&d) {
            break;
        }
    }
    let k = (max_den - &q0).div_floor(&q1);
    let bound1 = Rational::new(&p0 + &k * &p1, &q0 + &k * &q1);
    let bound2 = Rational::new(p1, q1);
    if (&bound2 - v).abs() <= (&bound1 - v).abs() {
        bound2
    } else {
        bound1
    }
}
