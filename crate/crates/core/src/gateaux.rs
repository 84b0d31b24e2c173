//! Finite-difference Jacobians of algebra maps and recovery of the standard
//! components of the derivative.

use core::str::FromStr;

use num_bigint::BigInt;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linear_maps::{coords_to_standard, ConversionSolution, LinearMapMatrix, StandardComponents};
use crate::matrix::Matrix;
use crate::quaternion::{conjugate, inverse, norm_sq, real_part};
use crate::scalar::{limit_denominator, FromScalar, Rational, Scalar};

/// Largest denominator used when displaying recovered components.
pub const DISPLAY_MAX_DENOMINATOR: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// `(f(x + h e) - f(x - h e)) / 2h`
    Central,
    /// `(f(x + h e) - f(x)) / h`
    Forward,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffConfig {
    step: f64,
    pub scheme: Scheme,
    pub tol: f64,
}

impl Default for DiffConfig {
    fn default() -> Self {
        Self {
            step: 1e-5,
            scheme: Scheme::Central,
            tol: 1e-6,
        }
    }
}

impl DiffConfig {
    pub fn new(step: f64, scheme: Scheme, tol: f64) -> Result<Self> {
        if !step.is_finite() || step <= 0.0 {
            return Err(Error::InvalidStep);
        }
        Ok(Self { step, scheme, tol })
    }

    pub fn step(&self) -> f64 {
        self.step
    }
}

/// A map of the algebra into itself that can only be evaluated.
///
/// Implementations must be deterministic and safe to call from several
/// threads at once. Returning `None` signals that the map is undefined at
/// the probed point.
pub trait BlackBoxMap: Sync {
    fn eval(&self, x: &Element<f64>) -> Option<Element<f64>>;
}

impl<F> BlackBoxMap for F
where
    F: Fn(&Element<f64>) -> Option<Element<f64>> + Sync,
{
    fn eval(&self, x: &Element<f64>) -> Option<Element<f64>> {
        self(x)
    }
}

/// Jacobian of `f` at `x0`: entry `(j, i)` is the derivative of output
/// coordinate `i` along basis direction `j`, matching [`LinearMapMatrix`].
pub fn numerical_jacobian<F: BlackBoxMap + ?Sized>(
    alg: &Algebra<f64>,
    f: &F,
    x0: &Element<f64>,
    cfg: &DiffConfig,
) -> Result<LinearMapMatrix<f64>> {
    alg.conform(x0)?;
    let n = alg.dim();
    let h = cfg.step;
    let probe = |x: Element<f64>, direction: usize| -> Result<Element<f64>> {
        let y = f.eval(&x).ok_or(Error::EvaluationFailure { direction })?;
        alg.conform(&y).map_err(|_| Error::EvaluationFailure { direction })?;
        Ok(y)
    };
    let base = match cfg.scheme {
        Scheme::Forward => Some(probe(x0.clone(), 0)?),
        Scheme::Central => None,
    };
    let mut jac = Matrix::zeros(n, n);
    for j in 0..n {
        let dir = alg.basis(j).scale(&h);
        let plus = probe(x0 + &dir, j)?;
        let (minus, width) = match &base {
            Some(b) => (b.clone(), h),
            None => (probe(x0 - &dir, j)?, 2.0 * h),
        };
        for (i, (p, m)) in plus.coords().iter().zip(minus.coords()).enumerate() {
            jac[(j, i)] = (p - m) / width;
        }
    }
    Ok(LinearMapMatrix::new(jac))
}

/// Standard components of a Jacobian, solved exactly after promoting every
/// float entry to its exact rational value.
pub fn jacobian_to_standard(alg: &Algebra<Rational>, jac: &LinearMapMatrix<f64>) -> Result<ConversionSolution<Rational>> {
    let exact = LinearMapMatrix::new(jac.entries().convert::<Rational>());
    coords_to_standard(alg, &exact)
}

/// Jacobian entries replaced by their nearest rationals with denominator at
/// most `max_den`. Over algebras whose conversion map is not onto, a noisy
/// Jacobian of a representable map is solvable only after this rounding.
pub fn round_jacobian(jac: &LinearMapMatrix<f64>, max_den: u64) -> LinearMapMatrix<Rational> {
    let max = BigInt::from(max_den);
    LinearMapMatrix::new(jac.entries().map(|v| limit_denominator(&Rational::from_scalar(v), &max)))
}

/// Nearest rationals with denominator at most `max_den`, for display.
pub fn round_components(s: &StandardComponents<Rational>, max_den: u64) -> StandardComponents<Rational> {
    let max = BigInt::from(max_den);
    StandardComponents::new(s.comps().map(|v| limit_denominator(v, &max)))
}

/// Derivative of `|x|^2` along `h`: the real number `h conj(x) + x conj(h)`.
pub fn norm_sq_differential<S: Scalar>(alg: &Algebra<S>, x: &Element<S>, h: &Element<S>) -> Result<S> {
    let a = alg.mul(h, &conjugate(alg, x)?)?;
    let b = alg.mul(x, &conjugate(alg, h)?)?;
    real_part(alg, &(a + b))
}

/// Maps with a name, for the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinMap {
    Conj,
    Sqr,
    NormSq,
    Inv,
}

impl BuiltinMap {
    pub const ALL: [BuiltinMap; 4] = [BuiltinMap::Conj, BuiltinMap::Sqr, BuiltinMap::NormSq, BuiltinMap::Inv];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinMap::Conj => "conj",
            BuiltinMap::Sqr => "sqr",
            BuiltinMap::NormSq => "norm_sq",
            BuiltinMap::Inv => "inv",
        }
    }

    /// `norm_sq` is returned as the real element `|x|^2 * 1`.
    pub fn eval<S: Scalar>(self, alg: &Algebra<S>, x: &Element<S>) -> Result<Element<S>> {
        match self {
            BuiltinMap::Conj => conjugate(alg, x),
            BuiltinMap::Sqr => alg.mul(x, x),
            BuiltinMap::NormSq => Ok(alg.scalar(norm_sq(alg, x)?)),
            BuiltinMap::Inv => inverse(alg, x),
        }
    }

    /// The map as a black box over `alg`.
    pub fn black_box(self, alg: &Algebra<f64>) -> impl BlackBoxMap + '_ {
        move |x: &Element<f64>| self.eval(alg, x).ok()
    }
}

impl FromStr for BuiltinMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or(Error::UnknownMap)
    }
}

/// Analytic Jacobian of `x -> a x b` in [`LinearMapMatrix`] layout.
pub fn sandwich_jacobian<S: Scalar>(alg: &Algebra<S>, a: &Element<S>, b: &Element<S>) -> Result<LinearMapMatrix<S>> {
    let op = alg.left_mult_matrix(a)?.mul(&alg.right_mult_matrix(b)?);
    Ok(LinearMapMatrix::from_operator(&op))
}

/// Exact value of an `f64` element.
pub fn promote(x: &Element<f64>) -> Element<Rational> {
    Element::new(x.coords().iter().map(Rational::from_scalar).collect())
}
