//! Linear algebra over finite-dimensional division algebras presented by
//! structural constants.
//!
//! The crate is `no_std` and only needs `alloc`. Scalars are exact rationals
//! by default; `f64` is available for numerical differentiation.
//!
//! ```
//! use dring_core::linear_maps::{coords_to_standard, LinearMapMatrix};
//! use dring_core::quaternion::hamilton;
//! use dring_core::{Matrix, Rational, Scalar};
//!
//! let h = hamilton::<Rational>();
//! let diag: Vec<Rational> = [1, -1, -1, -1].iter().map(|&v| Rational::from_i64(v)).collect();
//! let conj = LinearMapMatrix::new(Matrix::diagonal(&diag));
//! let sol = coords_to_standard(&h, &conj).unwrap();
//! // conj(x) = -1/2 (x + i x i + j x j + k x k)
//! assert_eq!(sol.particular.comps()[(2, 2)], Rational::from_i64(-1) / Rational::from_i64(2));
//! assert!(sol.is_unique());
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod bilinear;
pub mod biring;
pub mod error;
pub mod gateaux;
pub mod linear_maps;
pub mod linsys;
pub mod literal;
pub mod matrix;
pub mod quaternion;
pub mod scalar;
pub mod tensor;

pub use crate::algebra::{Algebra, AssociativityViolation, Element, Side, UnitViolation};
pub use crate::biring::DMatrix;
pub use crate::error::{Error, Result};
pub use crate::linear_maps::{ConversionSolution, LinearMapMatrix, StandardComponents};
pub use crate::matrix::{AffineSolution, Matrix};
pub use crate::quaternion::{QuaternionParams, Vector3};
pub use crate::scalar::{FromScalar, Rational, Scalar, DEFAULT_FLOAT_TOL};
pub use crate::tensor::{Tensor2, TensorComponents};
