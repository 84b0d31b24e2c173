//! JSON file formats.
//!
//! Exact scalars are written as `"p/q"` strings (integers without a
//! denominator), floats as JSON numbers. Elements are coordinate arrays on
//! output; on input a literal string such as `"1+2i-3j+4k"` is also accepted.
//! Writers are deterministic, so parsing and re-writing any output reproduces
//! it byte for byte.

use std::path::{Path, PathBuf};

use dring_core::literal::{parse_element, LiteralError};
use dring_core::{Algebra, AssociativityViolation, Element, Matrix, Rational, Scalar};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::builtin;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid scalar {0}")]
    Scalar(String),
    #[error(transparent)]
    Literal(#[from] LiteralError),
    #[error("{0}")]
    Shape(String),
    #[error("invalid algebra: {0}")]
    Algebra(dring_core::Error),
    #[error("no algebra given; use --algebra or an \"algebra\" field")]
    MissingAlgebra,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ScalarKind {
    #[default]
    Rational,
    Float,
}

/// Scalars with a JSON representation.
pub trait JsonScalar: Scalar {
    const KIND: ScalarKind;

    fn to_json(&self) -> Value;

    fn from_json(v: &Value) -> Result<Self, FormatError>;
}

impl JsonScalar for Rational {
    const KIND: ScalarKind = ScalarKind::Rational;

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    /// Strings may be integers, fractions or decimals; JSON numbers are read
    /// by their decimal text, so `0.1` is exactly `1/10`.
    fn from_json(v: &Value) -> Result<Self, FormatError> {
        let text = match v {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            other => return Err(FormatError::Scalar(other.to_string())),
        };
        Rational::parse(text.trim()).ok_or_else(|| FormatError::Scalar(v.to_string()))
    }
}

impl JsonScalar for f64 {
    const KIND: ScalarKind = ScalarKind::Float;

    fn to_json(&self) -> Value {
        serde_json::Number::from_f64(*self).map_or(Value::Null, Value::Number)
    }

    fn from_json(v: &Value) -> Result<Self, FormatError> {
        match v {
            Value::Number(n) => n.as_f64(),
            Value::String(s) => f64::parse(s.trim()),
            _ => None,
        }
        .filter(|x| x.is_finite())
        .ok_or_else(|| FormatError::Scalar(v.to_string()))
    }
}

/// `{ "dim", "unit", "scalar", "labels", "constants": [[i, j, k, c], ...] }`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub unit: usize,
    #[serde(default)]
    pub scalar: ScalarKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    pub constants: Vec<(usize, usize, usize, Value)>,
}

impl AlgebraFile {
    pub fn from_algebra<S: JsonScalar>(alg: &Algebra<S>) -> Self {
        Self {
            dim: alg.dim(),
            unit: alg.unit_index(),
            scalar: S::KIND,
            labels: alg.labels().to_vec(),
            constants: alg.constants().map(|(i, j, k, c)| (i, j, k, c.to_json())).collect(),
        }
    }

    pub fn to_algebra<S: JsonScalar>(&self) -> Result<Algebra<S>, FormatError> {
        let constants = self
            .constants
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, S::from_json(c)?)))
            .collect::<Result<Vec<_>, FormatError>>()?;
        let alg = Algebra::new(self.dim, constants, self.unit).map_err(FormatError::Algebra)?;
        if self.labels.is_empty() {
            Ok(alg)
        } else {
            alg.with_labels(self.labels.iter().cloned()).map_err(FormatError::Algebra)
        }
    }
}

/// An algebra given by built-in name, by file path, or inline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Name(String),
    Inline(AlgebraFile),
}

/// A resolved algebra, not yet committed to a scalar backend.
#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraSource {
    Builtin(String),
    File(AlgebraFile),
}

impl AlgebraSource {
    /// Built-in names first, then a path relative to `base`.
    pub fn resolve(r: &AlgebraRef, base: Option<&Path>) -> Result<Self, FormatError> {
        match r {
            AlgebraRef::Inline(f) => Ok(Self::File(f.clone())),
            AlgebraRef::Name(name) if builtin::is_builtin(name) => Ok(Self::Builtin(name.clone())),
            AlgebraRef::Name(path) => {
                let path = match base {
                    Some(dir) if Path::new(path).is_relative() => dir.join(path),
                    _ => PathBuf::from(path),
                };
                Ok(Self::File(read_json(&path)?))
            }
        }
    }

    /// Scalar kind recorded in the file; built-ins have none.
    pub fn scalar(&self) -> Option<ScalarKind> {
        match self {
            Self::Builtin(_) => None,
            Self::File(f) => Some(f.scalar),
        }
    }

    pub fn build<S: JsonScalar>(&self) -> Result<Algebra<S>, FormatError> {
        match self {
            Self::Builtin(name) => builtin::named(name),
            Self::File(f) => f.to_algebra(),
        }
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

/// Pretty JSON with a trailing newline.
pub fn to_json_text<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable value");
    s.push('\n');
    s
}

/// An element as a coordinate array or a literal string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRepr {
    Literal(String),
    Coords(Vec<Value>),
}

impl ElementRepr {
    pub fn from_element<S: JsonScalar>(x: &Element<S>) -> Self {
        Self::Coords(x.coords().iter().map(JsonScalar::to_json).collect())
    }

    pub fn to_element<S: JsonScalar>(&self, alg: &Algebra<S>) -> Result<Element<S>, FormatError> {
        match self {
            Self::Literal(text) => Ok(parse_element(alg, text)?),
            Self::Coords(values) => {
                if values.len() != alg.dim() {
                    return Err(FormatError::Shape(format!(
                        "element has {} coordinates, algebra dimension is {}",
                        values.len(),
                        alg.dim()
                    )));
                }
                let coords = values.iter().map(S::from_json).collect::<Result<_, _>>()?;
                Ok(Element::new(coords))
            }
        }
    }
}

pub fn matrix_to_json<S: JsonScalar>(m: &Matrix<S>) -> Vec<Vec<Value>> {
    m.to_rows().iter().map(|r| r.iter().map(JsonScalar::to_json).collect()).collect()
}

pub fn matrix_from_json<S: JsonScalar>(rows: &[Vec<Value>], n: usize) -> Result<Matrix<S>, FormatError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(FormatError::Shape(format!("expected a {n}x{n} array")));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(S::from_json).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(parsed))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Coords,
    Standard,
}

/// `{ "algebra", "kind", "entries" }`; `kernel` lists further component
/// arrays that represent the zero map, present only in conversion output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraRef>,
    pub kind: MapKind,
    pub entries: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub kernel: Vec<Vec<Vec<Value>>>,
}

/// `{ "algebra", "rows", "cols", "entries": [[element, ...], ...] }`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraRef>,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<ElementRepr>>,
}

impl MatrixFile {
    pub fn to_dmatrix<S: JsonScalar>(&self, alg: &Algebra<S>) -> Result<dring_core::DMatrix<S>, FormatError> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(FormatError::Shape(format!("expected {} rows of {} entries", self.rows, self.cols)));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| e.to_element(alg)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        dring_core::DMatrix::from_rows(rows).map_err(|e| FormatError::Shape(e.to_string()))
    }
}

/// Equation file for `solve`, tagged by `kind`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SolveFile {
    /// `sum_s a_s x b_s = rhs`.
    Sandwich {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        algebra: Option<AlgebraRef>,
        terms: Vec<(ElementRepr, ElementRepr)>,
        rhs: ElementRepr,
    },
    /// `sum_i x^i A[i][j] = rhs[j]`, with `A` in matrix-file layout.
    Rcd {
        #[serde(flatten)]
        matrix: MatrixFile,
        rhs: Vec<ElementRepr>,
    },
}

impl SolveFile {
    pub fn algebra(&self) -> Option<&AlgebraRef> {
        match self {
            Self::Sandwich { algebra, .. } => algebra.as_ref(),
            Self::Rcd { matrix, .. } => matrix.algebra.as_ref(),
        }
    }
}

/// Affine solution set: `particular + span(kernel)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionFile<T> {
    pub particular: T,
    pub kernel: Vec<T>,
}

/// `{ "algebra", "terms": [[a, b], ...] }` for `sum a (x) b`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraRef>,
    pub terms: Vec<(ElementRepr, ElementRepr)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentsFile {
    pub components: Vec<Vec<Value>>,
    pub zero: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ViolationReport {
    pub indices: [usize; 4],
    pub left: Value,
    pub right: Value,
}

impl ViolationReport {
    pub fn new<S: JsonScalar>(v: &AssociativityViolation<S>) -> Self {
        Self {
            indices: v.indices,
            left: v.left.to_json(),
            right: v.right.to_json(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitReport {
    pub side: String,
    pub j: usize,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub associative: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<ViolationReport>,
    pub unital: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_violation: Option<UnitReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeriveReport {
    pub map: String,
    pub point: Vec<Value>,
    pub jacobian: Vec<Vec<Value>>,
    /// `None` when the Jacobian has no standard components.
    pub standard: Option<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub kernel: Vec<Vec<Vec<Value>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RotateReport {
    pub vector: [Value; 3],
}

