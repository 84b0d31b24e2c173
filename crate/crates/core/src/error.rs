use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("structural constant ({i},{j},{k}) given more than once")]
    DuplicateConstantEntry { i: usize, j: usize, k: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(&'static str),
    #[error("basis change matrix is singular")]
    SingularTransform,
    #[error("unit element is not a vector of the new basis")]
    UnitNotInNewBasis,
    #[error("quaternion parameters must satisfy ab != 0")]
    DegenerateParams,
    #[error("operation requires {0}")]
    WrongAlgebra(&'static str),
    #[error("x * conj(x) has a nonzero imaginary part")]
    NonRealProduct,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("no solution")]
    NoSolution,
    #[error("equation has no terms")]
    EmptyEquation,
    #[error("map evaluation failed at probe direction {direction}")]
    EvaluationFailure { direction: usize },
    #[error("finite difference step must be positive")]
    InvalidStep,
    #[error("unknown map name; expected conj, sqr, norm_sq or inv")]
    UnknownMap,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
