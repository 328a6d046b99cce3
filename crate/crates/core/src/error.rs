use thiserror::Error;

/// Errors raised by constructions whose preconditions do not hold.
///
/// A failed *check* (say, a candidate that is not an O-operator) is usually
/// reported as a value, not an error; these variants cover inputs on which
/// a computation is not defined at all.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("algebra is not associative ({0} violating triples)")]
    InvalidAlgebra(usize),

    #[error("bimodule axioms fail ({0} violations)")]
    InvalidBimodule(usize),

    #[error("map is not an O-operator (defect nonzero at {0} basis pairs)")]
    NotOOperator(usize),

    #[error("map is not an algebra morphism")]
    NotAlgebraMorphism,

    #[error("element is not a Nijenhuis element: {0}")]
    NotNijenhuis(String),

    #[error("element is not an r-matrix")]
    NotRMatrix,

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("coboundaries not contained in cocycles (d^2 != 0 upstream)")]
    NotContained,

    #[error("dendriform element does not square to zero")]
    NotSquareZero,

    #[error("invalid deformation: {0}")]
    InvalidDeformation(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
