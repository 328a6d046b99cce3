//! Exact computations for O-operators on finite-dimensional associative
//! algebras: cochain complexes, brackets, cohomology, deformations and
//! associative r-matrices, all over ℚ.

pub mod algebra;
pub mod cochains;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod operators;
pub mod rational;
pub mod rmatrix;

pub use error::{Error, Result};
pub use rational::Rational;
