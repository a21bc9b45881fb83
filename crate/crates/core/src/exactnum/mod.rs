//! Exact scalars in ℚ(i) and dense linear algebra over them.
//!
//! Everything downstream (structure constants, Freeman steps, Levi forms,
//! polynomial coefficients) is computed with these types; no floating point
//! is involved anywhere.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{Matrix, Rref, Vector};
pub use scalar::{format_rational, parse_rational, GaussianRational};
pub use subspace::{format_combination, Subspace};
