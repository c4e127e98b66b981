//! Exact scalar field ℚ(√2) and the Cayley–Dickson algebra tower.

mod hyper;
mod scalar;

pub use hyper::{basis_element, find_zero_divisor, AlgebraError, Hyper, MAX_LEVEL};
pub use scalar::{ExactScalar, ParseScalarError};
