//! Exact scalar tower: arbitrary-precision rationals, univariate integer
//! polynomials in the indeterminate `δ`, and their fraction field.
//!
//! Nothing in this crate touches floating point; every rank decision made
//! downstream is taken on values produced here.

mod poly;
mod ratfunc;
mod rational;
mod residue;

pub use poly::IntPolynomial;
pub use ratfunc::RatFunction;
pub use rational::{q, Rational};
pub use residue::{RatPoly, ResidueRing};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("root set is all of ℚ")]
    ZeroPolynomial,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}
