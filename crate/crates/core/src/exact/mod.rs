//! Exact scalars and linear algebra.
//!
//! Everything here is exact: rationals are arbitrary precision, cyclotomic
//! elements are residues modulo `Phi_d`, and elimination never rounds.

mod cyclotomic;
mod matrix;
mod poly;
mod rational;

use std::fmt::Debug;

use thiserror::Error;

pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use matrix::{echelon_basis, normalize_leading, span_rank, ExactMatrix};
pub use poly::{cyclotomic_polynomial, euler_totient, IntPolynomial};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid cyclotomic order {0}")]
    InvalidOrder(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polynomial division left a nonzero remainder")]
    NonZeroRemainder,
    #[error("polynomial division needs a non-integral coefficient")]
    NonIntegralQuotient,
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
}

/// Operations shared by the exact scalar types.
///
/// Constructors take `&self` so that field parameters (the cyclotomic order)
/// travel with every value.
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Panics on zero.
    fn inverse(&self) -> Self;
    /// Field automorphism used for Hermitian forms; identity on `Q`.
    fn conjugate(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}
