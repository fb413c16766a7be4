//! Exact arithmetic: rationals, bivariate polynomials, matrices, resultants,
//! rational roots and small Gröbner bases.

pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod unipoly;

use thiserror::Error;

pub use groebner::{groebner_basis, standard_monomial_count, MonomialCount};
pub use linalg::{rref_and_kernel, Matrix, RrefKernel, Vector};
pub use poly::{Monomial, MultiPoly, Var};
pub use rational::{format_rational, int, parse_rational, rat, Integer, Rational};
pub use resultant::{resultant, sylvester_matrix};
pub use unipoly::UniPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("input polynomial is zero")]
    ZeroInput,
    #[error("polynomial has no positive degree in {0:?}")]
    ConstantIn(Var),
    #[error("polynomial involves both λ and μ")]
    NotUnivariate,
}

/// Every rational root of a polynomial in a single variable, ascending.
///
/// A nonzero constant has no roots.
pub fn rational_roots(f: &MultiPoly) -> Result<Vec<Rational>, ExactError> {
    use num_traits::Zero;
    if f.is_zero() {
        return Err(ExactError::ZeroInput);
    }
    match f.sole_variable()? {
        None => Ok(Vec::new()),
        Some(v) => Ok(unipoly::rational_roots(&f.to_unipoly(v)?)),
    }
}

/// Exact substitution of `(λ, μ)`.
pub fn poly_evaluate(f: &MultiPoly, point: &(Rational, Rational)) -> Rational {
    f.evaluate(point)
}
