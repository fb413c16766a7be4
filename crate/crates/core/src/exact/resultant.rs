//! Sylvester resultants of bivariate polynomials.

use num_traits::Zero;

use super::linalg::Matrix;
use super::poly::{MultiPoly, Var};
use super::ExactError;

/// Sylvester matrix of `f` and `g` regarded as polynomials in `v`, with
/// coefficients in the other variable.
pub fn sylvester_matrix(f: &MultiPoly, g: &MultiPoly, v: Var) -> Result<Matrix<MultiPoly>, ExactError> {
    let m = positive_degree(f, v)?;
    let n = positive_degree(g, v)?;
    let fc = f.coefficients_in(v);
    let gc = g.coefficients_in(v);
    let size = m + n;
    let mut s = Matrix::zeros(size, size);
    // Rows hold the coefficient lists from the highest power down, shifted.
    for i in 0..n {
        for (k, c) in fc.iter().rev().enumerate() {
            s[(i, i + k)] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in gc.iter().rev().enumerate() {
            s[(n + i, i + k)] = c.clone();
        }
    }
    Ok(s)
}

fn positive_degree(f: &MultiPoly, v: Var) -> Result<usize, ExactError> {
    if f.is_zero() {
        return Err(ExactError::ZeroInput);
    }
    match f.degree_in(v) {
        Some(d) if d > 0 => Ok(d as usize),
        _ => Err(ExactError::ConstantIn(v)),
    }
}

/// Resultant of `f` and `g` with respect to `eliminate`; a polynomial in the
/// remaining variable.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, eliminate: Var) -> Result<MultiPoly, ExactError> {
    Ok(sylvester_matrix(f, g, eliminate)?.determinant())
}
