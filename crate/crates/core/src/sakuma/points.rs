//! Rational points of the variety p₁ = p₂ = 0 and evaluation of U at them.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::universal::UniversalAlgebra;
use super::SakumaError;
use crate::exact::rational::{as_string, format_rational, rat};
use crate::exact::unipoly::{rational_roots as uni_roots, UniPoly};
use crate::exact::{rational_roots, resultant, standard_monomial_count, MonomialCount, MultiPoly, Rational, Var};
use crate::{PolyMatrix, RationalAlgebra, RationalMatrix};

/// A name with λ and μ as (numerator, denominator).
pub type NamedPoint = (&'static str, (i64, i64), (i64, i64));

/// Names and (λ, μ) of the nine Norton-Sakuma algebras, in table order.
pub const NORTON_SAKUMA: [NamedPoint; 9] = [
    ("1A", (1, 1), (1, 1)),
    ("2B", (0, 1), (1, 1)),
    ("2A", (1, 8), (1, 1)),
    ("3C", (1, 64), (1, 64)),
    ("3A", (13, 256), (13, 256)),
    ("4A", (1, 32), (0, 1)),
    ("4B", (1, 64), (1, 8)),
    ("5A", (3, 128), (3, 128)),
    ("6A", (5, 256), (13, 256)),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalPoint {
    pub name: String,
    #[serde(with = "as_string")]
    pub lambda: Rational,
    #[serde(with = "as_string")]
    pub mu: Rational,
}

impl EvalPoint {
    /// The named point from [`NORTON_SAKUMA`].
    pub fn named(name: &str) -> Result<Self, SakumaError> {
        NORTON_SAKUMA
            .iter()
            .find(|(n, _, _)| *n == name)
            .map(|&(n, l, m)| EvalPoint { name: n.into(), lambda: rat(l.0, l.1), mu: rat(m.0, m.1) })
            .ok_or_else(|| SakumaError::UnknownPoint(name.into()))
    }

    /// The numeral of the name, e.g. 4 for "4B".
    pub fn order(&self) -> usize {
        self.name[..self.name.len() - 1].parse().expect("names are a numeral and a letter")
    }

    pub fn coords(&self) -> (Rational, Rational) {
        (self.lambda.clone(), self.mu.clone())
    }
}

/// Outcome of solving p₁ = p₂ = 0.
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub p1: MultiPoly,
    pub p2: MultiPoly,
    /// Res_μ(p₁, p₂) as a polynomial in λ.
    pub resultant_lambda: MultiPoly,
    /// Res_λ(p₁, p₂) as a polynomial in μ.
    pub resultant_mu: MultiPoly,
    pub lambda_roots: Vec<Rational>,
    pub mu_roots: Vec<Rational>,
    pub standard_monomials: MonomialCount,
    /// The points in table order.
    pub points: Vec<EvalPoint>,
}

/// Resultant, its rational roots and the recovered points.
type Elimination = (MultiPoly, Vec<Rational>, BTreeSet<(Rational, Rational)>);

/// Specialises `v = value` in `f` and returns the result as a univariate
/// polynomial in the other variable.
fn specialise(f: &MultiPoly, v: Var, value: &Rational) -> Result<UniPoly, SakumaError> {
    let g = f.substitute(v, value);
    if g.is_zero() {
        return Ok(UniPoly::zero());
    }
    Ok(g.to_unipoly(v.other())?)
}

/// Eliminates `v`, then recovers the other coordinate through the gcd of
/// the specialised generators. Points are returned as (λ, μ).
fn points_by_elimination(p1: &MultiPoly, p2: &MultiPoly, eliminate: Var) -> Result<Elimination, SakumaError> {
    let res = resultant(p1, p2, eliminate)?;
    let kept = eliminate.other();
    let roots = rational_roots(&res)?;
    let mut out = BTreeSet::new();
    for r in &roots {
        let g = specialise(p1, kept, r)?.gcd(&specialise(p2, kept, r)?);
        if g.is_zero() {
            return Err(SakumaError::Degenerate(format!("{} = {}", kept.symbol(), format_rational(r))));
        }
        if g.degree() == Some(0) {
            continue;
        }
        for s in uni_roots(&g) {
            out.insert(match kept {
                Var::Lambda => (r.clone(), s),
                Var::Mu => (s, r.clone()),
            });
        }
    }
    Ok((res, roots, out))
}

/// Solves p₁ = p₂ = 0 over Q in both elimination orders and names the
/// points.
pub fn solve(u: &UniversalAlgebra) -> Result<SolveReport, SakumaError> {
    let (p1, p2) = (u.p1(), u.p2());
    let (resultant_lambda, lambda_roots, by_mu) = points_by_elimination(&p1, &p2, Var::Mu)?;
    let (resultant_mu, mu_roots, by_lambda) = points_by_elimination(&p1, &p2, Var::Lambda)?;
    if by_mu != by_lambda {
        return Err(SakumaError::EliminationMismatch);
    }
    for pt in &by_mu {
        if !p1.evaluate(pt).is_zero() || !p2.evaluate(pt).is_zero() {
            return Err(SakumaError::EliminationMismatch);
        }
    }
    let mut points = Vec::new();
    for (l, m) in &by_mu {
        let name = NORTON_SAKUMA
            .iter()
            .find(|(_, pl, pm)| rat(pl.0, pl.1) == *l && rat(pm.0, pm.1) == *m)
            .map(|(n, _, _)| *n)
            .ok_or_else(|| SakumaError::UnnamedPoint { lambda: format_rational(l), mu: format_rational(m) })?;
        points.push(EvalPoint { name: name.into(), lambda: l.clone(), mu: m.clone() });
    }
    if points.len() != NORTON_SAKUMA.len() {
        return Err(SakumaError::PointCount(points.len()));
    }
    points.sort_by_key(|p| NORTON_SAKUMA.iter().position(|(n, _, _)| *n == p.name));
    let standard_monomials = standard_monomial_count(&[p1.clone(), p2.clone()]);
    Ok(SolveReport {
        p1,
        p2,
        resultant_lambda,
        resultant_mu,
        lambda_roots,
        mu_roots,
        standard_monomials,
        points,
    })
}

pub fn solve_points(u: &UniversalAlgebra) -> Result<Vec<EvalPoint>, SakumaError> {
    Ok(solve(u)?.points)
}

/// U with λ, μ specialised; the marked vectors are a₀ and a₁.
pub fn evaluate_point(u: &UniversalAlgebra, pt: &EvalPoint) -> RationalAlgebra {
    let at = pt.coords();
    u.algebra.map_coefficients(|p| p.evaluate(&at))
}

pub fn evaluate_matrix(m: &PolyMatrix, pt: &EvalPoint) -> RationalMatrix {
    let at = pt.coords();
    m.map(|p| p.evaluate(&at))
}
