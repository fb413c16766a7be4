//! Buchberger's algorithm for ideals of Q[λ, μ] under grevlex (λ > μ).
//!
//! Only used to cross-check the size of a zero-dimensional quotient; the
//! classification pipeline itself relies on resultants.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::poly::{grevlex_cmp, Monomial, MultiPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialCount {
    Finite(usize),
    Infinite,
}

impl fmt::Display for MonomialCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialCount::Finite(n) => write!(f, "{n}"),
            MonomialCount::Infinite => write!(f, "infinite"),
        }
    }
}

fn divides(a: Monomial, b: Monomial) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

fn lcm(a: Monomial, b: Monomial) -> Monomial {
    (a.0.max(b.0), a.1.max(b.1))
}

fn shift(p: &MultiPoly, m: Monomial, c: &num_rational::BigRational) -> MultiPoly {
    MultiPoly::from_terms(p.terms().map(|(&(a, b), x)| ((a + m.0, b + m.1), x * c)))
}

/// Full reduction of `f` modulo `basis`.
pub fn reduce(f: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let mut p = f.clone();
    let mut rem = MultiPoly::zero();
    while let Some((lm, lc)) = p.leading_term() {
        let divisor = basis.iter().find_map(|g| {
            let (gm, gc) = g.leading_term()?;
            divides(gm, lm).then_some((g, gm, gc))
        });
        match divisor {
            Some((g, gm, gc)) => {
                let q = &lc / &gc;
                p = &p - &shift(g, (lm.0 - gm.0, lm.1 - gm.1), &q);
            }
            None => {
                rem.add_term(lm, lc.clone());
                p.add_term(lm, -lc);
            }
        }
    }
    rem
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (fm, fc) = f.leading_term().unwrap();
    let (gm, gc) = g.leading_term().unwrap();
    let l = lcm(fm, gm);
    &shift(f, (l.0 - fm.0, l.1 - fm.1), &fc.recip()) - &shift(g, (l.0 - gm.0, l.1 - gm.1), &gc.recip())
}

/// Reduced Gröbner basis, monic, sorted by leading monomial.
pub fn groebner_basis(gens: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut basis: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    let mut pairs: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let (mi, _) = basis[i].leading_term().unwrap();
        let (mj, _) = basis[j].leading_term().unwrap();
        // Buchberger's first criterion: coprime leading monomials reduce to 0.
        if lcm(mi, mj) == (mi.0 + mj.0, mi.1 + mj.1) {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic());
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // Minimalise, then inter-reduce.
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let (gm, _) = g.leading_term().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let (hm, _) = h.leading_term().unwrap();
            j != i && divides(hm, gm) && (hm != gm || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let reduced: Vec<MultiPoly> = (0..minimal.len())
        .map(|i| {
            let (lm, _) = minimal[i].leading_term().unwrap();
            let others: Vec<MultiPoly> =
                minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
            let tail = {
                let mut t = minimal[i].clone();
                t.add_term(lm, -minimal[i].coeff(lm.0, lm.1));
                t
            };
            let mut out = reduce(&tail, &others);
            out.add_term(lm, num_rational::BigRational::from_integer(1.into()));
            out
        })
        .collect();
    let mut reduced = reduced;
    reduced.sort_by(|a, b| grevlex_cmp(&a.leading_term().unwrap().0, &b.leading_term().unwrap().0));
    reduced
}

/// Number of monomials outside the leading-term ideal of `(gens)`, i.e. the
/// Q-dimension of Q[λ, μ]/(gens).
pub fn standard_monomial_count(gens: &[MultiPoly]) -> MonomialCount {
    let basis = groebner_basis(gens);
    if basis.iter().any(|g| g.is_constant()) {
        return MonomialCount::Finite(0);
    }
    let leads: Vec<Monomial> = basis.iter().map(|g| g.leading_term().unwrap().0).collect();
    let pure_l = leads.iter().filter(|m| m.1 == 0).map(|m| m.0).min();
    let pure_m = leads.iter().filter(|m| m.0 == 0).map(|m| m.1).min();
    match (pure_l, pure_m) {
        (Some(a), Some(b)) => {
            let count = (0..a)
                .flat_map(|i| (0..b).map(move |j| (i, j)))
                .filter(|&m| !leads.iter().any(|&l| divides(l, m)))
                .count();
            MonomialCount::Finite(count)
        }
        _ => MonomialCount::Infinite,
    }
}
