//! Independent re-derivation of the long products from eigenvector
//! identities, compared coefficient by coefficient with the installed table.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::formulas::*;
use super::universal::UniversalAlgebra;
use super::SakumaError;
use crate::algebra::resurrect;
use crate::exact::linalg::{vec_add, vec_scale, vec_sub};
use crate::exact::rational::rat;
use crate::exact::{MultiPoly, Vector};
use crate::PolyAlgebra;

/// One re-derived quantity and the places where it differs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RederiveEntry {
    pub name: String,
    pub differences: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RederiveReport {
    pub entries: Vec<RederiveEntry>,
}

impl RederiveReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.differences.is_empty())
    }

    pub fn entry(&self, name: &str) -> Option<&RederiveEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Prints only the differences, so a clean run prints nothing.
impl fmt::Display for RederiveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            for d in &e.differences {
                writeln!(f, "{}: {d}", e.name)?;
            }
        }
        Ok(())
    }
}

fn compare_vectors(derived: &[MultiPoly], installed: &[MultiPoly]) -> Vec<String> {
    (0..DIM)
        .filter(|&k| derived[k] != installed[k])
        .map(|k| format!("[{}] derived {} installed {}", LABELS[k], derived[k], installed[k]))
        .collect()
}

fn compare_scalars(derived: &MultiPoly, expected: &MultiPoly) -> Vec<String> {
    if derived == expected {
        Vec::new()
    } else {
        vec![format!("derived {derived} expected {expected}")]
    }
}

/// The algebra with the product of e_i and e_j treated as unknown (zero).
fn without(alg: &PolyAlgebra, i: usize, j: usize) -> Result<PolyAlgebra, SakumaError> {
    Ok(alg.with_product(i, j, vec![MultiPoly::zero(); DIM])?)
}

fn scaled(num: i64, den: i64, v: &[MultiPoly]) -> Vector<MultiPoly> {
    vec_scale(&c(num, den), v)
}

/// Recovers a₀σ from a₀α = 0 where α = −4σ + (rest).
fn a0_sigma_from_alpha(alg: &PolyAlgebra, k: usize, sigma: usize) -> Result<Vector<MultiPoly>, SakumaError> {
    let partial = without(alg, A0, sigma)?;
    Ok(scaled(1, 4, &partial.mul(&e(A0), &alpha(k))))
}

/// From a₀(α₁α₁ − β₁β₁ + ⟨β₁β₁, a₀⟩a₀) = 0, solved for a₀σ₂ᵒ.
fn a0_sigma2o(alg: &PolyAlgebra) -> Result<Vector<MultiPoly>, SakumaError> {
    let (a1, b1) = (alpha(1), beta(1));
    let b1b1 = alg.mul(&b1, &b1);
    let coeff = alg.inner(&b1b1, &e(A0));
    let mut x = vec_add(&vec_sub(&alg.mul(&a1, &a1), &b1b1), &vec_scale(&coeff, &e(A0)));
    let k = x[S2O].as_constant().filter(|k| !k.is_zero());
    let k = k.ok_or_else(|| SakumaError::NonConstant("sigma_2o coefficient of alpha_1^2 - beta_1^2".into()))?;
    x[S2O] = MultiPoly::zero();
    let partial = without(alg, A0, S2O)?;
    Ok(vec_scale(&MultiPoly::constant(-k.recip()), &partial.mul(&e(A0), &x)))
}

/// From (a₀a₁)α₁ = a₀(a₁α₁), solved for σ₁σ₁.
fn sigma1_sigma1_rederived(alg: &PolyAlgebra) -> Result<Vector<MultiPoly>, SakumaError> {
    let partial = without(alg, S1, S1)?;
    let a1 = alpha(1);
    let lhs = partial.mul(&partial.mul(&e(A0), &e(A1)), &a1);
    let rhs = partial.mul(&e(A0), &partial.mul(&e(A1), &a1));
    Ok(scaled(-1, 4, &vec_sub(&rhs, &lhs)))
}

/// 16·(product of σ_i, σ_j) by resurrection: with b_{1/4} = −αβ and
/// b₀ = αα′ computed without the unknown product,
/// x = 4a₀(b_{1/4} − b₀) − b_{1/4}.
fn resurrected(
    alg: &PolyAlgebra,
    unknown: (usize, usize),
    quarter: (&[MultiPoly], &[MultiPoly]),
    zero: (&[MultiPoly], &[MultiPoly]),
) -> Result<Vector<MultiPoly>, SakumaError> {
    let partial = without(alg, unknown.0, unknown.1)?;
    let b_quarter = scaled(-1, 1, &partial.mul(quarter.0, quarter.1));
    let b_zero = partial.mul(zero.0, zero.1);
    let x = resurrect(&partial, &e(A0), &b_quarter, &b_zero, &rat(1, 4))?;
    Ok(scaled(1, 16, &x))
}

/// Re-derives a₀σ₁, a₀σ₂ᵉ, a₀σ₂ᵒ, σ₁σ₁, σ₁σ₂ᵉ and σ₂ᵉσ₂ᵉ, plus the
/// γ₁ eigenvector identity and ⟨β₁, β₁⟩/4, and compares each with the
/// installed data.
pub fn rederive_products(u: &UniversalAlgebra) -> Result<RederiveReport, SakumaError> {
    let alg = &u.algebra;
    let installed = |i: usize, j: usize| alg.product(i, j).to_vec();
    let mut entries = Vec::new();
    let mut push = |name: &str, differences: Vec<String>| {
        entries.push(RederiveEntry { name: name.into(), differences });
    };

    push("a_0 sigma_1", compare_vectors(&a0_sigma_from_alpha(alg, 1, S1)?, &installed(A0, S1)));
    push("a_0 sigma_2e", compare_vectors(&a0_sigma_from_alpha(alg, 2, S2E)?, &installed(A0, S2E)));
    push("a_0 sigma_2o", compare_vectors(&a0_sigma2o(alg)?, &installed(A0, S2O)));
    push("sigma_1 sigma_1", compare_vectors(&sigma1_sigma1_rederived(alg)?, &installed(S1, S1)));
    let (a1, a2, b2) = (alpha(1), alpha(2), beta(2));
    let s1s2e = resurrected(alg, (S1, S2E), (&a1, &b2), (&a1, &a2))?;
    push("sigma_1 sigma_2e", compare_vectors(&s1s2e, &installed(S1, S2E)));
    let s2es2e = resurrected(alg, (S2E, S2E), (&a2, &b2), (&a2, &a2))?;
    push("sigma_2e sigma_2e", compare_vectors(&s2es2e, &installed(S2E, S2E)));

    let g1 = gamma1();
    push("a_0 gamma_1", compare_vectors(&alg.mul(&e(A0), &g1), &scaled(1, 32, &g1)));
    let b1 = beta(1);
    let quarter_norm = alg.inner(&b1, &b1).scale(&rat(1, 4));
    let expected = poly(&[(-1, 1, 2, 0), (1, 1, 1, 0), (1, 64, 0, 1), (-1, 64, 0, 0)]);
    push("<beta_1, beta_1>/4", compare_scalars(&quarter_norm, &expected));
    Ok(RederiveReport { entries })
}
