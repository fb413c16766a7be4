//! Discrepancy ideals, the quotients Uᵢ and the per-point checks.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::formulas::{A0, A1, A_M1, DIM};
use super::points::{evaluate_matrix, evaluate_point, solve_points, EvalPoint};
use super::universal::UniversalAlgebra;
use super::SakumaError;
use crate::algebra::{
    check_axis, ideal_closure, miyamoto, quotient, three_c, verify_algebra_map, verify_form, verify_isomorphism,
    AxisReport, QuotientAlgebra,
};
use crate::exact::linalg::{is_zero_vec, unit_vector, vec_sub};
use crate::exact::rational::RatStr;
use crate::exact::{Matrix, Rational, Vector};
use crate::fusion::{nontrivial_grading, refined_virasoro, FusionRules, Grading};
use crate::{RationalAlgebra, RationalMatrix, Subspace};

/// Maximal length of the words in τ₀ and the flip used as symmetries.
pub const WORD_BOUND: usize = 3;

/// Bound for the order search of ρ and of the shift.
pub const ORDER_BOUND: usize = 12;

/// Preference for keeping basis vectors in the quotient, most preferred
/// first: a₀, a₁, a₋₁, a₂, a₋₂, σ₁, σ₂ᵉ, σ₂ᵒ.
const KEEP_PRIORITY: [usize; DIM] = [2, 3, 1, 4, 0, 5, 6, 7];

/// The evaluated algebra, its discrepancy ideal and the quotient.
#[derive(Clone, Debug)]
pub struct Discrepancy {
    pub evaluated: RationalAlgebra,
    pub tau0: RationalMatrix,
    pub flip: RationalMatrix,
    pub ideal: Subspace<Rational>,
    pub quotient: QuotientAlgebra,
}

impl Discrepancy {
    pub fn ideal_dim(&self) -> usize {
        self.ideal.dim()
    }

    /// The map induced by `m` on the quotient, if `m` preserves the ideal.
    pub fn induced(&self, m: &RationalMatrix) -> Option<RationalMatrix> {
        if !self.ideal.basis().iter().all(|b| self.ideal.contains(&m.mul_vec(b))) {
            return None;
        }
        let cols: Vec<Vector<Rational>> = self
            .quotient
            .kept
            .iter()
            .map(|&k| self.quotient.project(&m.mul_vec(&unit_vector(DIM, k))))
            .collect();
        Some(Matrix::from_columns(&cols, self.quotient.kept.len()))
    }
}

/// All products of τ₀ and the flip of length 1..=`bound`.
fn symmetry_words(tau0: &RationalMatrix, flip: &RationalMatrix, bound: usize) -> Vec<RationalMatrix> {
    let mut all = Vec::new();
    let mut frontier = vec![Matrix::identity(DIM)];
    for _ in 0..bound {
        let next: Vec<RationalMatrix> = frontier
            .iter()
            .flat_map(|w| [tau0.mul_mat(w), flip.mul_mat(w)])
            .collect();
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Evaluates U at `pt`, collects x·y − t⁻¹(t(x)·t(y)) over basis pairs and
/// symmetry words t, closes to an ideal and takes the quotient.
pub fn discrepancy_quotient(u: &UniversalAlgebra, pt: &EvalPoint) -> Result<Discrepancy, SakumaError> {
    let evaluated = evaluate_point(u, pt);
    let tau0 = evaluate_matrix(&u.tau0, pt);
    let flip = evaluate_matrix(&u.flip, pt);
    let mut gens = Vec::new();
    for t in symmetry_words(&tau0, &flip, WORD_BOUND) {
        let inv = t.inverse().ok_or(crate::algebra::AlgebraError::NotInvertible)?;
        for i in 0..DIM {
            for j in i..DIM {
                let image = evaluated.mul(&t.column(i), &t.column(j));
                let d = vec_sub(evaluated.product(i, j), &inv.mul_vec(&image));
                if !is_zero_vec(&d) {
                    gens.push(d);
                }
            }
        }
    }
    let ideal = ideal_closure(&evaluated, &gens);
    let quotient = quotient(&evaluated, &ideal, Some(&KEEP_PRIORITY))?;
    Ok(Discrepancy { evaluated, tau0, flip, ideal, quotient })
}

/// Smallest k ≤ `bound` with m^k = I.
pub fn matrix_order(m: &RationalMatrix, bound: usize) -> Option<usize> {
    let mut p = m.clone();
    for k in 1..=bound {
        if p.is_identity() {
            return Some(k);
        }
        p = p.mul_mat(m);
    }
    None
}

/// Checks that the quotient at 3C is the three-axis algebra under
/// a₀ ↦ a, a₁ ↦ b, a₋₁ ↦ c.
pub fn three_c_identification(d: &Discrepancy) -> Result<(), SakumaError> {
    let q = &d.quotient;
    let images: Vec<Vector<Rational>> =
        [A0, A1, A_M1].iter().map(|&k| q.project(&unit_vector(DIM, k))).collect();
    let n = q.algebra.dim();
    if n != 3 {
        return Err(crate::algebra::AlgebraError::DimensionMismatch { expected: 3, got: n }.into());
    }
    let to_axes = Matrix::from_columns(&images, n)
        .inverse()
        .ok_or(crate::algebra::AlgebraError::NotInvertible)?;
    verify_isomorphism(&q.algebra, &three_c(), &to_axes)?;
    Ok(())
}

/// Everything recorded for one of the nine points.
#[derive(Clone, Debug, Serialize)]
pub struct PointReport {
    pub name: String,
    pub lambda: RatStr,
    pub mu: RatStr,
    pub nu3: RatStr,
    pub nu4: RatStr,
    pub ideal_dim: usize,
    pub quotient_dim: usize,
    pub kept: Vec<String>,
    /// check_axis for the images of a₀ and a₁.
    pub axes: Vec<AxisReport>,
    pub form_associative: bool,
    /// τ₀ and the flip preserve the ideal and induce automorphisms.
    pub symmetries_descend: bool,
    /// The Miyamoto involutions of a₀ and a₁ equal the induced τ₀ and
    /// flip·τ₀·flip.
    pub miyamoto_matches: bool,
    /// Order of ρ = τ(a₀)τ(a₁) on the quotient.
    pub rho_order: Option<usize>,
    /// Order of the induced shift a_i ↦ a_{i+1} (flip after τ₀).
    pub shift_order: Option<usize>,
    /// The numeral n of the name: the shift has order n and ρ, which is
    /// the square of the shift, has order n / gcd(n, 2).
    pub expected_shift_order: usize,
    pub expected_rho_order: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub word_bound: usize,
    pub points: Vec<PointReport>,
    pub total_dim: usize,
    /// The (λ, μ) pairs are pairwise distinct.
    pub signatures_distinct: bool,
    /// Every symbolic associativity defect vanishes at every point.
    pub defects_vanish: bool,
    pub three_c_isomorphic: bool,
    pub passed: bool,
}

fn classify_point(
    u: &UniversalAlgebra,
    pt: &EvalPoint,
    rules: &FusionRules,
    grading: &Grading,
) -> Result<PointReport, SakumaError> {
    let d = discrepancy_quotient(u, pt)?;
    let q = &d.quotient;
    let axes = q
        .marked_images
        .iter()
        .map(|a| check_axis(&q.algebra, a, rules))
        .collect::<Result<Vec<_>, _>>()?;
    let form_associative = verify_form(&q.algebra, rules.fields())?.passed();

    let tau1 = d.flip.mul_mat(&d.tau0).mul_mat(&d.flip);
    let shift = d.flip.mul_mat(&d.tau0);
    let induced: Option<Vec<RationalMatrix>> = [&d.tau0, &d.flip, &tau1, &shift].iter().map(|m| d.induced(m)).collect();
    let symmetries_descend = induced.as_ref().is_some_and(|ms| {
        ms[..2].iter().all(|m| verify_algebra_map(&q.algebra, m).is_ok())
    });

    let axes_ok = axes.iter().all(|r| r.passed());
    let (miyamoto_matches, rho_order) = if axes_ok {
        let t0 = miyamoto(&q.algebra, &q.marked_images[0], grading, rules)?;
        let t1 = miyamoto(&q.algebra, &q.marked_images[1], grading, rules)?;
        let matches = induced.as_ref().is_some_and(|ms| ms[0] == t0 && ms[2] == t1);
        (matches, matrix_order(&t0.mul_mat(&t1), ORDER_BOUND))
    } else {
        (false, None)
    };
    let shift_order = induced.as_ref().and_then(|ms| matrix_order(&ms[3], ORDER_BOUND));
    let n = pt.order();
    let expected_rho_order = if n.is_multiple_of(2) { n / 2 } else { n };

    let at = pt.coords();
    let g = u.algebra.gram();
    let a3_gram = crate::exact::linalg::dot(g.row(A0), &u.a3).evaluate(&at);
    let a4_gram = crate::exact::linalg::dot(g.row(A0), &u.a4).evaluate(&at);
    let passed = axes_ok
        && axes.len() == 2
        && form_associative
        && symmetries_descend
        && miyamoto_matches
        && rho_order == Some(expected_rho_order)
        && shift_order == Some(n);
    Ok(PointReport {
        name: pt.name.clone(),
        lambda: RatStr(pt.lambda.clone()),
        mu: RatStr(pt.mu.clone()),
        nu3: RatStr(a3_gram),
        nu4: RatStr(a4_gram),
        ideal_dim: d.ideal_dim(),
        quotient_dim: q.algebra.dim(),
        kept: q.algebra.labels().to_vec(),
        axes,
        form_associative,
        symmetries_descend,
        miyamoto_matches,
        rho_order,
        shift_order,
        expected_shift_order: n,
        expected_rho_order,
        passed,
    })
}

/// Runs the whole pipeline: solve for the nine points, build each quotient
/// and check it. With `parallel` the points are processed concurrently;
/// the report is identical either way.
pub fn classify(u: &UniversalAlgebra, parallel: bool) -> Result<ClassificationReport, SakumaError> {
    let rules = refined_virasoro(4, 3)?;
    let grading = nontrivial_grading(&rules).expect("the Ising rules are graded");
    let points = solve_points(u)?;
    let reports: Vec<PointReport> = if parallel {
        points.par_iter().map(|p| classify_point(u, p, &rules, &grading)).collect::<Result<_, _>>()?
    } else {
        points.iter().map(|p| classify_point(u, p, &rules, &grading)).collect::<Result<_, _>>()?
    };
    let total_dim = reports.iter().map(|r| r.quotient_dim).sum();
    let mut sigs: Vec<(Rational, Rational)> = points.iter().map(EvalPoint::coords).collect();
    sigs.sort();
    sigs.dedup();
    let signatures_distinct = sigs.len() == points.len();
    let defects = u.associativity_defects();
    let defects_vanish = points
        .iter()
        .all(|p| defects.iter().all(|(_, d)| d.evaluate(&p.coords()).is_zero()));
    let three_c = points
        .iter()
        .find(|p| p.name == "3C")
        .map(|p| discrepancy_quotient(u, p).and_then(|d| three_c_identification(&d)));
    let three_c_isomorphic = matches!(three_c, Some(Ok(())));
    let passed = reports.iter().all(|r| r.passed)
        && total_dim == 37
        && signatures_distinct
        && defects_vanish
        && three_c_isomorphic;
    Ok(ClassificationReport {
        word_bound: WORD_BOUND,
        points: reports,
        total_dim,
        signatures_distinct,
        defects_vanish,
        three_c_isomorphic,
        passed,
    })
}
