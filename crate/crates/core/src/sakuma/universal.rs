//! Assembly of the universal algebra U = Q[λ, μ]W: the product table, the
//! Gram matrix and the two generating symmetries τ₀ and the flip.

use num_traits::{One, Zero};

use super::formulas::*;
use super::SakumaError;
use crate::algebra::StructureAlgebra;
use crate::exact::linalg::{dot, vec_scale, vec_sub};
use crate::exact::rational::Rational;
use crate::exact::{Matrix, MultiPoly, Vector};
use crate::{PolyAlgebra, PolyMatrix};

/// The universal algebra with its symmetries and the out-of-window axes.
#[derive(Clone, Debug)]
pub struct UniversalAlgebra {
    pub algebra: PolyAlgebra,
    /// a_i ↦ a_{−i}, σ's fixed.
    pub tau0: PolyMatrix,
    /// a_i ↦ a_{1−i}, σ₂ᵉ ↔ σ₂ᵒ; column a₋₂ is the a₃ expansion.
    pub flip: PolyMatrix,
    pub a3: Vector<MultiPoly>,
    pub a4: Vector<MultiPoly>,
    /// Every Gram entry that was computed along more than one route.
    pub gram_checks: Vec<RouteCheck>,
}

/// One Gram entry computed along several routes.
#[derive(Clone, Debug, PartialEq)]
pub struct RouteCheck {
    pub entry: String,
    pub values: Vec<MultiPoly>,
}

impl RouteCheck {
    pub fn agrees(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }
}

/// Partially filled symmetric product table.
struct Table {
    prod: Vec<Vec<Option<Vector<MultiPoly>>>>,
}

impl Table {
    fn new() -> Self {
        Self { prod: vec![vec![None; DIM]; DIM] }
    }

    fn set(&mut self, i: usize, j: usize, v: Vector<MultiPoly>) {
        self.prod[i][j] = Some(v.clone());
        self.prod[j][i] = Some(v);
    }

    fn get(&self, i: usize, j: usize) -> Result<&Vector<MultiPoly>, SakumaError> {
        self.prod[i][j]
            .as_ref()
            .ok_or_else(|| SakumaError::MissingProduct(LABELS[i].into(), LABELS[j].into()))
    }

    fn mul(&self, u: &[MultiPoly], v: &[MultiPoly]) -> Result<Vector<MultiPoly>, SakumaError> {
        let mut out = vec![MultiPoly::zero(); DIM];
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let c = ui * vj;
                for (o, p) in out.iter_mut().zip(self.get(i, j)?) {
                    if !p.is_zero() {
                        *o += &(&c * p);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Images of the basis under the flip, with a₋₂ sent to an extra slot 8
/// standing for a₃.
const FLIP_PERM: [usize; DIM] = [8, A2, A1, A0, A_M1, S1, S2O, S2E];

fn constant_of(p: &MultiPoly, what: &str) -> Result<Rational, SakumaError> {
    match p.as_constant() {
        Some(c) if !c.is_zero() => Ok(c),
        _ => Err(SakumaError::NonConstant(what.into())),
    }
}

/// Solves σ₁σ₁ = flip(σ₁σ₁) for a₃; the flip is the automorphism fixing σ₁.
pub fn derive_a3(s1s1: &[MultiPoly]) -> Result<Vector<MultiPoly>, SakumaError> {
    let mut diff: Vec<MultiPoly> = s1s1.to_vec();
    diff.push(MultiPoly::zero());
    for (k, p) in s1s1.iter().enumerate() {
        diff[FLIP_PERM[k]] -= p;
    }
    let c3 = constant_of(&diff[8], "a_3 coefficient of sigma_1 sigma_1 - flip(sigma_1 sigma_1)")?;
    Ok(diff[..DIM].iter().map(|p| p.scale(&(-c3.recip()))).collect())
}

fn tau0_matrix() -> PolyMatrix {
    let cols: Vec<Vector<MultiPoly>> = [A2, A1, A0, A_M1, A_M2, S1, S2E, S2O].iter().map(|&i| e(i)).collect();
    Matrix::from_columns(&cols, DIM)
}

fn flip_matrix(a3: &[MultiPoly]) -> PolyMatrix {
    let cols: Vec<Vector<MultiPoly>> = FLIP_PERM
        .iter()
        .map(|&i| if i == 8 { a3.to_vec() } else { e(i) })
        .collect();
    Matrix::from_columns(&cols, DIM)
}

/// Builds all 36 products, the Gram matrix and the symmetries.
pub fn build_universal() -> Result<UniversalAlgebra, SakumaError> {
    let mut t = Table::new();
    let s1s1 = sigma1_sigma1();
    let a3 = derive_a3(&s1s1)?;
    let tau0 = tau0_matrix();
    let flip = flip_matrix(&a3);
    let tt = |v: &[MultiPoly]| tau0.mul_vec(v);
    let ff = |v: &[MultiPoly]| flip.mul_vec(v);

    for i in [A_M2, A_M1, A0, A1, A2] {
        t.set(i, i, e(i));
    }
    for (i, j) in [(A_M2, A_M1), (A_M1, A0), (A0, A1), (A1, A2)] {
        t.set(i, j, neighbour_product(i, j, S1));
    }
    for (i, j, s) in [(A_M2, A0, S2E), (A0, A2, S2E), (A_M1, A1, S2O)] {
        t.set(i, j, neighbour_product(i, j, s));
    }
    t.set(A0, S1, a0_sigma1());
    t.set(A0, S2E, a0_sigma2e());
    t.set(A0, S2O, a0_sigma2o());

    // Conjugates of a₀-products; a₃ and a₄ stand in for axes outside W.
    let a0a3 = t.mul(&e(A0), &a3)?;
    t.set(A_M2, A1, ff(&a0a3));
    let a4 = ff(&tt(&a3));
    let a0a4 = t.mul(&e(A0), &a4)?;
    t.set(A_M2, A2, ff(&tt(&ff(&a0a4))));
    t.set(A_M1, A2, tt(t.get(A_M2, A1)?));

    t.set(A1, S1, ff(t.get(A0, S1)?));
    t.set(A_M1, S1, tt(t.get(A1, S1)?));
    t.set(A2, S1, ff(t.get(A_M1, S1)?));
    t.set(A_M2, S1, tt(t.get(A2, S1)?));

    t.set(A1, S2E, ff(t.get(A0, S2O)?));
    t.set(A_M1, S2E, tt(t.get(A1, S2E)?));
    t.set(A2, S2O, ff(t.get(A_M1, S2E)?));
    t.set(A_M2, S2O, tt(t.get(A2, S2O)?));

    t.set(A1, S2O, ff(t.get(A0, S2E)?));
    t.set(A_M1, S2O, tt(t.get(A1, S2O)?));
    t.set(A2, S2E, ff(t.get(A_M1, S2O)?));
    t.set(A_M2, S2E, tt(t.get(A2, S2E)?));

    t.set(S1, S1, s1s1);
    let s1s2e = sigma1_sigma2e();
    let s2es2e = sigma2e_sigma2e();
    t.set(S1, S2E, s1s2e.clone());
    t.set(S2E, S2E, s2es2e.clone());

    // σ₂ᵒ = (a₃ − rest)/k with rest free of σ₂ᵒ, so σ₂ᵒw = (a₃w − rest·w)/k
    // where a₃w = flip(a₋₂ · flip(w)).
    let k = constant_of(&a3[S2O], "sigma_2o coefficient of a_3")?;
    let mut rest = a3.clone();
    rest[S2O] = MultiPoly::zero();
    let via_a3 = |t: &Table, w: usize| -> Result<Vector<MultiPoly>, SakumaError> {
        let a3w = ff(&t.mul(&e(A_M2), &ff(&e(w)))?);
        Ok(vec_scale(&MultiPoly::constant(k.recip()), &vec_sub(&a3w, &t.mul(&rest, &e(w))?)))
    };
    let s1s2o = ff(&s1s2e);
    if via_a3(&t, S1)? != s1s2o {
        return Err(SakumaError::RouteMismatch("sigma_1 sigma_2o".into()));
    }
    t.set(S1, S2O, s1s2o);
    let s2es2o = via_a3(&t, S2E)?;
    t.set(S2E, S2O, s2es2o);
    t.set(S2O, S2O, ff(&s2es2e));

    let product: Vec<Vec<Vector<MultiPoly>>> = (0..DIM)
        .map(|i| (0..DIM).map(|j| t.get(i, j).cloned()).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;

    let (gram, gram_checks) = gram_complete(&t, &a3, &a4)?;
    let algebra = StructureAlgebra::new(LABELS.iter().map(|s| s.to_string()).collect(), product, gram, vec![A0, A1])?;
    Ok(UniversalAlgebra { algebra, tau0, flip, a3, a4, gram_checks })
}

/// σ-index together with the axis pairs (i, j) whose product is σ plus
/// (a_i + a_j)/32.
const SIGMA_PAIRS: [(usize, &[(usize, usize)]); 3] = [
    (S1, &[(A0, A1), (A_M1, A0), (A_M2, A_M1), (A1, A2)]),
    (S2E, &[(A0, A2), (A_M2, A0)]),
    (S2O, &[(A_M1, A1)]),
];

/// Completes the Gram matrix and recomputes every closed-form entry.
///
/// Entries between two σ's have no closed form here; each is obtained as
/// ⟨σ, w⟩ = ⟨a_i, a_j w⟩ − (⟨a_i, w⟩ + ⟨a_j, w⟩)/32 for every admissible
/// pair (i, j) of either argument, and all routes must agree.
fn gram_complete(
    t: &Table,
    a3: &[MultiPoly],
    a4: &[MultiPoly],
) -> Result<(PolyMatrix, Vec<RouteCheck>), SakumaError> {
    let nu = nus();
    let axes = [A_M2, A_M1, A0, A1, A2];
    let mut g: PolyMatrix = Matrix::zeros(DIM, DIM);
    let put = |g: &mut PolyMatrix, i: usize, j: usize, p: MultiPoly| {
        g[(i, j)] = p.clone();
        g[(j, i)] = p;
    };
    for (x, &i) in axes.iter().enumerate() {
        for (y, &j) in axes.iter().enumerate() {
            put(&mut g, i, j, nu[x.abs_diff(y)].clone());
        }
        put(&mut g, i, S1, axis_sigma1());
        let even = x % 2 == 0;
        let (same, other) = (axis_sigma2_same(), axis_sigma2_other());
        put(&mut g, i, S2E, if even { same.clone() } else { other.clone() });
        put(&mut g, i, S2O, if even { other } else { same });
    }
    put(&mut g, S1, S1, sigma1_norm());

    let row = |g: &PolyMatrix, i: usize, v: &[MultiPoly]| dot(g.row(i), v);
    let thirty_second = Rational::new(1.into(), 32.into());
    let route = |g: &PolyMatrix, (i, j): (usize, usize), w: usize| -> Result<MultiPoly, SakumaError> {
        let ajw = t.mul(&e(j), &e(w))?;
        Ok(&row(g, i, &ajw) - &(&g[(i, w)] + &g[(j, w)]).scale(&thirty_second))
    };
    let routes = |g: &PolyMatrix, x: usize, y: usize| -> Result<Vec<MultiPoly>, SakumaError> {
        let mut out = Vec::new();
        for (s, w) in [(x, y), (y, x)] {
            let pairs = SIGMA_PAIRS.iter().find(|(t, _)| *t == s).expect("sigma index").1;
            for &p in pairs {
                out.push(route(g, p, w)?);
            }
        }
        Ok(out)
    };

    let mut checks = Vec::new();
    for (x, y) in [(S1, S2E), (S1, S2O), (S2E, S2E), (S2E, S2O), (S2O, S2O)] {
        let values = routes(&g, x, y)?;
        put(&mut g, x, y, values[0].clone());
        checks.push(RouteCheck { entry: format!("<{}, {}>", LABELS[x], LABELS[y]), values });
    }

    let mut s1_values = vec![g[(S1, S1)].clone()];
    s1_values.extend(routes(&g, S1, S1)?);
    checks.push(RouteCheck { entry: "<sigma_1, sigma_1>".into(), values: s1_values });
    checks.push(RouteCheck { entry: "nu_3 = <a_0, a_3>".into(), values: vec![nu[3].clone(), row(&g, A0, a3)] });
    checks.push(RouteCheck { entry: "nu_4 = <a_0, a_4>".into(), values: vec![nu[4].clone(), row(&g, A0, a4)] });
    // ⟨a₀, σ₂ᵉ⟩ = ⟨a₀a₀, a₂⟩ − (1 + μ)/32 and ⟨a₀, σ₂ᵒ⟩ = ⟨a₀a₋₁, a₁⟩ − 2λ/32.
    let a0s2e = &g[(A0, A2)] - &(&MultiPoly::one() + &g[(A0, A2)]).scale(&thirty_second);
    checks.push(RouteCheck { entry: "<a_0, sigma_2e>".into(), values: vec![g[(A0, S2E)].clone(), a0s2e] });
    let a0s2o = &row(&g, A1, t.get(A0, A_M1)?) - &g[(A0, A1)].scale(&Rational::new(1.into(), 16.into()));
    checks.push(RouteCheck { entry: "<a_0, sigma_2o>".into(), values: vec![g[(A0, S2O)].clone(), a0s2o] });
    // ⟨a_k, σ₁⟩ = ⟨a_k a₀, a₁⟩ − (⟨a_k, a₀⟩ + ⟨a_k, a₁⟩)/32.
    for (x, &k) in axes.iter().enumerate() {
        let lhs = &row(&g, A1, t.get(k, A0)?) - &(&g[(k, A0)] + &g[(k, A1)]).scale(&thirty_second);
        checks.push(RouteCheck {
            entry: format!("<a_{}, sigma_1>", x as i32 - 2),
            values: vec![g[(k, S1)].clone(), lhs],
        });
    }

    if let Some(bad) = checks.iter().find(|c| !c.agrees()) {
        return Err(SakumaError::RouteMismatch(bad.entry.clone()));
    }
    Ok((g, checks))
}

impl UniversalAlgebra {
    pub fn t_matrices(&self) -> (&PolyMatrix, &PolyMatrix) {
        (&self.tau0, &self.flip)
    }

    /// Every basis triple (i, j, k) with ⟨e_i e_j, e_k⟩ ≠ ⟨e_i, e_j e_k⟩,
    /// together with that defect.
    pub fn associativity_defects(&self) -> Vec<((usize, usize, usize), MultiPoly)> {
        let mut out = Vec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let d = self.algebra.associativity_defect(i, j, k);
                    if !d.is_zero() {
                        out.push(((i, j, k), d));
                    }
                }
            }
        }
        out
    }

    /// ⟨a₋₁a₋₂, a₁⟩ − ⟨a₋₁, a₋₂a₁⟩ before normalisation.
    pub fn p1_raw(&self) -> MultiPoly {
        self.algebra.associativity_defect(A_M1, A_M2, A1)
    }

    /// ⟨a₋₂, a₁⟩ − ⟨a₋₂, a₋₂a₁⟩, i.e. the defect of (a₋₂, a₋₂, a₁), before
    /// normalisation.
    pub fn p2_raw(&self) -> MultiPoly {
        self.algebra.associativity_defect(A_M2, A_M2, A1)
    }

    /// [`p1_raw`](Self::p1_raw) scaled to leading coefficient 1.
    pub fn p1(&self) -> MultiPoly {
        self.p1_raw().monic()
    }

    pub fn p2(&self) -> MultiPoly {
        self.p2_raw().monic()
    }

    /// Checks a₀α₁ = 0, a₀β₁ = β₁/4, a₀γ₁ = γ₁/32, a₀α₂ = 0 and
    /// a₀β₂ = β₂/4 over Q[λ, μ].
    pub fn eigenvector_identities(&self) -> Vec<(String, bool)> {
        let a = &self.algebra;
        let a0 = e(A0);
        let check = |v: &Vector<MultiPoly>, theta: (i64, i64)| {
            a.mul(&a0, v) == vec_scale(&c(theta.0, theta.1), v)
        };
        vec![
            ("a_0 alpha_1 = 0".into(), check(&alpha(1), (0, 1))),
            ("a_0 beta_1 = beta_1/4".into(), check(&beta(1), (1, 4))),
            ("a_0 gamma_1 = gamma_1/32".into(), check(&gamma1(), (1, 32))),
            ("a_0 alpha_2 = 0".into(), check(&alpha(2), (0, 1))),
            ("a_0 beta_2 = beta_2/4".into(), check(&beta(2), (1, 4))),
        ]
    }

    /// Whether flip² is the identity over Q[λ, μ].
    pub fn flip_is_involution(&self) -> bool {
        self.flip.mul_mat(&self.flip).is_identity()
    }
}
