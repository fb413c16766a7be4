//! Finite-dimensional commutative algebras given by structure constants,
//! with the axis, Miyamoto involution and Frobenius form predicates.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::exact::linalg::{dot, is_zero_vec, unit_vector, vec_add, vec_scale, vec_sub};
use crate::exact::rational::{format_rational, parse_rational, RatStr};
use crate::exact::{Matrix, MultiPoly, Rational, UniPoly, Vector};
use crate::fusion::{FusionRules, Grading};
use crate::scalar::{Field, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("product is not commutative at ({0}, {1})")]
    NotCommutative(usize, usize),
    #[error("Gram matrix is not symmetric")]
    GramNotSymmetric,
    #[error("marked index {0} out of range")]
    MarkedOutOfRange(usize),
    #[error("eigenspaces do not span the algebra (ad(a) is not diagonalisable over the given spectrum)")]
    NotSemisimple,
    #[error("map is not an involution")]
    NotInvolution,
    #[error("map is not an algebra automorphism at basis pair ({0}, {1})")]
    NotAutomorphism(usize, usize),
    #[error("map is not invertible")]
    NotInvertible,
    #[error("map does not preserve the form")]
    NotIsometry,
    #[error("resurrection needs a nonzero eigenvalue")]
    ZeroEigenvalue,
    #[error("subspace is not closed under multiplication by basis vector {0}")]
    NotIdeal(usize),
    #[error("form does not vanish on the ideal (basis vector {0})")]
    FormDoesNotVanish(usize),
    #[error("invalid algebra JSON: {0}")]
    Json(String),
}

/// Commutative algebra on a fixed basis with a symmetric bilinear form.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureAlgebra<R> {
    labels: Vec<String>,
    product: Vec<Vec<Vector<R>>>,
    gram: Matrix<R>,
    marked: Vec<usize>,
}

impl<R: Ring> StructureAlgebra<R> {
    /// Validates shapes, commutativity of the table and symmetry of the form.
    pub fn new(
        labels: Vec<String>,
        product: Vec<Vec<Vector<R>>>,
        gram: Matrix<R>,
        marked: Vec<usize>,
    ) -> Result<Self, AlgebraError> {
        let n = labels.len();
        let mismatch = |got| AlgebraError::DimensionMismatch { expected: n, got };
        if product.len() != n {
            return Err(mismatch(product.len()));
        }
        for row in &product {
            if row.len() != n {
                return Err(mismatch(row.len()));
            }
            if let Some(v) = row.iter().find(|v| v.len() != n) {
                return Err(mismatch(v.len()));
            }
        }
        if gram.nrows() != n || gram.ncols() != n {
            return Err(mismatch(gram.nrows()));
        }
        for i in 0..n {
            for j in 0..i {
                if product[i][j] != product[j][i] {
                    return Err(AlgebraError::NotCommutative(i, j));
                }
            }
        }
        if !gram.is_symmetric() {
            return Err(AlgebraError::GramNotSymmetric);
        }
        if let Some(&m) = marked.iter().find(|&&m| m >= n) {
            return Err(AlgebraError::MarkedOutOfRange(m));
        }
        Ok(Self { labels, product, gram, marked })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn product(&self, i: usize, j: usize) -> &[R] {
        &self.product[i][j]
    }

    pub fn gram(&self) -> &Matrix<R> {
        &self.gram
    }

    pub fn marked(&self) -> &[usize] {
        &self.marked
    }

    pub fn basis_vector(&self, i: usize) -> Vector<R> {
        unit_vector(self.dim(), i)
    }

    pub fn marked_vectors(&self) -> Vec<Vector<R>> {
        self.marked.iter().map(|&i| self.basis_vector(i)).collect()
    }

    fn check_len(&self, v: &[R]) -> Result<(), AlgebraError> {
        if v.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim(), got: v.len() });
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &[R], y: &[R]) -> Result<Vector<R>, AlgebraError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.mul(x, y))
    }

    /// As [`multiply`](Self::multiply) but panics on a length mismatch.
    pub fn mul(&self, x: &[R], y: &[R]) -> Vector<R> {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "vector length differs from algebra dimension");
        let mut out = vec![R::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.clone() * yj.clone();
                for (o, p) in out.iter_mut().zip(&self.product[i][j]) {
                    if !p.is_zero() {
                        *o = o.clone() + c.clone() * p.clone();
                    }
                }
            }
        }
        out
    }

    /// ⟨x, y⟩ from the Gram matrix.
    pub fn inner(&self, x: &[R], y: &[R]) -> R {
        dot(x, &self.gram.mul_vec(y))
    }

    /// Matrix of x ↦ a·x; column j is a·e_j.
    pub fn ad_matrix(&self, a: &[R]) -> Matrix<R> {
        let cols: Vec<Vector<R>> = (0..self.dim()).map(|j| self.mul(a, &self.basis_vector(j))).collect();
        Matrix::from_columns(&cols, self.dim())
    }

    /// Applies `f` to every structure constant and Gram entry.
    pub fn map_coefficients<S: Ring>(&self, f: impl Fn(&R) -> S) -> StructureAlgebra<S> {
        StructureAlgebra {
            labels: self.labels.clone(),
            product: self
                .product
                .iter()
                .map(|row| row.iter().map(|v| v.iter().map(&f).collect()).collect())
                .collect(),
            gram: self.gram.map(&f),
            marked: self.marked.clone(),
        }
    }

    /// Copy with the product of e_i and e_j (both orders) replaced by `v`.
    pub fn with_product(&self, i: usize, j: usize, v: Vector<R>) -> Result<Self, AlgebraError> {
        self.check_len(&v)?;
        let mut out = self.clone();
        out.product[i][j] = v.clone();
        out.product[j][i] = v;
        Ok(out)
    }

    /// ⟨xy, z⟩ − ⟨x, yz⟩ on basis vectors.
    pub fn associativity_defect(&self, i: usize, j: usize, k: usize) -> R {
        let lhs = dot(&self.product[i][j], &self.gram.column(k));
        let rhs = dot(&self.gram.column(i), &self.product[j][k]);
        lhs - rhs
    }
}

/// Horner evaluation of `f(ad(a))` applied to `v`.
pub fn apply_ad_poly<R: Ring>(
    alg: &StructureAlgebra<R>,
    f: &UniPoly,
    a: &[R],
    v: &[R],
) -> Result<Vector<R>, AlgebraError> {
    alg.check_len(a)?;
    alg.check_len(v)?;
    let mut acc = vec![R::zero(); alg.dim()];
    for c in f.coeffs().iter().rev() {
        acc = alg.mul(a, &acc);
        acc = vec_add(&acc, &vec_scale(&R::from_rational(c.clone()), v));
    }
    Ok(acc)
}

/// Π (t − ν) over the given values.
pub fn annihilator(values: &[Rational]) -> UniPoly {
    values
        .iter()
        .fold(UniPoly::constant(Rational::one()), |acc, v| acc.mul(&UniPoly::linear_root(v)))
}

/// Subspace in canonical form: the nonzero rows of a reduced echelon matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<R> {
    ambient: usize,
    basis: Vec<Vector<R>>,
    pivots: Vec<usize>,
}

impl<R: Field> Subspace<R> {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn whole(ambient: usize) -> Self {
        Self::span(ambient, &(0..ambient).map(|i| unit_vector(ambient, i)).collect::<Vec<_>>())
    }

    pub fn span(ambient: usize, vectors: &[Vector<R>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let (red, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
        let basis = (0..pivots.len()).map(|i| red.row(i).to_vec()).collect();
        Self { ambient, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector<R>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its pivot-coordinate components along the basis.
    pub fn reduce(&self, v: &[R]) -> Vector<R> {
        let mut w = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                w = vec_sub(&w, &vec_scale(&w[p].clone(), b));
            }
        }
        w
    }

    pub fn contains(&self, v: &[R]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn sum(&self, other: &Subspace<R>) -> Subspace<R> {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &all)
    }
}

/// Eigenspaces of ad(a) for each candidate eigenvalue.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenDecomposition {
    pub spaces: Vec<(Rational, Subspace<Rational>)>,
    pub semisimple: bool,
}

impl EigenDecomposition {
    pub fn space(&self, theta: &Rational) -> Option<&Subspace<Rational>> {
        self.spaces.iter().find(|(t, _)| t == theta).map(|(_, s)| s)
    }

    pub fn dims(&self) -> Vec<(Rational, usize)> {
        self.spaces.iter().map(|(t, s)| (t.clone(), s.dim())).collect()
    }
}

/// ker(ad(a) − θ) for each θ in `candidates`; no eigenvalue search is done.
pub fn eigen_decompose(
    alg: &StructureAlgebra<Rational>,
    a: &[Rational],
    candidates: &[Rational],
) -> Result<EigenDecomposition, AlgebraError> {
    alg.check_len(a)?;
    let ad = alg.ad_matrix(a);
    let n = alg.dim();
    let mut spaces = Vec::new();
    let mut total = 0;
    for theta in candidates {
        let shifted = ad.sub_mat(&Matrix::identity(n).map(|x| x * theta));
        let space = Subspace::span(n, &shifted.kernel());
        total += space.dim();
        spaces.push((theta.clone(), space));
    }
    Ok(EigenDecomposition { spaces, semisimple: total == n })
}

/// Outcome of the axis conditions for one element.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxisReport {
    pub idempotent: bool,
    pub norm: RatStr,
    pub norm_ok: bool,
    /// Eigenspace dimension for every field of the rules, in field order.
    pub spectrum: Vec<(RatStr, usize)>,
    pub semisimple: bool,
    pub primitive: bool,
    pub fusion_ok: bool,
    pub violations: Vec<String>,
}

impl AxisReport {
    pub fn passed(&self) -> bool {
        self.idempotent && self.norm_ok && self.semisimple && self.primitive && self.fusion_ok
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spectrum.iter().map(|(_, d)| *d).collect()
    }

    pub fn dim_of(&self, field: &Rational) -> Option<usize> {
        self.spectrum.iter().find(|(f, _)| &f.0 == field).map(|(_, d)| *d)
    }
}

impl fmt::Display for AxisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spec: Vec<String> =
            self.spectrum.iter().map(|(t, d)| format!("{}:{}", format_rational(&t.0), d)).collect();
        write!(
            f,
            "idempotent={} norm={} norm_ok={} spectrum=[{}] semisimple={} primitive={} fusion_ok={}",
            self.idempotent,
            format_rational(&self.norm.0),
            self.norm_ok,
            spec.join(", "),
            self.semisimple,
            self.primitive,
            self.fusion_ok
        )?;
        for v in &self.violations {
            write!(f, "\n  violation: {v}")?;
        }
        Ok(())
    }
}

/// Checks idempotency, ⟨a,a⟩ = 2·CC, semisimplicity over the field set,
/// primitivity and every fusion cell of `rules`.
pub fn check_axis(
    alg: &StructureAlgebra<Rational>,
    a: &[Rational],
    rules: &FusionRules,
) -> Result<AxisReport, AlgebraError> {
    alg.check_len(a)?;
    let idempotent = alg.mul(a, a) == a;
    let norm = alg.inner(a, a);
    let norm_ok = norm == rules.central_charge() * Rational::from_integer(2.into());
    let eig = eigen_decompose(alg, a, rules.fields())?;
    let one = Rational::one();
    let primitive = eig
        .space(&one)
        .is_some_and(|s| s.dim() == 1 && !is_zero_vec(a) && s.contains(a));
    let mut violations = Vec::new();
    let fields = rules.fields();
    for i in 0..fields.len() {
        let si = &eig.spaces[i].1;
        if si.dim() == 0 {
            continue;
        }
        for j in i..fields.len() {
            let sj = &eig.spaces[j].1;
            if sj.dim() == 0 {
                continue;
            }
            let allowed: Vec<Rational> =
                rules.star_indices(i, j).iter().map(|&k| fields[k].clone()).collect();
            let f = annihilator(&allowed);
            let bad = si.basis().iter().any(|u| {
                sj.basis()
                    .iter()
                    .any(|v| !is_zero_vec(&apply_ad_poly(alg, &f, a, &alg.mul(u, v)).unwrap()))
            });
            if bad {
                violations.push(format!(
                    "A_{} · A_{} not inside A_{{{}}}",
                    format_rational(&fields[i]),
                    format_rational(&fields[j]),
                    allowed.iter().map(format_rational).collect::<Vec<_>>().join(",")
                ));
            }
        }
    }
    Ok(AxisReport {
        idempotent,
        norm: RatStr(norm),
        norm_ok,
        spectrum: eig.dims().into_iter().map(|(t, d)| (RatStr(t), d)).collect(),
        semisimple: eig.semisimple,
        primitive,
        fusion_ok: violations.is_empty(),
        violations,
    })
}

/// Checks that `m` is an involutive, form-preserving algebra automorphism.
pub fn verify_automorphism(alg: &StructureAlgebra<Rational>, m: &Matrix<Rational>) -> Result<(), AlgebraError> {
    if !m.mul_mat(m).is_identity() {
        return Err(AlgebraError::NotInvolution);
    }
    verify_algebra_map(alg, m)?;
    if m.transpose().mul_mat(alg.gram()).mul_mat(m) != *alg.gram() {
        return Err(AlgebraError::NotIsometry);
    }
    Ok(())
}

/// Checks m(e_i e_j) = m(e_i) m(e_j) on all basis pairs.
pub fn verify_algebra_map(alg: &StructureAlgebra<Rational>, m: &Matrix<Rational>) -> Result<(), AlgebraError> {
    let n = alg.dim();
    for i in 0..n {
        for j in i..n {
            let lhs = m.mul_vec(alg.product(i, j));
            let rhs = alg.mul(&m.column(i), &m.column(j));
            if lhs != rhs {
                return Err(AlgebraError::NotAutomorphism(i, j));
            }
        }
    }
    Ok(())
}

/// Checks that the invertible matrix `m` (columns are images of the basis of
/// `src` in coordinates of `dst`) carries products and form of `src` onto
/// those of `dst`.
pub fn verify_isomorphism(
    src: &StructureAlgebra<Rational>,
    dst: &StructureAlgebra<Rational>,
    m: &Matrix<Rational>,
) -> Result<(), AlgebraError> {
    let n = src.dim();
    if dst.dim() != n || m.nrows() != n || m.ncols() != n {
        return Err(AlgebraError::DimensionMismatch { expected: n, got: dst.dim() });
    }
    if m.inverse().is_none() {
        return Err(AlgebraError::NotInvertible);
    }
    for i in 0..n {
        for j in i..n {
            if m.mul_vec(src.product(i, j)) != dst.mul(&m.column(i), &m.column(j)) {
                return Err(AlgebraError::NotAutomorphism(i, j));
            }
        }
    }
    if m.transpose().mul_mat(dst.gram()).mul_mat(m) != *src.gram() {
        return Err(AlgebraError::NotIsometry);
    }
    Ok(())
}

/// The Miyamoto involution of `a`: +1 on even eigenspaces, −1 on odd ones.
/// The result is verified to be an involutive isometric automorphism.
pub fn miyamoto(
    alg: &StructureAlgebra<Rational>,
    a: &[Rational],
    grading: &Grading,
    rules: &FusionRules,
) -> Result<Matrix<Rational>, AlgebraError> {
    let eig = eigen_decompose(alg, a, rules.fields())?;
    if !eig.semisimple {
        return Err(AlgebraError::NotSemisimple);
    }
    let n = alg.dim();
    let mut cols = Vec::new();
    let mut images = Vec::new();
    for (theta, space) in &eig.spaces {
        let sign = if grading.is_odd(theta) { -Rational::one() } else { Rational::one() };
        for v in space.basis() {
            cols.push(v.clone());
            images.push(vec_scale(&sign, v));
        }
    }
    let p = Matrix::from_columns(&cols, n);
    let p_inv = p.inverse().ok_or(AlgebraError::NotSemisimple)?;
    let tau = Matrix::from_columns(&images, n).mul_mat(&p_inv);
    verify_automorphism(alg, &tau)?;
    Ok(tau)
}

/// Form symmetry, associativity and eigenspace perpendicularity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FormReport {
    pub symmetric: bool,
    pub associative: bool,
    /// Basis triples (i, j, k) with ⟨e_i e_j, e_k⟩ ≠ ⟨e_i, e_j e_k⟩.
    pub failing_triples: Vec<(usize, usize, usize)>,
    /// For each marked axis: distinct eigenspaces are perpendicular.
    pub perpendicular: Vec<bool>,
}

impl FormReport {
    pub fn passed(&self) -> bool {
        self.symmetric && self.associative && self.perpendicular.iter().all(|&p| p)
    }
}

/// Checks the form on every basis triple and, for each marked axis, that
/// eigenspaces for distinct candidates are perpendicular.
pub fn verify_form(alg: &StructureAlgebra<Rational>, candidates: &[Rational]) -> Result<FormReport, AlgebraError> {
    let n = alg.dim();
    let mut failing = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !alg.associativity_defect(i, j, k).is_zero() {
                    failing.push((i, j, k));
                }
            }
        }
    }
    let mut perpendicular = Vec::new();
    for a in alg.marked_vectors() {
        let eig = eigen_decompose(alg, &a, candidates)?;
        let mut ok = true;
        for (x, (_, sx)) in eig.spaces.iter().enumerate() {
            for (_, sy) in &eig.spaces[x + 1..] {
                for u in sx.basis() {
                    for v in sy.basis() {
                        ok &= alg.inner(u, v).is_zero();
                    }
                }
            }
        }
        perpendicular.push(ok);
    }
    Ok(FormReport {
        symmetric: alg.gram().is_symmetric(),
        associative: failing.is_empty(),
        failing_triples: failing,
        perpendicular,
    })
}

/// a(xz) = (ax)z for every basis vector x and every z in a basis of A₀.
pub fn seress_assoc_check(alg: &StructureAlgebra<Rational>, a: &[Rational]) -> Result<bool, AlgebraError> {
    alg.check_len(a)?;
    let zero_space = Subspace::span(alg.dim(), &alg.ad_matrix(a).kernel());
    Ok((0..alg.dim()).all(|i| {
        let x = alg.basis_vector(i);
        zero_space
            .basis()
            .iter()
            .all(|z| alg.mul(a, &alg.mul(&x, z)) == alg.mul(&alg.mul(a, &x), z))
    }))
}

/// x = (1/λ)·a(b_λ − b₀) − b_λ.
pub fn resurrect<R: Ring>(
    alg: &StructureAlgebra<R>,
    a: &[R],
    b_lm: &[R],
    b_0: &[R],
    lm: &Rational,
) -> Result<Vector<R>, AlgebraError> {
    if lm.is_zero() {
        return Err(AlgebraError::ZeroEigenvalue);
    }
    alg.check_len(a)?;
    alg.check_len(b_lm)?;
    alg.check_len(b_0)?;
    let inv = R::from_rational(lm.recip());
    let t = alg.mul(a, &vec_sub(b_lm, b_0));
    Ok(vec_sub(&vec_scale(&inv, &t), b_lm))
}

/// Smallest subspace containing `gens` and closed under multiplication by
/// every basis vector.
pub fn ideal_closure(alg: &StructureAlgebra<Rational>, gens: &[Vector<Rational>]) -> Subspace<Rational> {
    let n = alg.dim();
    let mut current = Subspace::span(n, gens);
    loop {
        let mut all = current.basis().to_vec();
        for b in current.basis() {
            for k in 0..n {
                all.push(alg.mul(b, &alg.basis_vector(k)));
            }
        }
        let next = Subspace::span(n, &all);
        if next.dim() == current.dim() {
            return current;
        }
        current = next;
    }
}

/// A quotient algebra together with the coordinates it was built on.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientAlgebra {
    pub algebra: StructureAlgebra<Rational>,
    /// Original basis indices kept as the complement basis, ascending.
    pub kept: Vec<usize>,
    /// dim(quotient) × dim(original) matrix of the projection.
    pub projection: Matrix<Rational>,
    /// Images of the original marked vectors.
    pub marked_images: Vec<Vector<Rational>>,
}

impl QuotientAlgebra {
    pub fn project(&self, v: &[Rational]) -> Vector<Rational> {
        self.projection.mul_vec(v)
    }
}

/// Quotient by the ideal `ideal`, keeping original basis vectors as the
/// complement. `priority` lists indices from most to least preferred to
/// keep (default: ascending index).
///
/// Fails if `ideal` is not closed under multiplication or if the form does
/// not vanish on it.
pub fn quotient(
    alg: &StructureAlgebra<Rational>,
    ideal: &Subspace<Rational>,
    priority: Option<&[usize]>,
) -> Result<QuotientAlgebra, AlgebraError> {
    let n = alg.dim();
    for b in ideal.basis() {
        for k in 0..n {
            if !ideal.contains(&alg.mul(b, &alg.basis_vector(k))) {
                return Err(AlgebraError::NotIdeal(k));
            }
            if !alg.inner(b, &alg.basis_vector(k)).is_zero() {
                return Err(AlgebraError::FormDoesNotVanish(k));
            }
        }
    }
    let default: Vec<usize> = (0..n).collect();
    let priority = priority.unwrap_or(&default);
    if priority.len() != n {
        return Err(AlgebraError::DimensionMismatch { expected: n, got: priority.len() });
    }
    // Least preferred first, so row reduction pivots on them.
    let order: Vec<usize> = priority.iter().rev().copied().collect();
    let permute = |v: &[Rational]| -> Vector<Rational> { order.iter().map(|&o| v[o].clone()).collect() };
    let permuted = Subspace::span(n, &ideal.basis().iter().map(|b| permute(b)).collect::<Vec<_>>());
    let mut kept: Vec<usize> = (0..n)
        .filter(|c| !permuted.pivots().contains(c))
        .map(|c| order[c])
        .collect();
    kept.sort_unstable();
    let project = |v: &[Rational]| -> Vector<Rational> {
        let w = permuted.reduce(&permute(v));
        let mut full = vec![Rational::zero(); n];
        for (c, &o) in order.iter().enumerate() {
            full[o] = w[c].clone();
        }
        kept.iter().map(|&k| full[k].clone()).collect()
    };
    let cols: Vec<Vector<Rational>> = (0..n).map(|i| project(&unit_vector(n, i))).collect();
    let projection = Matrix::from_columns(&cols, kept.len());
    let product = kept
        .iter()
        .map(|&i| kept.iter().map(|&j| project(alg.product(i, j))).collect())
        .collect();
    let gram = Matrix::from_rows(
        kept.iter().map(|&i| kept.iter().map(|&j| alg.gram()[(i, j)].clone()).collect()).collect(),
    );
    let marked_images: Vec<Vector<Rational>> = alg.marked().iter().map(|&m| cols[m].clone()).collect();
    let marked = marked_images
        .iter()
        .filter_map(|v| {
            let nz: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
            (nz.len() == 1 && v[nz[0]].is_one()).then_some(nz[0])
        })
        .collect();
    let labels = kept.iter().map(|&k| alg.labels()[k].clone()).collect();
    let algebra = StructureAlgebra::new(labels, product, gram, marked)?;
    Ok(QuotientAlgebra { algebra, kept, projection, marked_images })
}

/// The 3-dimensional algebra on {a, b, c} with xx = x,
/// xy = (1/64)(x + y − z) and ⟨x, y⟩ = 1/64 for x ≠ y, ⟨x, x⟩ = 1.
pub fn three_c() -> StructureAlgebra<Rational> {
    let c = Rational::new(1.into(), 64.into());
    let mut product = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
    for x in 0..3 {
        for y in 0..3 {
            if x == y {
                product[x][y][x] = Rational::one();
            } else {
                let z = 3 - x - y;
                product[x][y][x] = c.clone();
                product[x][y][y] = c.clone();
                product[x][y][z] = -c.clone();
            }
        }
    }
    let gram = Matrix::from_rows(
        (0..3)
            .map(|i| (0..3).map(|j| if i == j { Rational::one() } else { c.clone() }).collect())
            .collect(),
    );
    StructureAlgebra::new(vec!["a".into(), "b".into(), "c".into()], product, gram, vec![0, 1, 2])
        .expect("static table is well formed")
}

/// JSON encoding of a single coefficient.
pub trait JsonCoeff: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, String>;
}

impl JsonCoeff for Rational {
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }

    fn from_json(v: &Value) -> Result<Self, String> {
        match v {
            Value::String(s) => parse_rational(s).map_err(|e| e.to_string()),
            other => Err(format!("expected a rational string, found {other}")),
        }
    }
}

impl JsonCoeff for MultiPoly {
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("polynomial serialises")
    }

    fn from_json(v: &Value) -> Result<Self, String> {
        serde_json::from_value(v.clone()).map_err(|e| e.to_string())
    }
}

impl<R: Ring + JsonCoeff> StructureAlgebra<R> {
    /// `{"dim", "labels", "product", "gram", "marked"}`.
    pub fn to_json(&self) -> Value {
        let vec_json = |v: &Vector<R>| Value::Array(v.iter().map(JsonCoeff::to_json).collect());
        json!({
            "dim": self.dim(),
            "labels": self.labels,
            "product": self.product.iter().map(|row| row.iter().map(vec_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "gram": self.gram.to_rows().iter().map(vec_json).collect::<Vec<_>>(),
            "marked": self.marked,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        let err = |m: String| AlgebraError::Json(m);
        let field = |k: &str| v.get(k).ok_or_else(|| err(format!("missing key {k:?}")));
        let dim = field("dim")?.as_u64().ok_or_else(|| err("dim must be an integer".into()))? as usize;
        let labels: Vec<String> =
            serde_json::from_value(field("labels")?.clone()).map_err(|e| err(e.to_string()))?;
        let marked: Vec<usize> =
            serde_json::from_value(field("marked")?.clone()).map_err(|e| err(e.to_string()))?;
        let array = |x: &Value, what: &str| -> Result<Vec<Value>, AlgebraError> {
            x.as_array().cloned().ok_or_else(|| err(format!("{what} must be an array")))
        };
        let coeff_vec = |x: &Value| -> Result<Vector<R>, AlgebraError> {
            array(x, "vector")?.iter().map(|c| R::from_json(c).map_err(err)).collect()
        };
        let product = array(field("product")?, "product")?
            .iter()
            .map(|row| array(row, "product row")?.iter().map(coeff_vec).collect())
            .collect::<Result<Vec<Vec<Vector<R>>>, _>>()?;
        let gram_rows = array(field("gram")?, "gram")?
            .iter()
            .map(coeff_vec)
            .collect::<Result<Vec<_>, _>>()?;
        if labels.len() != dim {
            return Err(AlgebraError::DimensionMismatch { expected: dim, got: labels.len() });
        }
        if gram_rows.len() != dim || gram_rows.iter().any(|r| r.len() != dim) {
            return Err(AlgebraError::DimensionMismatch { expected: dim, got: gram_rows.len() });
        }
        let gram = if dim == 0 { Matrix::zeros(0, 0) } else { Matrix::from_rows(gram_rows) };
        Self::new(labels, product, gram, marked)
    }
}
