//! Fusion rules, the Virasoro rules 𝔙(p, q), ℤ/2-gradings and the Seress
//! and Frobenius refinements.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::rational::{format_rational, RatStr};
use crate::exact::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FusionError {
    #[error("(p, q) = ({p}, {q}) must satisfy p, q >= 2, p != q and gcd(p, q) = 1")]
    InvalidParameters { p: u32, q: u32 },
    #[error("rescaled weight {weight} collides with field {existing}")]
    FieldCollision { weight: String, existing: String },
    #[error("field {0} listed twice")]
    DuplicateField(String),
    #[error("{0} is not a field of these rules")]
    UnknownField(String),
    #[error("no product given for {0} ⋆ {1}")]
    MissingProduct(String, String),
    #[error("conflicting products given for {0} ⋆ {1}")]
    Asymmetric(String, String),
    #[error("0 is not a field of these rules")]
    NoZeroField,
}

/// Central charge, a finite set of fields and a symmetric set-valued product.
///
/// Fields are kept in a fixed order; product sets are stored as sorted
/// index lists into that order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FusionJson", into = "FusionJson")]
pub struct FusionRules {
    central_charge: Rational,
    fields: Vec<Rational>,
    star: Vec<Vec<Vec<usize>>>,
}

impl FusionRules {
    /// Builds rules from products given on (unordered) pairs of field values.
    /// Every unordered pair must be covered, and a pair given twice (in
    /// either order) must agree.
    pub fn new<I>(central_charge: Rational, fields: Vec<Rational>, products: I) -> Result<Self, FusionError>
    where
        I: IntoIterator<Item = (Rational, Rational, Vec<Rational>)>,
    {
        let mut seen = BTreeSet::new();
        for f in &fields {
            if !seen.insert(f.clone()) {
                return Err(FusionError::DuplicateField(format_rational(f)));
            }
        }
        let idx = |f: &Rational| {
            fields
                .iter()
                .position(|g| g == f)
                .ok_or_else(|| FusionError::UnknownField(format_rational(f)))
        };
        let n = fields.len();
        let mut star: Vec<Vec<Option<Vec<usize>>>> = vec![vec![None; n]; n];
        for (f, g, set) in products {
            let (i, j) = (idx(&f)?, idx(&g)?);
            let mut s = set.iter().map(idx).collect::<Result<Vec<_>, _>>()?;
            s.sort_unstable();
            s.dedup();
            for (a, b) in [(i, j), (j, i)] {
                match &star[a][b] {
                    Some(existing) if *existing != s => {
                        return Err(FusionError::Asymmetric(format_rational(&f), format_rational(&g)))
                    }
                    _ => star[a][b] = Some(s.clone()),
                }
            }
        }
        let mut full = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                full[i][j] = star[i][j].take().ok_or_else(|| {
                    FusionError::MissingProduct(format_rational(&fields[i]), format_rational(&fields[j]))
                })?;
            }
        }
        Ok(Self { central_charge, fields, star: full })
    }

    /// The associative rules on {1, 0}: 1⋆1 = {1}, 1⋆0 = {0}, 0⋆0 = {0}.
    pub fn associative(central_charge: Rational) -> Self {
        let one = Rational::one();
        let zero = Rational::zero();
        Self::new(
            central_charge,
            vec![one.clone(), zero.clone()],
            [
                (one.clone(), one.clone(), vec![one.clone()]),
                (one, zero.clone(), vec![zero.clone()]),
                (zero.clone(), zero.clone(), vec![zero]),
            ],
        )
        .expect("static table is well formed")
    }

    pub fn central_charge(&self) -> &Rational {
        &self.central_charge
    }

    pub fn fields(&self) -> &[Rational] {
        &self.fields
    }

    pub fn index_of(&self, f: &Rational) -> Option<usize> {
        self.fields.iter().position(|g| g == f)
    }

    pub fn star_indices(&self, i: usize, j: usize) -> &[usize] {
        &self.star[i][j]
    }

    /// `f ⋆ g` as field values, in field order.
    pub fn star(&self, f: &Rational, g: &Rational) -> Option<Vec<Rational>> {
        let (i, j) = (self.index_of(f)?, self.index_of(g)?);
        Some(self.star[i][j].iter().map(|&k| self.fields[k].clone()).collect())
    }

    /// One line per unordered pair, e.g. `(1/32)⋆(1/32) = {1, 0, 1/4}`.
    pub fn product_lines(&self) -> Vec<String> {
        let n = self.fields.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let set: Vec<String> =
                    self.star[i][j].iter().map(|&k| format_rational(&self.fields[k])).collect();
                out.push(format!(
                    "({})⋆({}) = {{{}}}",
                    format_rational(&self.fields[i]),
                    format_rational(&self.fields[j]),
                    set.join(", ")
                ));
            }
        }
        out
    }
}

/// Grid layout: header row of fields, one row per field.
impl fmt::Display for FusionRules {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.fields.iter().map(format_rational).collect();
        let cells: Vec<Vec<String>> = (0..names.len())
            .map(|i| {
                (0..names.len())
                    .map(|j| self.star[i][j].iter().map(|&k| names[k].clone()).collect::<Vec<_>>().join(","))
                    .collect()
            })
            .collect();
        let head_w = names.iter().map(|s| s.chars().count()).max().unwrap_or(1).max(1);
        let col_w: Vec<usize> = (0..names.len())
            .map(|j| {
                cells
                    .iter()
                    .map(|row| row[j].chars().count())
                    .chain([names[j].chars().count()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let pad = |s: &str, w: usize| format!("{}{}", s, " ".repeat(w - s.chars().count()));
        let mut header = format!("{} ||", pad("", head_w));
        for (j, name) in names.iter().enumerate() {
            header.push_str(&format!(" {} |", pad(name, col_w[j])));
        }
        writeln!(f, "{}", header.trim_end_matches('|').trim_end())?;
        writeln!(f, "{}", "=".repeat(header.chars().count()))?;
        for (i, name) in names.iter().enumerate() {
            let mut line = format!("{} ||", pad(name, head_w));
            for (j, cell) in cells[i].iter().enumerate() {
                line.push_str(&format!(" {} |", pad(cell, col_w[j])));
            }
            writeln!(f, "{}", line.trim_end_matches('|').trim_end())?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct FusionJson {
    central_charge: RatStr,
    fields: Vec<RatStr>,
    star: Vec<(RatStr, RatStr, Vec<RatStr>)>,
}

impl From<FusionRules> for FusionJson {
    fn from(r: FusionRules) -> Self {
        let n = r.fields.len();
        let star = (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .map(|(i, j)| {
                (
                    RatStr(r.fields[i].clone()),
                    RatStr(r.fields[j].clone()),
                    r.star[i][j].iter().map(|&k| RatStr(r.fields[k].clone())).collect(),
                )
            })
            .collect();
        FusionJson {
            central_charge: RatStr(r.central_charge.clone()),
            fields: r.fields.iter().cloned().map(RatStr).collect(),
            star,
        }
    }
}

impl TryFrom<FusionJson> for FusionRules {
    type Error = FusionError;
    fn try_from(j: FusionJson) -> Result<Self, FusionError> {
        FusionRules::new(
            j.central_charge.0,
            j.fields.into_iter().map(|r| r.0).collect(),
            j.star
                .into_iter()
                .map(|(f, g, s)| (f.0, g.0, s.into_iter().map(|r| r.0).collect())),
        )
    }
}

/// A ℤ/2-grading: every field is labelled even (identity) or odd.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grading {
    pub group: String,
    #[serde(with = "rat_vec")]
    pub even: Vec<Rational>,
    #[serde(with = "rat_vec")]
    pub odd: Vec<Rational>,
}

impl Grading {
    pub fn is_trivial(&self) -> bool {
        self.odd.is_empty()
    }

    pub fn is_odd(&self, f: &Rational) -> bool {
        self.odd.contains(f)
    }
}

mod rat_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().cloned().map(RatStr).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Ok(Vec::<RatStr>::deserialize(d)?.into_iter().map(|r| r.0).collect())
    }
}

fn check_pq(p: u32, q: u32) -> Result<(), FusionError> {
    if p < 2 || q < 2 || p == q || p.gcd(&q) != 1 {
        return Err(FusionError::InvalidParameters { p, q });
    }
    Ok(())
}

/// c(p, q) = 1 − 6(p − q)²/(pq).
pub fn central_charge(p: u32, q: u32) -> Result<Rational, FusionError> {
    check_pq(p, q)?;
    let (p, q) = (i64::from(p), i64::from(q));
    Ok(Rational::one() - Rational::new((6 * (p - q) * (p - q)).into(), (p * q).into()))
}

/// h(r, s) = ((sp − rq)² − (p − q)²) / (4pq); no range check.
pub fn weight(p: u32, q: u32, r: u32, s: u32) -> Rational {
    let (p, q, r, s) = (i64::from(p), i64::from(q), i64::from(r), i64::from(s));
    let a = s * p - r * q;
    Rational::new((a * a - (p - q) * (p - q)).into(), (4 * p * q).into())
}

/// A highest weight together with all index pairs (r, s) producing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestWeight {
    pub weight: Rational,
    /// Sorted; the first entry (smallest r, then s) is the canonical one.
    pub representatives: Vec<(u32, u32)>,
}

/// Distinct values of h(r, s) for 0 < r < p, 0 < s < q, ordered by their
/// canonical representative.
pub fn highest_weights(p: u32, q: u32) -> Result<Vec<HighestWeight>, FusionError> {
    check_pq(p, q)?;
    let mut out: Vec<HighestWeight> = Vec::new();
    for r in 1..p {
        for s in 1..q {
            let h = weight(p, q, r, s);
            match out.iter_mut().find(|w| w.weight == h) {
                Some(w) => w.representatives.push((r, s)),
                None => out.push(HighestWeight { weight: h, representatives: vec![(r, s)] }),
            }
        }
    }
    Ok(out)
}

fn admissible(a: u32, b: u32, bound: u32) -> impl Iterator<Item = u32> {
    let lo = 1 + a.abs_diff(b);
    let hi = (a + b - 1).min((2 * bound).saturating_sub(a + b + 1));
    (lo..=hi).step_by(2)
}

/// Weights h(v, w) occurring in the fusion of the modules with indices
/// (r, s) and (t, u), from the admissible-triple bounds.
pub fn fusion_weights(p: u32, q: u32, (r, s): (u32, u32), (t, u): (u32, u32)) -> BTreeSet<Rational> {
    let mut out = BTreeSet::new();
    for v in admissible(r, t, p) {
        for w in admissible(s, u, q) {
            out.insert(weight(p, q, v, w));
        }
    }
    out
}

/// The rules 𝔙(p, q): fields {1} ∪ {h/2}, with 1 adjoined to any product
/// whose unhalved fusion contains the weight 0.
pub fn virasoro_rules(p: u32, q: u32) -> Result<FusionRules, FusionError> {
    let cc = central_charge(p, q)?;
    let weights = highest_weights(p, q)?;
    let half = Rational::new(1.into(), 2.into());
    let one = Rational::one();
    let mut fields = vec![one.clone()];
    for w in &weights {
        let f = &w.weight * &half;
        if let Some(existing) = fields.iter().find(|g| **g == f) {
            return Err(FusionError::FieldCollision {
                weight: format_rational(&f),
                existing: format_rational(existing),
            });
        }
        fields.push(f);
    }
    let mut products = Vec::new();
    products.push((one.clone(), one.clone(), vec![one.clone()]));
    for f in &fields[1..] {
        products.push((one.clone(), f.clone(), vec![f.clone()]));
    }
    for (i, a) in weights.iter().enumerate() {
        for b in &weights[i..] {
            let hs = fusion_weights(p, q, a.representatives[0], b.representatives[0]);
            let mut set: Vec<Rational> = hs.iter().map(|h| h * &half).collect();
            if hs.contains(&Rational::zero()) {
                set.push(one.clone());
            }
            products.push((&a.weight * &half, &b.weight * &half, set));
        }
    }
    FusionRules::new(cc, fields, products)
}

/// All ℤ/2-gradings, the trivial one first. The field 1, when present, is
/// always even.
pub fn find_z2_gradings(rules: &FusionRules) -> Vec<Grading> {
    let n = rules.fields.len();
    assert!(n < 31, "grading search is exhaustive over 2^n labellings");
    let one = rules.index_of(&Rational::one());
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if one.is_some_and(|k| mask & (1 << k) != 0) {
            continue;
        }
        let odd = |k: usize| mask & (1 << k) != 0;
        let ok = (0..n).all(|i| {
            (0..n).all(|j| {
                let parity = odd(i) ^ odd(j);
                rules.star[i][j].iter().all(|&k| odd(k) == parity)
            })
        });
        if ok {
            let (odd_f, even_f): (Vec<usize>, Vec<usize>) = (0..n).partition(|&k| odd(k));
            out.push(Grading {
                group: "Z/2".to_string(),
                even: even_f.into_iter().map(|k| rules.fields[k].clone()).collect(),
                odd: odd_f.into_iter().map(|k| rules.fields[k].clone()).collect(),
            });
        }
    }
    out
}

/// The unique nontrivial ℤ/2-grading, if there is exactly one.
pub fn nontrivial_grading(rules: &FusionRules) -> Option<Grading> {
    let mut g: Vec<Grading> = find_z2_gradings(rules).into_iter().filter(|g| !g.is_trivial()).collect();
    (g.len() == 1).then(|| g.remove(0))
}

/// Seress condition: 0 is a field, 0⋆1 = {0} and 0⋆f = {f} for f ≠ 1.
pub fn seress_check(rules: &FusionRules) -> bool {
    let zero = Rational::zero();
    let Some(z) = rules.index_of(&zero) else { return false };
    let one = rules.index_of(&Rational::one());
    (0..rules.fields.len()).all(|k| {
        let expected = if Some(k) == one { vec![z] } else { vec![k] };
        rules.star[z][k] == expected
    })
}

/// Removes 1 from 0⋆0, as holds in every Frobenius axial algebra.
pub fn frobenius_refine(rules: &FusionRules) -> Result<FusionRules, FusionError> {
    let z = rules.index_of(&Rational::zero()).ok_or(FusionError::NoZeroField)?;
    let mut out = rules.clone();
    if let Some(one) = rules.index_of(&Rational::one()) {
        out.star[z][z].retain(|&k| k != one);
    }
    Ok(out)
}

/// Shorthand for the refined rules 𝔙(p, q) used by axis checks.
pub fn refined_virasoro(p: u32, q: u32) -> Result<FusionRules, FusionError> {
    frobenius_refine(&virasoro_rules(p, q)?)
}

/// Cell-by-cell comparison of two rule sets that may list fields in
/// different orders. Returns the differing cells.
pub fn table_differences(a: &FusionRules, b: &FusionRules) -> Vec<String> {
    let mut diffs = Vec::new();
    let fa: BTreeSet<&Rational> = a.fields.iter().collect();
    let fb: BTreeSet<&Rational> = b.fields.iter().collect();
    if fa != fb {
        diffs.push("field sets differ".to_string());
        return diffs;
    }
    if a.central_charge != b.central_charge {
        diffs.push("central charges differ".to_string());
    }
    for f in &a.fields {
        for g in &a.fields {
            let sa: BTreeSet<Rational> = a.star(f, g).unwrap().into_iter().collect();
            let sb: BTreeSet<Rational> = b.star(f, g).unwrap().into_iter().collect();
            if sa != sb {
                diffs.push(format!("({})⋆({})", format_rational(f), format_rational(g)));
            }
        }
    }
    diffs
}
