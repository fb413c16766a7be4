//! Sparse polynomials in the two fixed variables λ and μ over Q.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, parse_rational, Rational};
use super::unipoly::UniPoly;
use super::ExactError;
use crate::scalar::Ring;

/// Exponent pair `(e_λ, e_μ)`.
pub type Monomial = (u32, u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    #[serde(rename = "lambda")]
    Lambda,
    #[serde(rename = "mu")]
    Mu,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::Lambda => Var::Mu,
            Var::Mu => Var::Lambda,
        }
    }

    fn exponent(self, m: Monomial) -> u32 {
        match self {
            Var::Lambda => m.0,
            Var::Mu => m.1,
        }
    }

    fn monomial(self, e: u32) -> Monomial {
        match self {
            Var::Lambda => (e, 0),
            Var::Mu => (0, e),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Var::Lambda => "λ",
            Var::Mu => "μ",
        }
    }
}

/// Graded reverse lexicographic order with λ > μ.
///
/// With two variables this is total degree first, then the λ-exponent.
pub fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    (a.0 + a.1).cmp(&(b.0 + b.1)).then(a.0.cmp(&b.0))
}

/// Element of Q[λ, μ]; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn constant(c: Rational) -> Self {
        Self::monomial((0, 0), c)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(v.monomial(1), Rational::one())
    }

    pub fn lambda() -> Self {
        Self::var(Var::Lambda)
    }

    pub fn mu() -> Self {
        Self::var(Var::Mu)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::default();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Self::default();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Embeds a univariate polynomial in the variable `v`.
    pub fn from_unipoly(f: &UniPoly, v: Var) -> Self {
        Self::from_terms(
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(e, c)| (v.monomial(e as u32), c.clone())),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e_lambda: u32, e_mu: u32) -> Rational {
        self.terms
            .get(&(e_lambda, e_mu))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&m| m == (0, 0))
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.coeff(0, 0))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.0 + m.1).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|&m| v.exponent(m)).max()
    }

    /// Exact substitution `λ = point.0`, `μ = point.1`.
    pub fn evaluate(&self, point: &(Rational, Rational)) -> Rational {
        let (l, m) = point;
        let mut acc = Rational::zero();
        for (&(el, em), c) in &self.terms {
            acc += c * pow(l, el) * pow(m, em);
        }
        acc
    }

    /// Substitutes a value for one variable, leaving a polynomial in the other.
    pub fn substitute(&self, v: Var, value: &Rational) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (&m, c) in &self.terms {
            let e = v.exponent(m);
            let rest = match v {
                Var::Lambda => (0, m.1),
                Var::Mu => (m.0, 0),
            };
            out.add_term(rest, c * pow(value, e));
        }
        out
    }

    /// Writes the polynomial as Σ cᵢ(other) vⁱ and returns `[c₀, c₁, …]`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let deg = self.degree_in(v).unwrap_or(0) as usize;
        let mut out = vec![MultiPoly::default(); deg + 1];
        for (&m, c) in &self.terms {
            let e = v.exponent(m) as usize;
            let rest = match v {
                Var::Lambda => (0, m.1),
                Var::Mu => (m.0, 0),
            };
            out[e].add_term(rest, c.clone());
        }
        out
    }

    /// The single variable this polynomial involves, `None` if constant.
    /// Errors when both variables occur.
    pub fn sole_variable(&self) -> Result<Option<Var>, ExactError> {
        let has_l = self.terms.keys().any(|m| m.0 > 0);
        let has_m = self.terms.keys().any(|m| m.1 > 0);
        match (has_l, has_m) {
            (false, false) => Ok(None),
            (true, false) => Ok(Some(Var::Lambda)),
            (false, true) => Ok(Some(Var::Mu)),
            (true, true) => Err(ExactError::NotUnivariate),
        }
    }

    /// Dense univariate view in `v`; errors if the other variable occurs.
    pub fn to_unipoly(&self, v: Var) -> Result<UniPoly, ExactError> {
        if self.terms.keys().any(|&m| v.other().exponent(m) > 0) {
            return Err(ExactError::NotUnivariate);
        }
        let deg = self.degree_in(v).unwrap_or(0) as usize;
        let mut c = vec![Rational::zero(); deg + 1];
        for (&m, coef) in &self.terms {
            c[v.exponent(m) as usize] = coef.clone();
        }
        Ok(UniPoly::new(c))
    }

    /// Leading monomial and coefficient under [`grevlex_cmp`].
    pub fn leading_term(&self) -> Option<(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| grevlex_cmp(a.0, b.0))
            .map(|(m, c)| (*m, c.clone()))
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::default();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Divides by the grevlex leading coefficient.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Terms sorted from the grevlex-largest down.
    pub fn sorted_terms(&self) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| grevlex_cmp(&b.0, &a.0));
        v
    }
}

fn pow(x: &Rational, e: u32) -> Rational {
    num_traits::pow(x.clone(), e as usize)
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (&m, c) in &rhs.terms {
            self.add_term(m, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (&m, c) in &rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        self -= &rhs;
        self
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (&(a0, a1), c) in &self.terms {
            for (&(b0, b1), d) in &rhs.terms {
                out.add_term((a0 + b0, a1 + b1), c * d);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Ring for MultiPoly {
    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }

    fn scale(&self, c: &Rational) -> Self {
        MultiPoly::scale(self, c)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((el, em), c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut factors = Vec::new();
            if !a.is_one() || (el == 0 && em == 0) {
                factors.push(format_rational(&a));
            }
            for (v, e) in [(Var::Lambda, el), (Var::Mu, em)] {
                match e {
                    0 => {}
                    1 => factors.push(v.symbol().to_string()),
                    _ => factors.push(format!("{}^{}", v.symbol(), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// JSON form: object mapping "e_λ,e_μ" to the rational coefficient string.
impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, String> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| (format!("{},{}", a, b), format_rational(c)))
            .collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let map = BTreeMap::<String, String>::deserialize(d)?;
        let mut p = MultiPoly::default();
        for (k, v) in map {
            let (a, b) = k
                .split_once(',')
                .ok_or_else(|| D::Error::custom(format!("bad monomial key {k:?}")))?;
            let a: u32 = a.trim().parse().map_err(D::Error::custom)?;
            let b: u32 = b.trim().parse().map_err(D::Error::custom)?;
            p.add_term((a, b), parse_rational(&v).map_err(D::Error::custom)?);
        }
        Ok(p)
    }
}
