//! Dense univariate polynomials over Q: Euclidean gcd, Sturm sequences and
//! exact rational root recovery.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::rational::{simplest_in, Rational};

/// Coefficients from the constant term upwards, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `t − r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Rational::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Euclidean division. Panics on division by zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lc;
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// `f / gcd(f, f')`: same roots, each simple.
    pub fn square_free(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Scales to coprime integer coefficients with positive leading term.
    pub fn primitive_integer_form(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    /// Sturm chain `f, f', −rem(f, f'), …`.
    pub fn sturm_sequence(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.clone()];
        let d = self.derivative();
        if d.is_zero() {
            return seq;
        }
        seq.push(d);
        loop {
            let n = seq.len();
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            if r.is_zero() {
                return seq;
            }
            seq.push(r.neg());
        }
    }

    /// Bound B with every real root in `(−B, B)`.
    pub fn cauchy_bound(&self) -> Rational {
        let lc = self.leading().expect("nonzero polynomial").abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_else(Rational::zero);
        max + Rational::one()
    }
}

fn sign_changes(seq: &[UniPoly], x: &Rational) -> usize {
    let mut count = 0;
    let mut prev: Option<bool> = None;
    for p in seq {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if prev.is_some_and(|q| q != pos) {
            count += 1;
        }
        prev = Some(pos);
    }
    count
}

/// Number of distinct real roots in the half-open interval `(a, b]`.
pub fn count_real_roots(sturm: &[UniPoly], a: &Rational, b: &Rational) -> usize {
    sign_changes(sturm, a) - sign_changes(sturm, b)
}

/// Every rational root of `f`, ascending.
///
/// Any rational root p/q in lowest terms has q dividing the leading
/// coefficient D of the primitive integer form of the square-free part, so
/// two candidate roots differ by at least 1/D². Real roots are isolated by
/// Sturm bisection into intervals narrower than that; the simplest rational
/// in each interval is then the only possible rational root there and is
/// confirmed by exact evaluation.
pub fn rational_roots(f: &UniPoly) -> Vec<Rational> {
    assert!(!f.is_zero(), "rational_roots of the zero polynomial");
    let mut roots = Vec::new();
    let mut g = f.square_free();
    'restart: loop {
        if g.degree().unwrap_or(0) == 0 {
            break;
        }
        let ints = g.primitive_integer_form();
        let d = Rational::from_integer(ints.last().unwrap().clone());
        let width = (Rational::from_integer(BigInt::from(2)) * &d * &d).recip();
        let sturm = g.sturm_sequence();
        let bound = g.cauchy_bound();
        let mut stack = vec![(-bound.clone(), bound)];
        let mut found = Vec::new();
        while let Some((a, b)) = stack.pop() {
            let n = count_real_roots(&sturm, &a, &b);
            if n == 0 {
                continue;
            }
            if n == 1 {
                // Small-denominator roots are usually caught here long
                // before the interval shrinks below `width`.
                // The root counted here lies in (a, b], so a itself must
                // not be accepted in its place.
                let r = simplest_in(&a, &b);
                if r != a && g.eval(&r).is_zero() {
                    found.push(r);
                    continue;
                }
                if &b - &a < width {
                    continue;
                }
            }
            let mid = (&a + &b) / Rational::from_integer(BigInt::from(2));
            if g.eval(&mid).is_zero() {
                // Deflate and start over; keeps the interval logic free of
                // roots sitting on bisection points.
                g = g.div_rem(&UniPoly::linear_root(&mid)).0;
                roots.push(mid);
                continue 'restart;
            }
            stack.push((mid.clone(), b));
            stack.push((a, mid));
        }
        roots.extend(found);
        break;
    }
    roots.sort();
    roots.dedup();
    roots
}
