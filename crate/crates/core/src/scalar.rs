//! Coefficient ring abstraction shared by the matrix and algebra code.
//!
//! Two rings implement these traits: [`Rational`](crate::Rational) (a field)
//! and [`MultiPoly`](crate::MultiPoly) (the polynomial ring Q[λ, μ]).

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::rational::Rational;

/// A commutative ring with exact arithmetic that contains Q.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// Embeds a rational constant.
    fn from_rational(r: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// Multiplies by a rational constant.
    fn scale(&self, c: &Rational) -> Self {
        self.clone() * Self::from_rational(c.clone())
    }
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {}

impl Ring for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

impl Field for Rational {}
