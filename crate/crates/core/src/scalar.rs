//! Scalar fields the engine is generic over.
//!
//! Everything that verifies an identity runs over [`Rational`]; the `f64`
//! instance exists for quick numerical probes of the same code paths.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational numbers.
pub type Rational = BigRational;

/// A commutative field of characteristic zero.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + 'static
{
    fn from_i64(v: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// Exact fields report exact zero; approximate ones may use a tolerance.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn to_rational(&self) -> Option<Rational>;

    fn from_rational(r: &Rational) -> Self;

    fn pow_i(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Field for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Field for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn is_negligible(&self) -> bool {
        self.abs() < 1e-9
    }

    fn to_rational(&self) -> Option<Rational> {
        BigRational::from_float(*self)
    }

    fn from_rational(r: &Rational) -> Self {
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    }
}

/// Parses `p`, `-p` or `p/q` into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Returns the integer value of `r` if it is one.
pub fn rational_to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

/// Generalized binomial coefficient; `n` may be negative.
pub fn binomial<F: Field>(n: i64, k: i64) -> F {
    if k < 0 {
        return F::zero();
    }
    let mut acc = F::one();
    for i in 0..k {
        acc = acc * F::from_i64(n - i) / F::from_i64(i + 1);
    }
    acc
}

pub fn factorial<F: Field>(k: u32) -> F {
    (1..=k as i64).fold(F::one(), |acc, i| acc * F::from_i64(i))
}
