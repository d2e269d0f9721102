//! Coefficient rings usable as matrix entries.

use std::fmt::Debug;

use crate::coeffring::{LaurentFraction, LaurentPoly, TruncSeries};
use crate::scalar::Field;

/// A commutative ring with a distinguished notion of "known to vanish".
pub trait RingElem: Clone + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    /// True if the element is zero, or for truncated series, if every known
    /// coefficient vanishes.
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// True if the element is exactly zero and can be skipped in products.
    fn is_structural_zero(&self) -> bool {
        self.is_zero()
    }
}

impl<F: Field> RingElem for F {
    fn zero() -> Self {
        F::zero()
    }
    fn one() -> Self {
        F::one()
    }
    fn is_zero(&self) -> bool {
        self.is_negligible()
    }
    fn add(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }
    fn sub(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }
    fn mul(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn is_structural_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

impl<F: Field> RingElem for LaurentPoly<F> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl<F: Field> RingElem for LaurentFraction<F> {
    fn zero() -> Self {
        LaurentFraction::zero()
    }
    fn one() -> Self {
        LaurentFraction::one()
    }
    fn is_zero(&self) -> bool {
        LaurentFraction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl<F: Field> RingElem for TruncSeries<F> {
    fn zero() -> Self {
        TruncSeries::zero()
    }
    fn one() -> Self {
        TruncSeries::one()
    }
    fn is_zero(&self) -> bool {
        self.is_known_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_structural_zero(&self) -> bool {
        self.is_exact_zero()
    }
}
