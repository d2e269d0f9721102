//! Truncated Laurent series in one variable with tracked precision.
//!
//! A layer stores the coefficients of `u^s` for `low <= s <= high`.
//! Coefficients below the stored range are exactly zero; coefficients
//! above `high` are unknown. `high == EXACT` marks a layer known to all
//! orders.

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Precision sentinel for "known to all orders".
pub const EXACT: i64 = i64::MAX / 4;

pub(crate) fn padd(a: i64, b: i64) -> i64 {
    if a >= EXACT || b >= EXACT {
        EXACT
    } else {
        (a + b).min(EXACT)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentLayer<F> {
    low: i64,
    high: i64,
    coeffs: Vec<F>,
}

impl<F: Field> LaurentLayer<F> {
    pub fn exact_zero() -> Self {
        Self {
            low: 0,
            high: EXACT,
            coeffs: Vec::new(),
        }
    }

    /// Zero up to `high`, unknown above.
    pub fn zero_to(high: i64) -> Self {
        Self {
            low: 0,
            high,
            coeffs: Vec::new(),
        }
    }

    pub fn monomial(s: i64, c: F, high: i64) -> Self {
        Self::from_coeffs(s, vec![c], high)
    }

    /// Coefficients of `u^low, u^{low+1}, ...`; entries above `high` are dropped.
    pub fn from_coeffs(low: i64, mut coeffs: Vec<F>, high: i64) -> Self {
        if high < EXACT {
            let keep = (high - low + 1).max(0) as usize;
            coeffs.truncate(keep);
        }
        let mut l = Self { low, high, coeffs };
        l.normalize();
        l
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn high(&self) -> i64 {
        self.high
    }

    pub fn is_exact(&self) -> bool {
        self.high >= EXACT
    }

    /// Lowest stored exponent; `None` if no nonzero coefficient is known.
    pub fn low(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    /// Highest nonzero known exponent.
    pub fn top(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Lower bound for the exponent of any possibly-nonzero term.
    pub fn valuation(&self) -> i64 {
        if self.coeffs.is_empty() {
            padd(self.high, 1)
        } else {
            self.low
        }
    }

    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.is_exact()
    }

    /// All known coefficients vanish.
    pub fn is_known_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, s: i64) -> Result<F> {
        if s > self.high {
            return Err(Error::PrecisionExhausted(format!(
                "u^{s} requested, layer known to u^{}",
                self.high
            )));
        }
        Ok(self.coeff_or_zero(s))
    }

    pub(crate) fn coeff_or_zero(&self, s: i64) -> F {
        if self.coeffs.is_empty() || s < self.low {
            return F::zero();
        }
        self.coeffs
            .get((s - self.low) as usize)
            .cloned()
            .unwrap_or_else(F::zero)
    }

    /// Nonzero known terms `(s, c)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Lowers the precision to `high`.
    pub fn truncate(&self, high: i64) -> Self {
        if high >= self.high {
            return self.clone();
        }
        Self::from_coeffs(self.low, self.coeffs.clone(), high)
    }

    pub fn add(&self, other: &Self) -> Self {
        let high = self.high.min(other.high);
        if self.coeffs.is_empty() {
            return other.truncate(high).with_high(high);
        }
        if other.coeffs.is_empty() {
            return self.truncate(high).with_high(high);
        }
        let low = self.low.min(other.low);
        let top = self.top().unwrap().max(other.top().unwrap()).min(high);
        if top < low {
            return Self::zero_to(high);
        }
        let coeffs = (low..=top)
            .map(|s| self.coeff_or_zero(s) + other.coeff_or_zero(s))
            .collect();
        Self::from_coeffs(low, coeffs, high)
    }

    fn with_high(mut self, high: i64) -> Self {
        self.high = high;
        self
    }

    pub fn neg(&self) -> Self {
        Self {
            low: self.low,
            high: self.high,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero_to(self.high);
        }
        Self {
            low: self.low,
            high: self.high,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Multiplies by `u^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            low: self.low + k,
            high: padd(self.high, k),
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let high = padd(self.high, other.valuation()).min(padd(other.high, self.valuation()));
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero_to(high);
        }
        let low = self.low + other.low;
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if high < EXACT {
            len = len.min((high - low + 1).max(0) as usize);
        }
        let mut out = vec![F::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(low, out, high)
    }

    /// Multiplicative inverse known at most to `u^cap`.
    pub fn inv(&self, cap: i64) -> Result<Self> {
        if self.coeffs.is_empty() {
            return Err(Error::NonInvertible(
                "layer has no known nonzero coefficient".into(),
            ));
        }
        let v = self.low;
        if self.coeffs.len() == 1 && self.is_exact() {
            return Ok(Self::monomial(-v, F::one() / self.coeffs[0].clone(), EXACT));
        }
        if cap >= EXACT {
            return Err(Error::PrecisionExhausted(
                "inverse of a non-monomial layer needs a finite cap".into(),
            ));
        }
        let high = if self.is_exact() {
            cap
        } else {
            (self.high - 2 * v).min(cap)
        };
        let n = (high + v + 1).max(0) as usize;
        let a0 = self.coeffs[0].clone();
        let inv0 = F::one() / a0;
        let mut out: Vec<F> = Vec::with_capacity(n);
        for i in 0..n {
            if i == 0 {
                out.push(inv0.clone());
                continue;
            }
            let mut acc = F::zero();
            for j in 1..=i.min(self.coeffs.len() - 1) {
                let a = &self.coeffs[j];
                if a.is_zero() {
                    continue;
                }
                acc = acc + a.clone() * out[i - j].clone();
            }
            out.push(-(acc * inv0.clone()));
        }
        Ok(Self::from_coeffs(-v, out, high))
    }

    /// Formal `d/du`.
    pub fn derivative(&self) -> Self {
        let high = if self.is_exact() { EXACT } else { self.high - 1 };
        if self.coeffs.is_empty() {
            return Self::zero_to(high);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.clone() * F::from_i64(self.low + i as i64))
            .collect();
        Self::from_coeffs(self.low - 1, coeffs, high)
    }

    /// `u -> -u`.
    pub fn reflect(&self) -> Self {
        Self {
            low: self.low,
            high: self.high,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if (self.low + i as i64).rem_euclid(2) == 1 {
                        -c.clone()
                    } else {
                        c.clone()
                    }
                })
                .collect(),
        }
    }

    /// Keeps only terms with exponents in `lo..=hi`, leaving precision unchanged.
    pub fn restrict_range(&self, lo: i64, hi: i64) -> Self {
        let coeffs = (lo..=hi).map(|s| self.coeff_or_zero(s)).collect();
        Self::from_coeffs(lo, coeffs, self.high)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> LaurentLayer<G> {
        LaurentLayer::from_coeffs(self.low, self.coeffs.iter().map(f).collect(), self.high)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn product_precision_uses_valuations() {
        // u^{-1} + c known to u^3, twice
        let a = LaurentLayer::from_coeffs(-1, vec![r(1, 1), r(1, 1)], 3);
        let p = a.mul(&a);
        assert_eq!(p.high(), 2);
        assert!(p.coeff(3).is_err());
        assert_eq!(p.coeff(-2).unwrap(), r(1, 1));
        assert_eq!(p.coeff(-1).unwrap(), r(2, 1));
    }

    #[test]
    fn inverse_of_one_minus_u() {
        let a = LaurentLayer::from_coeffs(0, vec![r(1, 1), r(-1, 1)], EXACT);
        let b = a.inv(5).unwrap();
        for s in 0..=5 {
            assert_eq!(b.coeff(s).unwrap(), r(1, 1));
        }
        assert!(b.coeff(6).is_err());
    }

    #[test]
    fn exact_zero_does_not_limit_precision() {
        let a = LaurentLayer::from_coeffs(0, vec![r(2, 1)], 4);
        let z = LaurentLayer::<Rational>::exact_zero();
        assert!(a.mul(&z).is_exact_zero());
        assert_eq!(a.add(&z).high(), 4);
    }
}
