//! Fractions of Laurent polynomials, compared by cross-multiplication.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::laurent_poly::{LaurentPoly, Vars};
use super::upoly;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// `num / den` with `den != 0`. Not gcd-normalized; only monomial content
/// is divided out.
#[derive(Clone)]
pub struct LaurentFraction<F> {
    num: LaurentPoly<F>,
    den: LaurentPoly<F>,
}

impl<F: Field> LaurentFraction<F> {
    pub fn new(num: LaurentPoly<F>, den: LaurentPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { num, den }.strip_content())
    }

    pub fn from_poly(p: LaurentPoly<F>) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Field equality: `a.num * b.den == b.num * a.den`.
    pub fn eq_frac(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Divides numerator and denominator by their common monomial content
    /// and moves the denominator's leading constant into the numerator
    /// when the denominator is a single term.
    fn strip_content(mut self) -> Self {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return self;
        }
        if let (Some(a), Some(b)) = (self.num.min_exponents(), self.den.min_exponents()) {
            if a.len() == b.len() && !a.is_empty() {
                let m: Vec<i32> = a.iter().zip(&b).map(|(x, y)| -(*x).min(*y)).collect();
                if m.iter().any(|&x| x != 0) {
                    self.num = self.num.shift_exponents(&m);
                    self.den = self.den.shift_exponents(&m);
                }
            }
        }
        if self.den.num_terms() == 1 {
            let (e, c) = {
                let (e, c) = self.den.terms().next().unwrap();
                (e.to_vec(), c.clone())
            };
            if e.iter().any(|&x| x != 0) {
                let inv_e: Vec<i32> = e.iter().map(|x| -x).collect();
                self.num = self.num.embed_like(&self.den).shift_exponents(&inv_e);
            }
            self.num = self.num.scale(&(F::one() / c));
            self.den = LaurentPoly::one();
        }
        self
    }

    /// Replaces `var` by `var * q^steps`.
    pub fn shift_spectral(&self, var: &str, q: &str, steps: i32) -> Result<Self> {
        let known = self
            .num
            .vars()
            .or(self.den.vars())
            .map(|v| v.iter().any(|n| n == var))
            .unwrap_or(false);
        if !known {
            return Err(Error::UnknownVariable(var.to_string()));
        }
        Self::new(
            self.num.shift_var(var, q, steps)?,
            self.den.shift_var(var, q, steps)?,
        )
    }

    pub fn substitute_monomial(&self, var: &str, exps: &[i32], c: &F) -> Result<Self> {
        Self::new(
            self.num.substitute_monomial(var, exps, c)?,
            self.den.substitute_monomial(var, exps, c)?,
        )
    }

    pub fn embed(&self, target: &Vars) -> Result<Self> {
        Ok(Self {
            num: self.num.embed(target)?,
            den: self.den.embed(target)?,
        })
    }

    /// Cancels the univariate gcd when both parts only involve `var`.
    pub fn reduce_univariate(&self, var: &str) -> Result<Self> {
        if self.num.is_zero() {
            return Ok(Self::zero());
        }
        let v = match self.num.vars().or(self.den.vars()) {
            Some(v) => v.clone(),
            None => return Ok(self.clone()),
        };
        let (ln, n) = self.num.univariate(var)?;
        let (ld, d) = self.den.univariate(var)?;
        let g = upoly::gcd(&n, &d);
        let (nq, _) = upoly::divrem(&n, &g);
        let (dq, _) = upoly::divrem(&d, &g);
        // normalize the denominator to be monic
        let lead = dq.last().cloned().unwrap_or_else(F::one);
        let nq: Vec<F> = nq.into_iter().map(|c| c / lead.clone()).collect();
        let dq: Vec<F> = dq.into_iter().map(|c| c / lead.clone()).collect();
        Self::new(
            LaurentPoly::from_univariate(&v, var, ln, &nq)?,
            LaurentPoly::from_univariate(&v, var, ld, &dq)?,
        )
    }

    /// `(order of num at var=1) - (order of den at var=1)` for a univariate fraction.
    pub fn order_at_one(&self, var: &str) -> Result<Option<i64>> {
        let (_, n) = self.num.univariate(var)?;
        let (_, d) = self.den.univariate(var)?;
        let on = upoly::order_at_one(&n);
        let od = upoly::order_at_one(&d).expect("nonzero denominator");
        Ok(on.map(|k| k as i64 - od as i64))
    }
}

impl<F: Field> Add for &LaurentFraction<F> {
    type Output = LaurentFraction<F>;
    fn add(self, rhs: Self) -> LaurentFraction<F> {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return LaurentFraction {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            }
            .strip_content();
        }
        LaurentFraction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .strip_content()
    }
}

impl<F: Field> Sub for &LaurentFraction<F> {
    type Output = LaurentFraction<F>;
    fn sub(self, rhs: Self) -> LaurentFraction<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Neg for &LaurentFraction<F> {
    type Output = LaurentFraction<F>;
    fn neg(self) -> LaurentFraction<F> {
        LaurentFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<F: Field> Mul for &LaurentFraction<F> {
    type Output = LaurentFraction<F>;
    fn mul(self, rhs: Self) -> LaurentFraction<F> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentFraction::zero();
        }
        LaurentFraction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .strip_content()
    }
}

impl<F: Field> PartialEq for LaurentFraction<F> {
    fn eq(&self, other: &Self) -> bool {
        self.eq_frac(other)
    }
}

impl<F: Field> fmt::Debug for LaurentFraction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::laurent_poly::vars;
    use crate::scalar::Rational;

    type P = LaurentPoly<Rational>;
    type Q = LaurentFraction<Rational>;

    fn setup() -> (Vars, P, P) {
        let v = vars(&["x", "q"]);
        let x = P::var(&v, "x").unwrap();
        let q = P::var(&v, "q").unwrap();
        (v, x, q)
    }

    #[test]
    fn cross_multiplication_equality() {
        let (_, x, _) = setup();
        let one = P::one();
        let a = Q::new(&(&x * &x) - &one, &x - &one).unwrap();
        let b = Q::from_poly(&x + &one);
        assert!(a.eq_frac(&b));
    }

    #[test]
    fn monomial_product() {
        let (_, x, q) = setup();
        let a = Q::new(x.clone(), q.clone()).unwrap();
        let b = Q::new(&q * &q, x.clone()).unwrap();
        assert_eq!(&a * &b, Q::from_poly(q));
    }

    #[test]
    fn inverse_and_zero_division() {
        let (v, x, _) = setup();
        let a = Q::from_poly(&P::one() - &P::monomial(&v, &[1, -2], Rational::from_i64(1)));
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, Q::one());
        assert_eq!(Q::zero().inv().unwrap_err(), Error::DivisionByZero);
        let _ = x;
    }

    #[test]
    fn spectral_shift_roundtrip() {
        let (v, x, q) = setup();
        let a = Q::new(&P::one() - &x, &q + &x).unwrap();
        let s = a.shift_spectral("x", "q", 4).unwrap();
        assert_eq!(s.shift_spectral("x", "q", -4).unwrap(), a);
        let xq = Q::from_poly(&x * &q);
        assert_eq!(
            xq.shift_spectral("x", "q", -2).unwrap(),
            Q::from_poly(P::monomial(&v, &[1, -1], Rational::from_i64(1)))
        );
        assert!(a.shift_spectral("y", "q", 1).is_err());
    }
}
