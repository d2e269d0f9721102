//! Multivariate Laurent polynomials with sparse coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Ordered variable names shared between polynomials of one ring.
pub type Vars = Arc<[String]>;

pub fn vars(names: &[&str]) -> Vars {
    names.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()
}

/// A Laurent polynomial. A polynomial without variables is a constant and
/// combines with any other polynomial.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<F> {
    vars: Option<Vars>,
    terms: BTreeMap<Vec<i32>, F>,
}

impl<F: Field> LaurentPoly<F> {
    pub fn zero() -> Self {
        Self {
            vars: None,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self { vars: None, terms }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    /// `c * prod vars[i]^exps[i]`.
    pub fn monomial(vars: &Vars, exps: &[i32], c: F) -> Self {
        assert_eq!(vars.len(), exps.len(), "exponent arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps.to_vec(), c);
        }
        Self {
            vars: Some(vars.clone()),
            terms,
        }
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self> {
        let i = index_of(vars, name)?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Ok(Self::monomial(vars, &e, F::one()))
    }

    /// Builds from `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Vec<i32>, F)>) -> Self {
        let mut p = Self {
            vars: Some(vars.clone()),
            terms: BTreeMap::new(),
        };
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent arity");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<i32>, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn vars(&self) -> Option<&Vars> {
        self.vars.as_ref()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &F)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant value if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Brings both operands onto a common variable list.
    fn unify(a: &Self, b: &Self) -> (Option<Vars>, Self, Self) {
        match (&a.vars, &b.vars) {
            (None, None) => (None, a.clone(), b.clone()),
            (Some(v), None) => (Some(v.clone()), a.clone(), b.lift(v)),
            (None, Some(v)) => (Some(v.clone()), a.lift(v), b.clone()),
            (Some(va), Some(vb)) => {
                if va == vb {
                    (Some(va.clone()), a.clone(), b.clone())
                } else {
                    panic!("mixing Laurent polynomials over {:?} and {:?}", va, vb)
                }
            }
        }
    }

    fn lift(&self, v: &Vars) -> Self {
        match &self.vars {
            Some(own) => {
                assert_eq!(own, v);
                self.clone()
            }
            None => {
                let mut terms = BTreeMap::new();
                if let Some(c) = self.terms.get(&Vec::new()) {
                    terms.insert(vec![0; v.len()], c.clone());
                }
                Self {
                    vars: Some(v.clone()),
                    terms,
                }
            }
        }
    }

    /// Re-expresses the polynomial over a larger variable list.
    pub fn embed(&self, target: &Vars) -> Result<Self> {
        let Some(own) = &self.vars else {
            return Ok(self.lift(target));
        };
        let map: Vec<usize> = own
            .iter()
            .map(|name| index_of(target, name))
            .collect::<Result<_>>()?;
        let terms = self.terms.iter().map(|(e, c)| {
            let mut ne = vec![0; target.len()];
            for (i, &x) in e.iter().enumerate() {
                ne[map[i]] = x;
            }
            (ne, c.clone())
        });
        Ok(Self::from_terms(target, terms))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Replaces `var` by `var * shift_var^steps`.
    pub fn shift_var(&self, var: &str, shift_var: &str, steps: i32) -> Result<Self> {
        let Some(v) = &self.vars else {
            return Ok(self.clone());
        };
        let i = index_of(v, var)?;
        let j = index_of(v, shift_var)?;
        let terms = self.terms.iter().map(|(e, c)| {
            let mut ne = e.clone();
            ne[j] += e[i] * steps;
            (ne, c.clone())
        });
        Ok(Self::from_terms(v, terms))
    }

    /// Substitutes `var -> c * prod target^exps` (a monomial in the same ring).
    pub fn substitute_monomial(&self, var: &str, exps: &[i32], c: &F) -> Result<Self> {
        let Some(v) = &self.vars else {
            return Ok(self.clone());
        };
        let i = index_of(v, var)?;
        assert_eq!(exps.len(), v.len());
        let terms = self.terms.iter().map(|(e, x)| {
            let k = e[i];
            let mut ne = e.clone();
            ne[i] = 0;
            for (t, &d) in ne.iter_mut().zip(exps) {
                *t += d * k;
            }
            (ne, x.clone() * pow_signed(c, k))
        });
        Ok(Self::from_terms(v, terms))
    }

    /// Sets `var` to a constant value.
    pub fn evaluate_var(&self, var: &str, value: &F) -> Result<Self> {
        let Some(v) = &self.vars else {
            return Ok(self.clone());
        };
        let i = index_of(v, var)?;
        let mut zero = vec![0; v.len()];
        zero[i] = 0;
        self.substitute_monomial(var, &zero, value)
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> Option<Vec<i32>> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |mut acc, e| {
            for (a, &x) in acc.iter_mut().zip(e) {
                *a = (*a).min(x);
            }
            acc
        }))
    }

    /// Lifts a constant onto `other`'s variable list.
    pub fn embed_like(&self, other: &Self) -> Self {
        match (&self.vars, &other.vars) {
            (None, Some(v)) => self.lift(v),
            _ => self.clone(),
        }
    }

    /// Multiplies by the monomial with the given exponents.
    pub fn shift_exponents(&self, d: &[i32]) -> Self {
        if d.iter().all(|&x| x == 0) {
            return self.clone();
        }
        assert_eq!(self.vars.as_ref().map(|v| v.len()), Some(d.len()));
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(d).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Degree range of `var` as `(min, max)`; `None` for zero.
    pub fn degree_range(&self, var: &str) -> Result<Option<(i32, i32)>> {
        let Some(v) = &self.vars else {
            return Ok((!self.is_zero()).then_some((0, 0)));
        };
        let i = index_of(v, var)?;
        let mut r: Option<(i32, i32)> = None;
        for e in self.terms.keys() {
            r = Some(match r {
                None => (e[i], e[i]),
                Some((lo, hi)) => (lo.min(e[i]), hi.max(e[i])),
            });
        }
        Ok(r)
    }

    /// Coefficient list of a univariate polynomial in `var` (other
    /// exponents must vanish): returns `(low, coeffs)`.
    pub fn univariate(&self, var: &str) -> Result<(i32, Vec<F>)> {
        if self.is_zero() {
            return Ok((0, Vec::new()));
        }
        let Some(v) = &self.vars else {
            return Ok((0, vec![self.as_constant().unwrap()]));
        };
        let i = index_of(v, var)?;
        let (lo, hi) = self.degree_range(var)?.unwrap();
        let mut out = vec![F::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &x)| j != i && x != 0) {
                return Err(Error::InvalidArgument(format!(
                    "polynomial is not univariate in {var}"
                )));
            }
            out[(e[i] - lo) as usize] = c.clone();
        }
        Ok((lo, out))
    }

    pub fn from_univariate(vars: &Vars, var: &str, low: i32, coeffs: &[F]) -> Result<Self> {
        let i = index_of(vars, var)?;
        Ok(Self::from_terms(
            vars,
            coeffs.iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; vars.len()];
                e[i] = low + k as i32;
                (e, c.clone())
            }),
        ))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

pub(crate) fn index_of(vars: &Vars, name: &str) -> Result<usize> {
    vars.iter()
        .position(|v| v == name)
        .ok_or_else(|| Error::UnknownVariable(name.to_string()))
}

fn pow_signed<F: Field>(c: &F, k: i32) -> F {
    if k >= 0 {
        c.pow_i(k as u32)
    } else {
        F::one() / c.pow_i((-k) as u32)
    }
}

impl<F: Field> Add for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn add(self, rhs: Self) -> LaurentPoly<F> {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let (v, mut a, b) = LaurentPoly::unify(self, rhs);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a.vars = v;
        a
    }
}

impl<F: Field> Sub for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn sub(self, rhs: Self) -> LaurentPoly<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Neg for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn neg(self) -> LaurentPoly<F> {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<F: Field> Mul for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn mul(self, rhs: Self) -> LaurentPoly<F> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let (v, a, b) = LaurentPoly::unify(self, rhs);
        let mut out = LaurentPoly {
            vars: v,
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<F: Field> fmt::Debug for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if let Some(v) = &self.vars {
                for (name, &x) in v.iter().zip(e) {
                    if x != 0 {
                        write!(f, "*{name}^{x}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
