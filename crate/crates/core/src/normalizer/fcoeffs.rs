//! The series `f(x) = 1 + sum f_k x^k` and its `x/(1-x)` presentation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coeffring::{upoly, vars, LaurentFraction, LaurentPoly, Vars};
use crate::error::Result;
use crate::scalar::{binomial, Field};

pub const Q: &str = "q";

pub(crate) fn q_vars() -> Vars {
    vars(&[Q])
}

/// Coefficients `f_k` and `a_k` as rational functions of `q`.
#[derive(Clone, Debug)]
pub struct FCoeffs<F: Field> {
    pub n: usize,
    pub order: usize,
    /// `f[k]` for `k = 0..=order`; `f[0] = 1`.
    pub f: Vec<LaurentFraction<F>>,
    /// `a[k]` with `f(x) = 1 + sum a_k (x/(1-x))^k`.
    pub a: Vec<LaurentFraction<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionJson {
    pub num: String,
    pub den: String,
}

impl<F: Field> FCoeffs<F> {
    pub fn f_json(&self) -> Vec<FractionJson> {
        self.f.iter().map(frac_json).collect()
    }

    pub fn a_json(&self) -> Vec<FractionJson> {
        self.a.iter().map(frac_json).collect()
    }
}

fn frac_json<F: Field>(a: &LaurentFraction<F>) -> FractionJson {
    FractionJson {
        num: a.num().to_string(),
        den: a.den().to_string(),
    }
}

/// `num(s) / prod Φ_d(s)^{m_d}` with `s = q^2` and `Φ_d` cyclotomic.
#[derive(Clone, Debug)]
struct CycFrac<F> {
    num: Vec<F>,
    den: BTreeMap<usize, u32>,
}

fn cyclotomic<F: Field>(d: usize, memo: &mut BTreeMap<usize, Vec<F>>) -> Vec<F> {
    if let Some(p) = memo.get(&d) {
        return p.clone();
    }
    let mut p = vec![F::zero(); d + 1];
    p[0] = -F::one();
    p[d] = F::one();
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = upoly::divrem(&p, &cyclotomic(e, memo)).0;
        }
    }
    memo.insert(d, p.clone());
    p
}

impl<F: Field> CycFrac<F> {
    fn poly(num: Vec<F>) -> Self {
        Self {
            num: upoly::trim(num),
            den: BTreeMap::new(),
        }
    }

    /// `1 / (s^k - 1)`.
    fn recip_s_pow_minus_one(k: usize) -> Self {
        Self {
            num: vec![F::one()],
            den: (1..=k).filter(|d| k.is_multiple_of(*d)).map(|d| (d, 1)).collect(),
        }
    }

    fn scale(&self, c: &F) -> Self {
        Self {
            num: upoly::trim(self.num.iter().map(|x| x.clone() * c.clone()).collect()),
            den: self.den.clone(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut den = self.den.clone();
        for (d, m) in &other.den {
            *den.entry(*d).or_insert(0) += m;
        }
        Self {
            num: upoly::mul(&self.num, &other.num),
            den,
        }
    }

    fn lift(&self, den: &BTreeMap<usize, u32>, memo: &mut BTreeMap<usize, Vec<F>>) -> Vec<F> {
        let mut num = self.num.clone();
        for (d, m) in den {
            for _ in self.den.get(d).copied().unwrap_or(0)..*m {
                num = upoly::mul(&num, &cyclotomic(*d, memo));
            }
        }
        num
    }

    fn add(&self, other: &Self, memo: &mut BTreeMap<usize, Vec<F>>) -> Self {
        let mut den = self.den.clone();
        for (d, m) in &other.den {
            let e = den.entry(*d).or_insert(0);
            *e = (*e).max(*m);
        }
        let a = self.lift(&den, memo);
        let b = other.lift(&den, memo);
        let len = a.len().max(b.len());
        let num = (0..len)
            .map(|i| a.get(i).cloned().unwrap_or_else(F::zero) + b.get(i).cloned().unwrap_or_else(F::zero))
            .collect();
        Self::poly(num).with_den(den).reduce(memo)
    }

    fn with_den(mut self, den: BTreeMap<usize, u32>) -> Self {
        self.den = den;
        self
    }

    fn reduce(mut self, memo: &mut BTreeMap<usize, Vec<F>>) -> Self {
        if self.num.is_empty() {
            self.den.clear();
            return self;
        }
        let ds: Vec<usize> = self.den.keys().copied().collect();
        for d in ds {
            let phi = cyclotomic(d, memo);
            while self.den[&d] > 0 {
                let (q, r) = upoly::divrem(&self.num, &phi);
                if !upoly::trim(r).is_empty() {
                    break;
                }
                self.num = q;
                *self.den.get_mut(&d).unwrap() -= 1;
            }
        }
        self.den.retain(|_, m| *m > 0);
        self
    }

    fn to_fraction(&self, memo: &mut BTreeMap<usize, Vec<F>>) -> LaurentFraction<F> {
        let mut den = vec![F::one()];
        for (d, m) in &self.den {
            for _ in 0..*m {
                den = upoly::mul(&den, &cyclotomic(*d, memo));
            }
        }
        let spread = |p: &[F]| -> Vec<F> {
            let mut out = vec![F::zero(); 2 * p.len()];
            for (i, c) in p.iter().enumerate() {
                out[2 * i] = c.clone();
            }
            out
        };
        let v = q_vars();
        LaurentFraction::new(
            LaurentPoly::from_univariate(&v, Q, 0, &spread(&self.num)).expect("q"),
            LaurentPoly::from_univariate(&v, Q, 0, &spread(&den)).expect("q"),
        )
        .expect("nonzero denominator")
    }
}

fn s_pow_minus_one<F: Field>(k: usize) -> Vec<F> {
    let mut p = vec![F::zero(); k + 1];
    p[0] = -F::one();
    p[k] = p[k].clone() + F::one();
    p
}

/// Solves `f(x) f(xq^2) ⋯ f(xq^{2n-2}) = (1-x)/(1-xq^{2n-2})` to order
/// `order`, together with the `a_k`.
pub fn solve_f<F: Field>(n: usize, order: usize) -> FCoeffs<F> {
    let mut memo = BTreeMap::new();
    // log f = sum L_k x^k, L_k = (s^{(n-1)k}-1)(s^k-1) / (k (s^{nk}-1))
    let logs: Vec<CycFrac<F>> = (1..=order)
        .map(|k| {
            let num = upoly::mul(&s_pow_minus_one::<F>((n - 1) * k), &s_pow_minus_one::<F>(k));
            CycFrac::poly(num)
                .mul(&CycFrac::recip_s_pow_minus_one(n * k))
                .scale(&(F::one() / F::from_i64(k as i64)))
                .reduce(&mut memo)
        })
        .collect();
    let mut f = vec![CycFrac::poly(vec![F::one()])];
    for k in 1..=order {
        let mut acc = CycFrac::poly(Vec::new());
        for i in 1..=k {
            let term = logs[i - 1].mul(&f[k - i]).scale(&F::from_i64(i as i64));
            acc = acc.add(&term, &mut memo);
        }
        f.push(acc.scale(&(F::one() / F::from_i64(k as i64))));
    }
    let mut a = vec![CycFrac::poly(vec![F::one()])];
    for k in 1..=order {
        let mut acc = CycFrac::poly(Vec::new());
        for j in 1..=k {
            let c: F = binomial::<F>(k as i64 - 1, (k - j) as i64);
            let c = if (k - j) % 2 == 1 { -c } else { c };
            acc = acc.add(&f[j].scale(&c), &mut memo);
        }
        a.push(acc);
    }
    FCoeffs {
        n,
        order,
        f: f.iter().map(|x| x.to_fraction(&mut memo)).collect(),
        a: a.iter().map(|x| x.to_fraction(&mut memo)).collect(),
    }
}

/// True iff every `a_k / (q-1)^k` is regular at `q = 1`.
pub fn check_b_regularity<F: Field>(fc: &FCoeffs<F>) -> Result<bool> {
    for (k, a) in fc.a.iter().enumerate().skip(1) {
        if let Some(ord) = a.order_at_one(Q)? {
            if ord < k as i64 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `b_k(1) = lim_{q->1} a_k / (q-1)^k`, assuming regularity.
pub fn b_value_at_one<F: Field>(fc: &FCoeffs<F>, k: usize) -> Result<F> {
    let a = &fc.a[k];
    if a.is_zero() {
        return Ok(F::zero());
    }
    let (_, num) = a.num().univariate(Q)?;
    let (_, den) = a.den().univariate(Q)?;
    let mut num = num;
    for _ in 0..k {
        num = upoly::divrem(&num, &[-F::one(), F::one()]).0;
    }
    let one = F::one();
    Ok(upoly::eval(&num, &one) / upoly::eval(&den, &one))
}
