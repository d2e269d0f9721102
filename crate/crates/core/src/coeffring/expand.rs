//! Expansion of exponentials and Laurent fractions into truncated series.

use std::collections::BTreeMap;

use super::fraction::LaurentFraction;
use super::laurent_poly::LaurentPoly;
use super::layer::{LaurentLayer, EXACT};
use super::series::{SeriesWindow, TruncSeries};
use crate::error::{Error, Result};
use crate::scalar::{binomial, factorial, Field};

/// `exp(alpha*u + beta*h)` truncated to `win`.
pub fn exp_expand<F: Field>(alpha: &F, beta: &F, win: &SeriesWindow) -> TruncSeries<F> {
    let base = if alpha.is_zero() {
        LaurentLayer::monomial(0, F::one(), EXACT)
    } else {
        let top = win.u_high.max(-1);
        let mut coeffs = Vec::new();
        let mut c = F::one();
        for s in 0..=top {
            if s > 0 {
                c = c * alpha.clone() / F::from_i64(s);
            }
            coeffs.push(c.clone());
        }
        LaurentLayer::from_coeffs(0, coeffs, win.u_high)
    };
    if beta.is_zero() {
        return TruncSeries::from_layers(vec![base], EXACT);
    }
    let mut layers = Vec::with_capacity(win.h_high + 1);
    let mut c = F::one();
    for l in 0..=win.h_high {
        if l > 0 {
            c = c * beta.clone() / F::from_i64(l as i64);
        }
        layers.push(base.scale(&c));
    }
    TruncSeries::from_layers(layers, win.h_high as i64)
}

/// Runs `f` on successively padded windows until its result covers `win`.
pub fn with_padding<F: Field>(
    win: &SeriesWindow,
    f: impl Fn(&SeriesWindow) -> Result<TruncSeries<F>>,
) -> Result<TruncSeries<F>> {
    let mut pad = win.h_high as i64 + 2;
    let mut last = None;
    for _ in 0..5 {
        let s = f(&win.padded(pad))?;
        if s.covers(win) {
            return s.require(win);
        }
        last = Some(s);
        pad *= 2;
    }
    Err(Error::PrecisionExhausted(format!(
        "padding did not reach the window; last precision {:?}",
        last.map(|s| s.layer_highs()).unwrap_or_default()
    )))
}

/// `(1 - exp(u + a*h))^{-1}` as the product of the three factors
/// `-u^{-1}`, `(sum_{l>=1} (u+ah)^{l-1}/l!)^{-1}` and `(1 + ah/u)^{-1}`.
pub fn geom_inverse<F: Field>(a: &F, win: &SeriesWindow) -> Result<TruncSeries<F>> {
    let deepest = if a.is_zero() { -1 } else { -1 - win.h_high as i64 };
    if deepest < win.u_low {
        return Err(Error::PrecisionExhausted(format!(
            "u^{deepest} needed, window starts at u^{}",
            win.u_low
        )));
    }
    with_padding(win, |w| {
        let mut terms = Vec::new();
        for k in 0..=(w.u_high.max(0) as usize + w.h_high) {
            let inv_fact: F = F::one() / factorial::<F>(k as u32 + 1);
            for j in 0..=k.min(w.h_high) {
                let c = binomial::<F>(k as i64, j as i64) * a.pow_i(j as u32) * inv_fact.clone();
                terms.push(((k - j) as i64, j, c));
            }
        }
        let e = TruncSeries::from_terms(w, terms);
        let ladder = TruncSeries::from_layers(
            (0..=w.h_high)
                .map(|j| LaurentLayer::monomial(-(j as i64), (-a.clone()).pow_i(j as u32), EXACT))
                .collect(),
            if a.is_zero() { EXACT } else { w.h_high as i64 },
        );
        let lead = TruncSeries::monomial(-1, 0, -F::one());
        Ok(&(&lead * &e.inv(w)?) * &ladder)
    })
}

/// How a variable of a fraction maps into the series ring: `var -> exp(alpha*u + beta*h)`.
#[derive(Clone, Debug)]
pub struct VarMap<F> {
    pub name: String,
    pub alpha: F,
    pub beta: F,
}

impl<F: Field> VarMap<F> {
    pub fn new(name: &str, alpha: F, beta: F) -> Self {
        Self {
            name: name.to_string(),
            alpha,
            beta,
        }
    }

    /// The standard substitution `x = e^u`, `q = e^{h/2}`.
    pub fn standard(x: &str, q: &str) -> Vec<Self> {
        vec![
            Self::new(x, F::one(), F::zero()),
            Self::new(q, F::zero(), F::from_ratio(1, 2)),
        ]
    }
}

fn poly_image<F: Field>(
    p: &LaurentPoly<F>,
    map: &[VarMap<F>],
    win: &SeriesWindow,
) -> Result<TruncSeries<F>> {
    let Some(vars) = p.vars() else {
        return Ok(TruncSeries::constant(p.as_constant().unwrap_or_else(F::zero)));
    };
    let mut idx = Vec::with_capacity(vars.len());
    for v in vars.iter() {
        let m = map
            .iter()
            .find(|m| &m.name == v)
            .ok_or_else(|| Error::UnknownVariable(v.clone()))?;
        idx.push(m);
    }
    let mut grouped: BTreeMap<String, (F, F, F)> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut alpha = F::zero();
        let mut beta = F::zero();
        for (k, m) in idx.iter().enumerate() {
            let ek = F::from_i64(e[k] as i64);
            alpha = alpha + ek.clone() * m.alpha.clone();
            beta = beta + ek * m.beta.clone();
        }
        let key = format!("{alpha}|{beta}");
        let entry = grouped.entry(key).or_insert((alpha, beta, F::zero()));
        entry.2 = entry.2.clone() + c.clone();
    }
    let mut acc = TruncSeries::zero();
    for (alpha, beta, c) in grouped.into_values() {
        if !c.is_zero() {
            acc = &acc + &exp_expand(&alpha, &beta, win).scale(&c);
        }
    }
    Ok(acc)
}

/// Image of a fraction under `var -> exp(alpha*u + beta*h)`, covering `win`.
pub fn from_fraction_with<F: Field>(
    a: &LaurentFraction<F>,
    map: &[VarMap<F>],
    win: &SeriesWindow,
) -> Result<TruncSeries<F>> {
    with_padding(win, |w| {
        let num = poly_image(a.num(), map, w)?;
        let den = poly_image(a.den(), map, w)?;
        if den.as_constant().is_some() {
            let c = den.as_constant().unwrap();
            return Ok(num.scale(&(F::one() / c)));
        }
        let inv = den.inv(w).map_err(|e| match e {
            Error::NonInvertible(m) => Error::NonInvertible(format!("denominator image: {m}")),
            other => other,
        })?;
        Ok(&num * &inv)
    })
}

/// Image under the standard substitution `x = e^u`, `q = e^{h/2}`.
pub fn from_fraction<F: Field>(
    a: &LaurentFraction<F>,
    x: &str,
    q: &str,
    win: &SeriesWindow,
) -> Result<TruncSeries<F>> {
    from_fraction_with(a, &VarMap::standard(x, q), win)
}
