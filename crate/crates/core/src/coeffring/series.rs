//! Truncated elements of `F((u))[[h]]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::layer::{padd, LaurentLayer, EXACT};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Nominal truncation window: `u^s h^l` with `u_low <= s <= u_high`,
/// `0 <= l <= h_high`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesWindow {
    pub u_low: i64,
    pub u_high: i64,
    pub h_high: usize,
}

impl SeriesWindow {
    pub fn new(u_low: i64, u_high: i64, h_high: usize) -> Result<Self> {
        if u_low > u_high {
            return Err(Error::InvalidArgument(format!(
                "window u_low {u_low} exceeds u_high {u_high}"
            )));
        }
        Ok(Self {
            u_low,
            u_high,
            h_high,
        })
    }

    /// Desk-scale default: `u_low = -(h_high + 2)`, `u_high = 6`.
    pub fn desk(h_high: usize) -> Self {
        Self {
            u_low: -(h_high as i64 + 2),
            u_high: 6,
            h_high,
        }
    }

    pub fn with_u_high(self, u_high: i64) -> Self {
        Self { u_high, ..self }
    }

    pub fn padded(self, extra: i64) -> Self {
        Self {
            u_high: self.u_high + extra,
            ..self
        }
    }
}

/// A truncated series `sum_l h^l a_l(u)`.
///
/// Layers `l <= h_high` are stored; layers above `h_high` are unknown. An
/// exact series (`h_high == EXACT`) stores its nonzero layers and every
/// further layer is exactly zero.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<F> {
    layers: Vec<LaurentLayer<F>>,
    h_high: i64,
}

impl<F: Field> TruncSeries<F> {
    pub fn zero() -> Self {
        Self {
            layers: Vec::new(),
            h_high: EXACT,
        }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(0, 0, c)
    }

    /// Exact `c * u^s * h^l`.
    pub fn monomial(s: i64, l: usize, c: F) -> Self {
        let mut layers = vec![LaurentLayer::exact_zero(); l];
        layers.push(LaurentLayer::monomial(s, c, EXACT));
        Self::from_layers(layers, EXACT)
    }

    /// Zero known up to the window, unknown beyond.
    pub fn zero_in(win: &SeriesWindow) -> Self {
        Self::from_layers(
            vec![LaurentLayer::zero_to(win.u_high); win.h_high + 1],
            win.h_high as i64,
        )
    }

    pub fn from_layers(mut layers: Vec<LaurentLayer<F>>, h_high: i64) -> Self {
        if h_high < EXACT {
            let n = (h_high + 1).max(0) as usize;
            layers.truncate(n);
            layers.resize(n, LaurentLayer::exact_zero());
        } else {
            while layers.last().map(|l| l.is_exact_zero()).unwrap_or(false) {
                layers.pop();
            }
        }
        Self { layers, h_high }
    }

    /// Builds from `(s, l, c)` terms, each layer known to `win.u_high`.
    pub fn from_terms(win: &SeriesWindow, terms: impl IntoIterator<Item = (i64, usize, F)>) -> Self {
        let mut grid: Vec<std::collections::BTreeMap<i64, F>> = vec![Default::default(); win.h_high + 1];
        for (s, l, c) in terms {
            if l <= win.h_high && s <= win.u_high {
                let e = grid[l].entry(s).or_insert_with(F::zero);
                *e = e.clone() + c;
            }
        }
        let layers = grid
            .into_iter()
            .map(|m| match m.keys().next() {
                None => LaurentLayer::zero_to(win.u_high),
                Some(&lo) => {
                    let hi = *m.keys().last().unwrap();
                    let coeffs = (lo..=hi)
                        .map(|s| m.get(&s).cloned().unwrap_or_else(F::zero))
                        .collect();
                    LaurentLayer::from_coeffs(lo, coeffs, win.u_high)
                }
            })
            .collect();
        Self::from_layers(layers, win.h_high as i64)
    }

    /// Highest known h-power, `None` if exact in `h`.
    pub fn h_high(&self) -> Option<usize> {
        (self.h_high < EXACT).then_some(self.h_high as usize)
    }

    pub(crate) fn h_high_raw(&self) -> i64 {
        self.h_high
    }

    pub fn is_exact_in_h(&self) -> bool {
        self.h_high >= EXACT
    }

    /// Number of stored layers.
    pub fn num_layers(&self) -> usize {
        self.layers.len()
    }

    /// Layer `l`, or `None` if `l` is beyond the known h-range.
    pub fn layer(&self, l: usize) -> Option<LaurentLayer<F>> {
        if (l as i64) > self.h_high {
            return None;
        }
        Some(
            self.layers
                .get(l)
                .cloned()
                .unwrap_or_else(LaurentLayer::exact_zero),
        )
    }

    fn layer_ref(&self, l: usize) -> Option<&LaurentLayer<F>> {
        self.layers.get(l).filter(|x| !x.is_exact_zero())
    }

    pub fn coeff(&self, s: i64, l: usize) -> Result<F> {
        match self.layer(l) {
            None => Err(Error::PrecisionExhausted(format!(
                "h^{l} requested, series known to h^{}",
                self.h_high
            ))),
            Some(layer) => layer.coeff(s),
        }
    }

    /// Summary window: smallest stored exponent, the smallest layer
    /// precision and the h-precision (`usize::MAX` if exact).
    pub fn window(&self) -> SeriesWindow {
        let u_low = self.layers.iter().filter_map(|l| l.low()).min().unwrap_or(0);
        let u_high = self
            .layers
            .iter()
            .map(|l| l.high())
            .min()
            .unwrap_or(EXACT);
        SeriesWindow {
            u_low,
            u_high,
            h_high: self.h_high().unwrap_or(usize::MAX),
        }
    }

    /// Precision of each stored layer.
    pub fn layer_highs(&self) -> Vec<i64> {
        self.layers.iter().map(|l| l.high()).collect()
    }

    /// True if every coefficient inside `win` is known.
    pub fn covers(&self, win: &SeriesWindow) -> bool {
        if (win.h_high as i64) > self.h_high {
            return false;
        }
        (0..=win.h_high).all(|l| self.layer(l).map(|x| x.high() >= win.u_high).unwrap_or(false))
    }

    /// Truncates to the window's `u_high` and `h_high`.
    pub fn restrict(&self, win: &SeriesWindow) -> Self {
        let h = (win.h_high as i64).min(self.h_high);
        let layers = (0..=h as usize)
            .map(|l| self.layer(l).unwrap().truncate(win.u_high))
            .collect();
        Self::from_layers(layers, h)
    }

    /// Exact constant series, if this is one.
    pub fn as_constant(&self) -> Option<F> {
        if !self.is_exact_in_h() || self.layers.len() > 1 {
            return None;
        }
        let Some(l0) = self.layers.first() else {
            return Some(F::zero());
        };
        if !l0.is_exact() {
            return None;
        }
        let terms: Vec<_> = l0.terms().collect();
        match terms.as_slice() {
            [] => Some(F::zero()),
            [(0, c)] => Some((*c).clone()),
            _ => None,
        }
    }

    /// Restricts to the window and fails unless all of it is known and no
    /// stored term lies below `win.u_low`.
    pub fn require(&self, win: &SeriesWindow) -> Result<Self> {
        if let Some((s, l, _)) = self
            .terms()
            .into_iter()
            .find(|(s, l, _)| *s < win.u_low && *l <= win.h_high)
        {
            return Err(Error::PrecisionExhausted(format!(
                "term u^{s} h^{l} lies below the window start u^{}",
                win.u_low
            )));
        }
        if !self.covers(win) {
            return Err(Error::PrecisionExhausted(format!(
                "series known to {:?} does not cover u^{} h^{}",
                self.layer_highs(),
                win.u_high,
                win.h_high
            )));
        }
        Ok(self.restrict(win))
    }

    /// First layer that is not exactly zero.
    pub(crate) fn h_valuation_bound(&self) -> i64 {
        match self.layers.iter().position(|l| !l.is_exact_zero()) {
            Some(p) => p as i64,
            None => padd(self.h_high, 1),
        }
    }

    /// First layer with a known nonzero coefficient.
    pub fn h_valuation(&self) -> Option<usize> {
        self.layers.iter().position(|l| !l.is_known_zero())
    }

    /// All known coefficients vanish.
    pub fn is_known_zero(&self) -> bool {
        self.layers.iter().all(|l| l.is_known_zero())
    }

    pub fn is_exact_zero(&self) -> bool {
        self.is_exact_in_h() && self.layers.iter().all(|l| l.is_exact_zero())
    }

    /// Known nonzero terms `(s, l, c)`, ordered by `l` then `s`.
    pub fn terms(&self) -> Vec<(i64, usize, F)> {
        let mut out = Vec::new();
        for (l, layer) in self.layers.iter().enumerate() {
            for (s, c) in layer.terms() {
                out.push((s, l, c.clone()));
            }
        }
        out
    }

    /// First known nonzero coefficient, if any.
    pub fn first_nonzero(&self) -> Option<(i64, usize, F)> {
        self.terms().into_iter().next()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_layers(self.layers.iter().map(|l| l.scale(c)).collect(), self.h_high)
    }

    /// Multiplies by `h^k`.
    pub fn mul_h_pow(&self, k: usize) -> Self {
        let mut layers = vec![LaurentLayer::exact_zero(); k];
        layers.extend(self.layers.iter().cloned());
        Self::from_layers(layers, padd(self.h_high, k as i64))
    }

    /// Divides by `h^m`; the first `m` layers must be known to vanish.
    pub fn div_h_pow(&self, m: usize) -> Result<Self> {
        for l in 0..m {
            match self.layer(l) {
                None => {
                    return Err(Error::PrecisionExhausted(format!(
                        "h^{l} unknown while dividing by h^{m}"
                    )))
                }
                Some(layer) => {
                    if let Some((s, c)) = layer.terms().next() {
                        return Err(Error::InvalidArgument(format!(
                            "h-valuation below {m}: u^{s} h^{l} has coefficient {c}"
                        )));
                    }
                }
            }
        }
        let layers = self.layers.iter().skip(m).cloned().collect();
        let h = if self.is_exact_in_h() {
            EXACT
        } else {
            self.h_high - m as i64
        };
        Ok(Self::from_layers(layers, h))
    }

    /// Multiplicative inverse, known at most inside `cap`.
    pub fn inv(&self, cap: &SeriesWindow) -> Result<Self> {
        let a0 = self.layer(0).ok_or_else(|| Error::NonInvertible("h^0 layer unknown".into()))?;
        if a0.is_known_zero() {
            return Err(Error::NonInvertible("zero h^0 layer".into()));
        }
        let h = self.h_high.min(cap.h_high as i64);
        let b0 = a0.inv(cap.u_high)?;
        let mut out = vec![b0.clone()];
        for l in 1..=h as usize {
            let mut acc = LaurentLayer::exact_zero();
            for j in 1..=l {
                if let Some(a) = self.layer_ref(j) {
                    acc = acc.add(&a.mul(&out[l - j]));
                }
            }
            out.push(b0.mul(&acc).neg().truncate(cap.u_high));
        }
        Ok(Self::from_layers(out, h))
    }

    /// `u -> -u`.
    pub fn reflect(&self) -> Self {
        Self::from_layers(self.layers.iter().map(|l| l.reflect()).collect(), self.h_high)
    }

    pub fn derivative(&self) -> Self {
        Self::from_layers(
            self.layers.iter().map(|l| l.derivative()).collect(),
            self.h_high,
        )
    }

    /// `a(u + c h)` computed by Taylor expansion, with at most `h_cap` layers.
    pub fn taylor_shift(&self, c: &F, h_cap: usize) -> Self {
        let h = self.h_high.min(h_cap as i64);
        if c.is_zero() {
            return self.restrict(&SeriesWindow {
                u_low: 0,
                u_high: EXACT,
                h_high: h as usize,
            });
        }
        // derivs[k][j] = a_j^{(k)} / k! * c^k
        let mut out: Vec<LaurentLayer<F>> = vec![LaurentLayer::exact_zero(); h as usize + 1];
        for j in 0..=h as usize {
            let Some(base) = self.layer_ref(j) else { continue };
            let mut d = base.clone();
            let mut fac = F::one();
            for k in 0..=(h as usize - j) {
                if k > 0 {
                    d = d.derivative();
                    fac = fac * c.clone() / F::from_i64(k as i64);
                }
                out[j + k] = out[j + k].add(&d.scale(&fac));
            }
        }
        Self::from_layers(out, h)
    }

    /// Square root with constant term 1, for series whose `h^0` layer is 1.
    pub fn sqrt(&self, h_cap: usize) -> Result<Self> {
        let a0 = self.layer(0).ok_or(Error::SqrtConstantTerm)?;
        let is_one = a0.high() >= 0
            && a0.terms().count() == 1
            && a0.terms().next().map(|(s, c)| s == 0 && c.is_one()).unwrap_or(false);
        if !is_one {
            return Err(Error::SqrtConstantTerm);
        }
        let h = self.h_high.min(h_cap as i64) as usize;
        let half = F::one() / F::from_i64(2);
        let mut out: Vec<LaurentLayer<F>> = vec![a0.clone()];
        for l in 1..=h {
            let mut acc = self.layer(l).unwrap();
            for j in 1..l {
                acc = acc.sub(&out[j].mul(&out[l - j]));
            }
            out.push(acc.scale(&half));
        }
        Ok(Self::from_layers(out, h as i64))
    }

    /// Smallest `s + l` over known nonzero terms.
    pub fn min_degree_sum(&self) -> Option<i64> {
        self.terms().iter().map(|(s, l, _)| s + *l as i64).min()
    }

    /// Terms with `s + l == m` (degree `-m`), with the h-range cut where
    /// the component is no longer determined by the known coefficients.
    pub fn component_with_degree_sum(&self, m: i64) -> Self {
        let mut layers = Vec::new();
        let mut h = self.h_high;
        for l in 0..=self.h_high.min(self.layers.len() as i64 + m.abs() + 64) as usize {
            let Some(layer) = self.layer(l) else { break };
            let s = m - l as i64;
            if layer.high() < s {
                h = l as i64 - 1;
                break;
            }
            layers.push(LaurentLayer::monomial(s, layer.coeff_or_zero(s), EXACT));
        }
        if self.is_exact_in_h() {
            h = EXACT.min(h);
        }
        Self::from_layers(layers, h)
    }

    /// Keeps exactly the terms of maximal degree `-s-l`.
    pub fn highest_component(&self) -> Result<Self> {
        let m = self.min_degree_sum().ok_or(Error::ZeroInput)?;
        Ok(self.component_with_degree_sum(m))
    }

    /// True if every layer only has a `u^0` term among its known coefficients.
    pub fn is_pure_h(&self) -> bool {
        self.terms().iter().all(|(s, _, _)| *s == 0)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> TruncSeries<G> {
        TruncSeries::from_layers(self.layers.iter().map(|l| l.map(f)).collect(), self.h_high)
    }

    /// First known coefficient of `self - other` that is nonzero.
    pub fn difference_witness(&self, other: &Self) -> Option<(i64, usize, F)> {
        (self - other).first_nonzero()
    }
}

impl<F: Field> Add for &TruncSeries<F> {
    type Output = TruncSeries<F>;
    fn add(self, rhs: Self) -> TruncSeries<F> {
        let h = self.h_high.min(rhs.h_high);
        let n = if h >= EXACT {
            self.layers.len().max(rhs.layers.len())
        } else {
            h as usize + 1
        };
        let layers = (0..n)
            .map(|l| match (self.layer(l), rhs.layer(l)) {
                (Some(a), Some(b)) => a.add(&b),
                _ => unreachable!("layer within both h-ranges"),
            })
            .collect();
        TruncSeries::from_layers(layers, h)
    }
}

impl<F: Field> Neg for &TruncSeries<F> {
    type Output = TruncSeries<F>;
    fn neg(self) -> TruncSeries<F> {
        TruncSeries::from_layers(self.layers.iter().map(|l| l.neg()).collect(), self.h_high)
    }
}

impl<F: Field> Sub for &TruncSeries<F> {
    type Output = TruncSeries<F>;
    fn sub(self, rhs: Self) -> TruncSeries<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Mul for &TruncSeries<F> {
    type Output = TruncSeries<F>;
    fn mul(self, rhs: Self) -> TruncSeries<F> {
        let h = padd(self.h_high, rhs.h_valuation_bound())
            .min(padd(rhs.h_high, self.h_valuation_bound()));
        let n = if h >= EXACT {
            if self.layers.is_empty() || rhs.layers.is_empty() {
                0
            } else {
                self.layers.len() + rhs.layers.len() - 1
            }
        } else {
            h as usize + 1
        };
        let mut layers = Vec::with_capacity(n);
        for l in 0..n {
            let mut acc = LaurentLayer::exact_zero();
            for i in 0..=l {
                let (Some(a), Some(b)) = (self.layer_ref(i), rhs.layer_ref(l - i)) else {
                    continue;
                };
                acc = acc.add(&a.mul(b));
            }
            layers.push(acc);
        }
        TruncSeries::from_layers(layers, h)
    }
}

impl<F: Field> fmt::Debug for TruncSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries[h<={}; highs {:?}]{{", self.h_high, self.layer_highs())?;
        for (s, l, c) in self.terms() {
            write!(f, " ({c})u^{s}h^{l}")?;
        }
        write!(f, " }}")
    }
}
