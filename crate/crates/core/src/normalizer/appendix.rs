//! `g(u)` from the layer-by-layer differential recursion: each layer
//! `g_l(u)` is a rational function of `z = e^u` with denominator a power
//! of `1 - z`, found by antidifferentiation in a finite basis.

use std::collections::BTreeMap;

use crate::coeffring::{from_fraction, EXACT, vars, LaurentFraction, LaurentPoly, SeriesWindow, TruncSeries};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// `P(z) / (1 - z)^t` with `P` a Laurent polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct ZFrac<F> {
    num: BTreeMap<i64, F>,
    t: u32,
}

fn poly_mul<F: Field>(a: &BTreeMap<i64, F>, b: &BTreeMap<i64, F>) -> BTreeMap<i64, F> {
    let mut out = BTreeMap::new();
    for (i, x) in a {
        for (j, y) in b {
            let e = out.entry(i + j).or_insert_with(F::zero);
            *e = e.clone() + x.clone() * y.clone();
        }
    }
    out.retain(|_, c: &mut F| !c.is_zero());
    out
}

fn one_minus_z_pow<F: Field>(k: u32) -> BTreeMap<i64, F> {
    let mut acc = BTreeMap::from([(0, F::one())]);
    let base = BTreeMap::from([(0, F::one()), (1, -F::one())]);
    for _ in 0..k {
        acc = poly_mul(&acc, &base);
    }
    acc
}

impl<F: Field> ZFrac<F> {
    pub fn zero() -> Self {
        Self {
            num: BTreeMap::new(),
            t: 0,
        }
    }

    pub fn constant(c: F) -> Self {
        Self::new(BTreeMap::from([(0, c)]), 0)
    }

    /// `c z^j / (1 - z)^t`.
    pub fn monomial(c: F, j: i64, t: u32) -> Self {
        Self::new(BTreeMap::from([(j, c)]), t)
    }

    pub fn new(mut num: BTreeMap<i64, F>, t: u32) -> Self {
        num.retain(|_, c| !c.is_zero());
        let mut out = Self { num, t };
        out.cancel();
        out
    }

    /// Cancels common factors `1 - z`.
    fn cancel(&mut self) {
        if self.num.is_empty() {
            self.t = 0;
            return;
        }
        while self.t > 0 {
            let at_one = self.num.values().fold(F::zero(), |a, c| a + c.clone());
            if !at_one.is_zero() {
                break;
            }
            // divide P(z) by (1 - z): coefficients from the top down
            let lo = *self.num.keys().next().unwrap();
            let hi = *self.num.keys().last().unwrap();
            let mut q = BTreeMap::new();
            let mut carry = F::zero();
            for e in (lo..=hi).rev() {
                // P = (1 - z) Q: p_e = q_e - q_{e-1}
                let pe = self.num.get(&e).cloned().unwrap_or_else(F::zero);
                let qe_minus_1 = carry.clone() - pe;
                if e > lo {
                    if !qe_minus_1.is_zero() {
                        q.insert(e - 1, qe_minus_1.clone());
                    }
                    carry = qe_minus_1;
                }
            }
            self.num = q;
            self.num.retain(|_, c| !c.is_zero());
            self.t -= 1;
        }
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn numerator(&self) -> &BTreeMap<i64, F> {
        &self.num
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn as_constant(&self) -> Option<F> {
        if self.num.is_empty() {
            return Some(F::zero());
        }
        if self.t == 0 && self.num.len() == 1 {
            if let Some(c) = self.num.get(&0) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Numerator over `(1 - z)^t` for a larger `t`.
    fn numerator_at(&self, t: u32) -> BTreeMap<i64, F> {
        poly_mul(&self.num, &one_minus_z_pow(t - self.t))
    }

    pub fn add(&self, other: &Self) -> Self {
        let t = self.t.max(other.t);
        let mut a = self.numerator_at(t);
        for (e, c) in other.numerator_at(t) {
            let x = a.entry(e).or_insert_with(F::zero);
            *x = x.clone() + c;
        }
        Self::new(a, t)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.num.iter().map(|(e, x)| (*e, x.clone() * c.clone())).collect(), self.t)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-F::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(poly_mul(&self.num, &other.num), self.t + other.t)
    }

    /// Divides by `(1 - z)^k`.
    pub fn div_one_minus_z(&self, k: u32) -> Self {
        Self::new(self.num.clone(), self.t + k)
    }

    /// `d/du = z d/dz`.
    pub fn derivative(&self) -> Self {
        // (z P'(1 - z) + t z P) / (1 - z)^{t+1}
        let zdp: BTreeMap<i64, F> = self
            .num
            .iter()
            .map(|(e, c)| (*e, c.clone() * F::from_i64(*e)))
            .collect();
        let mut a = poly_mul(&zdp, &one_minus_z_pow(1));
        let tf = F::from_i64(self.t as i64);
        for (e, c) in &self.num {
            let x = a.entry(e + 1).or_insert_with(F::zero);
            *x = x.clone() + tf.clone() * c.clone();
        }
        Self::new(a, self.t + 1)
    }

    /// `u -> -u`, i.e. `z -> 1/z`.
    pub fn reflect(&self) -> Self {
        // P(1/z)/(1 - 1/z)^t = (-1)^t z^t P(1/z) / (1 - z)^t
        let sign = if self.t % 2 == 1 { -F::one() } else { F::one() };
        let t = self.t as i64;
        Self::new(
            self.num.iter().map(|(e, c)| (t - e, c.clone() * sign.clone())).collect(),
            self.t,
        )
    }

    /// As a fraction in `x = e^u`.
    pub fn to_fraction(&self) -> Result<LaurentFraction<F>> {
        let v = vars(&["x"]);
        let num = LaurentPoly::from_terms(&v, self.num.iter().map(|(e, c)| (vec![*e as i32], c.clone())));
        let den = LaurentPoly::from_terms(
            &v,
            one_minus_z_pow::<F>(self.t).into_iter().map(|(e, c)| (vec![e as i32], c)),
        );
        LaurentFraction::new(num, den)
    }

    /// Laurent expansion in `u` (exact in `h`).
    pub fn to_series(&self, win: &SeriesWindow) -> Result<TruncSeries<F>> {
        let s = from_fraction(&self.to_fraction()?, "x", "q", &SeriesWindow { h_high: 0, ..*win })?;
        Ok(TruncSeries::from_layers(s.layer(0).into_iter().collect(), EXACT))
    }
}

/// Solves `A x = b` exactly; `None` if inconsistent.
fn solve_linear<F: Field>(mut a: Vec<Vec<F>>, mut b: Vec<F>, cols: usize) -> Option<Vec<F>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        b.swap(r, p);
        let inv = F::one() / a[r][c].clone();
        for k in c..cols {
            a[r][k] = a[r][k].clone() * inv.clone();
        }
        b[r] = b[r].clone() * inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in c..cols {
                    a[i][k] = a[i][k].clone() - f.clone() * a[r][k].clone();
                }
                b[i] = b[i].clone() - f * b[r].clone();
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if b[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = b[i].clone();
    }
    Some(x)
}

/// Finds `G` in span{1, z^j/(1-z)^t : 0 <= j <= t, 1 <= t <= t_max} with
/// `z dG/dz = rhs`; the constant part of `G` is left at zero.
pub fn antiderivative_in_basis<F: Field>(rhs: &ZFrac<F>, t_max: u32, layer: usize) -> Result<ZFrac<F>> {
    if rhs.is_zero() {
        return Ok(ZFrac::zero());
    }
    let t_all = t_max + 1;
    if rhs.t > t_all || rhs.num.keys().next().map(|&e| e < 0).unwrap_or(false) {
        return Err(Error::BasisInsufficient(layer));
    }
    let mut basis = Vec::new();
    for t in 1..=t_max {
        for j in 0..=t as i64 {
            basis.push(ZFrac::monomial(F::one(), j, t));
        }
    }
    let images: Vec<BTreeMap<i64, F>> = basis
        .iter()
        .map(|b| {
            let d = b.derivative();
            d.numerator_at(t_all)
        })
        .collect();
    let target = rhs.numerator_at(t_all);
    let top = images
        .iter()
        .chain(std::iter::once(&target))
        .filter_map(|m| m.keys().last().copied())
        .max()
        .unwrap_or(0);
    let rows = (top + 1) as usize;
    let cols = basis.len();
    let mut a = vec![vec![F::zero(); cols]; rows];
    for (c, img) in images.iter().enumerate() {
        for (e, v) in img {
            a[*e as usize][c] = v.clone();
        }
    }
    let mut b = vec![F::zero(); rows];
    for (e, v) in &target {
        b[*e as usize] = v.clone();
    }
    let x = solve_linear(a, b, cols).ok_or(Error::BasisInsufficient(layer))?;
    let mut g = ZFrac::zero();
    for (c, coef) in x.into_iter().enumerate() {
        if !coef.is_zero() {
            g = g.add(&basis[c].scale(&coef));
        }
    }
    Ok(g)
}

/// Exact layers `g_0, ..., g_h` and their expansion.
#[derive(Clone, Debug)]
pub struct AppendixA<F: Field> {
    pub layers: Vec<ZFrac<F>>,
    pub series: TruncSeries<F>,
}

fn fact<F: Field>(k: usize) -> F {
    crate::scalar::factorial::<F>(k as u32)
}

/// Layers `g_0..=g_h_max` from the recursion.
pub fn appendix_layers<F: Field>(n: usize, h_max: usize) -> Result<Vec<ZFrac<F>>> {
    let nf = F::from_i64(n as i64);
    let nm1 = F::from_i64(n as i64 - 1);
    let z = |c: F, j: i64| ZFrac::monomial(c, j, 0);
    let one_minus_z_sq = ZFrac::new(one_minus_z_pow::<F>(2), 0);
    // coefficient series of h^a on both sides of the cleared equation
    let a_coef = |a: usize| -> ZFrac<F> {
        if a == 0 {
            one_minus_z_sq.clone()
        } else {
            // -z(1-z) n^a / a!
            z(nf.pow_i(a as u32) / fact::<F>(a), 1).mul(&ZFrac::new(one_minus_z_pow(1), 0)).scale(&-F::one())
        }
    };
    let b_coef = |a: usize| -> ZFrac<F> {
        if a == 0 {
            one_minus_z_sq.clone()
        } else {
            let fa = fact::<F>(a);
            z(nf.pow_i(a as u32) / fa.clone(), 2)
                .add(&z(-(nm1.pow_i(a as u32) + F::one()) / fa, 1))
        }
    };
    let mut g: Vec<ZFrac<F>> = vec![ZFrac::constant(F::one())];
    // derivs[j][k] = (d/du)^k g_j
    let mut derivs: Vec<Vec<ZFrac<F>>> = vec![vec![g[0].clone()]];
    let deriv = |derivs: &mut Vec<Vec<ZFrac<F>>>, j: usize, k: usize| -> ZFrac<F> {
        while derivs[j].len() <= k {
            let next = derivs[j].last().unwrap().derivative();
            derivs[j].push(next);
        }
        derivs[j][k].clone()
    };
    for r in 1..=h_max {
        let l = r + 1;
        let known = r; // g_0..g_{r-1}
        let mut lhs = ZFrac::zero();
        for a in 0..=l {
            let b = l - a;
            let mut s_b = ZFrac::zero();
            for k in 0..=b {
                let j = b - k;
                if j >= known {
                    continue;
                }
                let d = deriv(&mut derivs, j, k);
                s_b = s_b.add(&d.scale(&(nf.pow_i(k as u32) / fact::<F>(k))));
            }
            if !s_b.is_zero() {
                lhs = lhs.add(&a_coef(a).mul(&s_b));
            }
        }
        let mut rhs = ZFrac::zero();
        for a in 0..=l {
            let j = l - a;
            if j < known {
                rhs = rhs.add(&b_coef(a).mul(&g[j]));
            }
        }
        let e = lhs.sub(&rhs);
        let dg = e.div_one_minus_z(2).scale(&(-F::one() / nf.clone()));
        let particular = antiderivative_in_basis(&dg, r as u32, r)?;
        let mut sym = particular.add(&particular.reflect());
        for k in 1..r {
            sym = sym.add(&g[k].mul(&g[r - k].reflect()));
        }
        let c = sym.as_constant().ok_or(Error::BasisInsufficient(r))?;
        let gr = particular.add(&ZFrac::constant(-c / F::from_i64(2)));
        derivs.push(vec![gr.clone()]);
        g.push(gr);
    }
    Ok(g)
}

/// Independent construction of `g` on `win`.
pub fn solve_g_appendix_a<F: Field>(n: usize, win: &SeriesWindow) -> Result<AppendixA<F>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let layers = appendix_layers::<F>(n, win.h_high)?;
    let mut series = TruncSeries::zero();
    for (l, g) in layers.iter().enumerate() {
        series = &series + &g.to_series(win)?.mul_h_pow(l);
    }
    let series = series.restrict(win);
    Ok(AppendixA { layers, series })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn cancel_removes_common_factors() {
        // (1 - z^2) / (1 - z) = 1 + z
        let a = ZFrac::new(BTreeMap::from([(0, r(1, 1)), (2, r(-1, 1))]), 1);
        assert_eq!(a, ZFrac::new(BTreeMap::from([(0, r(1, 1)), (1, r(1, 1))]), 0));
    }

    #[test]
    fn derivative_and_reflection() {
        // z/(1-z) has derivative z/(1-z)^2
        let a = ZFrac::monomial(r(1, 1), 1, 1);
        assert_eq!(a.derivative(), ZFrac::monomial(r(1, 1), 1, 2));
        // z/(1-z) at 1/z is -1/(1-z)
        assert_eq!(a.reflect(), ZFrac::monomial(r(-1, 1), 0, 1));
    }

    #[test]
    fn antiderivative_recovers_basis_element() {
        let g = ZFrac::monomial(r(3, 1), 2, 2);
        let d = g.derivative();
        let back = antiderivative_in_basis(&d, 2, 2).unwrap();
        assert!(back.sub(&g).as_constant().is_some());
    }

    #[test]
    fn first_layers_for_n2() {
        let g = appendix_layers::<Rational>(2, 2).unwrap();
        assert_eq!(g[0], ZFrac::constant(r(1, 1)));
        // (1/4)(1+z)/(1-z)
        let g1 = ZFrac::new(BTreeMap::from([(0, r(1, 4)), (1, r(1, 4))]), 1);
        assert_eq!(g[1], g1);
        let g2 = g1.mul(&g1).scale(&r(1, 2));
        assert_eq!(g[2], g2);
    }

    #[test]
    fn n1_is_trivial() {
        let g = appendix_layers::<Rational>(1, 4).unwrap();
        assert!(g.iter().skip(1).all(|x| x.is_zero()));
    }
}
