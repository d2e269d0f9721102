//! `g(u)` from the f-route: substitute `x = e^u`, `q = e^{h/2}` into the
//! `x/(1-x)` presentation, then symmetrize.

use super::fcoeffs::{check_b_regularity, solve_f, FCoeffs, Q};
use super::gbar::{g_rat_series, solve_gbar_rational};
use crate::coeffring::{
    from_fraction, from_fraction_with, vars, LaurentFraction, LaurentPoly, SeriesWindow,
    TruncSeries, VarMap,
};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// The normalizer together with its intermediate series.
#[derive(Clone, Debug)]
pub struct GSeries<F: Field> {
    pub n: usize,
    /// Nominal window; the stored series are known at least on it.
    pub window: SeriesWindow,
    pub fcoeffs: Option<FCoeffs<F>>,
    pub gtilde: TruncSeries<F>,
    pub phi0: TruncSeries<F>,
    pub psi: TruncSeries<F>,
    pub g: TruncSeries<F>,
    pub gbar_rat: Vec<F>,
    pub g_rat: TruncSeries<F>,
}

impl<F: Field> GSeries<F> {
    /// `g` cut down to the nominal window.
    pub fn g_in_window(&self) -> TruncSeries<F> {
        self.g.restrict(&self.window)
    }
}

/// `e^u / (1 - e^u)` on the window.
pub(crate) fn x_over_one_minus_x<F: Field>(win: &SeriesWindow) -> Result<TruncSeries<F>> {
    let v = vars(&["x"]);
    let x = LaurentPoly::var(&v, "x")?;
    let one = LaurentPoly::one().embed(&v)?;
    let t = LaurentFraction::new(x, &one - &LaurentPoly::var(&v, "x")?)?;
    from_fraction(&t, "x", Q, win)
}

/// `g̃(u) = 1 + sum_{k=1}^{h_high} a_k(e^{h/2}) (e^u/(1-e^u))^k` on `win`.
pub fn build_gtilde<F: Field>(fc: &FCoeffs<F>, win: &SeriesWindow) -> Result<TruncSeries<F>> {
    if win.h_high > fc.order {
        return Err(Error::InvalidArgument(format!(
            "h_high {} exceeds the f-coefficient order {}",
            win.h_high, fc.order
        )));
    }
    let t = x_over_one_minus_x::<F>(win)?;
    let qmap = [VarMap::new(Q, F::zero(), F::from_ratio(1, 2))];
    let mut acc = TruncSeries::one();
    let mut tk = TruncSeries::one();
    for k in 1..=win.h_high {
        tk = &tk * &t;
        if fc.a[k].is_zero() {
            continue;
        }
        let ak = from_fraction_with(&fc.a[k], &qmap, win)?;
        acc = &acc + &(&ak * &tk);
    }
    Ok(acc.restrict(win))
}

/// `φ = g̃(u) g̃(-u)`, its `u`-independence, `ψ = φ₀^{-1/2}` and `g = ψ g̃`.
pub fn symmetrize_g<F: Field>(
    gtilde: &TruncSeries<F>,
    n: usize,
    win: &SeriesWindow,
) -> Result<GSeries<F>> {
    let phi = gtilde * &gtilde.reflect();
    if let Some((s, l, _)) = phi.terms().into_iter().find(|(s, _, _)| *s != 0) {
        return Err(Error::PhiNotConstant { s, l });
    }
    let h = phi.h_high().unwrap_or(win.h_high).min(win.h_high);
    let exact = SeriesWindow {
        u_low: 0,
        u_high: crate::coeffring::EXACT,
        h_high: h,
    };
    let phi0 = TruncSeries::from_terms(&exact, phi.terms().into_iter().filter(|(_, l, _)| *l <= h));
    let psi = phi0.sqrt(h)?.inv(&exact)?;
    let g = &psi * gtilde;
    let gbar_rat = solve_gbar_rational::<F>(n, win.h_high);
    let g_rat = g_rat_series(&gbar_rat);
    Ok(GSeries {
        n,
        window: *win,
        fcoeffs: None,
        gtilde: gtilde.clone(),
        phi0,
        psi,
        g,
        gbar_rat,
        g_rat,
    })
}

/// Runs the whole f-route, padding internally until `g` covers `win`.
pub fn solve_g_froute<F: Field>(n: usize, win: &SeriesWindow) -> Result<GSeries<F>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let fc = solve_f::<F>(n, win.h_high);
    if !check_b_regularity(&fc)? {
        return Err(Error::InvalidArgument("a_k/(q-1)^k not regular at q = 1".into()));
    }
    let mut pad = 2 * (win.h_high as i64 + 2);
    for _ in 0..4 {
        let w = win.padded(pad);
        let gt = build_gtilde(&fc, &w)?;
        let mut gs = symmetrize_g(&gt, n, win)?;
        if gs.g.covers(win) {
            gs.fcoeffs = Some(fc);
            return Ok(gs);
        }
        pad *= 2;
    }
    Err(Error::PrecisionExhausted("f-route g does not reach the window".into()))
}
