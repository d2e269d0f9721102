//! Functional identities satisfied by `g(u)`.

use crate::coeffring::{exp_expand, from_fraction, vars, LaurentFraction, LaurentPoly, SeriesWindow, TruncSeries};
use crate::error::Result;
use crate::report::{CheckOutcome, Witness};
use crate::scalar::Field;

/// Passes iff `residual` is known on `win` and vanishes there.
pub fn check_vanishes<F: Field>(residual: &TruncSeries<F>, win: &SeriesWindow) -> CheckOutcome {
    if !residual.covers(win) {
        return CheckOutcome::fail(
            Witness::message(format!("known to {:?}", residual.layer_highs())),
            format!("precision exhausted before u^{} h^{}", win.u_high, win.h_high),
        );
    }
    let r = residual.restrict(win);
    match r.first_nonzero() {
        None => CheckOutcome::pass(format!("zero through u^{} h^{}", win.u_high, win.h_high)),
        Some((s, l, c)) => CheckOutcome::fail(Witness::series(s, l, &c), format!("u^{s} h^{l} coefficient is {c}")),
    }
}

/// Passes iff `a - b` vanishes on `win`.
pub fn check_equal<F: Field>(a: &TruncSeries<F>, b: &TruncSeries<F>, win: &SeriesWindow) -> CheckOutcome {
    check_vanishes(&(a - b), win)
}

/// `1 - e^{u + c h}`.
pub(crate) fn one_minus_exp<F: Field>(c: &F, win: &SeriesWindow) -> TruncSeries<F> {
    &TruncSeries::one() - &exp_expand(&F::one(), c, win)
}

fn work_window(win: &SeriesWindow) -> SeriesWindow {
    win.padded(2 * win.h_high as i64 + 4)
}

/// (i) `g(u) g(-u) = 1`.
pub fn check_unitarity_g<F: Field>(g: &TruncSeries<F>, win: &SeriesWindow) -> CheckOutcome {
    check_equal(&(g * &g.reflect()), &TruncSeries::one(), win)
}

/// (ii) `g(u+nh)(1-e^u)(1-e^{u+nh}) = g(u)(1-e^{u+h})(1-e^{u+(n-1)h})`.
pub fn check_difference_equation<F: Field>(g: &TruncSeries<F>, n: usize, win: &SeriesWindow) -> CheckOutcome {
    let w = work_window(win);
    let nf = F::from_i64(n as i64);
    let shifted = g.taylor_shift(&nf, win.h_high);
    let lhs = &(&shifted * &one_minus_exp(&F::zero(), &w)) * &one_minus_exp(&nf, &w);
    let rhs = &(g * &one_minus_exp(&F::one(), &w)) * &one_minus_exp(&F::from_i64(n as i64 - 1), &w);
    check_equal(&lhs, &rhs, win)
}

/// (iii) `g(u) g(u+h) ⋯ g(u+(n-1)h) (1-e^{u+(n-1)h}) = e^{(n-1)h/2} (1-e^u)`.
pub fn check_product_identity<F: Field>(g: &TruncSeries<F>, n: usize, win: &SeriesWindow) -> CheckOutcome {
    let w = work_window(win);
    let mut prod = TruncSeries::one();
    for j in 0..n {
        prod = &prod * &g.taylor_shift(&F::from_i64(j as i64), win.h_high);
    }
    let nm1 = F::from_i64(n as i64 - 1);
    let lhs = &prod * &one_minus_exp(&nm1, &w);
    let rhs = &exp_expand(&F::zero(), &(nm1 / F::from_i64(2)), &w) * &one_minus_exp(&F::zero(), &w);
    check_equal(&lhs, &rhs, win)
}

/// All three identities.
pub fn verify_g_relations<F: Field>(g: &TruncSeries<F>, n: usize, win: &SeriesWindow) -> CheckOutcome {
    CheckOutcome::all([
        ("g(u)g(-u)=1".to_string(), check_unitarity_g(g, win)),
        ("difference equation".to_string(), check_difference_equation(g, n, win)),
        ("product identity".to_string(), check_product_identity(g, n, win)),
    ])
}

/// The displayed first terms `(n-1)(1+e^u)/(2n(1-e^u))` and its square over 2.
pub fn display_layers<F: Field>(n: usize, win: &SeriesWindow) -> Result<(TruncSeries<F>, TruncSeries<F>)> {
    let v = vars(&["x"]);
    let x = LaurentPoly::var(&v, "x")?;
    let one = LaurentPoly::one().embed(&v)?;
    let ratio = LaurentFraction::new(&one + &x, &one - &x)?;
    let c = F::from_i64(n as i64 - 1) / F::from_i64(2 * n as i64);
    let first = &ratio * &LaurentFraction::constant(c.clone());
    let second = &(&first * &first) * &LaurentFraction::constant(F::from_ratio(1, 2));
    Ok((from_fraction(&first, "x", "q", win)?, from_fraction(&second, "x", "q", win)?))
}

/// The `h¹` and `h²` layers of `g` against the display.
pub fn check_display<F: Field>(g: &TruncSeries<F>, n: usize, win: &SeriesWindow) -> Result<CheckOutcome> {
    let (d1, d2) = display_layers::<F>(n, &SeriesWindow { h_high: 0, ..*win })?;
    let mut parts = Vec::new();
    for (l, d) in [(1usize, d1), (2usize, d2)] {
        let layer = TruncSeries::from_layers(
            vec![g.layer(l).ok_or_else(|| crate::error::Error::PrecisionExhausted(format!("h^{l} unknown")))?],
            0,
        );
        parts.push((format!("h^{l} layer"), check_equal(&layer, &d, &SeriesWindow { h_high: 0, ..*win })));
    }
    Ok(CheckOutcome::all(parts))
}
