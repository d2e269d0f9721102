//! The rational-limit series `ḡ(u) = sum c_k (h/u)^k` solving
//! `ḡ(u + nh) = (1 - h²/u²) ḡ(u)`.

use crate::coeffring::{SeriesWindow, TruncSeries};
use super::relations::check_equal;
use crate::report::{CheckOutcome, Witness};
use crate::scalar::{binomial, Field};

/// `c_0, ..., c_order`.
pub fn solve_gbar_rational<F: Field>(n: usize, order: usize) -> Vec<F> {
    let nf = F::from_i64(n as i64);
    let mut c = vec![F::one()];
    // the (h/u)^m coefficient of the equation determines c_{m-1}
    for m in 2..=order + 1 {
        let mut acc = c[m - 2].clone();
        for k in 0..=m - 2 {
            acc = acc + c[k].clone() * binomial::<F>(-(k as i64), (m - k) as i64) * nf.pow_i((m - k) as u32);
        }
        c.push(acc / (F::from_i64(m as i64 - 1) * nf.clone()));
    }
    c.truncate(order + 1);
    c
}

/// Coefficients of `ḡ(u+nh) - (1 - h²/u²) ḡ(u)` in `(h/u)^m`, `m <= order`.
pub fn gbar_residual<F: Field>(c: &[F], n: usize, order: usize) -> Vec<F> {
    let nf = F::from_i64(n as i64);
    let get = |k: i64| -> F {
        if k < 0 {
            F::zero()
        } else {
            c.get(k as usize).cloned().unwrap_or_else(F::zero)
        }
    };
    (0..=order)
        .map(|m| {
            let mut lhs = F::zero();
            for k in 0..=m {
                lhs = lhs + get(k as i64) * binomial::<F>(-(k as i64), (m - k) as i64) * nf.pow_i((m - k) as u32);
            }
            lhs - (get(m as i64) - get(m as i64 - 2))
        })
        .collect()
}

/// `g^rat(u) = (1 - h/u) ḡ(u)` as a series with terms `u^{-k} h^k`.
pub fn g_rat_series<F: Field>(c: &[F]) -> TruncSeries<F> {
    let k_max = c.len().saturating_sub(1);
    let win = SeriesWindow {
        u_low: -(k_max as i64),
        u_high: crate::coeffring::EXACT,
        h_high: k_max,
    };
    let terms = (0..=k_max).map(|k| {
        let prev = if k == 0 { F::zero() } else { c[k - 1].clone() };
        (-(k as i64), k, c[k].clone() - prev)
    });
    TruncSeries::from_terms(&win, terms)
}

/// The highest-degree component of `g` against `(1 - h/u) ḡ(u)`.
pub fn check_highest_component<F: Field>(g: &TruncSeries<F>, c: &[F], win: &SeriesWindow) -> CheckOutcome {
    match g.highest_component() {
        Ok(top) => check_equal(&top, &g_rat_series(c), win),
        Err(e) => CheckOutcome::fail(Witness::message(e.to_string()), "g has no terms"),
    }
}
