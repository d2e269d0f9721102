//! Classical limits: the symbol of `Θ_m` against `Θ̄_m` built from the
//! highest components of the letters, and the symbol of `qdet`.

use super::rep::TruncRep;
use super::series::{big_theta, contract, kernel_slots, series_value, signed_kernel, SeriesId};
use crate::coeffring::{SeriesWindow, TruncSeries};
use crate::error::Result;
use crate::report::{CheckOutcome, Witness};
use crate::rmatrix::grade_highest_component;
use crate::scalar::{binomial, Field};
use crate::tensoralg::{cycle_word, std_perm_action, Slot, TensorMatrix};

/// `T⁺_1(y) ⋯ T⁺_k(y-(k-1)h)` from the highest components of the letters.
pub fn classical_word<F: Field>(rep: &TruncRep<F>, k: usize) -> Result<TensorMatrix<TruncSeries<F>>> {
    let mut target: Vec<Slot> = kernel_slots(k);
    target.extend(rep.aux.slots());
    let mut acc = TensorMatrix::identity(rep.n, &target)?;
    for (a, alpha) in TruncRep::<F>::string(k).iter().enumerate() {
        let t = grade_highest_component(&rep.letter(a + 1, alpha)?)?;
        acc = acc.mul(&t.embed(&target)?)?;
    }
    Ok(acc)
}

/// `Θ̄_m = h^{-m} Σ (-1)^k C(m,k) tr P_{(k..1)} T⁺_1 ⋯ T⁺_k`.
pub fn theta_bar<F: Field>(rep: &TruncRep<F>, m: usize) -> Result<TensorMatrix<TruncSeries<F>>> {
    let aux = rep.aux.slots();
    let n = F::from_i64(rep.n as i64);
    let mut acc = TensorMatrix::identity(rep.n, &aux)?.scale(&TruncSeries::constant(n));
    for k in 1..=m {
        let slots = kernel_slots(k);
        let p = std_perm_action(rep.n, &slots, &cycle_word(k))?;
        let one = TensorMatrix::identity(rep.n, &slots)?;
        let tr = contract(&p, &classical_word(rep, k)?, &one)?;
        let c = binomial::<F>(m as i64, k as i64);
        let c = if k % 2 == 1 { -c } else { c };
        acc = acc.add(&tr.scale(&TruncSeries::constant(c)))?;
    }
    acc.try_map(|e| e.div_h_pow(m))
}

/// `Σ sgn σ t_{σ(1)1}(y) ⋯ t_{σ(n)n}(y-(n-1)h)`.
pub fn qdet_bar<F: Field>(rep: &TruncRep<F>) -> Result<TensorMatrix<TruncSeries<F>>> {
    let n = rep.n;
    let left = signed_kernel(n, |l| TruncSeries::constant(if l % 2 == 1 { -F::one() } else { F::one() }))?;
    let one = TensorMatrix::identity(n, &kernel_slots(n))?;
    contract(&left, &classical_word(rep, n)?, &one)
}

/// Compares the degree `-top` part of `full` with `symbol` and checks that
/// `full` has no terms of lower degree, on `s >= u_low`, `l <= h`.
pub fn compare_symbol<F: Field>(
    full: &TensorMatrix<TruncSeries<F>>,
    symbol: &TensorMatrix<TruncSeries<F>>,
    top: i64,
    win: &SeriesWindow,
) -> CheckOutcome {
    let d = full.dim();
    let mut best: Option<(usize, i64, Witness)> = None;
    let mut note = |l: usize, s: i64, w: Witness| {
        if best.as_ref().map(|b| (l, s) < (b.0, b.1)).unwrap_or(true) {
            best = Some((l, s, w));
        }
    };
    for i in 0..d {
        for j in 0..d {
            let f = full.get(i, j);
            let diff = &f.component_with_degree_sum(top) - symbol.get(i, j);
            for (s, l, c) in diff.terms() {
                if l <= win.h_high && s >= win.u_low && !c.is_zero() {
                    note(l, s, Witness::series(s, l, &c).at_entry(i, j));
                }
            }
            for (s, l, c) in f.terms() {
                if s + (l as i64) < top && l <= win.h_high && s >= win.u_low && !c.is_zero() {
                    let mut w = Witness::series(s, l, &c).at_entry(i, j);
                    w.value = format!("{c} above the symbol degree");
                    note(l, s, w);
                }
            }
        }
    }
    match best {
        None => CheckOutcome::pass("symbol matches on the window"),
        Some((_, _, w)) => CheckOutcome::fail(w, "symbol mismatch"),
    }
}

fn symbol_window(rep: &TruncRep<impl Field>, m: usize) -> SeriesWindow {
    SeriesWindow {
        h_high: rep.window.h_high.saturating_sub(m),
        ..rep.window
    }
}

pub fn verify_theta_classical<F: Field>(rep: &TruncRep<F>, m: usize) -> Result<CheckOutcome> {
    let full = big_theta(rep, m)?;
    let bar = theta_bar(rep, m)?;
    let mut out = compare_symbol(&full, &bar, -(m as i64), &symbol_window(rep, m));
    out.detail = format!("Θ_{m} vs Θ̄_{m}: {}", out.detail);
    Ok(out)
}

pub fn verify_qdet_classical<F: Field>(rep: &TruncRep<F>) -> Result<CheckOutcome> {
    let full = series_value(rep, SeriesId::Qdet)?;
    let bar = qdet_bar(rep)?;
    let mut out = compare_symbol(&full, &bar, 0, &rep.window);
    out.detail = format!("qdet symbol: {}", out.detail);
    Ok(out)
}
