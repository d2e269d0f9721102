//! The `L₀`-action on words and the centrality criterion
//! `L₀(v) S(u) 𝟙 = S(u) 𝟙`.

use super::rep::TruncRep;
use super::series::{kernel, kernel_slots, SeriesId};
use crate::coeffring::{BiSeries, SeriesWindow, TruncSeries};
use crate::error::{Error, Result};
use crate::report::{CheckOutcome, Witness};
use crate::scalar::Field;
use crate::tensoralg::{Slot, TensorMatrix};

/// Slot of the `L₀` space.
pub const L0_SLOT: Slot = 0;

/// The two R-matrix products the Lemma wraps around a word of `k` letters
/// at `y, y-h, ..., y-(k-1)h`, as series in `z = v - u`.
pub struct L0Factors<F: Field> {
    /// `R_{01}(z + hc/2)^{-1} ⋯ R_{0k}(z + (k-1)h + hc/2)^{-1}`.
    pub left: TensorMatrix<TruncSeries<F>>,
    /// `R_{0k}(z + (k-1)h - hc/2) ⋯ R_{01}(z - hc/2)`.
    pub right: TensorMatrix<TruncSeries<F>>,
}

pub fn l0_factors<F: Field>(rep: &TruncRep<F>, k: usize, c: &F) -> Result<L0Factors<F>> {
    let n = rep.n;
    let mut slots = vec![L0_SLOT];
    slots.extend(kernel_slots(k));
    let half = c.clone() / F::from_i64(2);
    let mut left = TensorMatrix::identity(n, &slots)?;
    let mut right = TensorMatrix::identity(n, &slots)?;
    for a in 1..=k {
        let base = F::from_i64(a as i64 - 1);
        let inv = rep.r_inv_on(L0_SLOT, a, &(base.clone() + half.clone()))?;
        left = left.mul(&inv.embed(&slots)?)?;
        let r = rep.r_on(L0_SLOT, a, &(base - half.clone()))?;
        right = r.embed(&slots)?.mul(&right)?;
    }
    Ok(L0Factors { left, right })
}

/// Residual `L₀(v) S(u)𝟙 - S(u)𝟙` as bivariate series in `(z, y)`, one per
/// entry `(a, b)` of slot 0 and `(p, r)` of the aux space.
/// Entry `(a, b, p, r)` with its bivariate residual.
pub type BiEntry<F> = ((usize, usize, usize, usize), BiSeries<F>);

pub struct CentralityResidual<F: Field> {
    pub entries: Vec<BiEntry<F>>,
}

pub fn centrality_residual<F: Field>(rep: &TruncRep<F>, id: SeriesId, c: &F) -> Result<CentralityResidual<F>> {
    let n = rep.n;
    let ker = kernel(rep, id)?;
    let k = ker.k;
    let fac = l0_factors(rep, k, c)?;
    let mut slots = vec![L0_SLOT];
    slots.extend(kernel_slots(k));
    let m1 = ker.left.embed(&slots)?.mul(&fac.left)?;
    let m2 = fac.right.mul(&ker.right.embed(&slots)?)?;
    let kk = ker.right.mul(&ker.left)?;
    let word = rep.word(&TruncRep::<F>::string(k))?;
    let d = n.pow(k as u32);
    let ad = n.pow(rep.aux.slots().len() as u32);

    let mut acc: Vec<Vec<BiSeries<F>>> = vec![vec![BiSeries::zero(); ad * ad]; n * n];
    for i in 0..d {
        for j in 0..d {
            // observable for E_β = e_{ij} on slots 1..k
            let mut obs: Vec<TruncSeries<F>> = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    let mut s = TruncSeries::zero();
                    for t in 0..d {
                        for cc in 0..n {
                            let x = m1.get(a * d + t, cc * d + i);
                            let y = m2.get(cc * d + j, b * d + t);
                            if x.is_exact_zero() || y.is_exact_zero() {
                                continue;
                            }
                            s = &s + &(x * y);
                        }
                    }
                    if a == b {
                        s = &s - kk.get(j, i);
                    }
                    obs.push(s);
                }
            }
            if obs.iter().all(|s| s.is_exact_zero()) {
                continue;
            }
            for p in 0..ad {
                for r in 0..ad {
                    let l = word.get(i * ad + p, j * ad + r);
                    if l.is_exact_zero() {
                        continue;
                    }
                    for (ab, o) in obs.iter().enumerate() {
                        if o.is_exact_zero() {
                            continue;
                        }
                        let cell = &mut acc[ab][p * ad + r];
                        *cell = cell.add(&BiSeries::outer(o, l));
                    }
                }
            }
        }
    }
    let mut entries = Vec::new();
    for (ab, row) in acc.into_iter().enumerate() {
        for (pr, b) in row.into_iter().enumerate() {
            entries.push(((ab / n, ab % n, pr / ad, pr % ad), b));
        }
    }
    Ok(CentralityResidual { entries })
}

/// All bivariate entries vanish on `z, y <= win.u_high`, `l <= win.h_high`.
pub fn check_bi_vanishes<F: Field>(
    entries: &[BiEntry<F>],
    win: &SeriesWindow,
) -> Result<CheckOutcome> {
    let mut best: Option<(usize, i64, i64, Witness)> = None;
    for ((a, b, p, r), s) in entries {
        if !s.covers(win.u_high, win.u_high, win.h_high) {
            return Err(Error::PrecisionExhausted(format!(
                "bivariate entry ({a},{b};{p},{r}) does not cover the window"
            )));
        }
        if let Some((sz, sy, l, c)) = s.first_nonzero_in(win.u_high, win.u_high, win.h_high) {
            if best.as_ref().map(|x| (l, sz, sy) < (x.0, x.1, x.2)).unwrap_or(true) {
                let mut w = Witness::series(sz, l, &c);
                w.s2 = Some(sy);
                w.entry = Some((*a, *b));
                w.value = format!("{c} at aux ({p},{r})");
                best = Some((l, sz, sy, w));
            }
        }
    }
    Ok(match best {
        None => CheckOutcome::pass("all coefficients vanish on the window"),
        Some((_, _, _, w)) => CheckOutcome::fail(w, "nonzero coefficient"),
    })
}

/// Checks `L₀(v) S(u)𝟙 = S(u)𝟙` at level `c`.
pub fn verify_centrality<F: Field>(rep: &TruncRep<F>, id: SeriesId, c: &F) -> Result<CheckOutcome> {
    let res = centrality_residual(rep, id, c)?;
    let mut out = check_bi_vanishes(&res.entries, &rep.window)?;
    out.detail = format!("{id} at level {c}: {}", out.detail);
    Ok(out)
}
