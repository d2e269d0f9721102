//! Unitarity, crossing symmetry, Yang–Baxter and the rational limit.

use super::build::{d_series, r2p_with, RMatrixBundle};
use crate::coeffring::{vars, LaurentPoly, SeriesWindow, TruncSeries, EXACT};
use crate::error::{Error, Result};
use crate::normalizer::{check_vanishes, g_rat_series};
use crate::report::{CheckOutcome, Witness};
use crate::scalar::Field;
use crate::tensoralg::{std_permutation, RingElem, TensorMatrix};

/// Passes iff every entry of `m` vanishes on `win`. The witness is the
/// failing coefficient of lowest `h`-order, then lowest `u`-order.
pub fn check_matrix_vanishes<F: Field>(m: &TensorMatrix<TruncSeries<F>>, win: &SeriesWindow) -> CheckOutcome {
    let d = m.dim();
    let mut worst: Option<(usize, i64, usize, usize, CheckOutcome)> = None;
    for i in 0..d {
        for j in 0..d {
            let out = check_vanishes(m.get(i, j), win);
            if out.passed() {
                continue;
            }
            let w = out.witness.clone().unwrap_or_default();
            let Some(l) = w.l else {
                let w = w.at_entry(i, j);
                return CheckOutcome::fail(w, format!("entry ({i},{j}): {}", out.detail));
            };
            let s = w.s.unwrap_or(i64::MIN);
            if worst.as_ref().map(|(l0, s0, ..)| (l, s) < (*l0, *s0)).unwrap_or(true) {
                worst = Some((l, s, i, j, out));
            }
        }
    }
    match worst {
        None => CheckOutcome::pass(format!("{d}x{d} entries zero through u^{} h^{}", win.u_high, win.h_high)),
        Some((_, _, i, j, out)) => {
            let w = out.witness.clone().unwrap_or_default().at_entry(i, j);
            CheckOutcome::fail(w, format!("entry ({i},{j}): {}", out.detail))
        }
    }
}

pub fn check_matrix_equal<F: Field>(
    a: &TensorMatrix<TruncSeries<F>>,
    b: &TensorMatrix<TruncSeries<F>>,
    win: &SeriesWindow,
) -> Result<CheckOutcome> {
    Ok(check_matrix_vanishes(&a.sub(b)?, win))
}

/// Passes iff the exact matrix is zero.
pub fn check_exact_zero<R: RingElem>(m: &TensorMatrix<R>) -> CheckOutcome {
    match m.first_nonzero() {
        None => CheckOutcome::pass("exact"),
        Some((i, j, v)) => CheckOutcome::fail(
            Witness::message(format!("{v:?}")).at_entry(i, j),
            format!("entry ({i},{j}) is nonzero"),
        ),
    }
}

/// `R_{21}` from `R_{12}`.
pub fn flip<R: RingElem>(m: &TensorMatrix<R>) -> Result<TensorMatrix<R>> {
    let s = m.slots().to_vec();
    m.relabel(&[s[1], s[0]])?.embed(&s)
}

/// `R_{12}(u) R_{21}(-u) - 1`.
pub fn unitarity_residual<F: Field>(r: &TensorMatrix<TruncSeries<F>>) -> Result<TensorMatrix<TruncSeries<F>>> {
    let r21 = flip(&r.map(|e| e.reflect()))?;
    r.mul(&r21)?.sub(&TensorMatrix::identity(r.n(), r.slots())?)
}

pub fn verify_unitarity<F: Field>(r: &TensorMatrix<TruncSeries<F>>, win: &SeriesWindow) -> Result<CheckOutcome> {
    Ok(check_matrix_vanishes(&unitarity_residual(r)?, win))
}

/// Inverse over the truncated ring with pivots whose `h⁰` layer is nonzero.
pub fn series_matrix_inverse<F: Field>(
    m: &TensorMatrix<TruncSeries<F>>,
    cap: &SeriesWindow,
) -> Result<TensorMatrix<TruncSeries<F>>> {
    m.inverse_with(
        |e| e.layer(0).map(|l| !l.is_known_zero()).unwrap_or(false),
        |e| e.inv(cap),
    )
}

/// Residuals of both crossing identities; `twist` replaces `D`.
pub fn crossing_residuals<F: Field>(
    r: &TensorMatrix<TruncSeries<F>>,
    n: usize,
    work: &SeriesWindow,
    twist: bool,
) -> Result<(TensorMatrix<TruncSeries<F>>, TensorMatrix<TruncSeries<F>>)> {
    let slots = r.slots().to_vec();
    let d = |s: usize| -> Result<TensorMatrix<TruncSeries<F>>> {
        if twist {
            d_series(n, s, work)?.embed(&slots)
        } else {
            TensorMatrix::identity(n, &slots)
        }
    };
    let (d1, d2) = (d(slots[0])?, d(slots[1])?);
    let rinv = series_matrix_inverse(r, work)?;
    let nf = F::from_i64(n as i64);
    let shifted = r.map(|e| e.taylor_shift(&nf, work.h_high));
    let first = rinv
        .partial_transpose(slots[1])?
        .mul(&d2)?
        .mul(&shifted.partial_transpose(slots[1])?)?
        .sub(&d2)?;
    let second = shifted
        .partial_transpose(slots[0])?
        .mul(&d1)?
        .mul(&rinv.partial_transpose(slots[0])?)?
        .sub(&d1)?;
    Ok((first, second))
}

pub fn verify_crossing<F: Field>(
    r: &TensorMatrix<TruncSeries<F>>,
    n: usize,
    work: &SeriesWindow,
    win: &SeriesWindow,
) -> Result<CheckOutcome> {
    let (a, b) = crossing_residuals(r, n, work, true)?;
    Ok(CheckOutcome::all([
        ("crossing in slot 2".to_string(), check_matrix_vanishes(&a, win)),
        ("crossing in slot 1".to_string(), check_matrix_vanishes(&b, win)),
    ]))
}

/// `R̄_{12}(u_1,u_2) R̄_{13}(u_1,u_3) R̄_{23}(u_2,u_3) - R̄_{23} R̄_{13} R̄_{12}`, exactly.
pub fn ybe_residual<F: Field>(n: usize) -> Result<TensorMatrix<LaurentPoly<F>>> {
    let v = vars(&["x1", "x2", "x3", "q"]);
    let var = |k: usize, e: i32| {
        let mut exps = vec![0; 4];
        exps[k] = e;
        LaurentPoly::monomial(&v, &exps, F::one())
    };
    let (q, qi) = (var(3, 1), var(3, -1));
    let target = [1, 2, 3];
    let r = |a: usize, b: usize| -> Result<TensorMatrix<LaurentPoly<F>>> {
        r2p_with(n, &var(a - 1, 1), &var(b - 1, 1), &q, &qi)?
            .relabel(&[a, b])?
            .embed(&target)
    };
    let (r12, r13, r23) = (r(1, 2)?, r(1, 3)?, r(2, 3)?);
    let lhs = r12.mul(&r13)?.mul(&r23)?;
    let rhs = r23.mul(&r13)?.mul(&r12)?;
    lhs.sub(&rhs)
}

pub fn verify_ybe<F: Field>(n: usize) -> Result<CheckOutcome> {
    Ok(check_exact_zero(&ybe_residual::<F>(n)?))
}

/// Terms of maximal degree `-k-l` over all entries.
pub fn grade_highest_component<F: Field>(m: &TensorMatrix<TruncSeries<F>>) -> Result<TensorMatrix<TruncSeries<F>>> {
    let top = m
        .entries()
        .iter()
        .filter_map(|e| e.min_degree_sum())
        .min()
        .ok_or(Error::ZeroInput)?;
    Ok(m.map(|e| {
        if e.is_exact_zero() {
            e.clone()
        } else {
            e.component_with_degree_sum(top)
        }
    }))
}

/// `ḡ(u) = sum c_k (h/u)^k` as a series exact in `u`.
pub fn gbar_series<F: Field>(c: &[F]) -> TruncSeries<F> {
    let k = c.len().saturating_sub(1);
    let win = SeriesWindow {
        u_low: -(k as i64),
        u_high: EXACT,
        h_high: k,
    };
    TruncSeries::from_terms(&win, c.iter().enumerate().map(|(j, x)| (-(j as i64), j, x.clone())))
}

/// `R^rat(u) = ḡ(u)(1 - (h/u) P)`.
pub fn r_rational<F: Field>(n: usize, c: &[F]) -> Result<TensorMatrix<TruncSeries<F>>> {
    let g = gbar_series(c);
    let t = TruncSeries::monomial(-1, 1, F::one());
    let p = std_permutation::<TruncSeries<F>>(n, 0, 1)?;
    let one = TensorMatrix::identity(n, &[0, 1])?;
    Ok(one.sub(&p.scale(&t))?.scale(&g))
}

/// The three rational-limit checks.
pub fn verify_rational_limit<F: Field>(b: &RMatrixBundle<F>) -> Result<CheckOutcome> {
    let win = &b.window;
    let h = win.h_high;
    let c = &b.g.gbar_rat;
    let top = grade_highest_component(&b.r_norm)?;
    let rr = r_rational(b.n, c)?;
    let graded = SeriesWindow {
        u_low: -(2 * h as i64 + 2),
        u_high: 0,
        h_high: h,
    };
    let first = check_matrix_equal(&top, &rr, &graded)?;
    let second = check_matrix_vanishes(&unitarity_residual(&rr)?, &graded);
    let gr = g_rat_series(c);
    let nf = F::from_i64(b.n as i64);
    let u = TruncSeries::monomial(1, 0, F::one());
    let hh = |k: i64| TruncSeries::monomial(0, 1, F::from_i64(k));
    let lhs = &(&gr.taylor_shift(&nf, h) * &u) * &(&u + &hh(b.n as i64));
    let rhs = &(&gr * &(&u + &hh(1))) * &(&u + &hh(b.n as i64 - 1));
    let third = check_vanishes(
        &(&lhs - &rhs),
        &SeriesWindow {
            u_low: -(h as i64 + 2),
            u_high: 2,
            h_high: h,
        },
    );
    Ok(CheckOutcome::all([
        ("highest component of R".to_string(), first),
        ("unitarity of R^rat".to_string(), second),
        ("g^rat difference equation".to_string(), third),
    ]))
}
