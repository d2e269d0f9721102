//! Construction of `R̄(u,v)`, `R̄(u)`, `D` and the normalized `R(u)`.

use crate::coeffring::{
    exp_expand, from_fraction, vars, LaurentFraction, LaurentPoly, SeriesWindow, TruncSeries, Vars,
};
use crate::error::Result;
use crate::normalizer::{solve_g_froute, GSeries};
use crate::scalar::Field;
use crate::tensoralg::{diag_d, TensorMatrix};

/// Splits a two-slot index into its digits.
fn pair(n: usize, idx: usize) -> (usize, usize) {
    (idx / n, idx % n)
}

/// `R̄(u,v)` with entries polynomial in `x_u`, `x_v`, `q`, on slots `[0, 1]`.
pub fn r2p_with<F: Field>(
    n: usize,
    xu: &LaurentPoly<F>,
    xv: &LaurentPoly<F>,
    q: &LaurentPoly<F>,
    qi: &LaurentPoly<F>,
) -> Result<TensorMatrix<LaurentPoly<F>>> {
    let same = &(xu * qi) - &(xv * q);
    let diff = xu - xv;
    let gap = qi - q;
    let lower = &gap * xu;
    let upper = &gap * xv;
    TensorMatrix::from_fn(n, &[0, 1], |row, col| {
        let (i, k) = pair(n, row);
        let (j, l) = pair(n, col);
        if i == j && k == l {
            if i == k {
                same.clone()
            } else {
                diff.clone()
            }
        } else if j == k && l == i {
            if i > k {
                lower.clone()
            } else {
                upper.clone()
            }
        } else {
            LaurentPoly::zero()
        }
    })
}

/// `R̄(u)` given `x = e^u` and `q` as fractions, on slots `[0, 1]`.
pub fn r1p_with<F: Field>(
    n: usize,
    x: &LaurentFraction<F>,
    q: &LaurentFraction<F>,
) -> Result<TensorMatrix<LaurentFraction<F>>> {
    let one = LaurentFraction::one();
    let qi = q.inv()?;
    let qi2 = &qi * &qi;
    let den_inv = (&one - &(x * &qi2)).inv()?;
    let diag = &(&qi * &(&one - x)) * &den_inv;
    let gap = &one - &qi2;
    let lower = &(&gap * x) * &den_inv;
    let upper = &gap * &den_inv;
    TensorMatrix::from_fn(n, &[0, 1], |row, col| {
        let (i, k) = pair(n, row);
        let (j, l) = pair(n, col);
        if i == j && k == l {
            if i == k {
                one.clone()
            } else {
                diag.clone()
            }
        } else if j == k && l == i {
            if i > k {
                lower.clone()
            } else {
                upper.clone()
            }
        } else {
            LaurentFraction::zero()
        }
    })
}

fn var_poly<F: Field>(v: &Vars, name: &str, e: i32) -> LaurentPoly<F> {
    let idx = v.iter().position(|x| x == name).expect("known variable");
    let mut exps = vec![0; v.len()];
    exps[idx] = e;
    LaurentPoly::monomial(v, &exps, F::one())
}

/// `R̄(u,v)` in the variables `x_u`, `x_v`, `q`.
pub fn build_r2p<F: Field>(n: usize) -> Result<TensorMatrix<LaurentFraction<F>>> {
    let v = vars(&["x_u", "x_v", "q"]);
    let m = r2p_with(
        n,
        &var_poly(&v, "x_u", 1),
        &var_poly(&v, "x_v", 1),
        &var_poly(&v, "q", 1),
        &var_poly(&v, "q", -1),
    )?;
    Ok(m.map(|p| LaurentFraction::from_poly(p.clone())))
}

/// `R̄(u)` in the variables `x`, `q`.
pub fn build_r1p<F: Field>(n: usize) -> Result<TensorMatrix<LaurentFraction<F>>> {
    let v = vars(&["x", "q"]);
    r1p_with(
        n,
        &LaurentFraction::from_poly(var_poly(&v, "x", 1)),
        &LaurentFraction::from_poly(var_poly(&v, "q", 1)),
    )
}

/// Expands a fraction matrix in `x = e^u`, `q = e^{h/2}`, one series per
/// distinct entry.
pub fn expand_matrix<F: Field>(
    m: &TensorMatrix<LaurentFraction<F>>,
    win: &SeriesWindow,
) -> Result<TensorMatrix<TruncSeries<F>>> {
    let mut cache: Vec<(LaurentFraction<F>, TruncSeries<F>)> = Vec::new();
    m.try_map(|a| {
        if a.is_zero() {
            return Ok(TruncSeries::zero());
        }
        if let Some((_, s)) = cache.iter().find(|(b, _)| b.num() == a.num() && b.den() == a.den()) {
            return Ok(s.clone());
        }
        let s = from_fraction(a, "x", "q", win)?;
        cache.push((a.clone(), s.clone()));
        Ok(s)
    })
}

/// `R(u) = g(u) R̄(u)` on `win`.
pub fn build_r<F: Field>(n: usize, g: &TruncSeries<F>, win: &SeriesWindow) -> Result<TensorMatrix<TruncSeries<F>>> {
    let bar = expand_matrix(&build_r1p::<F>(n)?, win)?;
    Ok(bar.map(|e| if e.is_exact_zero() { e.clone() } else { g * e }))
}

/// `D` on `slot` with `q = e^{h/2}`.
pub fn d_series<F: Field>(n: usize, slot: usize, win: &SeriesWindow) -> Result<TensorMatrix<TruncSeries<F>>> {
    let w = *win;
    diag_d(n, slot, &move |k: i32| {
        exp_expand(&F::zero(), &(F::from_i64(k as i64) / F::from_i64(2)), &w)
    })
}

/// Everything needed to verify the normalized R-matrix on a window.
#[derive(Clone, Debug)]
pub struct RMatrixBundle<F: Field> {
    pub n: usize,
    /// Window on which checks are reported.
    pub window: SeriesWindow,
    /// Padded window the series were computed on.
    pub work: SeriesWindow,
    pub r2p: TensorMatrix<LaurentFraction<F>>,
    pub r1p: TensorMatrix<LaurentFraction<F>>,
    pub r_bar: TensorMatrix<TruncSeries<F>>,
    pub r_norm: TensorMatrix<TruncSeries<F>>,
    pub g: GSeries<F>,
}

impl<F: Field> RMatrixBundle<F> {
    pub fn new(n: usize, win: &SeriesWindow) -> Result<Self> {
        let work = win.padded(3 * win.h_high as i64 + 4);
        let g = solve_g_froute::<F>(n, &work)?;
        let r1p = build_r1p::<F>(n)?;
        let r_bar = expand_matrix(&r1p, &work)?;
        let r_norm = r_bar.map(|e| if e.is_exact_zero() { e.clone() } else { &g.g * e });
        Ok(Self {
            n,
            window: *win,
            work,
            r2p: build_r2p(n)?,
            r1p,
            r_bar,
            r_norm,
            g,
        })
    }
}
