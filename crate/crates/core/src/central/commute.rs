//! Pairwise commutation `[θ_k(u), θ_l(v)] = 0` with independent spectral
//! expansion variables for the two factors.

use super::centrality::{check_bi_vanishes, BiEntry};
use super::rep::TruncRep;
use super::series::theta;
use crate::coeffring::{BiSeries, TruncSeries};
use crate::error::Result;
use crate::report::CheckOutcome;
use crate::scalar::Field;
use crate::tensoralg::TensorMatrix;

/// Entries of `A(y₁)B(y₂) - B(y₂)A(y₁)` as bivariate series in `(y₁, y₂)`.
pub fn commutator<F: Field>(
    a: &TensorMatrix<TruncSeries<F>>,
    b: &TensorMatrix<TruncSeries<F>>,
) -> Vec<BiEntry<F>> {
    let d = a.dim();
    let mut out = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let mut acc = BiSeries::zero();
            for m in 0..d {
                let (x, y) = (a.get(i, m), b.get(m, j));
                if !x.is_exact_zero() && !y.is_exact_zero() {
                    acc = acc.add(&BiSeries::outer(x, y));
                }
                let (x, y) = (a.get(m, j), b.get(i, m));
                if !x.is_exact_zero() && !y.is_exact_zero() {
                    acc = acc.sub(&BiSeries::outer(x, y));
                }
            }
            out.push(((i, j, 0, 0), acc));
        }
    }
    out
}

pub fn verify_commute<F: Field>(rep: &TruncRep<F>, k: usize, l: usize) -> Result<CheckOutcome> {
    let a = theta(rep, k)?;
    let b = if k == l { a.clone() } else { theta(rep, l)? };
    let mut out = check_bi_vanishes(&commutator(&a, &b), &rep.window)?;
    out.detail = format!("[θ_{k}(u), θ_{l}(v)]: {}", out.detail);
    Ok(out)
}

/// All pairs `1 <= k <= l <= n`.
pub fn verify_pairwise_commute<F: Field>(rep: &TruncRep<F>) -> Result<CheckOutcome> {
    let mut parts = Vec::new();
    for k in 1..=rep.n {
        for l in k..=rep.n {
            parts.push((format!("θ_{k},θ_{l}"), verify_commute(rep, k, l)?));
        }
    }
    Ok(CheckOutcome::all(parts))
}
