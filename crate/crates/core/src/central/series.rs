//! Kernels and values of the series `φ_k`, `θ_k`, `Θ_m` and `qdet`.

use std::fmt;
use std::str::FromStr;

use super::rep::TruncRep;
use crate::coeffring::{SeriesWindow, TruncSeries};
use crate::error::{Error, Result};
use crate::fusion::{antisymmetrizer_with, MAX_K};
use crate::report::{CheckOutcome, Witness};
use crate::scalar::{binomial, factorial, Field};
use crate::tensoralg::{all_perms, cycle_word, diag_d_product, length, perm_action, Slot, TensorMatrix};

/// Which central series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesId {
    Phi(usize),
    Theta(usize),
    Qdet,
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesId::Phi(k) => write!(f, "phi{k}"),
            SeriesId::Theta(k) => write!(f, "theta{k}"),
            SeriesId::Qdet => write!(f, "qdet"),
        }
    }
}

impl SeriesId {
    /// Parses `phi`, `theta` or `qdet` together with `k`.
    pub fn parse(name: &str, k: usize) -> Result<Self> {
        match name {
            "phi" => Ok(SeriesId::Phi(k)),
            "theta" => Ok(SeriesId::Theta(k)),
            "qdet" => Ok(SeriesId::Qdet),
            other => Err(Error::InvalidArgument(format!("unknown series {other}"))),
        }
    }

    /// Number of tensor slots the kernel lives on.
    pub fn slots(&self, n: usize) -> usize {
        match self {
            SeriesId::Phi(k) | SeriesId::Theta(k) => *k,
            SeriesId::Qdet => n,
        }
    }
}

impl FromStr for SeriesId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "qdet" {
            return Ok(SeriesId::Qdet);
        }
        for (p, ctor) in [("phi", SeriesId::Phi as fn(usize) -> SeriesId), ("theta", SeriesId::Theta)] {
            if let Some(k) = s.strip_prefix(p) {
                let k = k.parse().map_err(|_| Error::InvalidArgument(format!("bad series {s}")))?;
                return Ok(ctor(k));
            }
        }
        Err(Error::InvalidArgument(format!("bad series {s}")))
    }
}

/// The series is `tr_{1..k} left · L⁺_1 ⋯ L⁺_k · right`.
pub struct Kernel<F: Field> {
    pub k: usize,
    pub left: TensorMatrix<TruncSeries<F>>,
    pub right: TensorMatrix<TruncSeries<F>>,
}

pub fn kernel_slots(k: usize) -> Vec<Slot> {
    (1..=k).collect()
}

/// `left` for the quantum determinant with weights `w(σ)`.
pub fn signed_kernel<F: Field>(
    n: usize,
    weight: impl Fn(usize) -> TruncSeries<F>,
) -> Result<TensorMatrix<TruncSeries<F>>> {
    let slots = kernel_slots(n);
    let mut m = TensorMatrix::zeros(n, &slots)?;
    for sigma in all_perms(n) {
        let row = m.index_of(&(0..n).collect::<Vec<_>>());
        let col = m.index_of(&sigma);
        m.set(row, col, weight(length(&sigma)));
    }
    Ok(m)
}

pub fn kernel<F: Field>(rep: &TruncRep<F>, id: SeriesId) -> Result<Kernel<F>> {
    let n = rep.n;
    let k = id.slots(n);
    if k == 0 || k > MAX_K {
        return Err(Error::InvalidArgument(format!("{id}: k outside 1..={MAX_K}")));
    }
    let slots = kernel_slots(k);
    let q = |e: i32| rep.q_pow(e);
    let d = || diag_d_product(n, &slots, &q);
    let (left, right) = match id {
        SeriesId::Phi(_) => {
            let inv = TruncSeries::constant(F::one() / factorial::<F>(k as u32));
            (antisymmetrizer_with(n, &slots, &q, &inv)?, d()?)
        }
        SeriesId::Theta(_) => (perm_action(n, &slots, &cycle_word(k), &q)?, d()?),
        SeriesId::Qdet => {
            let left = signed_kernel(n, |l| {
                let s = rep.q_pow(-(l as i32));
                if l % 2 == 1 {
                    s.scale(&-F::one())
                } else {
                    s
                }
            })?;
            (left, TensorMatrix::identity(n, &slots)?)
        }
    };
    Ok(Kernel { k, left, right })
}

/// Aux-valued matrix `tr_{1..k} left · word · right`.
pub fn contract<F: Field>(
    left: &TensorMatrix<TruncSeries<F>>,
    word: &TensorMatrix<TruncSeries<F>>,
    right: &TensorMatrix<TruncSeries<F>>,
) -> Result<TensorMatrix<TruncSeries<F>>> {
    let target = word.slots().to_vec();
    let k = left.slots().len();
    let m = left.embed(&target)?.mul(word)?.mul(&right.embed(&target)?)?;
    m.partial_trace(&kernel_slots(k))
}

/// Value of the series in the representation, with letters at
/// `y, y-h, ..., y-(k-1)h`.
pub fn series_value<F: Field>(rep: &TruncRep<F>, id: SeriesId) -> Result<TensorMatrix<TruncSeries<F>>> {
    let ker = kernel(rep, id)?;
    let word = rep.word(&TruncRep::<F>::string(ker.k))?;
    contract(&ker.left, &word, &ker.right)
}

fn aux_identity<F: Field>(rep: &TruncRep<F>, c: F) -> Result<TensorMatrix<TruncSeries<F>>> {
    Ok(TensorMatrix::identity(rep.n, &rep.aux.slots())?.scale(&TruncSeries::constant(c)))
}

/// `θ_k` with `θ_0 = n`.
pub fn theta<F: Field>(rep: &TruncRep<F>, k: usize) -> Result<TensorMatrix<TruncSeries<F>>> {
    if k == 0 {
        aux_identity(rep, F::from_i64(rep.n as i64))
    } else {
        series_value(rep, SeriesId::Theta(k))
    }
}

/// `Σ_{k=0}^m (-1)^k C(m,k) θ_k`.
pub fn theta_combination<F: Field>(rep: &TruncRep<F>, m: usize) -> Result<TensorMatrix<TruncSeries<F>>> {
    let mut acc = TensorMatrix::zeros(rep.n, &rep.aux.slots())?;
    for k in 0..=m {
        let c = binomial::<F>(m as i64, k as i64);
        let c = if k % 2 == 1 { -c } else { c };
        acc = acc.add(&theta(rep, k)?.scale(&TruncSeries::constant(c)))?;
    }
    Ok(acc)
}

/// First coefficient in the window with `h`-exponent below `m`.
pub fn low_h_witness<F: Field>(
    m: &TensorMatrix<TruncSeries<F>>,
    below: usize,
    win: &SeriesWindow,
) -> Option<Witness> {
    let dim = m.dim();
    let mut best: Option<Witness> = None;
    for i in 0..dim {
        for j in 0..dim {
            for (s, l, c) in m.get(i, j).terms() {
                if l < below && s >= win.u_low && s <= win.u_high && !c.is_zero() {
                    let better = best.as_ref().map(|b| (l, s) < (b.l.unwrap(), b.s.unwrap())).unwrap_or(true);
                    if better {
                        best = Some(Witness::series(s, l, &c).at_entry(i, j));
                    }
                }
            }
        }
    }
    best
}

/// The combination for `Θ_m` has `h`-valuation at least `m` on the window.
pub fn verify_h_valuation<F: Field>(rep: &TruncRep<F>, m: usize) -> Result<CheckOutcome> {
    if rep.window.h_high < m {
        return Err(Error::InvalidArgument(format!("h_high {} below m = {m}", rep.window.h_high)));
    }
    let comb = theta_combination(rep, m)?;
    Ok(match low_h_witness(&comb, m, &rep.window) {
        None => CheckOutcome::pass(format!("Σ(-1)^k C({m},k) θ_k divisible by h^{m}")),
        Some(w) => CheckOutcome::fail(w, format!("combination for Θ_{m} has a term below h^{m}")),
    })
}

/// `Θ_m = h^{-m} Σ (-1)^k C(m,k) θ_k`; errors if the valuation is too low.
pub fn big_theta<F: Field>(rep: &TruncRep<F>, m: usize) -> Result<TensorMatrix<TruncSeries<F>>> {
    theta_combination(rep, m)?.try_map(|e| e.div_h_pow(m))
}
