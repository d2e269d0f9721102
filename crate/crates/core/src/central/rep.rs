//! The truncated evaluation representation `L⁺(u) ↦ R_{a,aux}(u + w)`,
//! Taylor-expanded around the expansion point `w`.

use std::collections::BTreeMap;

use crate::coeffring::{from_fraction_with, LaurentFraction, SeriesWindow, TruncSeries, VarMap};
use crate::error::Result;
use crate::normalizer::solve_g_froute;
use crate::rmatrix::{build_r1p, series_matrix_inverse};
use crate::scalar::Field;
use crate::tensoralg::{Slot, TensorMatrix};

/// Slot labels of the auxiliary (representation) spaces.
pub const AUX: Slot = 100;
pub const AUX2: Slot = 101;

/// Number of evaluation factors in the auxiliary space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuxKind {
    /// One copy of `C^n` at `w`.
    Single,
    /// `C^n ⊗ C^n` at `w` and `w + h/2`, via the coproduct.
    Pair,
}

impl AuxKind {
    pub fn slots(self) -> Vec<Slot> {
        match self {
            AuxKind::Single => vec![AUX],
            AuxKind::Pair => vec![AUX, AUX2],
        }
    }
}

/// Normalized `R(u + αh)` for rational `α`, computed on a padded window.
pub struct TruncRep<F: Field> {
    pub n: usize,
    pub aux: AuxKind,
    /// Window on which checks are reported.
    pub window: SeriesWindow,
    /// Padded window the series are computed on.
    pub work: SeriesWindow,
    g: TruncSeries<F>,
    r1p: TensorMatrix<LaurentFraction<F>>,
    cache: std::sync::Mutex<BTreeMap<String, TensorMatrix<TruncSeries<F>>>>,
}

impl<F: Field> TruncRep<F> {
    pub fn new(n: usize, aux: AuxKind, win: &SeriesWindow) -> Result<Self> {
        let work = win.padded(3 * win.h_high as i64 + 4);
        let g = solve_g_froute::<F>(n, &work.padded(win.h_high as i64 + 2))?.g;
        Ok(Self {
            n,
            aux,
            window: *win,
            work,
            g,
            r1p: build_r1p::<F>(n)?,
            cache: Default::default(),
        })
    }

    /// `R(u + αh)` on slots `[0, 1]`.
    pub fn r_at(&self, alpha: &F) -> Result<TensorMatrix<TruncSeries<F>>> {
        let key = alpha.to_string();
        if let Some(m) = self.cache.lock().unwrap().get(&key) {
            return Ok(m.clone());
        }
        let map = [
            VarMap::new("x", F::one(), alpha.clone()),
            VarMap::new("q", F::zero(), F::from_ratio(1, 2)),
        ];
        let g = self.g.taylor_shift(alpha, self.work.h_high);
        let mut memo: Vec<(LaurentFraction<F>, TruncSeries<F>)> = Vec::new();
        let m = self.r1p.try_map(|a| {
            if a.is_zero() {
                return Ok(TruncSeries::zero());
            }
            if let Some((_, s)) = memo.iter().find(|(b, _)| b.num() == a.num() && b.den() == a.den()) {
                return Ok(s.clone());
            }
            let s = &g * &from_fraction_with(a, &map, &self.work)?;
            memo.push((a.clone(), s.clone()));
            Ok(s)
        })?;
        self.cache.lock().unwrap().insert(key, m.clone());
        Ok(m)
    }

    /// `R_{ab}(u + αh)`.
    pub fn r_on(&self, a: Slot, b: Slot, alpha: &F) -> Result<TensorMatrix<TruncSeries<F>>> {
        self.r_at(alpha)?.relabel(&[a, b])
    }

    /// `R_{ab}(u + αh)^{-1}`.
    pub fn r_inv_on(&self, a: Slot, b: Slot, alpha: &F) -> Result<TensorMatrix<TruncSeries<F>>> {
        series_matrix_inverse(&self.r_at(alpha)?, &self.work)?.relabel(&[a, b])
    }

    /// The letter `L⁺_slot(y + αh)` on `[slot, aux...]`.
    pub fn letter(&self, slot: Slot, alpha: &F) -> Result<TensorMatrix<TruncSeries<F>>> {
        let mut target = vec![slot];
        target.extend(self.aux.slots());
        let first = self.r_on(slot, AUX, alpha)?.embed(&target)?;
        match self.aux {
            AuxKind::Single => Ok(first),
            AuxKind::Pair => {
                let beta = alpha.clone() + F::from_ratio(1, 2);
                first.mul(&self.r_on(slot, AUX2, &beta)?.embed(&target)?)
            }
        }
    }

    /// `L⁺_1(y + α_1 h) ⋯ L⁺_k(y + α_k h)` on `[1..=k, aux...]`.
    pub fn word(&self, alphas: &[F]) -> Result<TensorMatrix<TruncSeries<F>>> {
        let mut target: Vec<Slot> = (1..=alphas.len()).collect();
        target.extend(self.aux.slots());
        let mut acc = TensorMatrix::identity(self.n, &target)?;
        for (a, alpha) in alphas.iter().enumerate() {
            acc = acc.mul(&self.letter(a + 1, alpha)?.embed(&target)?)?;
        }
        Ok(acc)
    }

    /// Shifts `0, -1, ..., -(k-1)` of the fused string.
    pub fn string(k: usize) -> Vec<F> {
        (0..k).map(|a| F::from_i64(-(a as i64))).collect()
    }

    /// `q^e = e^{eh/2}` as a series.
    pub fn q_pow(&self, e: i32) -> TruncSeries<F> {
        crate::coeffring::exp_expand(&F::zero(), &F::from_ratio(e as i64, 2), &self.work)
    }
}
