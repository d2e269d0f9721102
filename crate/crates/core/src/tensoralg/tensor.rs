//! Dense matrices on `(C^n)^{⊗m}` with labelled tensor slots.

use std::fmt;

use super::ring::RingElem;
use crate::error::{Error, Result};

pub type Slot = usize;

/// A square matrix on `(C^n)^{⊗m}`; the first slot is the most significant
/// digit of the row and column index.
#[derive(Clone)]
pub struct TensorMatrix<R> {
    n: usize,
    slots: Vec<Slot>,
    dim: usize,
    entries: Vec<R>,
}

fn check_distinct(slots: &[Slot]) -> Result<()> {
    for (i, a) in slots.iter().enumerate() {
        if slots[i + 1..].contains(a) {
            return Err(Error::InvalidSlot(format!("slot {a} repeated")));
        }
    }
    Ok(())
}

impl<R: RingElem> TensorMatrix<R> {
    pub fn zeros(n: usize, slots: &[Slot]) -> Result<Self> {
        check_distinct(slots)?;
        let dim = n.pow(slots.len() as u32);
        Ok(Self {
            n,
            slots: slots.to_vec(),
            dim,
            entries: vec![R::zero(); dim * dim],
        })
    }

    pub fn identity(n: usize, slots: &[Slot]) -> Result<Self> {
        let mut m = Self::zeros(n, slots)?;
        for i in 0..m.dim {
            m.entries[i * m.dim + i] = R::one();
        }
        Ok(m)
    }

    /// Builds from a function of (row, column).
    pub fn from_fn(n: usize, slots: &[Slot], f: impl Fn(usize, usize) -> R) -> Result<Self> {
        let mut m = Self::zeros(n, slots)?;
        for i in 0..m.dim {
            for j in 0..m.dim {
                m.entries[i * m.dim + j] = f(i, j);
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.entries[i * self.dim + j] = v;
    }

    /// Digits of a flat index, one per slot.
    pub fn digits(&self, idx: usize) -> Vec<usize> {
        let m = self.slots.len();
        let mut d = vec![0; m];
        let mut x = idx;
        for k in (0..m).rev() {
            d[k] = x % self.n;
            x /= self.n;
        }
        d
    }

    pub fn index_of(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &d| acc * self.n + d)
    }

    fn position(&self, slot: Slot) -> Result<usize> {
        self.slots
            .iter()
            .position(|&s| s == slot)
            .ok_or_else(|| Error::InvalidSlot(format!("slot {slot} not in {:?}", self.slots)))
    }

    pub fn map<S: RingElem>(&self, f: impl Fn(&R) -> S + Sync) -> TensorMatrix<S> {
        TensorMatrix {
            n: self.n,
            slots: self.slots.clone(),
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: RingElem>(&self, f: impl FnMut(&R) -> Result<S>) -> Result<TensorMatrix<S>> {
        Ok(TensorMatrix {
            n: self.n,
            slots: self.slots.clone(),
            dim: self.dim,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.slots != other.slots {
            return Err(Error::SlotMismatch(format!(
                "{:?} (n={}) vs {:?} (n={})",
                self.slots, self.n, other.slots, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            if !b.is_structural_zero() {
                *a = a.add(b);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            if !b.is_structural_zero() {
                *a = a.sub(b);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| if x.is_structural_zero() { R::zero() } else { x.mul(c) })
    }

    /// Matrix product; both factors must carry the same slots in the same order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let d = self.dim;
        let rows: Vec<Vec<usize>> = (0..d)
            .map(|k| (0..d).filter(|&j| !other.entries[k * d + j].is_structural_zero()).collect())
            .collect();
        let mut out = vec![R::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_structural_zero() {
                    continue;
                }
                for &j in &rows[k] {
                    let p = a.mul(&other.entries[k * d + j]);
                    let e = &mut out[i * d + j];
                    *e = if e.is_structural_zero() { p } else { e.add(&p) };
                }
            }
        }
        Ok(Self {
            n: self.n,
            slots: self.slots.clone(),
            dim: d,
            entries: out,
        })
    }

    /// Product of a sequence of matrices on the same slots.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Result<Self> {
        let mut it = factors.into_iter();
        let first = it
            .next()
            .ok_or_else(|| Error::InvalidArgument("empty product".into()))?
            .clone();
        it.try_fold(first, |acc, m| acc.mul(m))
    }

    /// Renames the slots in place of position.
    pub fn relabel(&self, slots: &[Slot]) -> Result<Self> {
        if slots.len() != self.slots.len() {
            return Err(Error::InvalidSlot(format!(
                "relabel {:?} has wrong length for {:?}",
                slots, self.slots
            )));
        }
        check_distinct(slots)?;
        let mut out = self.clone();
        out.slots = slots.to_vec();
        Ok(out)
    }

    /// Embeds into `target` (a superset of the slots), acting as the identity
    /// on the new slots and following the order of `target`.
    pub fn embed(&self, target: &[Slot]) -> Result<Self> {
        check_distinct(target)?;
        let pos: Vec<usize> = self
            .slots
            .iter()
            .map(|s| {
                target
                    .iter()
                    .position(|t| t == s)
                    .ok_or_else(|| Error::InvalidSlot(format!("slot {s} missing from {target:?}")))
            })
            .collect::<Result<_>>()?;
        let rest: Vec<usize> = (0..target.len()).filter(|p| !pos.contains(p)).collect();
        let mut out = Self::zeros(self.n, target)?;
        let rest_dim = self.n.pow(rest.len() as u32);
        let mut dig = vec![0usize; target.len()];
        for i in 0..self.dim {
            let di = self.digits(i);
            for j in 0..self.dim {
                let v = &self.entries[i * self.dim + j];
                if v.is_structural_zero() {
                    continue;
                }
                let dj = self.digits(j);
                for r in 0..rest_dim {
                    let mut x = r;
                    for &p in rest.iter().rev() {
                        dig[p] = x % self.n;
                        x /= self.n;
                    }
                    for (k, &p) in pos.iter().enumerate() {
                        dig[p] = di[k];
                    }
                    let row = out.index_of(&dig);
                    for (k, &p) in pos.iter().enumerate() {
                        dig[p] = dj[k];
                    }
                    let col = out.index_of(&dig);
                    out.entries[row * out.dim + col] = v.clone();
                }
            }
        }
        Ok(out)
    }

    /// `C_{ab}` on slots `1..=m` from a two-slot matrix.
    pub fn embed_pair(&self, a: Slot, b: Slot, m: usize) -> Result<Self> {
        if self.slots.len() != 2 {
            return Err(Error::InvalidSlot("embed_pair needs a two-slot matrix".into()));
        }
        if a == b || a == 0 || b == 0 || a > m || b > m {
            return Err(Error::InvalidSlot(format!("pair ({a}, {b}) invalid for m = {m}")));
        }
        let target: Vec<Slot> = (1..=m).collect();
        self.relabel(&[a, b])?.embed(&target)
    }

    /// Transposition on one slot.
    pub fn partial_transpose(&self, slot: Slot) -> Result<Self> {
        let p = self.position(slot)?;
        let mut out = self.clone();
        for i in 0..self.dim {
            let mut di = self.digits(i);
            for j in 0..self.dim {
                let mut dj = self.digits(j);
                std::mem::swap(&mut di[p], &mut dj[p]);
                let (ii, jj) = (self.index_of(&di), self.index_of(&dj));
                std::mem::swap(&mut di[p], &mut dj[p]);
                out.entries[ii * self.dim + jj] = self.entries[i * self.dim + j].clone();
            }
        }
        Ok(out)
    }

    /// Contracts the listed slots.
    pub fn partial_trace(&self, traced: &[Slot]) -> Result<Self> {
        if traced.is_empty() {
            return Err(Error::InvalidSlot("empty trace set".into()));
        }
        check_distinct(traced)?;
        let tp: Vec<usize> = traced.iter().map(|&s| self.position(s)).collect::<Result<_>>()?;
        let keep: Vec<usize> = (0..self.slots.len()).filter(|p| !tp.contains(p)).collect();
        let keep_slots: Vec<Slot> = keep.iter().map(|&p| self.slots[p]).collect();
        let mut out = Self::zeros(self.n, &keep_slots)?;
        let tdim = self.n.pow(tp.len() as u32);
        let mut dig = vec![0usize; self.slots.len()];
        for i in 0..out.dim {
            let di = out.digits(i);
            for j in 0..out.dim {
                let dj = out.digits(j);
                let mut acc = R::zero();
                for t in 0..tdim {
                    let mut x = t;
                    for &p in tp.iter().rev() {
                        dig[p] = x % self.n;
                        x /= self.n;
                    }
                    for (k, &p) in keep.iter().enumerate() {
                        dig[p] = di[k];
                    }
                    let row = self.index_of(&dig);
                    for (k, &p) in keep.iter().enumerate() {
                        dig[p] = dj[k];
                    }
                    let col = self.index_of(&dig);
                    let v = &self.entries[row * self.dim + col];
                    if !v.is_structural_zero() {
                        acc = if acc.is_structural_zero() { v.clone() } else { acc.add(v) };
                    }
                }
                out.entries[i * out.dim + j] = acc;
            }
        }
        Ok(out)
    }

    /// Full trace.
    pub fn trace(&self) -> R {
        let mut acc = R::zero();
        for i in 0..self.dim {
            acc = acc.add(&self.entries[i * self.dim + i]);
        }
        acc
    }

    /// First entry that is not known to vanish.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &R)> {
        self.entries
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k / self.dim, k % self.dim, v))
    }

    pub fn is_zero(&self) -> bool {
        self.first_nonzero().is_none()
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    /// Gauss–Jordan inverse; `unit` chooses admissible pivots and `inv`
    /// inverts them.
    pub fn inverse_with(
        &self,
        unit: impl Fn(&R) -> bool,
        inv: impl Fn(&R) -> Result<R>,
    ) -> Result<Self> {
        let d = self.dim;
        let mut a = self.entries.clone();
        let mut b = Self::identity(self.n, &self.slots)?.entries;
        for col in 0..d {
            let piv = (col..d)
                .find(|&r| unit(&a[r * d + col]))
                .ok_or_else(|| Error::NonInvertible(format!("no pivot in column {col}")))?;
            if piv != col {
                for k in 0..d {
                    a.swap(piv * d + k, col * d + k);
                    b.swap(piv * d + k, col * d + k);
                }
            }
            let pinv = inv(&a[col * d + col])?;
            for k in 0..d {
                if !a[col * d + k].is_structural_zero() {
                    a[col * d + k] = a[col * d + k].mul(&pinv);
                }
                if !b[col * d + k].is_structural_zero() {
                    b[col * d + k] = b[col * d + k].mul(&pinv);
                }
            }
            for r in 0..d {
                if r == col || a[r * d + col].is_structural_zero() {
                    continue;
                }
                let f = a[r * d + col].clone();
                for k in 0..d {
                    if !a[col * d + k].is_structural_zero() {
                        a[r * d + k] = a[r * d + k].sub(&f.mul(&a[col * d + k]));
                    }
                    if !b[col * d + k].is_structural_zero() {
                        b[r * d + k] = b[r * d + k].sub(&f.mul(&b[col * d + k]));
                    }
                }
                a[r * d + col] = R::zero();
            }
        }
        Ok(Self {
            n: self.n,
            slots: self.slots.clone(),
            dim: d,
            entries: b,
        })
    }
}

impl<R: RingElem> fmt::Debug for TensorMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TensorMatrix n={} slots={:?}", self.n, self.slots)?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = &self.entries[i * self.dim + j];
                if !v.is_structural_zero() {
                    writeln!(f, "  [{i},{j}] {v:?}")?;
                }
            }
        }
        Ok(())
    }
}
