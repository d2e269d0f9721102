//! Exact evaluation representation `L⁺(u) ↦ R̄_{slot,aux}(u, w)` over
//! Laurent polynomials and the relations it must satisfy.

use super::rep::AUX;
use crate::coeffring::{vars, LaurentPoly, Vars};
use crate::error::{Error, Result};
use crate::fusion::{antisymmetrizer_with, multi_r_product, MAX_K};
use crate::report::CheckOutcome;
use crate::rmatrix::{check_exact_zero, r2p_with};
use crate::scalar::{factorial, Field};
use crate::tensoralg::{Slot, TensorMatrix};

type PolyMatrix<F> = TensorMatrix<LaurentPoly<F>>;

/// Exact letters with spectral variables `x_a` and expansion point `w`.
pub struct ExactRep<F: Field> {
    pub n: usize,
    pub vars: Vars,
    q: LaurentPoly<F>,
    qi: LaurentPoly<F>,
    w: LaurentPoly<F>,
}

impl<F: Field> ExactRep<F> {
    /// `names` are the spectral variables; `w` and `q` are appended.
    pub fn new(n: usize, names: &[&str]) -> Self {
        let mut all: Vec<&str> = names.to_vec();
        all.extend(["w", "q"]);
        let v = vars(&all);
        let m = all.len();
        let mono = |pos: usize, e: i32| {
            let mut ex = vec![0; m];
            ex[pos] = e;
            LaurentPoly::monomial(&v, &ex, F::one())
        };
        Self {
            n,
            q: mono(m - 1, 1),
            qi: mono(m - 1, -1),
            w: mono(m - 2, 1),
            vars: v.clone(),
        }
    }

    /// `x_name · q^{qe}`.
    pub fn spectral(&self, name: &str, qe: i32) -> Result<LaurentPoly<F>> {
        let x = LaurentPoly::var(&self.vars, name)?;
        let q = if qe >= 0 { &self.q } else { &self.qi };
        Ok((0..qe.unsigned_abs()).fold(x, |acc, _| &acc * q))
    }

    /// `R̄_{slot,aux}(x, w)`.
    pub fn letter(&self, slot: Slot, x: &LaurentPoly<F>) -> Result<PolyMatrix<F>> {
        r2p_with(self.n, x, &self.w, &self.q, &self.qi)?.relabel(&[slot, AUX])
    }

    pub fn r_bar(&self, a: Slot, b: Slot, xa: &LaurentPoly<F>, xb: &LaurentPoly<F>) -> Result<PolyMatrix<F>> {
        r2p_with(self.n, xa, xb, &self.q, &self.qi)?.relabel(&[a, b])
    }

    /// `L⁺_{slots[0]}(x_0) ⋯ L⁺_{slots[k-1]}(x_{k-1})` on `[1..=k, aux]`.
    pub fn word(&self, slots: &[Slot], xs: &[LaurentPoly<F>]) -> Result<PolyMatrix<F>> {
        let k = xs.len();
        let mut target: Vec<Slot> = (1..=k).collect();
        target.push(AUX);
        let mut acc = TensorMatrix::identity(self.n, &target)?;
        for (s, x) in slots.iter().zip(xs) {
            acc = acc.mul(&self.letter(*s, x)?.embed(&target)?)?;
        }
        Ok(acc)
    }
}

/// `R̄₁₂(u,v) L⁺₁(u) L⁺₂(v) = L⁺₂(v) L⁺₁(u) R̄₁₂(u,v)`.
pub fn verify_rtt_exact<F: Field>(n: usize) -> Result<CheckOutcome> {
    let rep = ExactRep::<F>::new(n, &["x1", "x2"]);
    let (x1, x2) = (rep.spectral("x1", 0)?, rep.spectral("x2", 0)?);
    let target = [1, 2, AUX];
    let r = rep.r_bar(1, 2, &x1, &x2)?.embed(&target)?;
    let l1 = rep.letter(1, &x1)?.embed(&target)?;
    let l2 = rep.letter(2, &x2)?.embed(&target)?;
    let lhs = r.mul(&l1)?.mul(&l2)?;
    let rhs = l2.mul(&l1)?.mul(&r)?;
    Ok(check_exact_zero(&lhs.sub(&rhs)?))
}

fn check_k(k: usize, lo: usize) -> Result<()> {
    if k < lo || k > MAX_K {
        return Err(Error::InvalidArgument(format!("k = {k} outside {lo}..={MAX_K}")));
    }
    Ok(())
}

/// `A^(k) L⁺_1(u_1) ⋯ L⁺_k(u_k) = L⁺_k(u_k) ⋯ L⁺_1(u_1) A^(k)` at the string.
pub fn verify_at_exact<F: Field>(n: usize, k: usize) -> Result<CheckOutcome> {
    check_k(k, 1)?;
    let rep = ExactRep::<F>::new(n, &["x"]);
    let xs: Vec<LaurentPoly<F>> = (0..k).map(|a| rep.spectral("x", -2 * a as i32)).collect::<Result<_>>()?;
    let slots: Vec<Slot> = (1..=k).collect();
    let rev: Vec<Slot> = slots.iter().rev().copied().collect();
    let xs_rev: Vec<LaurentPoly<F>> = xs.iter().rev().cloned().collect();
    let mut target = slots.clone();
    target.push(AUX);
    let q = |e: i32| {
        let base = if e >= 0 { &rep.q } else { &rep.qi };
        (0..e.unsigned_abs()).fold(LaurentPoly::one(), |acc, _| &acc * base)
    };
    let inv = LaurentPoly::constant(F::one() / factorial::<F>(k as u32));
    let a = antisymmetrizer_with(n, &slots, &q, &inv)?.embed(&target)?;
    let lhs = a.mul(&rep.word(&slots, &xs)?)?;
    let rhs = rep.word(&rev, &xs_rev)?.mul(&a)?;
    Ok(check_exact_zero(&lhs.sub(&rhs)?))
}

/// `R̄(u_1,…,u_k) L⁺_1(u_1) ⋯ L⁺_k(u_k) = L⁺_k(u_k) ⋯ L⁺_1(u_1) R̄(u_1,…,u_k)`
/// for independent `u_a`.
pub fn verify_comm1_exact<F: Field>(n: usize, k: usize) -> Result<CheckOutcome> {
    check_k(k, 2)?;
    let names: Vec<String> = (1..=k).map(|a| format!("x{a}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let rep = ExactRep::<F>::new(n, &refs);
    let xs: Vec<LaurentPoly<F>> = refs.iter().map(|s| rep.spectral(s, 0)).collect::<Result<_>>()?;
    let slots: Vec<Slot> = (1..=k).collect();
    let rev: Vec<Slot> = slots.iter().rev().copied().collect();
    let xs_rev: Vec<LaurentPoly<F>> = xs.iter().rev().cloned().collect();
    let mut target = slots.clone();
    target.push(AUX);
    let r = multi_r_product(n, &xs, &rep.q, &rep.qi)?.embed(&target)?;
    let lhs = r.mul(&rep.word(&slots, &xs)?)?;
    let rhs = rep.word(&rev, &xs_rev)?.mul(&r)?;
    Ok(check_exact_zero(&lhs.sub(&rhs)?))
}
