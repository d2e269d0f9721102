//! q-antisymmetrizers, ordered products of `R̄(u_a, u_b)` and the fusion
//! identity at the string `u, u-h, ..., u-(k-1)h`.

use crate::coeffring::{vars, LaurentPoly, Vars};
use crate::error::{Error, Result};
use crate::report::CheckOutcome;
use crate::rmatrix::{check_exact_zero, r2p_with};
use crate::scalar::{binomial, factorial, Field};
use crate::tensoralg::{all_perms, diag_d_product, length, perm_action, reduced_word, RingElem, Slot, TensorMatrix};

/// `A^(k)` on slots `1..=k`, entries polynomial in `q^{±1}`.
#[derive(Clone, Debug)]
pub struct Antisymmetrizer<F: Field> {
    pub n: usize,
    pub k: usize,
    pub matrix: TensorMatrix<LaurentPoly<F>>,
}

pub const MAX_K: usize = 4;

fn check_k(k: usize) -> Result<()> {
    if k == 0 || k > MAX_K {
        return Err(Error::InvalidArgument(format!("k = {k} outside 1..={MAX_K}")));
    }
    Ok(())
}

/// `(1/k!) sum sgn σ P^h_σ` on `slots` over any ring; `inv_kfact` is `1/k!`.
pub fn antisymmetrizer_with<R: RingElem>(
    n: usize,
    slots: &[Slot],
    q_pow: &dyn Fn(i32) -> R,
    inv_kfact: &R,
) -> Result<TensorMatrix<R>> {
    let k = slots.len();
    let mut acc = TensorMatrix::zeros(n, slots)?;
    for sigma in all_perms(k) {
        let p = perm_action(n, slots, &reduced_word(&sigma), q_pow)?;
        acc = if length(&sigma).is_multiple_of(2) { acc.add(&p)? } else { acc.sub(&p)? };
    }
    Ok(acc.scale(inv_kfact))
}

fn q_vars() -> Vars {
    vars(&["x", "q"])
}

fn mono<F: Field>(v: &Vars, x: i32, q: i32) -> LaurentPoly<F> {
    LaurentPoly::monomial(v, &[x, q], F::one())
}

pub fn build_antisymmetrizer<F: Field>(n: usize, k: usize) -> Result<Antisymmetrizer<F>> {
    check_k(k)?;
    let v = q_vars();
    let slots: Vec<Slot> = (1..=k).collect();
    let inv = LaurentPoly::constant(F::one() / factorial::<F>(k as u32));
    let matrix = antisymmetrizer_with(n, &slots, &|e| mono::<F>(&v, 0, e), &inv)?;
    Ok(Antisymmetrizer { n, k, matrix })
}

impl<F: Field> Antisymmetrizer<F> {
    pub fn verify_idempotent(&self) -> Result<CheckOutcome> {
        Ok(check_exact_zero(&self.matrix.mul(&self.matrix)?.sub(&self.matrix)?))
    }

    /// `tr A^(k) - C(n, k)`, which should vanish.
    pub fn trace_defect(&self) -> LaurentPoly<F> {
        let c = binomial::<F>(self.n as i64, self.k as i64);
        &self.matrix.trace() - &LaurentPoly::constant(c)
    }

    pub fn verify_trace(&self) -> CheckOutcome {
        let d = self.trace_defect();
        if d.is_zero() {
            CheckOutcome::pass(format!("trace = C({}, {})", self.n, self.k))
        } else {
            CheckOutcome::fail(crate::report::Witness::message(&d), "trace differs from the binomial")
        }
    }
}

/// `prod_{a<b} R̄_{ab}(u_a, u_b)` in lexicographic order on slots `1..=k`,
/// given `x_a = e^{u_a}`.
pub fn multi_r_product<F: Field>(
    n: usize,
    xs: &[LaurentPoly<F>],
    q: &LaurentPoly<F>,
    qi: &LaurentPoly<F>,
) -> Result<TensorMatrix<LaurentPoly<F>>> {
    let k = xs.len();
    if k < 2 {
        return Err(Error::InvalidArgument("need at least two spectral parameters".into()));
    }
    let slots: Vec<Slot> = (1..=k).collect();
    let mut acc = TensorMatrix::identity(n, &slots)?;
    for a in 0..k {
        for b in a + 1..k {
            let r = r2p_with(n, &xs[a], &xs[b], q, qi)?.relabel(&[a + 1, b + 1])?.embed(&slots)?;
            acc = acc.mul(&r)?;
        }
    }
    Ok(acc)
}

/// Both sides of the fusion identity in `x`, `q`.
pub fn fusion_sides<F: Field>(
    n: usize,
    k: usize,
) -> Result<(TensorMatrix<LaurentPoly<F>>, TensorMatrix<LaurentPoly<F>>)> {
    check_k(k)?;
    if k < 2 {
        return Err(Error::InvalidArgument("fusion needs k >= 2".into()));
    }
    let v = q_vars();
    let xs: Vec<LaurentPoly<F>> = (0..k).map(|a| mono(&v, 1, -2 * a as i32)).collect();
    let lhs = multi_r_product(n, &xs, &mono(&v, 0, 1), &mono(&v, 0, -1))?;
    let mut c = LaurentPoly::monomial(&v, &[(k * (k - 1) / 2) as i32, 0], factorial::<F>(k as u32));
    for a in 0..k as i32 {
        for b in a + 1..k as i32 {
            c = &c * &(&mono(&v, 0, -2 * a) - &mono(&v, 0, -2 * b));
        }
    }
    let a = build_antisymmetrizer::<F>(n, k)?.matrix.map(|e| e.embed(&v).expect("q is a variable"));
    Ok((lhs, a.scale(&c)))
}

pub fn verify_fusion<F: Field>(n: usize, k: usize) -> Result<CheckOutcome> {
    let (lhs, rhs) = fusion_sides::<F>(n, k)?;
    Ok(check_exact_zero(&lhs.sub(&rhs)?))
}

/// `A^(k) D_1⋯D_k = D_k⋯D_1 A^(k)` and `R̄(u,v) D_1 D_2 = D_2 D_1 R̄(u,v)`.
pub fn verify_ad_commutation<F: Field>(n: usize, k: usize) -> Result<CheckOutcome> {
    let a = build_antisymmetrizer::<F>(n, k)?;
    let v = q_vars();
    let q = |e: i32| mono::<F>(&v, 0, e);
    let slots: Vec<Slot> = (1..=k).collect();
    let rev: Vec<Slot> = slots.iter().rev().copied().collect();
    let d = diag_d_product(n, &slots, &q)?;
    let d_rev = diag_d_product(n, &rev, &q)?.embed(&slots)?;
    let m = a.matrix.map(|e| e.embed(&v).expect("q is a variable"));
    let first = check_exact_zero(&m.mul(&d)?.sub(&d_rev.mul(&m)?)?);
    let rv = vars(&["x_u", "x_v", "q"]);
    let p = |i: usize, e: i32| {
        let mut exps = [0; 3];
        exps[i] = e;
        LaurentPoly::monomial(&rv, &exps, F::one())
    };
    let r = r2p_with(n, &p(0, 1), &p(1, 1), &p(2, 1), &p(2, -1))?;
    let qr = |e: i32| p(2, e);
    let d12 = diag_d_product(n, &[0, 1], &qr)?;
    let d21 = diag_d_product(n, &[1, 0], &qr)?.embed(&[0, 1])?;
    let second = check_exact_zero(&r.mul(&d12)?.sub(&d21.mul(&r)?)?);
    Ok(CheckOutcome::all([
        ("A D = D A".to_string(), first),
        ("R̄ D D = D D R̄".to_string(), second),
    ]))
}

#[cfg(test)]
mod tests;
