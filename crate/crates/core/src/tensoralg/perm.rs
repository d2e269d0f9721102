//! Permutation operators, the h-permutation, the diagonal matrix `D` and
//! the symmetric-group action on tensor slots.

use super::ring::RingElem;
use super::tensor::{Slot, TensorMatrix};
use crate::error::{Error, Result};

/// Usual permutation `P = sum e_ij ⊗ e_ji` on slots `(a, b)`.
pub fn std_permutation<R: RingElem>(n: usize, a: Slot, b: Slot) -> Result<TensorMatrix<R>> {
    TensorMatrix::from_fn(n, &[a, b], |row, col| {
        let (i, j) = (row / n, row % n);
        let (k, l) = (col / n, col % n);
        if i == l && j == k {
            R::one()
        } else {
            R::zero()
        }
    })
}

/// `P^h = sum e_ii⊗e_ii + q sum_{i>j} e_ij⊗e_ji + q^{-1} sum_{i<j} e_ij⊗e_ji`,
/// with `q_pow(k)` returning `q^k`.
pub fn h_permutation<R: RingElem>(
    n: usize,
    a: Slot,
    b: Slot,
    q_pow: &dyn Fn(i32) -> R,
) -> Result<TensorMatrix<R>> {
    let q = q_pow(1);
    let qi = q_pow(-1);
    // e_ij ⊗ e_ji maps e_j ⊗ e_i to e_i ⊗ e_j: row (i, j), column (j, i)
    TensorMatrix::from_fn(n, &[a, b], |row, col| {
        let (i, j) = (row / n, row % n);
        let (k, l) = (col / n, col % n);
        if !(k == j && l == i) {
            R::zero()
        } else if i == j {
            R::one()
        } else if i > j {
            q.clone()
        } else {
            qi.clone()
        }
    })
}

/// `D = diag[q^{n-1}, q^{n-3}, ..., q^{1-n}]` on one slot.
pub fn diag_d<R: RingElem>(n: usize, slot: Slot, q_pow: &dyn Fn(i32) -> R) -> Result<TensorMatrix<R>> {
    TensorMatrix::from_fn(n, &[slot], |i, j| {
        if i == j {
            q_pow(n as i32 - 1 - 2 * i as i32)
        } else {
            R::zero()
        }
    })
}

/// `D_1 ⋯ D_k` on the given slots.
pub fn diag_d_product<R: RingElem>(
    n: usize,
    slots: &[Slot],
    q_pow: &dyn Fn(i32) -> R,
) -> Result<TensorMatrix<R>> {
    let mut acc = TensorMatrix::identity(n, slots)?;
    for &s in slots {
        acc = acc.mul(&diag_d(n, s, q_pow)?.embed(slots)?)?;
    }
    Ok(acc)
}

/// A permutation of `0..k` in one-line notation.
pub type Perm = Vec<usize>;

/// Simple transposition `s_a` swaps positions `a` and `a + 1` (zero-based).
pub fn reduced_word(w: &[usize]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
        w.swap(i, i + 1);
        word.push(i);
    }
    word.reverse();
    word
}

/// Every reduced decomposition of `w`.
pub fn all_reduced_words(w: &[usize]) -> Vec<Vec<usize>> {
    let descents: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]).collect();
    if descents.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in descents {
        let mut v = w.to_vec();
        v.swap(i, i + 1);
        for mut word in all_reduced_words(&v) {
            word.push(i);
            out.push(word);
        }
    }
    out
}

/// Number of inversions.
pub fn length(w: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                c += 1;
            }
        }
    }
    c
}

/// Composes simple transpositions of a word into one-line notation.
pub fn perm_of_word(k: usize, word: &[usize]) -> Perm {
    let mut w: Perm = (0..k).collect();
    for &a in word {
        w.swap(a, a + 1);
    }
    w
}

/// All permutations of `0..k` in lexicographic order.
pub fn all_perms(k: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Perm, left: &mut Vec<usize>, out: &mut Vec<Perm>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            prefix.push(x);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..k).collect(), &mut out);
    out
}

/// `P^h_{s_{a_1}} ⋯ P^h_{s_{a_l}}` on `slots`, where `s_a` acts on the slot
/// pair at positions `(a, a+1)`.
pub fn perm_action<R: RingElem>(
    n: usize,
    slots: &[Slot],
    word: &[usize],
    q_pow: &dyn Fn(i32) -> R,
) -> Result<TensorMatrix<R>> {
    let mut acc = TensorMatrix::identity(n, slots)?;
    for &a in word {
        if a + 1 >= slots.len() {
            return Err(Error::InvalidArgument(format!(
                "s_{} outside {} slots",
                a + 1,
                slots.len()
            )));
        }
        let p = h_permutation(n, slots[a], slots[a + 1], q_pow)?.embed(slots)?;
        acc = acc.mul(&p)?;
    }
    Ok(acc)
}

/// Same as [`perm_action`] with the usual permutation operators.
pub fn std_perm_action<R: RingElem>(n: usize, slots: &[Slot], word: &[usize]) -> Result<TensorMatrix<R>> {
    perm_action(n, slots, word, &|_| R::one())
}

/// `P^h_{(k,k-1,...,1)} = P^h_{k-1,k} ⋯ P^h_{1,2}`.
pub fn cycle_word(k: usize) -> Vec<usize> {
    (0..k.saturating_sub(1)).rev().collect()
}
