use super::*;
use crate::coeffring::{vars, LaurentPoly};
use crate::scalar::{Field, Rational};

type Q = LaurentPoly<Rational>;

fn qpow() -> impl Fn(i32) -> Q {
    let v = vars(&["q"]);
    move |k| LaurentPoly::monomial(&v, &[k], Rational::one())
}

fn basis_vector(n: usize, digits: &[usize]) -> usize {
    digits.iter().fold(0, |acc, d| acc * n + d)
}

#[test]
fn embed_identity_is_identity() {
    let i2 = TensorMatrix::<Rational>::identity(2, &[1, 2]).unwrap();
    let e = i2.embed(&[1, 2, 3]).unwrap();
    let i3 = TensorMatrix::<Rational>::identity(2, &[1, 2, 3]).unwrap();
    assert!(e.sub(&i3).unwrap().is_zero());
}

#[test]
fn embed_pair_of_permutation() {
    let p = std_permutation::<Rational>(3, 0, 1).unwrap();
    let p12 = p.embed_pair(1, 2, 2).unwrap();
    assert!(p12.sub(&p.relabel(&[1, 2]).unwrap()).unwrap().is_zero());
    let p13 = p.embed_pair(1, 3, 3).unwrap();
    for (i, j, k) in [(0, 1, 2), (2, 2, 0), (1, 0, 1)] {
        let col = basis_vector(3, &[i, j, k]);
        let row = basis_vector(3, &[k, j, i]);
        assert_eq!(*p13.get(row, col), Rational::one());
    }
    assert!(p.embed_pair(2, 2, 3).is_err());
    assert!(p.embed_pair(1, 4, 3).is_err());
}

#[test]
fn transpose_of_permutation() {
    let p = std_permutation::<Rational>(2, 1, 2).unwrap();
    let pt = p.partial_transpose(1).unwrap();
    // sum e_ji ⊗ e_ji: entry (j j', i i') = 1 iff j = j' and i = i'
    for row in 0..4 {
        for col in 0..4 {
            let expect = row / 2 == row % 2 && col / 2 == col % 2;
            assert_eq!(*pt.get(row, col) == Rational::one(), expect);
        }
    }
    assert!(pt.partial_transpose(1).unwrap().sub(&p).unwrap().is_zero());
    assert!(p.partial_transpose(7).is_err());
}

#[test]
fn transposes_on_different_slots_commute() {
    let q = qpow();
    let a = h_permutation(2, 1, 2, &q)
        .unwrap()
        .mul(&diag_d(2, 1, &q).unwrap().embed(&[1, 2]).unwrap())
        .unwrap();
    let x = a.partial_transpose(1).unwrap().partial_transpose(2).unwrap();
    let y = a.partial_transpose(2).unwrap().partial_transpose(1).unwrap();
    assert!(x.sub(&y).unwrap().is_zero());
}

#[test]
fn traces_of_permutations() {
    let q = qpow();
    let p = std_permutation::<Q>(3, 1, 2).unwrap();
    let t = p.partial_trace(&[1]).unwrap();
    assert!(t.sub(&TensorMatrix::identity(3, &[2]).unwrap()).unwrap().is_zero());
    let ph = h_permutation(3, 1, 2, &q).unwrap();
    let t = ph.partial_trace(&[1]).unwrap();
    assert!(t.sub(&TensorMatrix::identity(3, &[2]).unwrap()).unwrap().is_zero());
    let id = TensorMatrix::<Rational>::identity(2, &[1, 2, 3]).unwrap();
    let full = id.partial_trace(&[1, 2, 3]).unwrap();
    assert_eq!(*full.get(0, 0), Rational::from_i64(8));
    assert!(id.partial_trace(&[]).is_err());
}

#[test]
fn permutation_squares() {
    let q = qpow();
    for n in 1..=3 {
        let p = std_permutation::<Q>(n, 1, 2).unwrap();
        let id = TensorMatrix::identity(n, &[1, 2]).unwrap();
        assert!(p.mul(&p).unwrap().sub(&id).unwrap().is_zero());
        let ph = h_permutation(n, 1, 2, &q).unwrap();
        assert!(ph.mul(&ph).unwrap().sub(&id).unwrap().is_zero());
        let at_one = h_permutation::<Rational>(n, 1, 2, &|_| Rational::one()).unwrap();
        let pr = std_permutation::<Rational>(n, 1, 2).unwrap();
        assert!(at_one.sub(&pr).unwrap().is_zero());
    }
    let d1 = diag_d(1, 0, &q).unwrap();
    assert!(LaurentPoly::is_one(d1.get(0, 0)));
}

#[test]
fn perm_action_examples() {
    let q = qpow();
    let slots = [1, 2];
    let e = perm_action(2, &slots, &[], &q).unwrap();
    assert!(e.sub(&TensorMatrix::identity(2, &slots).unwrap()).unwrap().is_zero());
    let s1 = perm_action(2, &slots, &[0], &q).unwrap();
    assert!(s1.sub(&h_permutation(2, 1, 2, &q).unwrap()).unwrap().is_zero());
    let slots3 = [1, 2, 3];
    let cyc = perm_action(2, &slots3, &cycle_word(3), &q).unwrap();
    let p23 = h_permutation(2, 2, 3, &q).unwrap().embed(&slots3).unwrap();
    let p12 = h_permutation(2, 1, 2, &q).unwrap().embed(&slots3).unwrap();
    assert!(cyc.sub(&p23.mul(&p12).unwrap()).unwrap().is_zero());
}

#[test]
fn reduced_words_reconstruct_permutations() {
    for w in all_perms(4) {
        let word = reduced_word(&w);
        assert_eq!(word.len(), length(&w));
        assert_eq!(perm_of_word(4, &word), w);
        for alt in all_reduced_words(&w) {
            assert_eq!(alt.len(), word.len());
            assert_eq!(perm_of_word(4, &alt), w);
        }
    }
}

#[test]
fn inverse_of_rational_matrix() {
    let m = TensorMatrix::<Rational>::from_fn(2, &[1], |i, j| Rational::from_i64((i + 2 * j + 1) as i64))
        .unwrap();
    let inv = m
        .inverse_with(|x| !num_traits::Zero::is_zero(x), |x| Ok(Rational::one() / x.clone()))
        .unwrap();
    let id = TensorMatrix::identity(2, &[1]).unwrap();
    assert!(m.mul(&inv).unwrap().sub(&id).unwrap().is_zero());
}
