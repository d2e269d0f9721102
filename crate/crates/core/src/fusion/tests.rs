use super::*;
use crate::scalar::Rational;

type R = Rational;

#[test]
fn k1_is_identity() {
    let a = build_antisymmetrizer::<R>(3, 1).unwrap();
    assert!(check_exact_zero(&a.matrix.sub(&TensorMatrix::identity(3, &[1]).unwrap()).unwrap()).passed());
}

#[test]
fn k2_entries() {
    let a = build_antisymmetrizer::<R>(2, 2).unwrap();
    let v = q_vars();
    let half = R::from_ratio(1, 2);
    // row e1⊗e2: (e1⊗e2 - q^{-1} e2⊗e1)/2
    assert_eq!(a.matrix.get(1, 1), &LaurentPoly::constant(half.clone()));
    assert_eq!(a.matrix.get(1, 2), &LaurentPoly::monomial(&v, &[0, -1], -half.clone()));
    // column e1⊗e2 is sent to (e1⊗e2 - q e2⊗e1)/2
    assert_eq!(a.matrix.get(2, 1), &LaurentPoly::monomial(&v, &[0, 1], -half));
    assert!(a.verify_trace().passed());
}

#[test]
fn idempotent_trace_and_vanishing() {
    for n in 1..=3 {
        for k in 1..=(n + 1).min(MAX_K) {
            let a = build_antisymmetrizer::<R>(n, k).unwrap();
            assert!(a.verify_idempotent().unwrap().passed(), "n={n} k={k}");
            assert!(a.verify_trace().passed(), "n={n} k={k}");
            if k > n {
                assert!(a.matrix.is_zero());
            }
        }
    }
}

#[test]
fn fusion_identity() {
    for n in [1, 2, 3] {
        for k in [2, 3] {
            let out = verify_fusion::<R>(n, k).unwrap();
            assert!(out.passed(), "n={n} k={k}: {out}");
        }
    }
}

#[test]
fn fusion_k2_scalar() {
    let (lhs, _) = fusion_sides::<R>(2, 2).unwrap();
    let a = build_antisymmetrizer::<R>(2, 2).unwrap();
    let v = q_vars();
    // 2 x (1 - q^{-2}) A
    let c = &(&LaurentPoly::monomial(&v, &[1, 0], R::from_i64(2)) - &LaurentPoly::monomial(&v, &[1, -2], R::from_i64(2)));
    let rhs = a.matrix.map(|e| e.embed(&v).unwrap()).scale(c);
    assert!(check_exact_zero(&lhs.sub(&rhs).unwrap()).passed());
}

#[test]
fn wrong_string_breaks_fusion() {
    let v = q_vars();
    let xs = vec![LaurentPoly::monomial(&v, &[1, 0], R::from_i64(1)), LaurentPoly::monomial(&v, &[1, 2], R::from_i64(1))];
    let lhs = multi_r_product(2, &xs, &LaurentPoly::monomial(&v, &[0, 1], R::from_i64(1)), &LaurentPoly::monomial(&v, &[0, -1], R::from_i64(1))).unwrap();
    let (_, rhs) = fusion_sides::<R>(2, 2).unwrap();
    assert!(!check_exact_zero(&lhs.sub(&rhs).unwrap()).passed());
}

#[test]
fn ad_commutation() {
    for n in [1, 2, 3] {
        for k in 1..=3 {
            assert!(verify_ad_commutation::<R>(n, k).unwrap().passed());
        }
    }
}

#[test]
fn k_out_of_range() {
    assert!(build_antisymmetrizer::<R>(2, 5).is_err());
    assert!(build_antisymmetrizer::<R>(2, 0).is_err());
}
