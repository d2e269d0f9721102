use num_traits::One;

use super::*;
use crate::coeffring::{vars, LaurentFraction, LaurentPoly, SeriesWindow, TruncSeries};
use crate::scalar::{Field, Rational};
use crate::tensoralg::TensorMatrix;

type R = Rational;

fn small() -> SeriesWindow {
    SeriesWindow::new(-5, 3, 3).unwrap()
}

#[test]
fn n1_two_parameter_matrix() {
    let m = build_r2p::<R>(1).unwrap();
    let v = vars(&["x_u", "x_v", "q"]);
    let expect = LaurentPoly::from_terms(&v, [(vec![1, 0, -1], R::one()), (vec![0, 1, 1], -R::one())]);
    assert!(m.get(0, 0).eq_frac(&LaurentFraction::from_poly(expect)));
}

#[test]
fn scalar_multiple_relation() {
    let n = 2;
    let v = vars(&["x_u", "x_v", "q"]);
    let mono = |e: [i32; 3]| LaurentFraction::from_poly(LaurentPoly::monomial(&v, &e, R::one()));
    let x = mono([1, -1, 0]);
    let q = mono([0, 0, 1]);
    let r1 = r1p_with(n, &x, &q).unwrap();
    let one = LaurentFraction::one();
    // -q x_v (1 - x q^{-2})
    let factor = &(&(&q * &mono([0, 1, 0])) * &(&one - &(&x * &mono([0, 0, -2])))) * &LaurentFraction::constant(-R::one());
    let r2 = build_r2p::<R>(n).unwrap();
    let scaled = r1.scale(&factor);
    for i in 0..4 {
        for j in 0..4 {
            assert!(r2.get(i, j).eq_frac(scaled.get(i, j)), "entry {i},{j}");
        }
    }
}

#[test]
fn h0_layers_are_identity() {
    let win = small();
    let b = RMatrixBundle::<R>::new(2, &win).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let l0 = b.r_norm.get(i, j).restrict(&SeriesWindow { h_high: 0, ..win });
            let want = if i == j { TruncSeries::one() } else { TruncSeries::zero() };
            assert!(crate::normalizer::check_equal(&l0, &want, &SeriesWindow { h_high: 0, ..win }).passed());
        }
    }
}

#[test]
fn unitarity_and_negative_control() {
    let win = small();
    for n in [1, 2, 3] {
        let b = RMatrixBundle::<R>::new(n, &win).unwrap();
        let out = verify_unitarity(&b.r_norm, &win).unwrap();
        assert!(out.passed(), "n={n}: {out}");
    }
    // R̄ alone is already unitary; only g(u)g(-u) = 1 is at stake
    let b = RMatrixBundle::<R>::new(2, &win).unwrap();
    assert!(verify_unitarity(&b.r_bar, &win).unwrap().passed());
    let bumped = &b.g.g + &TruncSeries::monomial(0, 1, R::one());
    let bad = b.r_bar.map(|e| if e.is_exact_zero() { e.clone() } else { &bumped * e });
    let out = verify_unitarity(&bad, &win).unwrap();
    assert!(!out.passed());
    assert_eq!(out.witness.unwrap().l, Some(1));
}

#[test]
fn crossing_and_negative_control() {
    let win = small();
    for n in [1, 2] {
        let b = RMatrixBundle::<R>::new(n, &win).unwrap();
        let out = verify_crossing(&b.r_norm, n, &b.work, &win).unwrap();
        assert!(out.passed(), "n={n}: {out}");
    }
    let b = RMatrixBundle::<R>::new(2, &win).unwrap();
    let (a, _) = crossing_residuals(&b.r_norm, 2, &b.work, false).unwrap();
    let out = check_matrix_vanishes(&a, &win);
    assert!(!out.passed());
    let w = out.witness.unwrap();
    assert_eq!((w.s, w.l), (Some(-1), Some(2)));
}

#[test]
fn yang_baxter() {
    for n in [1, 2, 3] {
        assert!(verify_ybe::<R>(n).unwrap().passed());
    }
}

#[test]
fn wrong_r_matrix_breaks_ybe() {
    let v = vars(&["a"]);
    let p = TensorMatrix::from_fn(2, &[0, 1], |i, j| {
        LaurentPoly::<R>::constant(R::from_i64((i * 4 + j) as i64 % 3))
    })
    .unwrap();
    let _ = v;
    let m = p.relabel(&[1, 2]).unwrap().embed(&[1, 2, 3]).unwrap();
    let k = p.relabel(&[2, 3]).unwrap().embed(&[1, 2, 3]).unwrap();
    let res = m.mul(&k).unwrap().sub(&k.mul(&m).unwrap()).unwrap();
    assert!(!check_exact_zero(&res).passed());
}

#[test]
fn grading_keeps_ties() {
    let win = SeriesWindow::new(0, 4, 2).unwrap();
    let a = TruncSeries::from_terms(
        &win,
        [(1, 0, R::from_i64(2)), (0, 1, R::from_i64(3)), (2, 0, R::from_i64(5))],
    );
    let top = a.highest_component().unwrap();
    let want = TruncSeries::from_terms(&win, [(1, 0, R::from_i64(2)), (0, 1, R::from_i64(3))]);
    assert!(crate::normalizer::check_equal(&top, &want, &win).passed());
    assert!(TruncSeries::<R>::zero().highest_component().is_err());
}

#[test]
fn rational_limit() {
    let win = small();
    for n in [1, 2, 3] {
        let b = RMatrixBundle::<R>::new(n, &win).unwrap();
        let out = verify_rational_limit(&b).unwrap();
        assert!(out.passed(), "n={n}: {out}");
    }
}


