use super::*;
use crate::coeffring::SeriesWindow;
use crate::scalar::{Field, Rational};

fn win() -> SeriesWindow {
    SeriesWindow::new(-4, 3, 4).unwrap()
}

fn rep(n: usize, aux: AuxKind) -> TruncRep<Rational> {
    TruncRep::new(n, aux, &win()).unwrap()
}

fn lvl(c: i64) -> Rational {
    Rational::from_i64(c)
}

#[test]
fn series_ids_parse() {
    assert_eq!("phi2".parse::<SeriesId>().unwrap(), SeriesId::Phi(2));
    assert_eq!("theta1".parse::<SeriesId>().unwrap(), SeriesId::Theta(1));
    assert_eq!("qdet".parse::<SeriesId>().unwrap(), SeriesId::Qdet);
    assert!("psi1".parse::<SeriesId>().is_err());
    assert_eq!(SeriesId::parse("theta", 3).unwrap(), SeriesId::Theta(3));
}

#[test]
fn theta_zero_is_n() {
    let r = rep(2, AuxKind::Single);
    let t = theta(&r, 0).unwrap();
    assert_eq!(t.get(0, 0).as_constant(), Some(lvl(2)));
    assert!(t.get(0, 1).is_exact_zero());
}

#[test]
fn n1_series_agree() {
    let r = rep(1, AuxKind::Single);
    let phi = series_value(&r, SeriesId::Phi(1)).unwrap();
    let th = series_value(&r, SeriesId::Theta(1)).unwrap();
    let qd = series_value(&r, SeriesId::Qdet).unwrap();
    let w = r.window;
    assert!(phi.get(0, 0).difference_witness(th.get(0, 0)).is_none());
    assert!(phi.get(0, 0).restrict(&w).difference_witness(&qd.get(0, 0).restrict(&w)).is_none());
}

#[test]
fn letter_is_one_minus_h() {
    let r = rep(2, AuxKind::Single);
    let l = r.letter(1, &lvl(0)).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let layer = l.get(i, j).layer(0).unwrap();
            let c = layer.coeff_or_zero(0);
            assert_eq!(c, if i == j { lvl(1) } else { lvl(0) });
            assert!(layer.terms().all(|(s, _)| s == 0));
        }
    }
}

#[test]
fn centrality_at_critical_level() {
    let r = rep(2, AuxKind::Single);
    for id in [SeriesId::Phi(1), SeriesId::Phi(2), SeriesId::Theta(1), SeriesId::Theta(2)] {
        let out = verify_centrality(&r, id, &lvl(-2)).unwrap();
        assert!(out.passed(), "{out}");
    }
}

#[test]
fn phi1_not_central_at_level_zero() {
    let r = rep(2, AuxKind::Single);
    let out = verify_centrality(&r, SeriesId::Phi(1), &lvl(0)).unwrap();
    assert!(!out.passed());
    assert_eq!(out.witness.unwrap().l, Some(3));
}

#[test]
fn qdet_central_at_both_levels() {
    let r = rep(2, AuxKind::Single);
    for c in [-2, 0] {
        let out = verify_centrality(&r, SeriesId::Qdet, &lvl(c)).unwrap();
        assert!(out.passed(), "c = {c}: {out}");
    }
}

#[test]
fn empty_word_l0_is_identity() {
    let r = rep(2, AuxKind::Single);
    let f = l0_factors(&r, 1, &lvl(0)).unwrap();
    let p = f.left.mul(&f.right).unwrap();
    let out = crate::rmatrix::check_matrix_vanishes(
        &p.sub(&crate::tensoralg::TensorMatrix::identity(2, &[0, 1]).unwrap()).unwrap(),
        &r.window,
    );
    assert!(out.passed(), "{out}");
}

#[test]
fn thetas_commute() {
    let r = rep(2, AuxKind::Pair);
    let out = verify_pairwise_commute(&r).unwrap();
    assert!(out.passed(), "{out}");
}

#[test]
fn commutator_detects_noncommuting_matrices() {
    let r = rep(2, AuxKind::Single);
    let l = r.letter(1, &lvl(0)).unwrap();
    let block = |i: usize, j: usize| {
        crate::tensoralg::TensorMatrix::from_fn(2, &[AUX], |p, q| l.get(i * 2 + p, j * 2 + q).clone()).unwrap()
    };
    let (a, b) = (block(0, 1), block(1, 0));
    let out = check_bi_vanishes(&commutator(&a, &b), &r.window).unwrap();
    assert!(!out.passed());
}

#[test]
fn theta_h_valuation() {
    let r = rep(2, AuxKind::Single);
    for m in 0..=2 {
        let out = verify_h_valuation(&r, m).unwrap();
        assert!(out.passed(), "m = {m}: {out}");
    }
}

#[test]
fn theta_one_alone_is_not_divisible_by_h() {
    let r = rep(2, AuxKind::Single);
    let t = theta(&r, 1).unwrap();
    assert!(low_h_witness(&t, 1, &r.window).is_some());
}

#[test]
fn classical_limits() {
    let r = rep(2, AuxKind::Single);
    for m in 0..=2 {
        let out = verify_theta_classical(&r, m).unwrap();
        assert!(out.passed(), "m = {m}: {out}");
    }
    let out = verify_qdet_classical(&r).unwrap();
    assert!(out.passed(), "{out}");
}

#[test]
fn exact_relations() {
    for n in 1..=3 {
        assert!(verify_rtt_exact::<Rational>(n).unwrap().passed());
    }
    for k in 1..=3 {
        assert!(verify_at_exact::<Rational>(2, k).unwrap().passed(), "k = {k}");
    }
    assert!(verify_at_exact::<Rational>(3, 2).unwrap().passed());
    for k in 2..=3 {
        assert!(verify_comm1_exact::<Rational>(2, k).unwrap().passed(), "k = {k}");
    }
}

#[test]
fn reversed_word_breaks_at_relation() {
    let rep = ExactRep::<Rational>::new(2, &["x"]);
    let x = rep.spectral("x", 0).unwrap();
    let y = rep.spectral("x", 2).unwrap();
    let l = rep.word(&[1, 2], &[x.clone(), y.clone()]).unwrap();
    let lr = rep.word(&[2, 1], &[y, x]).unwrap();
    let r = rep.r_bar(1, 2, &rep.spectral("x", 0).unwrap(), &rep.spectral("x", 0).unwrap()).unwrap();
    let r = r.embed(&[1, 2, AUX]).unwrap();
    let d = r.mul(&l).unwrap().sub(&lr.mul(&r).unwrap()).unwrap();
    assert!(!crate::rmatrix::check_exact_zero(&d).passed());
}

