use super::*;
use crate::coeffring::SeriesWindow;
use crate::scalar::{Field, Rational};

fn desk() -> SeriesWindow {
    SeriesWindow::new(-8, 6, 6).unwrap()
}

fn small() -> SeriesWindow {
    SeriesWindow::new(-4, 3, 3).unwrap()
}

#[test]
fn froute_matches_layer_recursion_n2() {
    let win = small();
    let f = solve_g_froute::<Rational>(2, &win).unwrap();
    let a = solve_g_appendix_a::<Rational>(2, &win).unwrap();
    let out = check_equal(&f.g, &a.series, &win);
    assert!(out.passed(), "{out}");
}

#[test]
fn n1_normalizer_is_one() {
    let win = small();
    let f = solve_g_froute::<Rational>(1, &win).unwrap();
    assert!(f.g_in_window().terms().iter().all(|(s, l, _)| *s == 0 && *l == 0));
    assert!(verify_g_relations(&f.g, 1, &win).passed());
}

#[test]
fn relations_hold_for_n2_n3() {
    let win = small();
    for n in [2, 3] {
        let f = solve_g_froute::<Rational>(n, &win).unwrap();
        let out = verify_g_relations(&f.g, n, &win);
        assert!(out.passed(), "n={n}: {out}");
        assert!(check_display(&f.g, n, &win).unwrap().passed());
    }
}

#[test]
fn perturbed_g_fails_unitarity() {
    let win = small();
    let f = solve_g_froute::<Rational>(2, &win).unwrap();
    let bumped = &f.g + &crate::coeffring::TruncSeries::monomial(1, 2, Rational::from_ratio(1, 7));
    assert!(!check_unitarity_g(&bumped, &win).passed());
}

#[test]
fn highest_component_is_rational_limit() {
    let win = small();
    for n in [2, 3] {
        let f = solve_g_froute::<Rational>(n, &win).unwrap();
        let out = check_highest_component(&f.g, &f.gbar_rat, &win);
        assert!(out.passed(), "n={n}: {out}");
    }
}

#[test]
fn desk_window_cross_validation() {
    let win = desk();
    for n in [2, 3] {
        let f = solve_g_froute::<Rational>(n, &win).unwrap();
        let a = solve_g_appendix_a::<Rational>(n, &win).unwrap();
        assert!(check_equal(&f.g, &a.series, &win).passed());
    }
}
