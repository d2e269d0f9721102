//! Randomized checks of the coefficient rings and the permutation action.

use num_traits::{One, Zero};
use proptest::prelude::*;
use trigcenter::coeffring::{
    exp_expand, from_fraction, geom_inverse, vars, LaurentFraction, LaurentPoly, SeriesWindow, TruncSeries,
};
use trigcenter::scalar::Field;
use trigcenter::tensoralg::{all_perms, all_reduced_words, perm_action, TensorMatrix};
use trigcenter::Rational;

type P = LaurentPoly<Rational>;
type Q = LaurentFraction<Rational>;
type S = TruncSeries<Rational>;

fn r(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn poly_strategy() -> impl Strategy<Value = P> {
    prop::collection::vec((-2i32..=2, -2i32..=2, -3i64..=3), 1..5).prop_map(|ts| {
        let v = vars(&["x", "q"]);
        P::from_terms(&v, ts.into_iter().map(|(a, b, c)| (vec![a, b], r(c))))
    })
}

fn nonzero_poly() -> impl Strategy<Value = P> {
    poly_strategy().prop_filter("nonzero", |p| !p.is_zero())
}

fn frac_strategy() -> impl Strategy<Value = Q> {
    (poly_strategy(), nonzero_poly()).prop_map(|(a, b)| Q::new(a, b).unwrap())
}

/// Series whose `h⁰` layer has a nonzero lowest term at `u^{s0}`.
fn series_strategy(lo: i64, hi: i64, h: usize) -> impl Strategy<Value = Vec<(i64, usize, i64)>> {
    prop::collection::vec((lo..=hi, 0..=h, -3i64..=3), 0..10)
}

fn build(win: &SeriesWindow, lead: i64, terms: &[(i64, usize, i64)]) -> S {
    let mut t: Vec<(i64, usize, Rational)> = vec![(lead, 0, r(1))];
    t.extend(terms.iter().filter(|(s, l, _)| *l > 0 || *s > lead).map(|(s, l, c)| (*s, *l, r(*c))));
    S::from_terms(win, t)
}

/// Every coefficient known to both series agrees.
fn agree_on_known(a: &S, b: &S) -> std::result::Result<(), String> {
    let h = a.num_layers().max(b.num_layers());
    for l in 0..h {
        let (Some(x), Some(y)) = (a.layer(l), b.layer(l)) else { continue };
        let hi = x.high().min(y.high());
        let lo = x.low().into_iter().chain(y.low()).min().unwrap_or(0);
        for s in lo..=hi.min(lo + 64) {
            let (cx, cy) = (x.coeff(s).unwrap(), y.coeff(s).unwrap());
            if cx != cy {
                return Err(format!("u^{s} h^{l}: {cx} vs {cy}"));
            }
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fraction_field_axioms(a in frac_strategy(), b in frac_strategy(), c in frac_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Q::one());
        }
    }

    #[test]
    fn spectral_shift_roundtrip(p in nonzero_poly(), d in nonzero_poly(), steps in -4i32..=4) {
        let v = vars(&["x", "q"]);
        let a = Q::new(&p + &P::var(&v, "x").unwrap(), d).unwrap();
        let s = a.shift_spectral("x", "q", steps).unwrap();
        prop_assert_eq!(s.shift_spectral("x", "q", -steps).unwrap(), a);
    }

    #[test]
    fn taylor_shifts_compose(terms in series_strategy(-3, 4, 3), c1 in -3i64..=3, c2 in -3i64..=3, lead in -2i64..=1) {
        let win = SeriesWindow::new(-6, 6, 3).unwrap();
        let a = build(&win, lead, &terms);
        let one = a.taylor_shift(&r(c1), 3).taylor_shift(&r(c2), 3);
        let both = a.taylor_shift(&(r(c1) + r(c2)), 3);
        prop_assert!(agree_on_known(&one, &both).is_ok(), "{:?}", agree_on_known(&one, &both));
    }

    #[test]
    fn geometric_inverse_identity(num in -3i64..=3, den in 1i64..=3, h in 1usize..=4) {
        let a = Rational::new(num.into(), den.into());
        let win = SeriesWindow::new(-(h as i64) - 3, 4, h).unwrap();
        let g = geom_inverse(&a, &win).unwrap();
        let one_minus = &S::one() - &exp_expand(&Rational::one(), &a, &win.padded(h as i64 + 2));
        let prod = &g * &one_minus;
        let mut w = win;
        w.u_high = 4;
        prop_assert!(prod.covers(&w));
        prop_assert_eq!(prod.restrict(&w).first_nonzero().map(|(s, l, _)| (s, l)), Some((0, 0)));
        prop_assert_eq!(prod.restrict(&w).terms().len(), 1);
    }

    /// Products and inverses computed on a window agree with the same
    /// operation on a strictly larger window wherever the small result
    /// claims to be known.
    #[test]
    fn window_propagation_matches_larger_window(
        ta in series_strategy(-3, 8, 3),
        tb in series_strategy(-3, 8, 3),
        la in -2i64..=1,
        lb in -2i64..=1,
        cut in 1i64..=4,
    ) {
        let big = SeriesWindow::new(-8, 8, 3).unwrap();
        let small = SeriesWindow::new(-8, cut, 2).unwrap();
        let (a, b) = (build(&big, la, &ta), build(&big, lb, &tb));
        let (sa, sb) = (a.restrict(&small), b.restrict(&small));
        let prod_small = &sa * &sb;
        let prod_big = &a * &b;
        prop_assert!(agree_on_known(&prod_small, &prod_big).is_ok(), "mul {:?}", agree_on_known(&prod_small, &prod_big));
        let inv_small = sa.inv(&small).unwrap();
        let inv_big = a.inv(&big.padded(4)).unwrap();
        prop_assert!(agree_on_known(&inv_small, &inv_big).is_ok(), "inv {:?}", agree_on_known(&inv_small, &inv_big));
        let sum_small = &sa + &sb;
        prop_assert!(agree_on_known(&sum_small, &(&a + &b)).is_ok());
    }

    #[test]
    fn expansion_is_multiplicative(p in nonzero_poly(), k in -3i32..=3, m in nonzero_poly()) {
        let v = vars(&["x", "q"]);
        let den = &P::one().embed(&v).unwrap() - &P::monomial(&v, &[1, k], Rational::one());
        let a = Q::new(p, den).unwrap();
        let b = Q::from_poly(m);
        let win = SeriesWindow::new(-8, 3, 3).unwrap();
        let ab = from_fraction(&(&a * &b), "x", "q", &win).unwrap();
        let prod = &from_fraction(&a, "x", "q", &win).unwrap() * &from_fraction(&b, "x", "q", &win).unwrap();
        prop_assert!(agree_on_known(&ab, &prod).is_ok(), "{:?}", agree_on_known(&ab, &prod));
        prop_assert!(ab.covers(&win));
    }
}

#[test]
fn reduced_words_give_the_same_operator() {
    let v = vars(&["q"]);
    let q = |e: i32| P::monomial(&v, &[e], Rational::one());
    for k in 2..=4 {
        let slots: Vec<usize> = (1..=k).collect();
        for sigma in all_perms(k) {
            let words = all_reduced_words(&sigma);
            let first: TensorMatrix<P> = perm_action(2, &slots, &words[0], &q).unwrap();
            for w in &words[1..] {
                let other = perm_action(2, &slots, w, &q).unwrap();
                assert!(other.sub(&first).unwrap().is_zero(), "σ = {sigma:?}, word {w:?}");
            }
        }
    }
}

#[test]
fn zero_is_absorbing() {
    let a = S::monomial(-1, 1, r(3));
    assert!((&a * &S::zero()).is_exact_zero());
    assert!(Rational::zero().is_zero());
}

#[test]
fn oracle_detects_a_difference() {
    let win = SeriesWindow::new(-4, 4, 2).unwrap();
    let a = build(&win, -1, &[(2, 1, 1)]);
    let b = &a + &S::monomial(3, 2, r(1));
    assert!(agree_on_known(&a, &a).is_ok());
    assert!(agree_on_known(&a, &b).is_err());
}
