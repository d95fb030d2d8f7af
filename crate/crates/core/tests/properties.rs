mod common;

use std::sync::OnceLock;

use common::*;
use proptest::prelude::*;
use qadj_core::rational::{frac, int};
use qadj_core::*;

fn graphs() -> &'static Vec<(&'static str, ResolutionGraph)> {
    static G: OnceLock<Vec<(&'static str, ResolutionGraph)>> = OnceLock::new();
    G.get_or_init(fixtures)
}

fn fraction() -> impl Strategy<Value = Rational> {
    (1i64..=30).prop_flat_map(|n| (1..=n).prop_map(move |p| frac(p, n)))
}

fn point(r: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(fraction(), r)
}

fn fixture_and_point() -> impl Strategy<Value = (usize, Vec<Rational>)> {
    (0..graphs().len()).prop_flat_map(|i| (Just(i), point(graphs()[i].1.r())))
}

fn polynomial() -> impl Strategy<Value = BivariatePolynomial> {
    prop::collection::vec((-3i64..=3, 0u32..4, 0u32..4), 1..4).prop_map(|terms| {
        let mut p =
            BivariatePolynomial::from_terms(terms.into_iter().map(|(c, i, j)| (Monomial { x: i, y: j }, int(c))));
        if p.is_zero() {
            p = BivariatePolynomial::x();
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ideal_chain_holds((i, xi) in fixture_and_point()) {
        let r = check_ideal_chain(&graphs()[i].1, &xi);
        prop_assert!(r.is_ok(), "{}: {}", graphs()[i].0, r.unwrap_err());
    }

    #[test]
    fn truncation_is_stable((i, xi) in fixture_and_point()) {
        let r = check_truncation_stability(&graphs()[i].1, &xi);
        prop_assert!(r.is_ok(), "{}: {}", graphs()[i].0, r.unwrap_err());
    }

    #[test]
    fn valuations_are_additive(i in 0usize..5, k in 0usize..16, f in polynomial(), h in polynomial()) {
        let g = &graphs()[i].1;
        let id = g.curves()[k % g.curves().len()].id;
        let r = check_additivity(g, id, &f, &h);
        prop_assert!(r.is_ok(), "{}: {}", graphs()[i].0, r.unwrap_err());
    }

    #[test]
    fn multiplier_ideals_shrink(num in 0i64..=12) {
        let g = &graphs()[0].1;
        let lo = multiplier_ideal(g, &[frac(num, 12)]).unwrap();
        let hi = multiplier_ideal(g, &[frac(num + 1, 12)]).unwrap();
        let n = lo.space().order().max(hi.space().order());
        prop_assert!(lo.extend_ideal(n).unwrap().contains(&hi.extend_ideal(n).unwrap()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn extra_blow_up_changes_nothing(which in 0usize..4, k in 0usize..8, s in -3i64..=3) {
        let germs: [&[&str]; 4] = [&[CUSP], &["x^3+y^4"], &["y", "y-x^2"], &LINES[..3]];
        let n = resolve(germs[which]).curves().len();
        let r = check_resolution_independence(germs[which], k % n + 1, s);
        prop_assert!(r.is_ok(), "{:?}: {}", germs[which], r.unwrap_err());
        prop_assume!(r.unwrap());
    }
}

#[test]
fn alexander_divisibility_on_corpus() {
    for f in SINGLE_BRANCH
        .iter()
        .chain(["(y^2-x^3)^2-4*x^5*y-x^7", "(x^2+y^3)^2+x^5*y"].iter())
    {
        let g = resolve(&[f]);
        check_divisibility(&g).unwrap_or_else(|e| panic!("{f}: {e}"));
    }
}

#[test]
fn round_trip_on_fixture_faces() {
    for (name, g) in graphs() {
        let faces = enumerate_faces(g, &FaceOptions { r_limit: 5 }).unwrap();
        assert!(!faces.is_empty() || g.r() == 1, "{name}");
        for f in &faces {
            check_round_trip(g, f).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}

#[test]
fn pullback_grid_small() {
    for (name, g) in graphs().iter().take(4) {
        let n = check_pullback_grid(g, 4, 3).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(n > 0);
    }
}
