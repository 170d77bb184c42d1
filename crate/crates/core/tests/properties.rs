use proptest::prelude::*;

use buchi_core::explorer::{enumerate, search_words_serial};
use buchi_core::families::{
    classify, extends, normalize, p_eval, xi_eval, BuchiSeq, Classification, Classifier, FamilyTables, Side,
};
use buchi_core::maps::{apply_zeta_int, apply_zeta_inv_int, on_surface, to_int_point, TrivialInvolution};
use buchi_core::numkernel::BigInt;

fn big(t: i64) -> BigInt {
    BigInt::from(t)
}

#[test]
fn parallel_search_matches_serial() {
    let serial: Vec<[BigInt; 4]> = search_words_serial(3000).into_iter().map(|p| p.map(BigInt::from)).collect();
    let parallel: Vec<[BigInt; 4]> = enumerate(&big(3000)).unwrap().into_iter().map(BuchiSeq::into_coords).collect();
    assert_eq!(serial, parallel);
    assert!(parallel.contains(&[6, 23, 32, 39].map(BigInt::from)));
}

#[test]
fn search_results_are_nontrivial_increasing() {
    for s in enumerate(&big(2000)).unwrap() {
        assert!(s.is_strictly_increasing() && s.is_positive());
        assert!(on_surface(s.coords()));
        assert!(!matches!(classify(&s), Classification::Trivial { .. }));
    }
}

// Integral ζ-images of P and R points are rare (for P only t in -8..-2), so
// this sweeps instead of sampling.
#[test]
fn integral_zeta_lifts_of_families_are_recognised() {
    let tables = FamilyTables::bundled();
    let mut bases = Vec::new();
    for t in -60i64..60 {
        bases.extend(p_eval(&big(t)).ok().map(BuchiSeq::into_coords));
        for i in 1..=15 {
            bases.extend(tables.r_eval_int(i, &big(t)).ok());
        }
    }
    let classifier = Classifier::default();
    let mut lifted = 0;
    for base in &bases {
        for g in TrivialInvolution::all() {
            let Some(x) = apply_zeta_int(&g.apply(base)).ok().and_then(|q| to_int_point(&q)) else { continue };
            let Some((_, y)) = normalize(&x) else { continue };
            let s = BuchiSeq::new(y).unwrap();
            let c = classifier.classify(&s);
            assert!(!c.is_sporadic(), "{s} classified sporadic");
            assert!(c.verify(s.coords()));
            lifted += 1;
        }
    }
    assert!(lifted > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trivial_involutions_preserve_surface(n in 0usize..6, t in -200i64..200, k in 0usize..32) {
        let g = TrivialInvolution::all()[k];
        let p = xi_eval(n, &big(t));
        prop_assert!(on_surface(&g.apply(p.coords())));
    }

    #[test]
    fn zeta_steps_xi_integrally(n in 0usize..6, t in -100i64..100) {
        let p = xi_eval(n, &big(t));
        let up = apply_zeta_int(p.coords()).ok().and_then(|q| to_int_point(&q));
        prop_assume!(up.is_some());
        let next = xi_eval(n + 1, &big(t));
        prop_assert_eq!(up.as_ref(), Some(next.coords()));
        let back = apply_zeta_inv_int(up.as_ref().unwrap()).ok().and_then(|q| to_int_point(&q));
        prop_assert_eq!(back.as_ref(), Some(p.coords()));
    }

    #[test]
    fn xi_points_classify_as_xi(n in 1usize..5, t in 0i64..500) {
        let s = xi_eval(n, &big(t));
        let c = classify(&s);
        prop_assert_eq!(&c, &Classification::Xi { n, t: big(t) });
        prop_assert!(c.verify(s.coords()));
    }

    #[test]
    fn extension_roots_satisfy_the_next_equation(n in 0usize..4, t in -50i64..50) {
        let s = xi_eval(n, &big(t));
        let [a, b, c, d] = s.coords().clone();
        if let Some(y) = extends(s.coords(), Side::Right) {
            prop_assert_eq!(&c * &c - big(2) * &d * &d + &y * &y, big(2));
        }
        if let Some(y) = extends(s.coords(), Side::Left) {
            prop_assert_eq!(&y * &y - big(2) * &a * &a + &b * &b, big(2));
        }
    }
}
