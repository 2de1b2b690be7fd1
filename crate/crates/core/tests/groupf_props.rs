mod common;

use proptest::prelude::*;

use common::{fmap, probes, tlike, word};
use thompson_core::groupf::{h1_matrix_analytic, rev_matrix, twisted_conjugate};
use thompson_core::{
    ab, apply_aut, conj_by_tlike, h1_matrix, is_derived_element, project_class, rev, verify_shift_lemma, AbPair,
    AutFactor, AutWord, FMap, IntMatrix,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn ab_is_a_homomorphism(a in any::<u64>(), b in any::<u64>()) {
        let (f, h) = (fmap(a), fmap(b));
        prop_assert_eq!(ab(&f.compose(&h)), ab(&f) + ab(&h));
        let inv = ab(&f.inverse());
        prop_assert_eq!(inv, AbPair::new(-ab(&f).l, -ab(&f).r));
        let c = FMap::commutator(&f, &h);
        prop_assert!(is_derived_element(&c));
    }

    #[test]
    fn rev_is_an_involutive_automorphism(a in any::<u64>(), b in any::<u64>()) {
        let (f, h) = (fmap(a), fmap(b));
        prop_assert_eq!(rev(&f.compose(&h)), rev(&f).compose(&rev(&h)));
        prop_assert_eq!(rev(&rev(&f)), f.clone());
        let (l, r) = f.translational_parts();
        prop_assert_eq!(ab(&rev(&f)), AbPair::new(-r, -l));
    }

    #[test]
    fn tlike_conjugation_is_an_automorphism(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (f, h, g) = (fmap(a), fmap(b), tlike(c));
        let cf = conj_by_tlike(&f, &g).unwrap();
        let ch = conj_by_tlike(&h, &g).unwrap();
        prop_assert_eq!(conj_by_tlike(&f.compose(&h), &g).unwrap(), cf.compose(&ch));
        prop_assert_eq!(conj_by_tlike(&f.inverse(), &g).unwrap(), cf.inverse());
        prop_assert_eq!(cf.translational_parts(), f.translational_parts());
    }

    #[test]
    fn conjugation_matches_threefold_oracle(a in any::<u64>(), c in any::<u64>()) {
        let (f, g) = (fmap(a), tlike(c));
        let k = conj_by_tlike(&f, &g).unwrap();
        let ginv = g.inverse();
        for x in probes(a ^ c, 50) {
            prop_assert_eq!(k.eval(&x), g.eval(&f.eval(&ginv.eval(&x))));
        }
    }

    #[test]
    fn conjugation_by_embedded_f_is_inner(a in any::<u64>(), b in any::<u64>()) {
        let (f, h) = (fmap(a), fmap(b));
        let expect = h.compose(&f).compose(&h.inverse());
        prop_assert_eq!(conj_by_tlike(&f, &thompson_core::TLikeMap::from_f(&h)).unwrap(), expect);
    }

    #[test]
    fn h1_is_multiplicative(a in any::<u64>(), b in any::<u64>()) {
        let (p, q) = (word(a, 3), word(b, 3));
        let mp = h1_matrix(&p).unwrap();
        let mq = h1_matrix(&q).unwrap();
        prop_assert_eq!(h1_matrix(&p.then(&q)).unwrap(), &mq * &mp);
        prop_assert!(mp == IntMatrix::identity(2) || mp == rev_matrix());
    }

    #[test]
    fn apply_aut_is_a_homomorphism(a in any::<u64>(), b in any::<u64>(), w in any::<u64>()) {
        let (f, h, phi) = (fmap(a), fmap(b), word(w, 3));
        let lhs = apply_aut(&phi, &f.compose(&h)).unwrap();
        let rhs = apply_aut(&phi, &f).unwrap().compose(&apply_aut(&phi, &h).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn shift_lemma_holds(g in any::<u64>(), k in any::<u64>(), x in any::<u64>(), w in any::<u64>()) {
        let phi = word(w, 3);
        prop_assert!(verify_shift_lemma(&fmap(g), &fmap(k), &fmap(x), &phi).unwrap());
    }

    #[test]
    fn projection_is_a_class_invariant(a in any::<u64>(), b in any::<u64>(), w in any::<u64>()) {
        let (f, h, phi) = (fmap(a), fmap(b), word(w, 2));
        let moved = twisted_conjugate(&h, &f, &phi).unwrap();
        prop_assert_eq!(project_class(&moved, &phi).unwrap(), project_class(&f, &phi).unwrap());
    }
}

#[test]
fn rev_then_conjugation_on_h1() {
    let f = FMap::slope_two_generator();
    for seed in 0..50 {
        let phi = AutWord::new(vec![AutFactor::Rev, AutFactor::ConjBy(tlike(seed))]);
        let (l, r) = f.translational_parts();
        assert_eq!(ab(&apply_aut(&phi, &f).unwrap()), AbPair::new(-r, -l));
        assert_eq!(h1_matrix_analytic(&phi), rev_matrix());
    }
}
