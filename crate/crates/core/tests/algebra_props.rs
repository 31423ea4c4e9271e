use fbc_core::det::{bareiss_det, cofactor_det};
use fbc_core::laurent::GroupElement;
use fbc_core::{CohomClass, LaurentPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

const RANK: usize = 2;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i64..=3, -3i64..=3), -4i64..=4), 0..5).prop_map(|terms| {
        LaurentPoly::from_terms(RANK, terms.into_iter().map(|((a, b), c)| (vec![a, b], c)))
    })
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn class() -> impl Strategy<Value = CohomClass> {
    (-4i64..=4, -4i64..=4).prop_map(|(a, b)| CohomClass(vec![a, b]))
}

fn square(max: usize) -> impl Strategy<Value = Vec<Vec<LaurentPoly>>> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(poly(), n), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p - &p, LaurentPoly::zero(RANK));
        prop_assert_eq!(&p * &LaurentPoly::one(RANK), p.clone());
    }

    #[test]
    fn no_zero_coefficients_stored(p in poly(), q in poly()) {
        let prod = &p * &q;
        prop_assert!(prod.terms().all(|(_, c)| c != &BigInt::from(0)));
    }

    #[test]
    fn bareiss_matches_cofactor(m in square(4)) {
        let one = LaurentPoly::one(RANK);
        prop_assert_eq!(bareiss_det(m.clone(), one.clone()).unwrap(), cofactor_det(&m, &one).unwrap());
    }

    #[test]
    fn specialization_is_a_homomorphism(p in poly(), q in poly(), u in class()) {
        prop_assert_eq!((&p * &q).specialize(&u), &p.specialize(&u) * &q.specialize(&u));
    }

    #[test]
    fn unit_normal_form_ignores_units(p in nonzero_poly(), a in -5i64..=5, b in -5i64..=5, neg in any::<bool>()) {
        let sign = if neg { -1 } else { 1 };
        let unit = LaurentPoly::monomial(GroupElement(vec![a, b]), sign);
        let moved = &unit * &p;
        prop_assert_eq!(moved.unit_normal_form().unwrap(), p.unit_normal_form().unwrap());
        prop_assert!(moved.unit_equivalent(&p));
        let nf = p.unit_normal_form().unwrap();
        prop_assert_eq!(nf.unit_normal_form().unwrap(), nf);
    }

    #[test]
    fn involution_is_multiplicative(p in poly(), q in poly(), e0 in 0i64..2, e1 in 0i64..2) {
        let eps = CohomClass(vec![e0, e1]);
        prop_assert_eq!((&p * &q).apply_involution(&eps), &p.apply_involution(&eps) * &q.apply_involution(&eps));
        prop_assert_eq!(p.apply_involution(&eps).apply_involution(&eps), p.clone());
    }

    #[test]
    fn exact_division_recovers_factor(p in poly(), q in nonzero_poly()) {
        prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
    }

    #[test]
    fn mod2_equivalence_is_coarser(p in nonzero_poly(), a in -3i64..=3, b in -3i64..=3) {
        let shifted = p.shift(&GroupElement(vec![a, b]));
        let flipped = -&shifted;
        prop_assert!(p.mod2_equivalent(&flipped));
    }
}
