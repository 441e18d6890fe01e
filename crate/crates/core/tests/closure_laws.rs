mod common;

use common::{arb_structure, arb_with_subsets, corpus};
use osg_core::{Potency, Subset};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn closure_operator_laws((s, a, b, _c) in arb_with_subsets()) {
        let cl = |x: &Subset| s.closure(x).unwrap();
        let prod = |x: &Subset, y: &Subset| s.product(x, y).unwrap();
        prop_assert!(a.is_subset_of(&cl(&a)));
        prop_assert_eq!(cl(&cl(&a)), cl(&a));
        if a.is_subset_of(&b) {
            prop_assert!(cl(&a).is_subset_of(&cl(&b)));
        }
        prop_assert!(cl(&a.intersection(&b)).is_subset_of(&cl(&a).intersection(&cl(&b))));
        prop_assert_eq!(cl(&a.union(&b)), cl(&a).union(&cl(&b)));
        prop_assert!(prod(&cl(&a), &cl(&b)).is_subset_of(&cl(&prod(&a, &b))));
        prop_assert_eq!(cl(&prod(&cl(&a), &cl(&b))), cl(&prod(&a, &b)));
        prop_assert_eq!(cl(&a).is_subset_of(&a), s.is_downward_closed(&a).unwrap());
    }

    #[test]
    fn product_is_associative((s, a, b, c) in arb_with_subsets()) {
        let prod = |x: &Subset, y: &Subset| s.product(x, y).unwrap();
        prop_assert_eq!(prod(&prod(&a, &b), &c), prod(&a, &prod(&b, &c)));
        prop_assert!(prod(&a, &s.empty()).is_empty());
        prop_assert!(s.closure(&s.empty()).unwrap().is_empty());
    }

    #[test]
    fn powers_follow_the_recurrence(s in arb_structure()) {
        let universe = s.universe();
        let mut expected = universe;
        for m in Potency::all() {
            let p = s.universe_power(m);
            prop_assert_eq!(p, expected);
            prop_assert!(p.is_subset_of(&universe));
            let next = s.product(&p, &universe).unwrap();
            // S^(k+1) is always inside S^k: x1..x(k+1) = (x1 x2) x3 .. x(k+1).
            prop_assert!(next.is_subset_of(&p));
            expected = next;
        }
    }
}

#[test]
fn closure_laws_exhaustive_up_to_order_three() {
    for s in corpus(3) {
        let all: Vec<Subset> = s.all_subsets().collect();
        for a in &all {
            let ca = s.closure(a).unwrap();
            assert!(a.is_subset_of(&ca));
            assert_eq!(s.closure(&ca).unwrap(), ca);
            for b in &all {
                let cb = s.closure(b).unwrap();
                let ab = s.product(a, b).unwrap();
                let cab = s.closure(&ab).unwrap();
                assert_eq!(s.closure(&a.union(b)).unwrap(), ca.union(&cb));
                assert!(s.product(&ca, &cb).unwrap().is_subset_of(&cab));
                assert_eq!(s.closure(&s.product(&ca, &cb).unwrap()).unwrap(), cab);
            }
        }
    }
}
