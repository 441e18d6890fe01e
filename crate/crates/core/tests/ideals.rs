mod common;

use common::{arb_structure, corpus, potencies};
use osg_core::enumeration::{count_ideals, enumerate_downward_closed, enumerate_ideals};
use osg_core::ideals::{
    is_ideal, is_ideal_with, is_m_regular, is_m_regular_element, principal_set, simplicity,
    simplicity_with,
};
use osg_core::{
    Conventions, IdealKind, OrderedSemigroup, Potency, PrincipalPattern, SimplicityKind, Subset,
};
use proptest::prelude::*;

/// The definitions, written out with nothing but the public set algebra.
fn oracle(s: &OrderedSemigroup, b: &Subset, kind: IdealKind, m: Potency) -> bool {
    let sm = s.universe_power(m);
    let p = |x: &Subset, y: &Subset| s.product(x, y).unwrap();
    let cl = |x: &Subset| s.closure(x).unwrap();
    let down = cl(b) == *b;
    let semi = p(b, b).is_subset_of(b);
    let left = p(&sm, b).is_subset_of(b);
    let right = p(b, &sm).is_subset_of(b);
    let ok = match kind {
        IdealKind::MLeft => semi && left,
        IdealKind::MRight => semi && right,
        IdealKind::MTwoSided => semi && left && right,
        IdealKind::MQuasi => semi && cl(&p(&sm, b)).intersection(&cl(&p(b, &sm))).is_subset_of(b),
        IdealKind::MBi => semi && p(&p(b, &sm), b).is_subset_of(b),
        IdealKind::MInterior => semi && p(&p(&sm, b), &sm).is_subset_of(b),
        IdealKind::MBiInterior => cl(&p(&p(b, &sm), b))
            .intersection(&cl(&p(&p(&sm, b), &sm)))
            .is_subset_of(b),
    };
    !b.is_empty() && down && ok
}

fn brute(s: &OrderedSemigroup, kind: IdealKind, m: Potency) -> Vec<Subset> {
    s.all_subsets()
        .filter(|b| !b.is_empty() && oracle(s, b, kind, m))
        .collect()
}

#[test]
fn enumeration_matches_brute_force_up_to_order_three() {
    for s in corpus(3) {
        for m in potencies(3) {
            for kind in IdealKind::ALL {
                let list = enumerate_ideals(&s, kind, m);
                assert_eq!(list.subsets, brute(&s, kind, m), "{} {kind} {m}", s.name());
                assert_eq!(count_ideals(&s, kind, m), list.len());
            }
        }
    }
}

#[test]
fn predicate_matches_definition_up_to_order_three() {
    for s in corpus(3) {
        for m in potencies(3) {
            for kind in IdealKind::ALL {
                for b in s.all_subsets().filter(|b| !b.is_empty()) {
                    assert_eq!(is_ideal(&s, &b, kind, m).unwrap(), oracle(&s, &b, kind, m));
                }
            }
        }
    }
}

#[test]
fn regularity_oracle_up_to_order_three() {
    for s in corpus(3) {
        for m in potencies(3) {
            let sm = s.universe_power(m);
            for a in 0..s.size() {
                let by_def = sm.iter().any(|x| s.leq(a, s.mul(s.mul(a, x), a)));
                assert_eq!(is_m_regular_element(&s, a, m).unwrap(), by_def);
            }
        }
    }
}

#[test]
fn simplicity_matches_brute_force_up_to_order_three() {
    let only_universe = |s: &OrderedSemigroup, k, m| brute(s, k, m).iter().all(Subset::is_full);
    for s in corpus(3) {
        for m in potencies(3) {
            let l = only_universe(&s, IdealKind::MLeft, m);
            let r = only_universe(&s, IdealKind::MRight, m);
            assert_eq!(simplicity(&s, SimplicityKind::LeftSimple, m), l);
            assert_eq!(simplicity(&s, SimplicityKind::RightSimple, m), r);
            assert_eq!(simplicity(&s, SimplicityKind::Simple, m), l && r);
            assert_eq!(
                simplicity(&s, SimplicityKind::BiInteriorSimple, m),
                only_universe(&s, IdealKind::MBiInterior, m)
            );
        }
    }
}

#[test]
fn conventions_only_narrow() {
    let strict = Conventions {
        strict_bi_interior: true,
        ..Conventions::default()
    };
    let exempt = Conventions {
        exempt_singletons: true,
        ..Conventions::default()
    };
    for s in corpus(3) {
        for m in potencies(2) {
            for b in s.all_subsets().filter(|b| !b.is_empty()) {
                let loose = is_ideal(&s, &b, IdealKind::MBiInterior, m).unwrap();
                let tight = is_ideal_with(&s, &b, IdealKind::MBiInterior, m, &strict).unwrap();
                assert_eq!(tight, loose && s.is_subsemigroup(&b).unwrap());
            }
            for k in [SimplicityKind::LeftSimple, SimplicityKind::RightSimple] {
                if simplicity(&s, k, m) {
                    assert!(simplicity_with(&s, k, m, &exempt));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn universe_is_every_kind(s in arb_structure(), m in 1u32..=8) {
        let m = Potency::new(m).unwrap();
        for kind in IdealKind::ALL {
            prop_assert!(is_ideal(&s, &s.universe(), kind, m).unwrap());
        }
    }

    #[test]
    fn every_kind_implies_bi_interior(s in arb_structure(), m in 1u32..=3) {
        let m = Potency::new(m).unwrap();
        let bis = enumerate_ideals(&s, IdealKind::MBiInterior, m).subsets;
        for kind in IdealKind::ALL {
            for b in enumerate_ideals(&s, kind, m).subsets {
                prop_assert!(bis.contains(&b), "{kind} {b}");
                prop_assert!(s.is_downward_closed(&b).unwrap());
            }
        }
    }

    #[test]
    fn bi_interior_closure_properties(s in arb_structure(), m in 1u32..=3) {
        let m = Potency::new(m).unwrap();
        let bi = |b: &Subset| !b.is_empty() && is_ideal(&s, b, IdealKind::MBiInterior, m).unwrap();
        let bis = enumerate_ideals(&s, IdealKind::MBiInterior, m).subsets;
        let rights = enumerate_ideals(&s, IdealKind::MRight, m).subsets;
        let u = s.universe();
        for a in bis.iter().take(24) {
            prop_assert!(bi(&s.closure(&s.product(a, &u).unwrap()).unwrap()));
            prop_assert!(bi(&s.closure(&s.product(&u, a).unwrap()).unwrap()));
            for b in bis.iter().take(24) {
                let x = a.intersection(b);
                prop_assert!(x.is_empty() || bi(&x));
            }
            for t in rights.iter().take(24) {
                let x = a.intersection(t);
                prop_assert!(x.is_empty() || bi(&x));
            }
        }
    }

    #[test]
    fn regularity_formulations_agree(s in arb_structure(), m in 1u32..=8) {
        let m = Potency::new(m).unwrap();
        let by_elements = (0..s.size()).all(|a| is_m_regular_element(&s, a, m).unwrap());
        let by_principal = (0..s.size())
            .all(|a| principal_set(&s, a, PrincipalPattern::ASmA, m).unwrap().contains(a));
        prop_assert_eq!(is_m_regular(&s, m), by_elements);
        prop_assert_eq!(by_elements, by_principal);
    }

    #[test]
    fn downward_closed_sets_are_exactly_the_fixed_points(s in arb_structure()) {
        prop_assume!(s.size() <= 8);
        let walked = enumerate_downward_closed(&s);
        let brute: Vec<Subset> = s
            .all_subsets()
            .filter(|b| !b.is_empty() && s.is_downward_closed(b).unwrap())
            .collect();
        prop_assert_eq!(walked, brute);
    }
}
