mod common;

use std::collections::HashMap;

use centaut::group::{
    center, commutator_subgroup_exhaustive, realize, subgroup_closure, FiniteGroup, RealizedGroup,
    Subgroup,
};
use centaut::invariants::{
    abelian_type, agemo1, derived_subgroup, frattini, frattini_by_maximal_subgroups,
    has_abelian_direct_factor, is_purely_nonabelian, is_regular, lower_central_series, omega1,
    rank, regular_power_lemma_check, upper_central_series, PureStatus,
};
use centaut::pcp::{parse_presentation, PcPresentation};
use centaut::Error;
use fixedbitset::FixedBitSet;
use proptest::prelude::*;

use common::{catalog_group, group, HEISENBERG, P3_CATALOG};

fn abelian(factors: &[u64]) -> RealizedGroup {
    realize(&PcPresentation::abelian("a", 3, factors).unwrap()).unwrap()
}

#[test]
fn lower_series_examples() {
    assert_eq!(lower_central_series(&abelian(&[9, 3])).class(), 1);
    let h = group(HEISENBERG);
    let lower = lower_central_series(&h);
    assert_eq!(lower.class(), 2);
    assert_eq!(lower.term(2).unwrap().order(), 3);
    assert_eq!(lower_central_series(catalog_group("phi8_32_p3")).class(), 3);
}

#[test]
fn upper_series_examples() {
    let a = abelian(&[9]);
    assert_eq!(upper_central_series(&a).term(1).unwrap().order(), 9);
    let h = group(HEISENBERG);
    let upper = upper_central_series(&h);
    assert_eq!(upper.orders(), vec![1, 3, 27]);
    let w = upper_central_series(catalog_group("c3_wr_c3"));
    assert_eq!(w.term(2).unwrap().order() / w.term(1).unwrap().order(), 3);
}

#[test]
fn series_lengths_agree() {
    for name in P3_CATALOG {
        let g = catalog_group(name);
        let (lower, upper) = (lower_central_series(g), upper_central_series(g));
        assert_eq!(lower.class(), upper.class(), "{name}");
        assert!(lower.orders().windows(2).all(|w| w[0] > w[1]));
        assert!(upper.orders().windows(2).all(|w| w[0] < w[1]));
        // γ(i+1) <= Z(c-i)
        let c = lower.class();
        for i in 0..=c {
            assert!(lower
                .term(i + 1)
                .unwrap()
                .is_subgroup_of(upper.term(c - i).unwrap()));
        }
    }
}

#[test]
fn frattini_examples() {
    let e = abelian(&[3, 3]);
    assert!(frattini(&e).is_trivial());
    assert_eq!(rank(&e), 2);
    assert_eq!(rank(catalog_group("phi8_32_p3")), 2);
    let h = group(HEISENBERG);
    assert_eq!(frattini(&h), center(&h));
    assert_eq!(rank(&h), 2);
}

#[test]
fn frattini_matches_maximal_subgroup_intersection() {
    for name in P3_CATALOG {
        let g = catalog_group(name);
        match frattini_by_maximal_subgroups(g) {
            Ok(phi) => assert_eq!(phi, frattini(g), "{name}"),
            Err(e) => {
                assert!(g.order() > 81, "{name}: {e}");
                assert!(matches!(e, Error::ScopeExceeded { .. }));
            }
        }
    }
}

#[test]
fn omega_and_agemo() {
    let e = abelian(&[3, 3]);
    assert_eq!(omega1(&e).order(), 9);
    assert!(agemo1(&e).is_trivial());
    let c9 = abelian(&[9]);
    assert_eq!(omega1(&c9).order(), 3);
    assert_eq!(agemo1(&c9).order(), 3);
}

/// In `<a, b | a^81 = b^9 = 1, a^b = a^10>`, `a^3` is a cube outside
/// `γ2 = <a^9>`.
#[test]
fn metacyclic_agemo_not_in_derived() {
    let g = catalog_group("c81_by_c9");
    let agemo = agemo1(g);
    let derived = derived_subgroup(g);
    assert_eq!(derived.order(), 9);
    assert!(!agemo.is_subgroup_of(&derived));
    assert!(agemo.contains(g.generator(4)));
}

#[test]
fn abelian_type_examples() {
    assert_eq!(abelian_type(&abelian(&[3]), 3).unwrap().factors(), &[3]);
    assert_eq!(
        abelian_type(&abelian(&[3, 9]), 3).unwrap().factors(),
        &[9, 3]
    );
    assert_eq!(
        abelian_type(&group(HEISENBERG), 3).unwrap_err(),
        Error::NotAbelian
    );
}

/// Regularity straight from the definition: γ2(<x, y>) by exhaustive
/// commutators, then a search for a witness.
fn regular_by_definition(g: &RealizedGroup) -> bool {
    let p = g.prime() as u64;
    let mut derived_of: HashMap<FixedBitSet, Subgroup> = HashMap::new();
    for x in 0..g.order() {
        for y in 0..g.order() {
            let h = subgroup_closure(g, [x, y]);
            let d = derived_of
                .entry(h.members().clone())
                .or_insert_with(|| commutator_subgroup_exhaustive(g, &h, &h));
            let lhs = g.mul(g.pow(x, p), g.pow(y, p));
            let xy = g.pow(g.mul(x, y), p);
            if !d.elements().iter().any(|&z| g.mul(xy, g.pow(z, p)) == lhs) {
                return false;
            }
        }
    }
    true
}

#[test]
fn regularity_matches_definition() {
    for name in P3_CATALOG {
        let g = catalog_group(name);
        if g.order() <= 81 {
            assert_eq!(is_regular(g).unwrap(), regular_by_definition(g), "{name}");
        }
    }
    assert!(is_regular(&group(HEISENBERG)).unwrap());
    assert!(is_regular(&abelian(&[9, 3])).unwrap());
    // class 3 = p, maximal class: not regular
    assert!(!is_regular(catalog_group("c3_wr_c3")).unwrap());
}

#[test]
fn regularity_scope() {
    let big = realize(&PcPresentation::abelian("big", 5, &[25, 25, 25]).unwrap()).unwrap();
    assert!(matches!(is_regular(&big), Err(Error::ScopeExceeded { .. })));
}

#[test]
fn power_lemma_on_regular_groups() {
    assert!(regular_power_lemma_check(&abelian(&[9, 3])).unwrap());
    assert!(regular_power_lemma_check(&group(HEISENBERG)).unwrap());
    for name in P3_CATALOG {
        let g = catalog_group(name);
        if g.order() <= 243 && is_regular(g).unwrap() {
            assert!(regular_power_lemma_check(g).unwrap(), "{name}");
        }
    }
    assert_eq!(
        regular_power_lemma_check(catalog_group("c3_wr_c3")).unwrap_err(),
        Error::NotRegular
    );
}

#[test]
fn purity_examples() {
    assert_eq!(
        is_purely_nonabelian(&group(HEISENBERG)).unwrap(),
        PureStatus::TrueBySufficientCondition
    );
    assert_eq!(
        is_purely_nonabelian(catalog_group("c3_x_heisenberg")).unwrap(),
        PureStatus::False
    );
    assert!(is_purely_nonabelian(catalog_group("phi8_32_p3"))
        .unwrap()
        .is_pure());
    assert!(matches!(
        is_purely_nonabelian(&abelian(&[9])),
        Err(Error::NotApplicable(_))
    ));
}

#[test]
fn purity_scope() {
    let h = parse_presentation(HEISENBERG).unwrap();
    let c9 = PcPresentation::abelian("c9", 3, &[9]).unwrap();
    let big = realize(&c9.direct_product(&h, "c9_x_heisenberg").unwrap()).unwrap();
    assert!(matches!(
        is_purely_nonabelian(&big),
        Err(Error::ScopeExceeded { .. })
    ));
}

#[test]
fn sufficient_condition_agrees_with_search() {
    for name in P3_CATALOG {
        let g = catalog_group(name);
        if g.is_abelian() || g.order() > 81 {
            continue;
        }
        let sufficient = center(g).is_subgroup_of(&frattini(g));
        let factor = has_abelian_direct_factor(g).unwrap();
        if sufficient {
            assert!(!factor, "{name}");
        }
    }
}

/// Order `p^4`, rank 2 and `|γ2| = p` force `Z = Φ` of order `p^2`.
#[test]
fn order_p4_rank_two_property() {
    let mut applicable = 0;
    for name in P3_CATALOG {
        let g = catalog_group(name);
        if g.order() != 81 || rank(g) != 2 || derived_subgroup(g).order() != 3 {
            continue;
        }
        applicable += 1;
        let z = center(g);
        assert_eq!(z, frattini(g), "{name}");
        assert_eq!(z.order(), 9);
    }
    assert!(applicable >= 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn abelian_type_round_trip(exps in prop::collection::vec(1u32..=3, 1..=3)) {
        prop_assume!(exps.iter().sum::<u32>() <= 5);
        let mut factors: Vec<u64> = exps.iter().map(|&a| 3u64.pow(a)).collect();
        let g = abelian(&factors);
        factors.sort_unstable_by(|a, b| b.cmp(a));
        let found = abelian_type(&g, 3).unwrap();
        prop_assert_eq!(found.factors(), factors.as_slice());
    }
}
