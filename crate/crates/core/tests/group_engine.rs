mod common;

use centaut::group::{
    center, centralizer, commutator_subgroup, commutator_subgroup_exhaustive, element_order,
    normal_closure, subgroup_closure, FiniteGroup, QuotientGroup, Subgroup,
};
use centaut::invariants::{abelian_type, derived_subgroup};
use centaut::Error;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{catalog_group, group, HEISENBERG, P3_CATALOG};

type Matrix = [[u8; 4]; 4];

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut c = [[0u8; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            c[i][j] = ((0..4).map(|k| a[i][k] as u32 * b[k][j] as u32).sum::<u32>() % 3) as u8;
        }
    }
    c
}

fn elementary(i: usize, j: usize) -> Matrix {
    let mut m = [[0u8; 4]; 4];
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = 1;
    }
    m[i][j] = 1;
    m
}

/// UT(4, 3) from its pc presentation agrees with actual unitriangular
/// matrices: `g1..g6 = x12, x23, x34, x13, x24, x14`.
#[test]
fn unitriangular_matches_matrices() {
    let g = catalog_group("ut4_p3");
    let gens = [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3), (0, 3)].map(|(i, j)| elementary(i, j));
    let matrix = |x: usize| {
        // elementary(0, 0) is the identity matrix
        let mut m = elementary(0, 0);
        for (k, &e) in g.element(x).exponents().iter().enumerate() {
            for _ in 0..e {
                m = mat_mul(&m, &gens[k]);
            }
        }
        m
    };
    let mats: Vec<Matrix> = (0..g.order()).map(matrix).collect();
    let mut distinct = mats.clone();
    distinct.sort();
    distinct.dedup();
    assert_eq!(distinct.len(), 729);
    for x in 0..g.order() {
        for y in 0..g.order() {
            assert_eq!(mats[g.mul(x, y)], mat_mul(&mats[x], &mats[y]));
        }
    }
}

#[test]
fn closure_examples() {
    let g = group(HEISENBERG);
    assert_eq!(subgroup_closure(&g, []).order(), 1);
    assert_eq!(subgroup_closure(&g, [g.generator(3)]).order(), 3);
    assert_eq!(
        subgroup_closure(&g, [g.generator(1), g.generator(2)]).order(),
        27
    );
}

#[test]
fn commutator_examples() {
    let g = group(HEISENBERG);
    let whole = Subgroup::whole(&g);
    assert!(commutator_subgroup(&g, &whole, &Subgroup::trivial(27)).is_trivial());
    let derived = commutator_subgroup(&g, &whole, &whole);
    assert_eq!(derived, subgroup_closure(&g, [g.generator(3)]));
    let phi = catalog_group("phi8_32_p3");
    assert_eq!(derived_subgroup(phi).order(), 9);
}

#[test]
fn centers() {
    let abelian = catalog_group("c9xc3");
    assert_eq!(center(abelian).order(), 27);
    assert_eq!(center(&group(HEISENBERG)).order(), 3);
    assert_eq!(center(catalog_group("phi8_32_p3")).order(), 3);
}

#[test]
fn quotients() {
    let g = group(HEISENBERG);
    let whole = Subgroup::whole(&g);
    assert_eq!(QuotientGroup::new(&g, &whole).unwrap().order(), 1);
    let q = QuotientGroup::new(&g, &center(&g)).unwrap();
    assert_eq!(q.order(), 9);
    assert_eq!(abelian_type(&q, 3).unwrap().factors(), &[3, 3]);

    let phi = catalog_group("phi8_32_p3");
    let q = QuotientGroup::new(phi, &derived_subgroup(phi)).unwrap();
    assert_eq!(q.order(), 27);
    assert_eq!(abelian_type(&q, 3).unwrap().factors(), &[9, 3]);

    let not_normal = subgroup_closure(&g, [g.generator(1)]);
    assert_eq!(
        QuotientGroup::new(&g, &not_normal).unwrap_err(),
        Error::NotNormal
    );
}

#[test]
fn coset_representatives_are_minimal() {
    let g = catalog_group("phi7_member_p3");
    let z = center(g);
    let q = QuotientGroup::new(g, &z).unwrap();
    for coset in 0..q.order() {
        let rep = q.representative(coset);
        let min = z.elements().iter().map(|&n| g.mul(rep, n)).min().unwrap();
        assert_eq!(rep, min);
    }
    assert!(q.representatives().windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn element_orders() {
    let g = group(HEISENBERG);
    assert_eq!(element_order(&g, 0), 1);
    assert_eq!(element_order(&g, g.generator(1)), 3);
    // a = g3 in <a, b | a^81 = b^9 = 1, a^b = a^10>
    let m = catalog_group("c81_by_c9");
    assert_eq!(element_order(m, m.generator(3)), 81);
    assert_eq!(element_order(m, m.generator(1)), 9);
}

const SAMPLED_PAIRS: usize = 100_000;

/// Projection onto `G/N` is a homomorphism: exhaustive up to order 243,
/// sampled above.
#[test]
fn projection_is_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in P3_CATALOG {
        let g = catalog_group(name);
        for n in [center(g), derived_subgroup(g)] {
            let q = QuotientGroup::new(g, &n).unwrap();
            assert_eq!(q.order() * n.order(), g.order());
            let check = |x: usize, y: usize| {
                assert_eq!(
                    q.project(g.mul(x, y)),
                    q.mul(q.project(x), q.project(y)),
                    "{name}"
                );
            };
            if g.order() <= 243 {
                for x in 0..g.order() {
                    for y in 0..g.order() {
                        check(x, y);
                    }
                }
            } else {
                for _ in 0..SAMPLED_PAIRS {
                    check(rng.gen_range(0..g.order()), rng.gen_range(0..g.order()));
                }
            }
        }
    }
}

#[test]
fn center_is_normal_and_abelian() {
    for name in P3_CATALOG {
        let g = catalog_group(name);
        let z = center(g);
        assert!(z.is_normal(g) && z.is_abelian(g), "{name}");
        assert_eq!(g.order() % z.order(), 0);
    }
}

fn pick(g: &impl FiniteGroup, seeds: &[u64]) -> Vec<usize> {
    seeds
        .iter()
        .map(|&s| (s % g.order() as u64) as usize)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn commutator_routes_agree(
        k in 0..P3_CATALOG.len(),
        hs in prop::collection::vec(any::<u64>(), 1..3),
        ks in prop::collection::vec(any::<u64>(), 1..3),
    ) {
        let g = catalog_group(P3_CATALOG[k]);
        let (hg, kg) = (pick(g, &hs), pick(g, &ks));
        // normal arguments take the normal-closure route
        let h = normal_closure(g, hg.iter().copied());
        let kk = normal_closure(g, kg.iter().copied());
        prop_assert_eq!(commutator_subgroup(g, &h, &kk), commutator_subgroup_exhaustive(g, &h, &kk));
        prop_assert_eq!(commutator_subgroup(g, &h, &kk), commutator_subgroup(g, &kk, &h));
        // arbitrary subgroups
        let h = subgroup_closure(g, hg);
        let kk = subgroup_closure(g, kg);
        let hk = commutator_subgroup(g, &h, &kk);
        prop_assert_eq!(&hk, &commutator_subgroup(g, &kk, &h));
        prop_assert_eq!(g.order() % hk.order(), 0);
    }

    #[test]
    fn centralizers_contain_center(k in 0..P3_CATALOG.len(), seeds in prop::collection::vec(any::<u64>(), 0..4)) {
        let g = catalog_group(P3_CATALOG[k]);
        let c = centralizer(g, &pick(g, &seeds));
        prop_assert!(center(g).is_subgroup_of(&c));
        prop_assert_eq!(g.order() % c.order(), 0);
    }

    #[test]
    fn closures_obey_lagrange(k in 0..P3_CATALOG.len(), seeds in prop::collection::vec(any::<u64>(), 0..4)) {
        let g = catalog_group(P3_CATALOG[k]);
        let h = subgroup_closure(g, pick(g, &seeds));
        prop_assert_eq!(g.order() % h.order(), 0);
        for &x in h.elements() {
            prop_assert!(h.contains(g.inv(x)));
        }
    }
}
