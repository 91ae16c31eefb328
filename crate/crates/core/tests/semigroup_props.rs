mod common;

use common::{coprime_pairs, fixtures, generator_set, unimodular};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use toric_nash::*;

fn grade(w: &Vector, u: &Vector) -> i64 {
    w.x * u.x + w.y * u.y
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn minimal_generators_is_idempotent(g in generator_set(6)) {
        let m = minimal_generators(&g).unwrap();
        prop_assert_eq!(minimal_generators(&m).unwrap(), m);
    }

    #[test]
    fn minimal_generators_present_the_same_semigroup(g in generator_set(5)) {
        let m = minimal_generators(&g).unwrap();
        let w = positive_functional(&g).unwrap();
        let top = 3 * g.iter().map(|u| grade(&w, u)).max().unwrap();
        let mut full = Membership::new(&g).unwrap();
        let mut small = Membership::new(&m).unwrap();
        let r = top.max(1);
        for x in -r..=r {
            for y in -r..=r {
                let u = Vector::new(x, y);
                if grade(&w, &u) > top || grade(&w, &u) < 0 {
                    continue;
                }
                prop_assert_eq!(full.contains(&u).unwrap(), small.contains(&u).unwrap(), "{}", u);
            }
        }
    }

    #[test]
    fn positive_functional_is_positive(g in generator_set(9)) {
        let w = positive_functional(&g).unwrap();
        for u in g.iter() {
            prop_assert!(grade(&w, u) >= 1);
        }
    }

    #[test]
    fn canonical_form_is_invariant(g in generator_set(6), t in unimodular()) {
        let (a, _) = canonical_form(&g).unwrap();
        let (b, map) = canonical_form(&g.map(&t).unwrap()).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(g.map(&t).unwrap().map(&map).unwrap(), b);
    }
}

#[test]
fn canonical_form_is_invariant_on_fixtures() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for g in fixtures() {
        let (base, _) = canonical_form(&g).unwrap();
        for _ in 0..100 {
            let t = unimodular().new_tree(&mut runner).unwrap().current();
            assert_eq!(
                canonical_form(&g.map(&t).unwrap()).unwrap().0,
                base,
                "{g} under {t}"
            );
        }
    }
    let g = common::set(&[(0, -1), (1, 2), (2, 6)]);
    let sheared = g.map(&Map::new(1, 1, 0, 1).unwrap()).unwrap();
    assert_eq!(
        canonical_form(&g).unwrap().0,
        canonical_form(&sheared).unwrap().0
    );
}

#[test]
fn hilbert_basis_matches_enumeration() {
    for (p, q) in coprime_pairs(40) {
        let c = Cone::from_pq(p, q).unwrap();
        assert_eq!(
            hilbert_basis(&c).unwrap(),
            hilbert_basis_bruteforce(&c).unwrap(),
            "{p}/{q}"
        );
    }
}

#[test]
fn consecutive_hilbert_basis_elements_are_unimodular() {
    for (p, q) in coprime_pairs(40) {
        let hb = hilbert_basis(&Cone::from_pq(p, q).unwrap()).unwrap();
        for w in hb.as_slice().windows(2) {
            assert_eq!(det2(&w[0], &w[1]).unwrap(), 1, "{p}/{q}");
        }
    }
}

#[test]
fn theta_edge_slopes_turn_one_way() {
    for (p, q) in coprime_pairs(40) {
        let profile = theta_profile(&Cone::from_pq(p, q).unwrap()).unwrap();
        assert_eq!(profile.compact_edge_count + 1, profile.vertices.len());
        let edges: Vec<_> = profile
            .vertices
            .windows(2)
            .map(|w| w[1].checked_sub(&w[0]).unwrap())
            .collect();
        for e in edges.windows(2) {
            // Seen from the origin the boundary of Θ is convex, so each edge
            // turns clockwise relative to the previous one.
            assert!(
                det2(&e[0], &e[1]).unwrap() < 0,
                "{p}/{q}: {:?}",
                profile.vertices
            );
        }
        let mut it = profile.hilbert_basis.iter();
        for vtx in &profile.vertices {
            assert!(it.any(|h| h == vtx), "vertices must be a subsequence");
        }
    }
}

#[test]
fn hilbert_basis_is_smooth_iff_p_is_zero() {
    for (p, q) in coprime_pairs(40) {
        let c = Cone::from_pq(p, q).unwrap();
        let smooth = is_smooth(&hilbert_basis(&c).unwrap()).unwrap();
        assert_eq!(smooth, normal_form(&c).unwrap().p == 0, "{p}/{q}");
    }
}

#[test]
fn hilbert_bases_are_saturated_and_the_remark_sets_are_not() {
    for (p, q) in coprime_pairs(30) {
        assert!(is_saturated(&hilbert_basis(&Cone::from_pq(p, q).unwrap()).unwrap()).unwrap());
    }
    assert!(!is_saturated(&common::set(&[
        (1, 0),
        (1, 3),
        (1, 4),
        (1, 6),
        (1, 7),
        (1, 9)
    ]))
    .unwrap());
    assert!(!is_saturated(&common::set(&[(1, 0), (1, 1), (1, 3), (1, 4)])).unwrap());
}
