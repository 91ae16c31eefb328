mod common;

use std::collections::HashSet;

use common::{coprime_pairs, set};
use toric_nash::*;

fn forms(t: &Tree) -> HashSet<Gens> {
    t.nodes.iter().map(|n| n.canonical.clone()).collect()
}

#[test]
fn fibonacci_family_resolves_in_two_steps() {
    for l in [4, 6, 8, 10, 12] {
        let tree = resolve(&fibonacci_gamma::<i64>(l).unwrap(), DEFAULT_MAX_DEPTH, true).unwrap();
        assert_eq!(tree.status, Status::Resolved, "l={l}");
        assert_eq!(tree.root().depth_to_smooth, Some(2), "l={l}");
    }
}

#[test]
fn fibonacci_thirty_resolves_in_two_steps() {
    let tree = resolve(
        &fibonacci_gamma::<i64>(30).unwrap(),
        DEFAULT_MAX_DEPTH,
        true,
    )
    .unwrap();
    assert_eq!(tree.root().depth_to_smooth, Some(2));
}

#[test]
fn smooth_charts_are_fixed_points() {
    for (p, q) in coprime_pairs(12) {
        let tree = resolve(
            &hilbert_basis(&Cone::from_pq(p, q).unwrap()).unwrap(),
            6,
            true,
        )
        .unwrap();
        for node in tree.nodes.iter().filter(|n| n.class == ChartClass::Smooth) {
            let charts = nash_blowup(&node.generators).unwrap();
            assert_eq!(charts.len(), 1);
            assert_eq!(
                canonical_form(&charts[0].minimal).unwrap().0,
                node.canonical
            );
        }
    }
}

#[test]
fn every_one_segment_node_blows_up_smooth() {
    for (p, q) in coprime_pairs(14) {
        let tree = resolve(
            &hilbert_basis(&Cone::from_pq(p, q).unwrap()).unwrap(),
            8,
            true,
        )
        .unwrap();
        for node in &tree.nodes {
            if let ChartClass::OneSegment { .. } = node.class {
                for c in nash_blowup(&node.generators).unwrap() {
                    assert!(
                        is_smooth(&c.minimal).unwrap(),
                        "{p}/{q}: {}",
                        node.generators
                    );
                }
            }
        }
    }
}

#[test]
fn dedupe_does_not_change_what_is_reached() {
    for (p, q) in coprime_pairs(9) {
        let g = hilbert_basis(&Cone::from_pq(p, q).unwrap()).unwrap();
        let a = resolve(&g, 6, true).unwrap();
        let b = resolve(&g, 6, false).unwrap();
        assert_eq!(forms(&a), forms(&b), "{p}/{q}");
        assert_eq!(a.status, b.status, "{p}/{q}");
        // Past the cap the shared DAG can still see a finite depth that the
        // truncated plain tree cannot.
        if a.status == Status::Resolved {
            assert_eq!(
                a.root().depth_to_smooth,
                b.root().depth_to_smooth,
                "{p}/{q}"
            );
        }
    }
}

#[test]
fn node_invariants_hold() {
    for (p, q) in coprime_pairs(15) {
        let tree = resolve(
            &hilbert_basis(&Cone::from_pq(p, q).unwrap()).unwrap(),
            10,
            true,
        )
        .unwrap();
        let mut keys = HashSet::new();
        for node in &tree.nodes {
            assert!(keys.insert(node.canonical.clone()), "duplicate key");
            assert_eq!(
                node.depth_to_smooth == Some(0),
                node.class == ChartClass::Smooth
            );
            if node.class == ChartClass::Smooth {
                assert!(node.children.is_empty());
            }
            if let Some(d) = node.depth_to_smooth.filter(|&d| d > 0) {
                let deepest = node
                    .children
                    .iter()
                    .map(|c| tree.node(c.node).depth_to_smooth.unwrap())
                    .max()
                    .unwrap();
                assert_eq!(d, deepest + 1);
            }
        }
    }
}

#[test]
fn example_depth_agrees_with_the_plain_tree() {
    let g = set(&[(1, 0), (1, 1), (1, 2), (3, 7)]);
    let shared = resolve(&g, DEFAULT_MAX_DEPTH, true).unwrap();
    let plain = resolve(&g, DEFAULT_MAX_DEPTH, false).unwrap();
    assert_eq!(shared.status, Status::Resolved);
    assert_eq!(shared.root().depth_to_smooth, plain.root().depth_to_smooth);
    assert!(plain.len() >= shared.len());
}

#[test]
fn long_chains_report_the_cap() {
    // The A_11 cone needs 23 blowups, more than the default cap.
    let g = hilbert_basis(&Cone::from_pq(11, 12).unwrap()).unwrap();
    let tree = resolve(&g, DEFAULT_MAX_DEPTH, true).unwrap();
    assert_eq!(tree.status, Status::DepthCapReached);
    let tree = resolve(&g, 30, true).unwrap();
    assert_eq!(tree.status, Status::Resolved);
    assert_eq!(tree.root().depth_to_smooth, Some(23));
}

#[test]
fn scan_rows_are_ordered_and_deterministic() {
    let a = scan::<i64>(10, 8);
    let b = scan::<i64>(10, 8);
    assert_eq!(a, b);
    let keys: Vec<_> = a.iter().map(|r| (r.q, r.p)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(a.len(), coprime_pairs(10).len());
}
