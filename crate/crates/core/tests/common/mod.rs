#![allow(dead_code)]

use proptest::prelude::*;
use toric_nash::{Gens, Map, Vector};

pub fn v(x: i64, y: i64) -> Vector {
    Vector::new(x, y)
}

pub fn set(pairs: &[(i64, i64)]) -> Gens {
    Gens::from_pairs(pairs.iter().copied()).expect("fixture")
}

/// Products of up to six shears, reflections and quarter turns.
pub fn unimodular() -> impl Strategy<Value = Map> {
    prop::collection::vec((0..3u8, -3i64..=3), 1..=6).prop_map(|steps| {
        steps.into_iter().fold(Map::identity(), |t, (kind, k)| {
            let step = match kind {
                0 => Map::shear(k),
                1 => Map::reflection(),
                _ => Map::new(0, -1, 1, 0).unwrap(),
            };
            t.compose(&step).unwrap()
        })
    })
}

/// Strictly convex, full-rank generator sets with small coordinates.
pub fn generator_set(bound: i64) -> impl Strategy<Value = Gens> {
    prop::collection::vec((-bound..=bound, -bound..=bound), 2..=7)
        .prop_filter_map("not strictly convex or rank 1", |pts| {
            Gens::from_pairs(pts).ok().filter(|g| g.is_full_rank())
        })
}

pub fn coprime_pairs(q_max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for q in 1..=q_max {
        for p in 0..q {
            if num_integer::gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

pub fn fixtures() -> Vec<Gens> {
    vec![
        set(&[(1, 0), (1, 1), (1, 2), (3, 7)]),
        set(&[(1, 0), (0, 1)]),
        set(&[(0, -1), (1, 2), (2, 6)]),
        set(&[(-2, -6), (0, -1), (1, 2), (3, 7)]),
        set(&[(-1, -3), (0, -1), (1, 1), (2, 3), (3, 5), (4, 7)]),
        set(&[(1, 0), (1, 3), (1, 4), (1, 6), (1, 7), (1, 9)]),
        set(&[(1, 0), (1, 1), (1, 3), (1, 4)]),
        set(&[(2, 0), (3, 0), (0, 1)]),
        set(&[(1, 0), (1, 1), (2, 3), (5, 8)]),
    ]
}
