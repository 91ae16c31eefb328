//! Iterated Nash blowups.
//!
//! [`resolve`] expands every non-smooth chart breadth first until all leaves
//! are smooth or a depth cap is hit. Charts equal up to GL(2,Z) share one
//! node when deduplication is on, so the result is a DAG rather than a tree.
//! A `Resolved` status is an observation about this run. It is a theorem
//! only for the one-segment, two-segment and Fibonacci families.

use std::collections::{HashMap, VecDeque};

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{Cone2, LatticeVector};
use crate::nash::nash_blowup;
use crate::scalar::Scalar;
use crate::semigroup::{
    canonical_form, hilbert_basis, is_smooth, minimal_generators, theta_profile, GeneratorSet,
};

pub const DEFAULT_MAX_DEPTH: usize = 20;

/// Coarse type of a chart, read off its minimal generators.
///
/// When several descriptions apply the first in declaration order wins: a
/// three-generator one-segment chart is reported as `ThreeGen`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChartClass {
    Smooth,
    /// Exactly three minimal generators.
    ThreeGen,
    /// Saturated with a single compact edge of `Θ`.
    OneSegment {
        generators: usize,
    },
    /// Saturated with two compact edges of `Θ`.
    TwoSegments {
        generators: usize,
    },
    Other {
        generators: usize,
    },
}

impl ChartClass {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Smooth => "smooth",
            Self::ThreeGen => "three-gen",
            Self::OneSegment { .. } => "one-segment",
            Self::TwoSegments { .. } => "two-segments",
            Self::Other { .. } => "other",
        }
    }

    pub fn generator_count(&self) -> usize {
        match *self {
            Self::Smooth => 2,
            Self::ThreeGen => 3,
            Self::OneSegment { generators }
            | Self::TwoSegments { generators }
            | Self::Other { generators } => generators,
        }
    }
}

impl std::fmt::Display for ChartClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Classify `X_Γ` (requires lattice index 1).
pub fn classify<T: Scalar>(g: &GeneratorSet<T>) -> Result<ChartClass> {
    let minimal = minimal_generators(g)?;
    classify_minimal(&minimal)
}

fn classify_minimal<T: Scalar>(minimal: &GeneratorSet<T>) -> Result<ChartClass> {
    if is_smooth(minimal)? {
        return Ok(ChartClass::Smooth);
    }
    let generators = minimal.len();
    if generators == 3 {
        return Ok(ChartClass::ThreeGen);
    }
    if minimal.is_full_rank() {
        let cone = minimal.cone()?;
        if hilbert_basis(&cone)? == *minimal {
            match theta_profile(&cone)?.compact_edge_count {
                1 => return Ok(ChartClass::OneSegment { generators }),
                2 => return Ok(ChartClass::TwoSegments { generators }),
                _ => {}
            }
        }
    }
    Ok(ChartClass::Other { generators })
}

pub type NodeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Child<T> {
    pub vertex: LatticeVector<T>,
    pub pair: (usize, usize),
    pub node: NodeId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionNode<T> {
    /// Minimal generators in the coordinates where the node was first met.
    pub generators: GeneratorSet<T>,
    /// GL(2,Z)-canonical form of `generators`; the dedupe key.
    pub canonical: GeneratorSet<T>,
    pub class: ChartClass,
    /// Breadth-first level at which the node was first met.
    pub level: usize,
    pub children: Vec<Child<T>>,
    /// Number of further blowups until every descendant chart is smooth.
    pub depth_to_smooth: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Resolved,
    /// Some chain of blowups needs more than `max_depth` steps, or the DAG
    /// has a cycle.
    DepthCapReached,
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Resolved => "resolved",
            Self::DepthCapReached => "depth_cap",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ResolutionTree<T> {
    pub nodes: Vec<ResolutionNode<T>>,
    /// First node for each canonical form.
    pub node_store: HashMap<GeneratorSet<T>, NodeId>,
    pub root: NodeId,
    pub status: Status,
    pub max_depth: usize,
    /// Deepest level any node was created at.
    pub max_depth_used: usize,
}

impl<T> ResolutionTree<T> {
    pub fn root(&self) -> &ResolutionNode<T> {
        &self.nodes[self.root]
    }

    pub fn node(&self, id: NodeId) -> &ResolutionNode<T> {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Blow up breadth first until every leaf is smooth or `max_depth` levels
/// have been expanded.
pub fn resolve<T: Scalar>(
    g: &GeneratorSet<T>,
    max_depth: usize,
    dedupe: bool,
) -> Result<ResolutionTree<T>> {
    let index = g.lattice_index()?;
    if !index.is_one() {
        return Err(Error::LatticeIndex(index.to_string()));
    }

    let mut nodes: Vec<ResolutionNode<T>> = Vec::new();
    let mut node_store: HashMap<GeneratorSet<T>, NodeId> = HashMap::new();
    let mut queue = VecDeque::new();

    let make = |generators: GeneratorSet<T>, level: usize| -> Result<ResolutionNode<T>> {
        let (canonical, _) = canonical_form(&generators)?;
        let class = classify_minimal(&generators)?;
        Ok(ResolutionNode {
            generators,
            canonical,
            class,
            level,
            children: Vec::new(),
            depth_to_smooth: None,
        })
    };

    let root = make(minimal_generators(g)?, 0)?;
    node_store.insert(root.canonical.clone(), 0);
    nodes.push(root);
    queue.push_back(0);
    let mut max_depth_used = 0;

    while let Some(id) = queue.pop_front() {
        let level = nodes[id].level;
        if nodes[id].class == ChartClass::Smooth || level >= max_depth {
            continue;
        }
        let charts = nash_blowup(&nodes[id].generators)?;
        let mut children = Vec::with_capacity(charts.len());
        for c in charts {
            let child = make(c.minimal, level + 1)?;
            let existing = if dedupe {
                node_store.get(&child.canonical).copied()
            } else {
                None
            };
            let node = match existing {
                Some(n) => n,
                None => {
                    let n = nodes.len();
                    node_store.entry(child.canonical.clone()).or_insert(n);
                    max_depth_used = max_depth_used.max(level + 1);
                    nodes.push(child);
                    queue.push_back(n);
                    n
                }
            };
            children.push(Child {
                vertex: c.vertex,
                pair: c.pair,
                node,
            });
        }
        nodes[id].children = children;
    }

    // Least fixpoint: a node is resolved once all of its children are.
    let mut changed = true;
    while changed {
        changed = false;
        for id in (0..nodes.len()).rev() {
            if nodes[id].depth_to_smooth.is_some() {
                continue;
            }
            let depth = if nodes[id].class == ChartClass::Smooth {
                Some(0)
            } else if nodes[id].children.is_empty() {
                None
            } else {
                nodes[id]
                    .children
                    .iter()
                    .map(|c| nodes[c.node].depth_to_smooth)
                    .collect::<Option<Vec<_>>>()
                    .map(|d| 1 + d.into_iter().max().unwrap_or(0))
            };
            if depth.is_some() {
                nodes[id].depth_to_smooth = depth;
                changed = true;
            }
        }
    }

    // Dedupe can hand a shallow node a child first met deeper in the DAG,
    // so the longest chain may exceed the level cap even though every node
    // was expanded.
    let status = if nodes[0].depth_to_smooth.is_some_and(|d| d <= max_depth) {
        Status::Resolved
    } else {
        Status::DepthCapReached
    };
    Ok(ResolutionTree {
        nodes,
        node_store,
        root: 0,
        status,
        max_depth,
        max_depth_used,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanStatus {
    Resolved,
    DepthCap,
    Error(String),
}

impl ScanStatus {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Resolved => "resolved",
            Self::DepthCap => "depth_cap",
            Self::Error(_) => "error",
        }
    }
}

/// One cone `R≥0((1,0),(p,q))` of a [`scan`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub p: u64,
    pub q: u64,
    pub theta_edges: Option<usize>,
    pub depth: Option<usize>,
    pub status: ScanStatus,
}

/// Resolve the Hilbert basis of every cone `((1,0),(p,q))` with coprime
/// `0 ≤ p < q ≤ q_max`. Rows are computed in parallel and returned ordered
/// by `q`, then `p`. A failing row is recorded, never propagated.
pub fn scan<T: Scalar>(q_max: u64, max_depth: usize) -> Vec<ScanRow> {
    let mut pairs = Vec::new();
    for q in 1..=q_max {
        for p in 0..q {
            if p.gcd(&q) == 1 {
                pairs.push((p, q));
            }
        }
    }
    pairs
        .into_par_iter()
        .map(|(p, q)| scan_row::<T>(p, q, max_depth))
        .collect()
}

fn scan_row<T: Scalar>(p: u64, q: u64, max_depth: usize) -> ScanRow {
    let run = || -> Result<(usize, Option<usize>, Status)> {
        let p_t = T::from_u64(p).ok_or(Error::Overflow)?;
        let q_t = T::from_u64(q).ok_or(Error::Overflow)?;
        let cone = Cone2::from_pq(p_t, q_t)?;
        let edges = theta_profile(&cone)?.compact_edge_count;
        let tree = resolve(&hilbert_basis(&cone)?, max_depth, true)?;
        Ok((edges, tree.root().depth_to_smooth, tree.status))
    };
    match run() {
        Ok((edges, depth, status)) => ScanRow {
            p,
            q,
            theta_edges: Some(edges),
            depth,
            status: match status {
                Status::Resolved => ScanStatus::Resolved,
                Status::DepthCapReached => ScanStatus::DepthCap,
            },
        },
        Err(e) => ScanRow {
            p,
            q,
            theta_edges: None,
            depth: None,
            status: ScanStatus::Error(e.to_string()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(pairs: &[(i64, i64)]) -> GeneratorSet<i64> {
        GeneratorSet::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(&set(&[(1, 0), (0, 1)])).unwrap(),
            ChartClass::Smooth
        );
        assert_eq!(
            classify(&set(&[(0, -1), (1, 2), (2, 6)])).unwrap(),
            ChartClass::ThreeGen
        );
        assert_eq!(
            classify(&set(&[(-1, -3), (0, -1), (1, 1), (2, 3), (3, 5), (4, 7)])).unwrap(),
            ChartClass::OneSegment { generators: 6 }
        );
        assert_eq!(
            classify(&set(&[(1, 0), (1, 1), (1, 2), (3, 7)])).unwrap(),
            ChartClass::TwoSegments { generators: 4 }
        );
        assert_eq!(
            classify(&set(&[(1, 0), (1, 1), (2, 3), (5, 8)])).unwrap(),
            ChartClass::Other { generators: 4 }
        );
        assert!(classify(&set(&[(1, 0), (1, 2)])).is_err());
    }

    #[test]
    fn resolve_example_gamma() {
        let tree = resolve(&set(&[(1, 0), (1, 1), (1, 2), (3, 7)]), 10, true).unwrap();
        assert_eq!(tree.status, Status::Resolved);
        let root = tree.root();
        assert_eq!(root.children.len(), 3);
        let first = tree.node(root.children[0].node);
        assert_eq!(first.class, ChartClass::Smooth);
        assert_eq!(first.depth_to_smooth, Some(0));
        assert_eq!(root.children[0].pair, (0, 1));
    }

    #[test]
    fn resolve_fibonacci_six() {
        let tree = resolve(&set(&[(1, 0), (1, 1), (2, 3), (5, 8)]), 10, true).unwrap();
        assert_eq!(tree.status, Status::Resolved);
        assert_eq!(tree.root().depth_to_smooth, Some(2));
    }

    #[test]
    fn resolve_smooth_at_depth_zero() {
        let tree = resolve(&set(&[(1, 0), (0, 1)]), 0, true).unwrap();
        assert_eq!(tree.status, Status::Resolved);
        assert_eq!(tree.root().depth_to_smooth, Some(0));
        assert_eq!(tree.len(), 1);
    }

    #[test]
    fn depth_cap_is_a_status() {
        let tree = resolve(&set(&[(1, 0), (1, 1), (2, 3), (5, 8)]), 1, true).unwrap();
        assert_eq!(tree.status, Status::DepthCapReached);
        assert_eq!(tree.root().depth_to_smooth, None);
    }

    #[test]
    fn dedupe_reaches_the_same_forms() {
        let g = set(&[(1, 0), (1, 1), (1, 2), (1, 3), (3, 10)]);
        let a = resolve(&g, 10, true).unwrap();
        let b = resolve(&g, 10, false).unwrap();
        let forms = |t: &ResolutionTree<i64>| {
            t.nodes
                .iter()
                .map(|n| n.canonical.clone())
                .collect::<std::collections::HashSet<_>>()
        };
        assert_eq!(forms(&a), forms(&b));
        assert_eq!(a.root().depth_to_smooth, b.root().depth_to_smooth);
        assert!(a.len() <= b.len());
    }

    #[test]
    fn scan_small() {
        let rows = scan::<i64>(2, DEFAULT_MAX_DEPTH);
        assert_eq!(rows.len(), 2);
        assert_eq!((rows[0].p, rows[0].q, rows[0].depth), (0, 1, Some(0)));
        assert_eq!((rows[1].p, rows[1].q, rows[1].depth), (1, 2, Some(1)));
        assert!(rows.iter().all(|r| r.status == ScanStatus::Resolved));
    }

    #[test]
    fn scan_reports_overflow_per_row() {
        let rows = scan::<i8>(12, 4);
        assert!(rows
            .iter()
            .any(|r| matches!(r.status, ScanStatus::Error(_))));
        assert_eq!(rows[0].status, ScanStatus::Resolved);
    }
}
