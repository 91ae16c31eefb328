//! The combinatorial Nash blowup of a toric surface `X_Γ`.
//!
//! With `Γ₀ = {γᵢ + γⱼ : det(γᵢ, γⱼ) ≠ 0}` and `C = R≥0Γ`, the charts of the
//! blowup are indexed by the vertices of `N = Conv(Γ₀ + C)`. The chart at a
//! vertex `γᵢ + γⱼ` is the semigroup generated by
//! `{γᵢ, γⱼ} ∪ A(γᵢ) ∪ A(γⱼ)` where
//!
//! ```text
//! A(γᵢ) = { γₖ − γᵢ : k ∉ {i, j}, det(γₖ, γⱼ) ≠ 0 }
//! A(γⱼ) = { γₖ − γⱼ : k ∉ {i, j}, det(γₖ, γᵢ) ≠ 0 }
//! ```

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::lattice::{cone_contains, det2, LatticeVector};
use crate::scalar::{self, Scalar};
use crate::semigroup::{hilbert_basis, minimal_generators, turning_indices, GeneratorSet};

/// A point of `Γ₀` with every pair `(i, j)`, `i < j`, summing to it.
/// Indices refer to the counterclockwise order of the generator set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumPoint<T> {
    pub point: LatticeVector<T>,
    pub decompositions: Vec<(usize, usize)>,
}

/// One affine chart of a Nash blowup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NashChart<T> {
    pub vertex: LatticeVector<T>,
    pub pair: (usize, usize),
    /// `{γᵢ, γⱼ} ∪ A(γᵢ) ∪ A(γⱼ)` exactly as constructed.
    pub chart_gens: GeneratorSet<T>,
    pub minimal: GeneratorSet<T>,
    /// Set when the vertex has more than one decomposition; one chart is
    /// emitted per decomposition.
    pub ambiguous: bool,
}

/// All pairwise sums over pairs with nonzero determinant, grouped by point
/// and sorted lexicographically. [`Error::Degenerate`] if every pair is
/// collinear.
pub fn gamma0<T: Scalar>(g: &GeneratorSet<T>) -> Result<Vec<SumPoint<T>>> {
    if g.len() < 2 {
        return Err(Error::InvalidArgument(
            "Γ₀ needs at least two generators".into(),
        ));
    }
    let gens = g.as_slice();
    let mut sums: BTreeMap<LatticeVector<T>, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if !det2(&gens[i], &gens[j])?.is_zero() {
                sums.entry(gens[i].checked_add(&gens[j])?)
                    .or_default()
                    .push((i, j));
            }
        }
    }
    if sums.is_empty() {
        return Err(Error::Degenerate);
    }
    Ok(sums
        .into_iter()
        .map(|(point, decompositions)| SumPoint {
            point,
            decompositions,
        })
        .collect())
}

/// Vertices of `Conv(Γ₀ + C)`, ordered from the `r1` side to the `r2` side.
///
/// Sums dominated by another sum (`s − s' ∈ C`) are dropped; the survivors
/// have strictly increasing `φ = det(r1, ·)` and strictly decreasing
/// `ψ = det(·, r2)`, and the vertices are the strict convex turns of that
/// chain in `(φ, ψ)` coordinates.
pub fn newton_vertices<T: Scalar>(g: &GeneratorSet<T>) -> Result<Vec<SumPoint<T>>> {
    let cone = g.cone()?;
    let sums = gamma0(g)?;

    let mut survivors = Vec::new();
    for s in &sums {
        let mut dominated = false;
        for t in &sums {
            if t.point != s.point && cone_contains(&cone, &s.point.checked_sub(&t.point)?)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            let phi = det2(cone.r1(), &s.point)?;
            let psi = det2(&s.point, cone.r2())?;
            survivors.push((phi, psi, s));
        }
    }
    survivors.sort_by(|a, b| a.0.cmp(&b.0));

    let turn = |a: &(T, T, &SumPoint<T>), b: &(T, T, &SumPoint<T>), c: &(T, T, &SumPoint<T>)| {
        let (u0, u1) = (scalar::sub(&b.0, &a.0)?, scalar::sub(&b.1, &a.1)?);
        let (v0, v1) = (scalar::sub(&c.0, &b.0)?, scalar::sub(&c.1, &b.1)?);
        scalar::cross(&u0, &u1, &v0, &v1)
    };
    let mut hull: Vec<(T, T, &SumPoint<T>)> = Vec::new();
    for s in survivors {
        while hull.len() >= 2
            && !turn(&hull[hull.len() - 2], &hull[hull.len() - 1], &s)?.is_positive()
        {
            hull.pop();
        }
        hull.push(s);
    }
    Ok(hull.into_iter().map(|(_, _, s)| s.clone()).collect())
}

/// Independent check of [`newton_vertices`]: convex hull of the truncated
/// cloud `{s + i·r1 + j·r2 : s ∈ Γ₀, 0 ≤ i, j ≤ K}` with
/// `K = 4·max|coordinate of Γ₀| + 4`, restricted to `Γ₀`. Sorted
/// lexicographically.
pub fn newton_vertices_oracle<T: Scalar>(g: &GeneratorSet<T>) -> Result<Vec<LatticeVector<T>>> {
    let cone = g.cone()?;
    let sums: Vec<_> = gamma0(g)?.into_iter().map(|s| s.point).collect();
    let max = sums
        .iter()
        .flat_map(|s| [s.x.abs(), s.y.abs()])
        .max()
        .unwrap_or_else(T::zero);
    let k = scalar::add(
        &scalar::mul(&scalar::from_i64(4)?, &max)?,
        &scalar::from_i64(4)?,
    )?;
    let k = k.to_usize().ok_or(Error::Overflow)?;

    let mut cloud = Vec::with_capacity(sums.len() * (k + 1) * (k + 1));
    for s in &sums {
        let mut row = s.clone();
        for _ in 0..=k {
            let mut p = row.clone();
            for _ in 0..=k {
                cloud.push(p.clone());
                p = p.checked_add(cone.r2())?;
            }
            row = row.checked_add(cone.r1())?;
        }
    }
    let hull = convex_hull_vertices(cloud)?;
    let sums: BTreeSet<_> = sums.into_iter().collect();
    Ok(hull
        .into_iter()
        .filter(|v| sums.contains(v))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect())
}

/// Monotone-chain convex hull keeping only strict corners.
fn convex_hull_vertices<T: Scalar>(
    mut points: Vec<LatticeVector<T>>,
) -> Result<Vec<LatticeVector<T>>> {
    points.sort();
    points.dedup();
    if points.len() < 3 {
        return Ok(points);
    }
    let turn = |o: &LatticeVector<T>, a: &LatticeVector<T>, b: &LatticeVector<T>| {
        det2(&a.checked_sub(o)?, &b.checked_sub(o)?)
    };
    let mut lower: Vec<LatticeVector<T>> = Vec::new();
    for p in &points {
        while lower.len() >= 2
            && !turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p)?.is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<LatticeVector<T>> = Vec::new();
    for p in points.iter().rev() {
        while upper.len() >= 2
            && !turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p)?.is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Ok(lower)
}

/// Vertices of `N` read off directly from the vertices of `Θ`:
/// `γ₁+γ₂`, `γₙ₋₁+γₙ`, and both neighbouring sums at every interior vertex
/// of `Θ`. Only valid when `Γ` is the Hilbert basis of its cone; otherwise
/// [`Error::NotHilbertBasis`] and the caller falls back to
/// [`newton_vertices`].
pub fn newton_vertices_fastpath<T: Scalar>(g: &GeneratorSet<T>) -> Result<Vec<SumPoint<T>>> {
    if !g.is_full_rank() || hilbert_basis(&g.cone()?)? != *g {
        return Err(Error::NotHilbertBasis);
    }
    let gens = g.as_slice();
    let n = gens.len();
    let mut pairs = BTreeSet::new();
    pairs.insert(0);
    pairs.insert(n - 2);
    let corners = turning_indices(gens)?;
    for &i in &corners[1..corners.len() - 1] {
        pairs.insert(i - 1);
        pairs.insert(i);
    }
    pairs
        .into_iter()
        .map(|i| {
            Ok(SumPoint {
                point: gens[i].checked_add(&gens[i + 1])?,
                decompositions: vec![(i, i + 1)],
            })
        })
        .collect()
}

/// The chart `Γ(γᵢ, γⱼ)` for a pair with nonzero determinant.
pub fn chart<T: Scalar>(g: &GeneratorSet<T>, i: usize, j: usize) -> Result<NashChart<T>> {
    let gens = g.as_slice();
    for idx in [i, j] {
        if idx >= gens.len() {
            return Err(Error::IndexOutOfRange(idx));
        }
    }
    let (gi, gj) = (&gens[i], &gens[j]);
    if det2(gi, gj)?.is_zero() {
        return Err(Error::CollinearPair(i, j));
    }
    let mut out = vec![gi.clone(), gj.clone()];
    for (k, gk) in gens.iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        if !det2(gk, gj)?.is_zero() {
            out.push(gk.checked_sub(gi)?);
        }
        if !det2(gk, gi)?.is_zero() {
            out.push(gk.checked_sub(gj)?);
        }
    }
    let chart_gens = GeneratorSet::new(out)?;
    let minimal = minimal_generators(&chart_gens)?;
    Ok(NashChart {
        vertex: gi.checked_add(gj)?,
        pair: (i.min(j), i.max(j)),
        chart_gens,
        minimal,
        ambiguous: false,
    })
}

/// One chart per vertex of `N` (and per decomposition of that vertex).
///
/// When `Γ` is a Hilbert basis the vertex list is cross-checked against
/// [`newton_vertices_fastpath`].
pub fn nash_blowup<T: Scalar>(g: &GeneratorSet<T>) -> Result<Vec<NashChart<T>>> {
    let index = g.lattice_index()?;
    if !index.is_one() {
        return Err(Error::LatticeIndex(index.to_string()));
    }
    let vertices = newton_vertices(g)?;
    match newton_vertices_fastpath(g) {
        Ok(fast) => {
            let a: Vec<_> = vertices.iter().map(|s| &s.point).collect();
            let b: Vec<_> = fast.iter().map(|s| &s.point).collect();
            if a != b {
                return Err(Error::Inconsistent(format!(
                    "vertex fast path disagrees on {g}"
                )));
            }
        }
        Err(Error::NotHilbertBasis) => {}
        Err(e) => return Err(e),
    }
    let mut charts = Vec::new();
    for v in &vertices {
        let ambiguous = v.decompositions.len() > 1;
        for &(i, j) in &v.decompositions {
            let mut c = chart(g, i, j)?;
            c.ambiguous = ambiguous;
            charts.push(c);
        }
    }
    Ok(charts)
}
