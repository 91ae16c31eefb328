//! Finitely generated subsemigroups of Z² inside strictly convex cones.
//!
//! A [`GeneratorSet`] presents the semigroup `NΓ`; it need not be minimal or
//! saturated. Membership is decided by a memoized descent along a positive
//! grading, which terminates because every step lowers the grade by at least
//! one.

use std::collections::HashMap;

use num_rational::Ratio;

use crate::contfrac::{fraction_points, hj_expand};
use crate::error::{Error, Result};
use crate::lattice::{
    cone_contains, det2, lattice_index, map_to_first_axis, normal_form, primitive, Cone2,
    LatticeVector, UnimodularMap,
};
use crate::scalar::{self, Scalar};

/// A finite set of nonzero lattice vectors lying in an open half plane.
///
/// Duplicates and the origin are dropped on construction. Generators are
/// stored counterclockwise starting from the first extreme ray; generators
/// on a common ray are ordered by length. Indices into a set always refer to
/// this order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSet<T> {
    gens: Vec<LatticeVector<T>>,
    r1: LatticeVector<T>,
    r2: LatticeVector<T>,
}

/// Whether `g` is a valid clockwise-most ray for `points`: every point lies
/// weakly to its left and nothing points the opposite way.
fn is_first_ray<T: Scalar>(g: &LatticeVector<T>, points: &[LatticeVector<T>]) -> Result<bool> {
    for h in points {
        let d = det2(g, h)?;
        if d.is_negative() || (d.is_zero() && !g.dot(h)?.is_positive()) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn is_last_ray<T: Scalar>(g: &LatticeVector<T>, points: &[LatticeVector<T>]) -> Result<bool> {
    for h in points {
        let d = det2(h, g)?;
        if d.is_negative() || (d.is_zero() && !g.dot(h)?.is_positive()) {
            return Ok(false);
        }
    }
    Ok(true)
}

impl<T: Scalar> GeneratorSet<T> {
    /// Fails with [`Error::EmptyGenerators`] or [`Error::NotStrictlyConvex`].
    pub fn new(points: impl IntoIterator<Item = LatticeVector<T>>) -> Result<Self> {
        let mut gens: Vec<_> = points.into_iter().filter(|v| !v.is_zero()).collect();
        gens.sort();
        gens.dedup();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut r1 = None;
        let mut r2 = None;
        for g in &gens {
            if r1.is_none() && is_first_ray(g, &gens)? {
                r1 = Some(primitive(g)?);
            }
            if r2.is_none() && is_last_ray(g, &gens)? {
                r2 = Some(primitive(g)?);
            }
        }
        let (Some(r1), Some(r2)) = (r1, r2) else {
            return Err(Error::NotStrictlyConvex);
        };

        let mut keyed = Vec::with_capacity(gens.len());
        for g in gens {
            let key = if r1 == r2 {
                (Ratio::from_integer(T::zero()), r1.dot(&g)?)
            } else {
                let phi = det2(&r1, &g)?;
                let psi = det2(&g, &r2)?;
                let grade = scalar::add(&phi, &psi)?;
                (Ratio::new(phi, grade.clone()), grade)
            };
            keyed.push((key, g));
        }
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(Self {
            gens: keyed.into_iter().map(|(_, g)| g).collect(),
            r1,
            r2,
        })
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (T, T)>) -> Result<Self> {
        Self::new(pairs.into_iter().map(LatticeVector::from))
    }

    pub fn as_slice(&self) -> &[LatticeVector<T>] {
        &self.gens
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LatticeVector<T>> {
        self.gens.iter()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Primitive extreme rays of `R≥0Γ` in counterclockwise order; equal
    /// when all generators are collinear.
    pub fn rays(&self) -> (&LatticeVector<T>, &LatticeVector<T>) {
        (&self.r1, &self.r2)
    }

    /// Whether the generators span a 2-dimensional cone.
    pub fn is_full_rank(&self) -> bool {
        self.r1 != self.r2
    }

    /// The cone `R≥0Γ`; [`Error::Degenerate`] if it is a single ray.
    pub fn cone(&self) -> Result<Cone2<T>> {
        if !self.is_full_rank() {
            return Err(Error::Degenerate);
        }
        Cone2::new(self.r1.clone(), self.r2.clone())
    }

    pub fn lattice_index(&self) -> Result<T> {
        lattice_index(&self.gens)
    }

    pub fn contains_generator(&self, v: &LatticeVector<T>) -> bool {
        self.gens.contains(v)
    }

    /// Image under a unimodular map.
    pub fn map(&self, t: &UnimodularMap<T>) -> Result<Self> {
        let image = self
            .gens
            .iter()
            .map(|g| t.apply(g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(image)
    }

    fn in_span(&self, v: &LatticeVector<T>) -> Result<bool> {
        if self.is_full_rank() {
            Ok(!det2(&self.r1, v)?.is_negative() && !det2(v, &self.r2)?.is_negative())
        } else {
            Ok(det2(&self.r1, v)?.is_zero() && !self.r1.dot(v)?.is_negative())
        }
    }

    fn require_unit_index(&self) -> Result<()> {
        let index = self.lattice_index()?;
        if index.is_one() {
            Ok(())
        } else {
            Err(Error::LatticeIndex(index.to_string()))
        }
    }
}

impl<T: std::fmt::Display> std::fmt::Display for GeneratorSet<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

/// An integer covector `w` with `w·g ≥ 1` for every generator.
pub fn positive_functional<T: Scalar>(g: &GeneratorSet<T>) -> Result<LatticeVector<T>> {
    if g.is_full_rank() {
        g.cone()?.grading()
    } else {
        Ok(g.r1.clone())
    }
}

/// Memoized semigroup membership for one generator set.
///
/// The memo table lives as long as the value, so batch queries against the
/// same set share work.
pub struct Membership<'a, T> {
    set: &'a GeneratorSet<T>,
    /// Generators with their grades, ascending by grade.
    graded: Vec<(T, LatticeVector<T>)>,
    w: LatticeVector<T>,
    memo: HashMap<LatticeVector<T>, bool>,
}

impl<'a, T: Scalar> Membership<'a, T> {
    pub fn new(set: &'a GeneratorSet<T>) -> Result<Self> {
        let w = positive_functional(set)?;
        let mut graded = set
            .iter()
            .map(|g| Ok((w.dot(g)?, g.clone())))
            .collect::<Result<Vec<_>>>()?;
        graded.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(Self {
            set,
            graded,
            w,
            memo: HashMap::new(),
        })
    }

    pub fn grade(&self, v: &LatticeVector<T>) -> Result<T> {
        self.w.dot(v)
    }

    /// Whether `v` is a nonnegative integer combination of the generators.
    pub fn contains(&mut self, v: &LatticeVector<T>) -> Result<bool> {
        if v.is_zero() {
            return Ok(true);
        }
        if !self.set.in_span(v)? {
            return Ok(false);
        }
        if let Some(&known) = self.memo.get(v) {
            return Ok(known);
        }

        // Explicit stack of (point, grade, next generator to try).
        let mut stack = vec![(v.clone(), self.grade(v)?, 0usize)];
        while let Some((point, grade, next)) = stack.last_mut() {
            let Some((g_grade, g)) = self.graded.get(*next) else {
                let done = stack.pop().expect("nonempty");
                self.memo.insert(done.0, false);
                continue;
            };
            if *g_grade > *grade {
                let done = stack.pop().expect("nonempty");
                self.memo.insert(done.0, false);
                continue;
            }
            *next += 1;
            let rest = point.checked_sub(g)?;
            let rest_grade = scalar::sub(grade, g_grade)?;
            let found = if rest.is_zero() {
                true
            } else if !self.set.in_span(&rest)? {
                continue;
            } else {
                match self.memo.get(&rest) {
                    Some(true) => true,
                    Some(false) => continue,
                    None => {
                        stack.push((rest, rest_grade, 0));
                        continue;
                    }
                }
            };
            if found {
                for (p, _, _) in stack.drain(..) {
                    self.memo.insert(p, true);
                }
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Membership of `v` in `NΓ`.
pub fn contains<T: Scalar>(g: &GeneratorSet<T>, v: &LatticeVector<T>) -> Result<bool> {
    Membership::new(g)?.contains(v)
}

/// The unique minimal generating set of `NΓ`.
///
/// `g` is dropped iff `g − h ∈ NΓ` for some generator `h` of strictly
/// smaller positive grade. When every Hilbert basis element of the cone is
/// already in `NΓ` the semigroup is saturated and the answer is the Hilbert
/// basis itself.
pub fn minimal_generators<T: Scalar>(g: &GeneratorSet<T>) -> Result<GeneratorSet<T>> {
    let mut member = Membership::new(g)?;
    if g.is_full_rank() {
        let hb = hilbert_basis(&g.cone()?)?;
        let mut saturated = true;
        for h in hb.iter() {
            if !member.contains(h)? {
                saturated = false;
                break;
            }
        }
        if saturated {
            return Ok(hb);
        }
    }

    let grades = g
        .iter()
        .map(|x| member.grade(x))
        .collect::<Result<Vec<_>>>()?;
    let mut keep = Vec::new();
    for (gi, gv) in g.iter().enumerate() {
        let mut redundant = false;
        for (hi, hv) in g.iter().enumerate() {
            if grades[hi] >= grades[gi] {
                continue;
            }
            if member.contains(&gv.checked_sub(hv)?)? {
                redundant = true;
                break;
            }
        }
        if !redundant {
            keep.push(gv.clone());
        }
    }
    GeneratorSet::new(keep)
}

/// Whether `X_Γ` is smooth: exactly two minimal generators (requires
/// lattice index 1).
pub fn is_smooth<T: Scalar>(g: &GeneratorSet<T>) -> Result<bool> {
    g.require_unit_index()?;
    let m = minimal_generators(g)?;
    if m.len() != 2 {
        return Ok(false);
    }
    let d = det2(&m.gens[0], &m.gens[1])?;
    if !d.abs().is_one() {
        return Err(Error::Inconsistent(format!(
            "two minimal generators {m} of an index-1 semigroup with determinant {d}"
        )));
    }
    Ok(true)
}

/// Minimal generating set of `C ∩ Z²`, counterclockwise, computed from the
/// continued fraction of the normal form and mapped back.
pub fn hilbert_basis<T: Scalar>(c: &Cone2<T>) -> Result<GeneratorSet<T>> {
    let nf = normal_form(c)?;
    let points = if nf.p.is_zero() {
        vec![
            LatticeVector::new(T::one(), T::zero()),
            LatticeVector::new(T::zero(), T::one()),
        ]
    } else {
        fraction_points(&hj_expand(nf.p, nf.q)?)?
    };
    let back = nf.map.inverse();
    GeneratorSet::new(
        points
            .iter()
            .map(|v| back.apply(v))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// Hilbert basis by enumeration, independent of continued fractions.
///
/// Every minimal generator lies in `{a·r1 + b·r2 : a, b ≥ 0, a + b ≤ 1}`, so
/// enumerating up to twice that grade is enough to see all decompositions.
pub fn hilbert_basis_bruteforce<T: Scalar>(c: &Cone2<T>) -> Result<GeneratorSet<T>> {
    let (r1, r2) = (c.r1(), c.r2());
    let d = c.det()?;
    let bound = scalar::add(&d, &d)?;
    let two = T::one() + T::one();
    let corners = [
        LatticeVector::zero(),
        r1.checked_scale(&two)?,
        r2.checked_scale(&two)?,
    ];
    let lo_x = corners.iter().map(|p| p.x.clone()).min().expect("corners");
    let hi_x = corners.iter().map(|p| p.x.clone()).max().expect("corners");
    let lo_y = corners.iter().map(|p| p.y.clone()).min().expect("corners");
    let hi_y = corners.iter().map(|p| p.y.clone()).max().expect("corners");

    let mut points = Vec::new();
    let mut x = lo_x;
    while x <= hi_x {
        let mut y = lo_y.clone();
        while y <= hi_y {
            let v = LatticeVector::new(x.clone(), y.clone());
            let phi = det2(r1, &v)?;
            let psi = det2(&v, r2)?;
            if !v.is_zero()
                && !phi.is_negative()
                && !psi.is_negative()
                && scalar::add(&phi, &psi)? <= bound
            {
                points.push(v);
            }
            y = y + T::one();
        }
        x = x + T::one();
    }

    let mut basis = Vec::new();
    for v in &points {
        let mut reducible = false;
        for u in &points {
            if u == v {
                continue;
            }
            let rest = v.checked_sub(u)?;
            if !rest.is_zero() && cone_contains(c, &rest)? {
                reducible = true;
                break;
            }
        }
        if !reducible {
            basis.push(v.clone());
        }
    }
    GeneratorSet::new(basis)
}

/// Whether `NΓ = R≥0Γ ∩ Z²` (requires lattice index 1).
pub fn is_saturated<T: Scalar>(g: &GeneratorSet<T>) -> Result<bool> {
    g.require_unit_index()?;
    let hb = hilbert_basis(&g.cone()?)?;
    let mut member = Membership::new(g)?;
    for h in hb.iter() {
        if !member.contains(h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The boundary of `Θ = Conv(C ∩ Z² ∖ {0})`: Hilbert basis, the vertices
/// among it, and the number of compact edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaProfile<T> {
    pub vertices: Vec<LatticeVector<T>>,
    pub compact_edge_count: usize,
    pub hilbert_basis: Vec<LatticeVector<T>>,
}

/// Indices of the points where a counterclockwise chain strictly turns,
/// always including both ends.
pub(crate) fn turning_indices<T: Scalar>(chain: &[LatticeVector<T>]) -> Result<Vec<usize>> {
    let n = chain.len();
    let mut out = vec![0];
    for i in 1..n.saturating_sub(1) {
        let before = chain[i].checked_sub(&chain[i - 1])?;
        let after = chain[i + 1].checked_sub(&chain[i])?;
        if !det2(&before, &after)?.is_zero() {
            out.push(i);
        }
    }
    if n > 1 {
        out.push(n - 1);
    }
    Ok(out)
}

pub fn theta_profile<T: Scalar>(c: &Cone2<T>) -> Result<ThetaProfile<T>> {
    let hb = hilbert_basis(c)?.gens;
    let vertices: Vec<_> = turning_indices(&hb)?
        .into_iter()
        .map(|i| hb[i].clone())
        .collect();
    Ok(ThetaProfile {
        compact_edge_count: vertices.len() - 1,
        vertices,
        hilbert_basis: hb,
    })
}

/// A representative of the GL(2,Z)-orbit of `Γ` and a map realizing it.
///
/// Each extreme ray in turn is sent to `(1,0)` with the other ray landing on
/// some `(a,b)`, `0 ≤ a < b`; the lexicographically smaller sorted image wins.
pub fn canonical_form<T: Scalar>(
    g: &GeneratorSet<T>,
) -> Result<(GeneratorSet<T>, UnimodularMap<T>)> {
    let candidate = |t: UnimodularMap<T>| -> Result<(Vec<LatticeVector<T>>, UnimodularMap<T>)> {
        let mut image = g.iter().map(|v| t.apply(v)).collect::<Result<Vec<_>>>()?;
        image.sort();
        Ok((image, t))
    };
    let best = if g.is_full_rank() {
        let a = candidate(crate::lattice::normalize_rays(&g.r1, &g.r2)?.map)?;
        let b = candidate(crate::lattice::normalize_rays(&g.r2, &g.r1)?.map)?;
        if b.0 < a.0 {
            b
        } else {
            a
        }
    } else {
        candidate(map_to_first_axis(&g.r1)?)?
    };
    Ok((GeneratorSet::new(best.0)?, best.1))
}
