//! Exact primitives on the lattice Z²: determinants, primitivity, cones,
//! unimodular changes of coordinates, and the normal form of a 2-D cone.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// A point of Z².
///
/// The derived ordering is lexicographic on `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> LatticeVector<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        Ok(Self::new(
            scalar::add(&self.x, &other.x)?,
            scalar::add(&self.y, &other.y)?,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        Ok(Self::new(
            scalar::sub(&self.x, &other.x)?,
            scalar::sub(&self.y, &other.y)?,
        ))
    }

    pub fn checked_neg(&self) -> Result<Self> {
        Ok(Self::new(scalar::neg(&self.x)?, scalar::neg(&self.y)?))
    }

    pub fn checked_scale(&self, k: &T) -> Result<Self> {
        Ok(Self::new(
            scalar::mul(&self.x, k)?,
            scalar::mul(&self.y, k)?,
        ))
    }

    /// Euclidean pairing `x·x' + y·y'`, used with covectors such as gradings.
    pub fn dot(&self, other: &Self) -> Result<T> {
        scalar::add(
            &scalar::mul(&self.x, &other.x)?,
            &scalar::mul(&self.y, &other.y)?,
        )
    }

    /// gcd(|x|, |y|); zero only for the zero vector.
    pub fn content(&self) -> T {
        self.x.gcd(&self.y)
    }
}

impl<T: Scalar> From<(T, T)> for LatticeVector<T> {
    fn from((x, y): (T, T)) -> Self {
        Self::new(x, y)
    }
}

impl<T: fmt::Display> fmt::Display for LatticeVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// `u.x·v.y − u.y·v.x`. Overflow is an error, never a wrapped value.
pub fn det2<T: Scalar>(u: &LatticeVector<T>, v: &LatticeVector<T>) -> Result<T> {
    scalar::cross(&u.x, &u.y, &v.x, &v.y)
}

/// Divides `v` by the positive gcd of its coordinates, keeping its direction.
pub fn primitive<T: Scalar>(v: &LatticeVector<T>) -> Result<LatticeVector<T>> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let g = v.content();
    Ok(LatticeVector::new(v.x.div_floor(&g), v.y.div_floor(&g)))
}

/// Index of the subgroup generated by `gens` in Z², as the gcd of all 2×2
/// minors. Zero when the generators have rank < 2.
pub fn lattice_index<T: Scalar>(gens: &[LatticeVector<T>]) -> Result<T> {
    let mut g = T::zero();
    for (i, u) in gens.iter().enumerate() {
        for v in &gens[i + 1..] {
            g = g.gcd(&det2(u, v)?);
            if g.is_one() {
                return Ok(g);
            }
        }
    }
    Ok(g)
}

/// A strongly convex rational cone of dimension 2, given by its two primitive
/// extreme rays in counterclockwise order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone2<T> {
    r1: LatticeVector<T>,
    r2: LatticeVector<T>,
}

impl<T: Scalar> Cone2<T> {
    /// Validating constructor: both rays primitive and `det(r1, r2) > 0`.
    pub fn new(r1: LatticeVector<T>, r2: LatticeVector<T>) -> Result<Self> {
        if !r1.content().is_one() || !r2.content().is_one() {
            return Err(Error::InvalidCone(format!(
                "rays {r1} and {r2} must be primitive"
            )));
        }
        if !det2(&r1, &r2)?.is_positive() {
            return Err(Error::InvalidCone(format!(
                "rays {r1} and {r2} must be in strict counterclockwise order"
            )));
        }
        Ok(Self { r1, r2 })
    }

    /// The cone spanned by two arbitrary independent nonzero vectors, in either order.
    pub fn spanned_by(u: &LatticeVector<T>, v: &LatticeVector<T>) -> Result<Self> {
        let (u, v) = (primitive(u)?, primitive(v)?);
        let d = det2(&u, &v)?;
        if d.is_zero() {
            return Err(Error::InvalidCone(format!("{u} and {v} are collinear")));
        }
        if d.is_positive() {
            Self::new(u, v)
        } else {
            Self::new(v, u)
        }
    }

    /// The cone spanned by `(1,0)` and `(p,q)`.
    pub fn from_pq(p: T, q: T) -> Result<Self> {
        Self::new(
            LatticeVector::new(T::one(), T::zero()),
            LatticeVector::new(p, q),
        )
    }

    pub fn r1(&self) -> &LatticeVector<T> {
        &self.r1
    }

    pub fn r2(&self) -> &LatticeVector<T> {
        &self.r2
    }

    /// `det(r1, r2)`, the index of the sublattice spanned by the rays.
    pub fn det(&self) -> Result<T> {
        det2(&self.r1, &self.r2)
    }

    /// A covector strictly positive on the cone minus the apex.
    ///
    /// It takes the value `det(r1, r2)` on both rays (before dividing out
    /// its content).
    pub fn grading(&self) -> Result<LatticeVector<T>> {
        // det(r1, v) + det(v, r2) as a linear form in v.
        let w = LatticeVector::new(
            scalar::sub(&self.r2.y, &self.r1.y)?,
            scalar::sub(&self.r1.x, &self.r2.x)?,
        );
        primitive(&w)
    }
}

impl<T: fmt::Display> fmt::Display for Cone2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone({}, {})", self.r1, self.r2)
    }
}

/// Closed-cone membership: `det(r1, v) ≥ 0` and `det(v, r2) ≥ 0`.
pub fn cone_contains<T: Scalar>(c: &Cone2<T>, v: &LatticeVector<T>) -> Result<bool> {
    Ok(!det2(&c.r1, v)?.is_negative() && !det2(v, &c.r2)?.is_negative())
}

/// A 2×2 integer matrix with determinant ±1, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMap<T> {
    m: [[T; 2]; 2],
    det: T,
}

impl<T: Scalar> UnimodularMap<T> {
    pub fn new(m11: T, m12: T, m21: T, m22: T) -> Result<Self> {
        let d = scalar::cross(&m11, &m12, &m21, &m22)?;
        if !d.abs().is_one() {
            return Err(Error::NotUnimodular(d.to_string()));
        }
        Ok(Self {
            m: [[m11, m12], [m21, m22]],
            det: d,
        })
    }

    pub fn identity() -> Self {
        Self {
            m: [[T::one(), T::zero()], [T::zero(), T::one()]],
            det: T::one(),
        }
    }

    /// `[[1, k], [0, 1]]`, which fixes `(1,0)`.
    pub fn shear(k: T) -> Self {
        Self {
            m: [[T::one(), k], [T::zero(), T::one()]],
            det: T::one(),
        }
    }

    /// `[[1, 0], [0, -1]]`.
    pub fn reflection() -> Self {
        Self {
            m: [[T::one(), T::zero()], [T::zero(), -T::one()]],
            det: -T::one(),
        }
    }

    pub fn entries(&self) -> &[[T; 2]; 2] {
        &self.m
    }

    /// Always +1 or −1.
    pub fn det(&self) -> T {
        self.det.clone()
    }

    pub fn apply(&self, v: &LatticeVector<T>) -> Result<LatticeVector<T>> {
        let [[a, b], [c, d]] = &self.m;
        Ok(LatticeVector::new(
            scalar::add(&scalar::mul(a, &v.x)?, &scalar::mul(b, &v.y)?)?,
            scalar::add(&scalar::mul(c, &v.x)?, &scalar::mul(d, &v.y)?)?,
        ))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let [[a, b], [c, d]] = &self.m;
        let [[e, f], [g, h]] = &other.m;
        let dot =
            |p: &T, q: &T, r: &T, s: &T| scalar::add(&scalar::mul(p, q)?, &scalar::mul(r, s)?);
        Ok(Self {
            m: [
                [dot(a, e, b, g)?, dot(a, f, b, h)?],
                [dot(c, e, d, g)?, dot(c, f, d, h)?],
            ],
            det: self.det.clone() * other.det.clone(),
        })
    }

    pub fn inverse(&self) -> Self {
        let [[a, b], [c, d]] = &self.m;
        // adj / det with det = ±1
        let s = self.det();
        Self {
            m: [
                [d.clone() * s.clone(), -b.clone() * s.clone()],
                [-c.clone() * s.clone(), a.clone() * s.clone()],
            ],
            det: s,
        }
    }
}

impl<T: fmt::Display> fmt::Display for UnimodularMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.m;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// Matrix-vector product.
pub fn apply_map<T: Scalar>(
    t: &UnimodularMap<T>,
    v: &LatticeVector<T>,
) -> Result<LatticeVector<T>> {
    t.apply(v)
}

/// A determinant-one map sending the primitive vector `r` to `(1,0)`.
pub fn map_to_first_axis<T: Scalar>(r: &LatticeVector<T>) -> Result<UnimodularMap<T>> {
    let eg = r.x.extended_gcd(&r.y);
    if !eg.gcd.abs().is_one() {
        return Err(Error::InvalidArgument(format!("{r} is not primitive")));
    }
    let (s, t) = if eg.gcd.is_negative() {
        (-eg.x, -eg.y)
    } else {
        (eg.x, eg.y)
    };
    UnimodularMap::new(s, t, scalar::neg(&r.y)?, r.x.clone())
}

/// The cone `R≥0((1,0),(p,q))` a cone is isomorphic to, with `0 ≤ p < q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm<T> {
    pub p: T,
    pub q: T,
    /// Maps the input cone onto `cone((1,0),(p,q))`.
    pub map: UnimodularMap<T>,
}

/// Sends `first` to `(1,0)` and `second` into the upper half plane, then
/// shears so that `second ↦ (p, q)` with `0 ≤ p < q`.
pub(crate) fn normalize_rays<T: Scalar>(
    first: &LatticeVector<T>,
    second: &LatticeVector<T>,
) -> Result<NormalForm<T>> {
    let mut t = map_to_first_axis(first)?;
    let mut image = t.apply(second)?;
    if image.y.is_negative() {
        t = UnimodularMap::reflection().compose(&t)?;
        image = t.apply(second)?;
    }
    let q = image.y.clone();
    let p = image.x.mod_floor(&q);
    let k = scalar::sub(&p, &image.x)?.div_floor(&q);
    let map = UnimodularMap::shear(k).compose(&t)?;
    Ok(NormalForm { p, q, map })
}

/// Normal form of a cone. Of the two ray orderings (giving `p` and `p'` with
/// `p·p' ≡ 1 mod q`) the smaller `p` is returned; ties keep `r1 ↦ (1,0)`.
pub fn normal_form<T: Scalar>(c: &Cone2<T>) -> Result<NormalForm<T>> {
    let a = normalize_rays(&c.r1, &c.r2)?;
    let b = normalize_rays(&c.r2, &c.r1)?;
    Ok(if b.p < a.p { b } else { a })
}
