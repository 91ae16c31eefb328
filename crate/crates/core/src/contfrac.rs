//! Hirzebruch–Jung ("minus") continued fractions
//! `a₁ − 1/(a₂ − 1/(⋯ − 1/aₙ))` and their relation to 2-D cones.
//!
//! For a cone in normal form `cone((1,0),(p,q))`, the expansion of `p/q`
//! produces the Hilbert basis through a three-term recurrence, and the
//! expansion of `q/p` lists the negated self-intersections of the
//! exceptional curves of the minimal resolution.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::lattice::{normal_form, Cone2, LatticeVector};
use crate::scalar::{self, Scalar};
use crate::semigroup::GeneratorSet;

/// A minus continued fraction `[a₁, …, aₙ]`.
///
/// Every entry is at least 2 except possibly `a₁ = 1`. The empty fraction
/// stands for `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HJFraction<T>(Vec<T>);

impl<T: Scalar> HJFraction<T> {
    pub fn new(entries: Vec<T>) -> Result<Self> {
        let two = T::one() + T::one();
        for (i, a) in entries.iter().enumerate() {
            let ok = if i == 0 { *a >= T::one() } else { *a >= two };
            if !ok {
                return Err(Error::InvalidFraction(format!(
                    "entry {} = {a} is out of range",
                    i + 1
                )));
            }
        }
        Ok(Self(entries))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn entries(&self) -> &[T] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<T: fmt::Display> fmt::Display for HJFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// Expands `num/den` by repeated ceilings: `a = ⌈num/den⌉`, then continue
/// with `1/(a − num/den)`.
pub fn hj_expand<T: Scalar>(num: T, den: T) -> Result<HJFraction<T>> {
    if !den.is_positive() || num.is_negative() {
        return Err(Error::InvalidArgument(format!(
            "expected num ≥ 0 and den ≥ 1, got {num}/{den}"
        )));
    }
    if !num.gcd(&den).is_one() {
        return Err(Error::InvalidArgument(format!(
            "{num}/{den} is not reduced"
        )));
    }
    let mut entries = Vec::new();
    if num.is_zero() {
        return Ok(HJFraction(entries));
    }
    let (mut num, mut den) = (num, den);
    while !den.is_zero() {
        let a = num.div_ceil(&den);
        let rest = scalar::sub(&scalar::mul(&a, &den)?, &num)?;
        entries.push(a);
        num = std::mem::replace(&mut den, rest);
    }
    Ok(HJFraction(entries))
}

/// Exact value in lowest terms; the empty fraction is `0/1`.
pub fn hj_eval<T: Scalar>(f: &HJFraction<T>) -> Result<Ratio<T>> {
    let mut iter = f.0.iter().rev();
    let Some(last) = iter.next() else {
        return Ok(Ratio::new_raw(T::zero(), T::one()));
    };
    let (mut num, mut den) = (last.clone(), T::one());
    for a in iter {
        if num.is_zero() {
            return Err(Error::InvalidFraction(format!(
                "{f} has a vanishing denominator"
            )));
        }
        // a − den/num
        let next = scalar::sub(&scalar::mul(a, &num)?, &den)?;
        den = std::mem::replace(&mut num, next);
    }
    Ok(Ratio::new(num, den))
}

/// The pairs `(pᵢ, qᵢ)`, `0 ≤ i ≤ n`, from
/// `p₋₁ = 0, p₀ = 1, pᵢ = aᵢpᵢ₋₁ − pᵢ₋₂` and
/// `q₀ = 0, q₁ = 1, qᵢ = aᵢqᵢ₋₁ − qᵢ₋₂`.
///
/// For the expansion of a normal-form `p/q` these are the Hilbert basis of
/// `cone((1,0),(p,q))`. The empty fraction gives `{(1,0),(0,1)}`.
pub fn generators_from_fraction<T: Scalar>(f: &HJFraction<T>) -> Result<GeneratorSet<T>> {
    let points = fraction_points(f)?;
    GeneratorSet::new(points)
}

pub(crate) fn fraction_points<T: Scalar>(f: &HJFraction<T>) -> Result<Vec<LatticeVector<T>>> {
    if f.is_empty() {
        return Ok(vec![
            LatticeVector::new(T::one(), T::zero()),
            LatticeVector::new(T::zero(), T::one()),
        ]);
    }
    let a = &f.0;
    let mut p = vec![T::zero(), T::one()]; // p₋₁, p₀
    for ai in a {
        let n = p.len();
        p.push(scalar::sub(&scalar::mul(ai, &p[n - 1])?, &p[n - 2])?);
    }
    let mut q = vec![T::zero(), T::one()]; // q₀, q₁
    for ai in &a[1..] {
        let n = q.len();
        q.push(scalar::sub(&scalar::mul(ai, &q[n - 1])?, &q[n - 2])?);
    }
    Ok(p.into_iter()
        .skip(1)
        .zip(q)
        .map(|(x, y)| LatticeVector::new(x, y))
        .collect())
}

/// The expansion of the reciprocal value: `p/q ↦ q/p`.
pub fn invert_fraction<T: Scalar>(f: &HJFraction<T>) -> Result<HJFraction<T>> {
    let r = hj_eval(f)?;
    if !r.numer().is_positive() {
        return Err(Error::InvalidFraction(format!(
            "{f} = {r} has no inverse expansion"
        )));
    }
    hj_expand(r.denom().clone(), r.numer().clone())
}

/// Shapes of fractions attached to the resolvable families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FractionShape<T> {
    /// `[1,2,…,2]`, length ≥ 2.
    OneSegment,
    /// `[1,2,…,2,x,2,…,2]` with `x ≥ 3` at 1-based position `position ≥ 2`.
    TwoSegments {
        position: usize,
        value: T,
        length: usize,
    },
    /// `[1,3,…,3]`, length ≥ 3. (`[1,3]` is reported as two segments.)
    Fibonacci,
    Other,
}

pub fn fraction_shape<T: Scalar>(f: &HJFraction<T>) -> FractionShape<T> {
    let a = &f.0;
    if a.len() < 2 || !a[0].is_one() {
        return FractionShape::Other;
    }
    let two = T::one() + T::one();
    let three = two.clone() + T::one();
    let tail = &a[1..];
    let off: Vec<usize> = (0..tail.len()).filter(|&i| tail[i] != two).collect();
    match off.as_slice() {
        [] => FractionShape::OneSegment,
        [i] if tail[*i] > two => FractionShape::TwoSegments {
            position: i + 2,
            value: tail[*i].clone(),
            length: a.len(),
        },
        _ if tail.iter().all(|x| *x == three) => FractionShape::Fibonacci,
        _ => FractionShape::Other,
    }
}

/// Self-intersections `Eᵢ² = −bᵢ` of the exceptional curves of the minimal
/// resolution, where `q/p = [b₁,…,b_s]` for the normal form of `c`.
/// Empty for a smooth cone.
pub fn self_intersections<T: Scalar>(c: &Cone2<T>) -> Result<Vec<T>> {
    let nf = normal_form(c)?;
    if nf.p.is_zero() {
        return Ok(Vec::new());
    }
    Ok(hj_expand(nf.q, nf.p)?.0.into_iter().map(|b| -b).collect())
}
