//! Parametric families of toric surfaces and the Fibonacci identities
//! behind the two-iteration resolution of the Fibonacci family.
//!
//! Fibonacci indexing is `f₁ = f₂ = 1`, extended by `f₋₁ = 1`, `f₀ = 0`.

use crate::error::{Error, Result};
use crate::lattice::{LatticeVector, UnimodularMap};
use crate::scalar::{self, Scalar};
use crate::semigroup::GeneratorSet;

/// A vertical edge `(1,0) … (1,k)` followed by `m` steps of `(a,b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSegmentParams<T> {
    pub k: T,
    pub a: T,
    pub b: T,
    pub m: T,
}

/// `{(1,j) : 0 ≤ j ≤ k}` for `k ≥ 2`.
pub fn one_segment_gamma<T: Scalar>(k: T) -> Result<GeneratorSet<T>> {
    if k < scalar::from_i64(2)? {
        return Err(Error::InvalidArgument(format!(
            "one segment needs k ≥ 2, got {k}"
        )));
    }
    let mut gens = Vec::new();
    let mut j = T::zero();
    while j <= k {
        gens.push(LatticeVector::new(T::one(), j.clone()));
        j = scalar::add(&j, &T::one())?;
    }
    GeneratorSet::new(gens)
}

/// `{(1,j) : 0 ≤ j ≤ k} ∪ {(1 + i·a, k + i·b) : 1 ≤ i ≤ m}`. Requires all
/// parameters ≥ 1 and `b = a·k + 1`, which is exactly saturation.
pub fn two_segment_gamma<T: Scalar>(params: &TwoSegmentParams<T>) -> Result<GeneratorSet<T>> {
    let TwoSegmentParams { k, a, b, m } = params;
    for (name, v) in [("k", k), ("a", a), ("b", b), ("m", m)] {
        if !v.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "{name} must be ≥ 1, got {v}"
            )));
        }
    }
    if *b != scalar::add(&scalar::mul(a, k)?, &T::one())? {
        return Err(Error::InvalidArgument(format!(
            "need b = a·k + 1, got a={a}, b={b}, k={k}"
        )));
    }
    let mut gens = Vec::new();
    let mut j = T::zero();
    while j <= *k {
        gens.push(LatticeVector::new(T::one(), j.clone()));
        j = scalar::add(&j, &T::one())?;
    }
    let corner = LatticeVector::new(T::one(), k.clone());
    let step = LatticeVector::new(a.clone(), b.clone());
    let mut point = corner;
    let mut i = T::zero();
    while i < *m {
        point = point.checked_add(&step)?;
        gens.push(point.clone());
        i = scalar::add(&i, &T::one())?;
    }
    GeneratorSet::new(gens)
}

/// `f_j` for `j ≥ −1`.
pub fn fibonacci<T: Scalar>(j: i64) -> Result<T> {
    if j < -1 {
        return Err(Error::InvalidArgument(format!(
            "Fibonacci index must be ≥ −1, got {j}"
        )));
    }
    // (f_{j-1}, f_j) starting at (f_{-1}, f_0).
    let (mut prev, mut cur) = (T::one(), T::zero());
    if j == -1 {
        return Ok(prev);
    }
    for _ in 0..j {
        let next = scalar::add(&prev, &cur)?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Both sides of `f_n f_{n+r+s} − f_{n+r} f_{n+s} = (−1)^{n+1} f_r f_s`,
/// each evaluated on its own.
pub fn vajda<T: Scalar>(n: i64, r: i64, s: i64) -> Result<(T, T)> {
    if n < 1 || r < 1 || s < 1 {
        return Err(Error::InvalidArgument("Vajda indices must be ≥ 1".into()));
    }
    let f = |j: i64| fibonacci::<T>(j);
    let lhs = scalar::cross(&f(n)?, &f(n + r)?, &f(n + s)?, &f(n + r + s)?)?;
    let product = scalar::mul(&f(r)?, &f(s)?)?;
    let rhs = if n % 2 == 1 {
        product
    } else {
        scalar::neg(&product)?
    };
    Ok((lhs, rhs))
}

/// `{(1,0), (f₁,f₂), (f₃,f₄), …, (f_{l−1},f_l)}` for even `l ≥ 4`.
pub fn fibonacci_gamma<T: Scalar>(l: i64) -> Result<GeneratorSet<T>> {
    require_even_l(l)?;
    let mut gens = vec![LatticeVector::new(T::one(), T::zero())];
    let mut j = 1;
    while j < l {
        gens.push(LatticeVector::new(fibonacci(j)?, fibonacci(j + 1)?));
        j += 2;
    }
    GeneratorSet::new(gens)
}

fn require_even_l(l: i64) -> Result<()> {
    if l < 4 || l % 2 != 0 {
        return Err(Error::InvalidArgument(format!("need even l ≥ 4, got {l}")));
    }
    Ok(())
}

/// The six vectors spanning the minimal generators of the middle Fibonacci
/// charts, for even `i ≥ 2`:
///
/// ```text
/// v₁ = (f_{i−3} − f_{i+1}, f_{i−2} − f_{i+2})    v₄ = (f_{i+1}, f_{i+2})
/// v₂ = (f_{i−3} − f_{i−1}, f_{i−2} − f_i)        v₅ = (f_{i+3} − f_{i+1}, f_{i+4} − f_{i+2})
/// v₃ = (f_{i−1}, f_i)                            v₆ = (f_{i+3} − f_{i−1}, f_{i+4} − f_i)
/// ```
pub fn lemma_vectors<T: Scalar>(i: i64) -> Result<[LatticeVector<T>; 6]> {
    if i < 2 || i % 2 != 0 {
        return Err(Error::InvalidArgument(format!("need even i ≥ 2, got {i}")));
    }
    let f = |d: i64| fibonacci::<T>(i + d);
    let diff = |a: i64, b: i64, c: i64, d: i64| -> Result<LatticeVector<T>> {
        Ok(LatticeVector::new(
            scalar::sub(&f(a)?, &f(b)?)?,
            scalar::sub(&f(c)?, &f(d)?)?,
        ))
    };
    Ok([
        diff(-3, 1, -2, 2)?,
        diff(-3, -1, -2, 0)?,
        LatticeVector::new(f(-1)?, f(0)?),
        LatticeVector::new(f(1)?, f(2)?),
        diff(3, 1, 4, 2)?,
        diff(3, -1, 4, 0)?,
    ])
}

/// `[[f_{l−1}, −f_{l−2}], [f_l, −f_{l−1}]]`: an orientation-reversing
/// symmetry of the Fibonacci set swapping its two ends.
pub fn fib_symmetry<T: Scalar>(l: i64) -> Result<UnimodularMap<T>> {
    require_even_l(l)?;
    let f = |j: i64| fibonacci::<T>(j);
    UnimodularMap::new(
        f(l - 1)?,
        scalar::neg(&f(l - 2)?)?,
        f(l)?,
        scalar::neg(&f(l - 1)?)?,
    )
}
