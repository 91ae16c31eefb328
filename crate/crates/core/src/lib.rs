//! Exact combinatorial Nash blowups of affine toric surfaces.
//!
//! A toric surface is presented by a finite set `Γ ⊂ Z²` of lattice vectors
//! spanning a strictly convex cone. Its Nash blowup is covered by affine
//! charts that are again toric surfaces, each given by an explicit generator
//! set computed here from pairwise sums and differences of `Γ`. Iterating
//! the construction and testing every chart for smoothness yields a finite
//! resolution DAG.
//!
//! Everything is generic over an exact integer [`Scalar`]. The aliases at the
//! crate root fix it to `i64` (checked, overflow is a hard error) or to
//! [`num_bigint::BigInt`].

pub mod contfrac;
pub mod error;
pub mod families;
pub mod lattice;
pub mod nash;
pub mod resolution;
pub mod scalar;
pub mod semigroup;

pub use contfrac::{
    fraction_shape, generators_from_fraction, hj_eval, hj_expand, invert_fraction,
    self_intersections, FractionShape, HJFraction,
};
pub use error::{Error, Result};
pub use families::{
    fib_symmetry, fibonacci, fibonacci_gamma, lemma_vectors, one_segment_gamma, two_segment_gamma,
    vajda, TwoSegmentParams,
};
pub use lattice::{
    apply_map, cone_contains, det2, lattice_index, map_to_first_axis, normal_form, primitive,
    Cone2, LatticeVector, NormalForm, UnimodularMap,
};
pub use nash::{
    chart, gamma0, nash_blowup, newton_vertices, newton_vertices_fastpath, newton_vertices_oracle,
    NashChart, SumPoint,
};
pub use resolution::{
    classify, resolve, scan, ChartClass, Child, NodeId, ResolutionNode, ResolutionTree, ScanRow,
    ScanStatus, Status, DEFAULT_MAX_DEPTH,
};
pub use scalar::Scalar;
pub use semigroup::{
    canonical_form, contains, hilbert_basis, hilbert_basis_bruteforce, is_saturated, is_smooth,
    minimal_generators, positive_functional, theta_profile, GeneratorSet, Membership, ThetaProfile,
};

pub use num_bigint::BigInt;

pub type Vector = LatticeVector<i64>;
pub type Cone = Cone2<i64>;
pub type Map = UnimodularMap<i64>;
pub type Gens = GeneratorSet<i64>;
pub type Fraction = HJFraction<i64>;
pub type Tree = ResolutionTree<i64>;

pub type BigVector = LatticeVector<BigInt>;
pub type BigCone = Cone2<BigInt>;
pub type BigMap = UnimodularMap<BigInt>;
pub type BigGens = GeneratorSet<BigInt>;
pub type BigFraction = HJFraction<BigInt>;
pub type BigTree = ResolutionTree<BigInt>;
