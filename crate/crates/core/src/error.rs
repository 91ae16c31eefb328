use thiserror::Error;

pub type Result<V, E = Error> = std::result::Result<V, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in exact lattice arithmetic")]
    Overflow,
    #[error("the zero vector has no primitive direction")]
    ZeroVector,
    #[error("invalid cone: {0}")]
    InvalidCone(String),
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("generators do not span a strictly convex cone")]
    NotStrictlyConvex,
    #[error("generators span a cone of dimension < 2")]
    Degenerate,
    #[error("lattice index is {0}, expected 1")]
    LatticeIndex(String),
    #[error("pair ({0}, {1}) has zero determinant")]
    CollinearPair(usize, usize),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("fast-path precondition failed: generator set is not a Hilbert basis")]
    NotHilbertBasis,
    #[error("invalid continued fraction: {0}")]
    InvalidFraction(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
