use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised by the core operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    VertexOutOfRange { vertex: usize, n: usize },
    /// A partition does not cover the vertex set exactly once.
    InvalidPartition(String),
    /// A size guard was exceeded.
    CapExceeded { what: &'static str, size: usize, cap: usize },
    InvalidModulus(u64),
    NotPrime(u64),
    LoopNotAllowed { vertex: usize },
    InvalidPathLength(usize),
    NotAnAutomorphism,
    NotAPermutation,
    NotATree,
    NotAForest,
    NotConnected,
    NotAComponent,
    /// The target has an automorphism of the prime order that was excluded.
    HasOrderPAutomorphism { p: u64 },
    /// Two vertices lie in the same orbit, so no gadget can separate them.
    SameOrbit { x: usize, y: usize },
    NotAnOrbit,
    /// A vector was expected to be constant on every orbit but was not.
    NotOrbitConstant { orbit: Vec<usize> },
    LengthMismatch { left: usize, right: usize },
    /// `basis_from_generators` preconditions do not hold.
    MissingAllOnes,
    InseparablePair { i: usize, j: usize },
    /// An internal consistency check failed. Always a bug.
    VerificationFailed(String),
    /// The bounded gadget search ran out of vertices.
    SearchExhausted { budget: usize },
    NotAnEasyTarget,
    SameVertex,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Error::InvalidPartition(msg) => write!(f, "invalid partition: {msg}"),
            Error::CapExceeded { what, size, cap } => {
                write!(f, "{what}: size {size} exceeds the configured cap {cap}")
            }
            Error::InvalidModulus(k) => write!(f, "modulus must be at least 2, got {k}"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::LoopNotAllowed { vertex } => write!(f, "loop at vertex {vertex} is not allowed here"),
            Error::InvalidPathLength(k) => write!(f, "path length must be at least 1, got {k}"),
            Error::NotAnAutomorphism => f.write_str("permutation is not an automorphism"),
            Error::NotAPermutation => f.write_str("image array is not a bijection"),
            Error::NotATree => f.write_str("graph is not a tree"),
            Error::NotAForest => f.write_str("graph is not a forest"),
            Error::NotConnected => f.write_str("graph is not connected"),
            Error::NotAComponent => f.write_str("vertex set is not a connected component"),
            Error::HasOrderPAutomorphism { p } => {
                write!(f, "target has an automorphism of order {p}")
            }
            Error::SameOrbit { x, y } => {
                write!(f, "vertices {x} and {y} lie in the same automorphism orbit")
            }
            Error::NotAnOrbit => f.write_str("vertex set is not an orbit of the automorphism group"),
            Error::NotOrbitConstant { orbit } => {
                write!(f, "vector is not constant on orbit {orbit:?}")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "vector lengths differ: {left} vs {right}")
            }
            Error::MissingAllOnes => f.write_str("generator set lacks the all-ones vector"),
            Error::InseparablePair { i, j } => {
                write!(f, "no generator separates coordinates {i} and {j}")
            }
            Error::VerificationFailed(msg) => write!(f, "internal verification failed: {msg}"),
            Error::SearchExhausted { budget } => {
                write!(f, "no distinguishing gadget found within {budget} vertices")
            }
            Error::NotAnEasyTarget => f.write_str("target is not one of the four trivial targets"),
            Error::SameVertex => f.write_str("the two pinned vertices must differ"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
