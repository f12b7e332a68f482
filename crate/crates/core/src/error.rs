use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::base::Subset;

/// Errors raised by the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Ground-set size outside `1..=MAX_N` (or outside the cap of a particular routine).
    GroundSetSize { n: usize, max: usize },
    /// Two objects that must live on the same ground set do not.
    GroundSetMismatch { left: usize, right: usize },
    /// An element outside `[n]` (elements are 1-based).
    ElementOutOfRange { element: usize, n: usize },
    /// Two subsets that must have equal cardinality do not.
    CardinalityMismatch { left: usize, right: usize },
    /// Gale order precondition `lower <= upper` failed.
    NotGaleOrdered { lower: Subset, upper: Subset },
    /// The one-line notation is not a permutation of `1..=n`.
    InvalidPermutation,
    /// Strong Bruhat precondition `u <= v` failed.
    NotBruhatOrdered,
    /// An index (k, i, j) outside its allowed range.
    IndexOutOfRange { index: usize, min: usize, max: usize },
    /// A set-function table of the wrong length.
    TableLength { expected: usize, found: usize },
    /// `mu(empty) != 0`.
    NonzeroEmptyValue(i64),
    /// Submodular inequality violated at `(s, t)`.
    NotSubmodular { s: Subset, t: Subset },
    /// Empty input where at least one element is required.
    Empty(&'static str),
    /// A Pluecker tuple `(S, a, b, c)` that does not satisfy `a < b < c`, `a, b, c` outside `S`.
    InvalidPluckerTuple,
    /// A crystal operator was applied to a polytope that is not MV.
    NotMv,
    /// Basis family fails the exchange axiom.
    ExchangeFailure { b1: Subset, b2: Subset, x: usize },
    /// Matroid ranks not strictly increasing along a flag.
    RankOrder { lower: usize, upper: usize },
    /// Consecutive flag constituents are not a matroid quotient.
    NotQuotient { index: usize },
    /// Building set closure fails for an intersecting pair.
    NotBuildingSet { s: Subset, t: Subset },
    /// Graph input error (loop or repeated edge).
    InvalidGraph(String),
    /// The support function of a point set is not that of its convex hull read as a
    /// generalized permutahedron; carries a vertex of the would-be polytope that is missing
    /// from the point set.
    NotGeneralizedPermutahedron(Vec<i64>),
    /// A dilation factor or multiplicity that must be positive.
    NonPositive(i64),
    /// Polynomial that must be nonzero is zero.
    ZeroPolynomial,
    /// Exponent vector or composition of the wrong length.
    ArityMismatch { expected: usize, found: usize },
    /// An internal consistency assertion failed. Indicates a bug rather than bad input.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GroundSetSize { n, max } => {
                write!(f, "ground set size {n} outside supported range 1..={max}")
            }
            Error::GroundSetMismatch { left, right } => {
                write!(f, "ground set mismatch: {left} vs {right}")
            }
            Error::ElementOutOfRange { element, n } => {
                write!(f, "element {element} outside [1, {n}]")
            }
            Error::CardinalityMismatch { left, right } => {
                write!(f, "cardinality mismatch: {left} vs {right}")
            }
            Error::NotGaleOrdered { lower, upper } => {
                write!(f, "{lower} is not below {upper} in the Gale order")
            }
            Error::InvalidPermutation => f.write_str("not a permutation"),
            Error::NotBruhatOrdered => f.write_str("permutations are not Bruhat ordered"),
            Error::IndexOutOfRange { index, min, max } => {
                write!(f, "index {index} outside [{min}, {max}]")
            }
            Error::TableLength { expected, found } => {
                write!(f, "table length {found}, expected {expected}")
            }
            Error::NonzeroEmptyValue(v) => write!(f, "value on the empty set is {v}, expected 0"),
            Error::NotSubmodular { s, t } => write!(f, "submodularity fails at S={s}, T={t}"),
            Error::Empty(what) => write!(f, "empty {what}"),
            Error::InvalidPluckerTuple => f.write_str("Pluecker tuple needs a < b < c, none of them in S"),
            Error::NotMv => f.write_str("polytope is not an MV polytope"),
            Error::ExchangeFailure { b1, b2, x } => {
                write!(f, "basis exchange fails: B1={b1}, B2={b2}, x={x} has no replacement")
            }
            Error::RankOrder { lower, upper } => {
                write!(f, "ranks must increase strictly: {lower} then {upper}")
            }
            Error::NotQuotient { index } => {
                write!(
                    f,
                    "constituent {} is not a quotient of constituent {}",
                    index,
                    index + 1
                )
            }
            Error::NotBuildingSet { s, t } => {
                write!(f, "{s} and {t} intersect but their union is missing")
            }
            Error::InvalidGraph(msg) => write!(f, "invalid graph: {msg}"),
            Error::NotGeneralizedPermutahedron(v) => {
                write!(
                    f,
                    "hull is not a generalized permutahedron: vertex {v:?} is not among the points"
                )
            }
            Error::NonPositive(v) => write!(f, "expected a positive integer, got {v}"),
            Error::ZeroPolynomial => f.write_str("zero polynomial"),
            Error::ArityMismatch { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
