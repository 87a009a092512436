use thiserror::Error;

use crate::combinatorics::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),
    #[error("generalized composition needs at least one nonempty block")]
    InvalidGeneralizedComposition,
    #[error("{0:?} is not a permutation of 1..n")]
    InvalidPermutation(Vec<usize>),
    #[error("value {value} is outside [1, {bound}]")]
    OutOfRange { value: usize, bound: usize },
    #[error("rows do not match the shape {0:?}")]
    ShapeMismatch(Vec<usize>),
    #[error("filling is not strictly increasing at cell {0}")]
    NotIncreasing(Cell),
    #[error("value {0} is missing, so the filling is not gapless")]
    GapAt(usize),
    #[error("value {0} does not occur in the tableau")]
    ValueAbsent(usize),
    #[error("value {0} occurs only once, so it has no lattice path")]
    NotMultiValued(usize),
    #[error("no lattice path satisfies the crossing conditions for value {0}")]
    NoPath(usize),
    #[error("module has an empty basis")]
    EmptyBasis,
    #[error("{0} is not weakly below {1} in the left weak order")]
    NotWeakLeq(String, String),
    #[error("the SendTo graph has a cycle through basis element {0}")]
    NotTriangular(usize),
    #[error("{0} did not terminate")]
    NonTermination(&'static str),
    #[error("partition {0:?} has more than two rows")]
    TooManyRows(Vec<usize>),
    #[error("tableau is not a member of the class")]
    NotInClass,
    #[error("invalid standard ribbon tableau: {0}")]
    InvalidSrt(String),
    #[error("labels could not be ordered: {0}")]
    Ordering(String),
}

pub type Result<T> = std::result::Result<T, Error>;
