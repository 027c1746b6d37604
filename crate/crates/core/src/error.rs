use std::fmt::Debug;

use thiserror::Error;

/// Failures of the checked list operations.
///
/// Each variant is the runtime residue of a proof obligation that a
/// dependently typed host would discharge statically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ListError<I: Debug> {
    /// `head`/`tail` on an empty list.
    #[error("list is empty")]
    EmptyList,
    /// A pair's stated index disagrees with the index of its element.
    #[error("stated index disagrees with element index at position {position}")]
    IndexMismatch { position: usize },
    /// The predicate has no witness for this index.
    #[error("index {index:?} at position {position} does not satisfy the predicate")]
    PredicateViolation { position: usize, index: I },
    /// A caller-supplied witness does not hold for the element's index.
    #[error("witness does not hold for index {index:?}")]
    InvalidWitness { index: I },
}
