//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide error enum.
#[derive(Debug, Error)]
pub enum Error {
    /// Catalog text could not be parsed; `line` is 1-based.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A closure or construction would exceed the configured element cap.
    #[error("element cap exceeded: needed more than {cap} elements")]
    CapExceeded { cap: usize },

    /// An element or subgroup was used with a group it does not belong to.
    #[error("element or subgroup belongs to a different group")]
    CrossGroup,

    /// Element index outside `[0, order)`.
    #[error("element index {idx} out of range for group of order {order}")]
    IndexRange { idx: usize, order: usize },

    /// Ingested data fails the group axioms.
    #[error("not a group: {0}")]
    NotAGroup(String),

    /// A prime was expected.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// The operation is only defined for p-groups.
    #[error("group of order {0} is not a p-group")]
    NotPGroup(usize),

    /// The subgroup passed to a quotient is not normal.
    #[error("subgroup of order {0} is not normal")]
    NotNormal(usize),

    /// The invariant is undefined for abelian groups.
    #[error("operation undefined for an abelian group")]
    AbelianGroup,

    /// The operation requires a trivial centre.
    #[error("operation requires a group with trivial centre")]
    NontrivialCenter,

    /// The operation requires a non-trivial group.
    #[error("operation undefined for the trivial group")]
    TrivialGroup,

    /// Construction parameters violate the family's preconditions.
    #[error("invalid construction: {0}")]
    Construction(String),

    /// Generic argument validation failure.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
