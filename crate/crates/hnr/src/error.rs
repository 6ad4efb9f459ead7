//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong when validating parameters, building
/// elements, converting coordinates, or evaluating expressions.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The Hecke deformation parameter q must be invertible.
    #[error("q must be nonzero")]
    ZeroQ,

    /// The spectral parameters u_1..u_r must be pairwise distinct.
    #[error("u[{0}] equals u[{1}]; the u parameters must be pairwise distinct")]
    RepeatedU(usize, usize),

    /// A vector or matrix does not have the announced shape.
    #[error("bad shape: {0}")]
    BadShape(String),

    /// A strand, color, or coefficient index lies outside its range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// Two combinatorial objects of different sizes were combined.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// A numeric argument lies outside its admissible range.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// Two elements from different contexts were combined.
    #[error("elements belong to different parameter contexts")]
    ContextMismatch,

    /// A coordinate label does not belong to the requested basis.
    #[error("bad coordinate label: {0}")]
    BadLabel(String),

    /// The trace form is degenerate: u_1 ... u_r = 0, so duals do not exist.
    #[error("trace form is not symmetrizing: u_1 * ... * u_r = 0")]
    NotSymmetrizing,

    /// The requested computation exceeds the configured size guard.
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    /// An internal cross-check (two routes to the same value) failed.
    #[error("internal consistency check failed: {0}")]
    AssertFailed(String),

    /// A linear system had no unique solution.
    #[error("singular linear system")]
    Singular,

    /// An element expression failed to parse.
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
