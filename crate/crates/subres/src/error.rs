//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by polynomial, matrix and subresultant operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    ZeroDivisor,

    /// An operation that needs a nonzero polynomial received zero.
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    /// A remainder sequence was requested for a zero input.
    #[error("remainder sequences require nonzero inputs")]
    ZeroInput,

    /// A determinant or solve was requested on a non-square matrix.
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    /// The cofactor-expansion determinant is capped at small orders.
    #[error("cofactor expansion is limited to order {max}, got {order}")]
    TooLarge { order: usize, max: usize },

    /// The shared elimination block `U` of a reduced level is singular.
    /// `level` is 0 for a standalone row solve.
    #[error("singular U block at level {level}")]
    SingularU { level: usize },

    /// A leading principal minor required by condensation vanishes.
    #[error("singular pivot: leading principal minor of order {order} vanishes")]
    SingularPivot { order: usize },

    /// An index `j`, `tau` or row/column index is outside its valid range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// Inputs whose degrees cannot form the requested object.
    #[error("degenerate degrees: {0}")]
    DegenerateDegrees(String),

    /// A degree chain is invalid for the requested (k, j).
    #[error("bad degree chain: {0}")]
    BadChain(String),

    /// Strict layout mode refused a depth that has not been validated.
    #[error("block layout unresolved: {0}")]
    LayoutUnresolved(String),

    /// The leading coefficient that fixes a nominal degree vanished.
    #[error("vanishing leading determinant at level {level}")]
    VanishingLeading { level: usize },

    /// A degree chain was requested from an incomplete sequence.
    #[error("remainder sequence is incomplete")]
    Incomplete,

    /// Expression parsing failed at a byte offset.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An internal invariant was violated; always a bug.
    #[error("internal invariant breach: {0}")]
    Internal(String),
}
