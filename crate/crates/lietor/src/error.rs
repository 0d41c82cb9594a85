//! Crate-wide error type. Every fallible operation returns `Result<_, Error>`
//! so callers (and the CLI) can map failures to stable categories.

use thiserror::Error;

/// Errors raised by validation, parsing, and the size guard.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes disagree (matrix arithmetic, basis length, vector length).
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A square matrix required to be invertible has rank below its size.
    #[error("singular matrix: {0}")]
    SingularMatrix(String),

    /// The algebra was required to be nilpotent but its lower central series
    /// stabilizes at a nonzero term.
    #[error("algebra is not nilpotent: lower central series stabilizes at dimension {stable_dim}")]
    NotNilpotent { stable_dim: usize },

    /// Every derivation is nilpotent, so no nonzero torus of diagonalizable
    /// derivations exists and no extension can be built.
    #[error("algebra is characteristically nilpotent: the weight equations force every diagonal derivation to zero")]
    CharacteristicallyNilpotent,

    /// A set of matrices was required to span a commutator-closed space but
    /// some bracket leaves the span.
    #[error("span is not closed under commutator: [{left}, {right}] leaves the span")]
    NotClosedUnderCommutator { left: usize, right: usize },

    /// A root multiplicity exceeds one where the counting formula requires
    /// all multiplicities to be exactly one.
    #[error("root multiplicity {multiplicity} at root index {root} exceeds one")]
    MultiplicityTooHigh { root: usize, multiplicity: usize },

    /// A bracket of root spaces lands outside the root space of the summed root.
    #[error("root grading violated: [component {left}, component {right}] leaves the expected root space")]
    GradingViolation { left: usize, right: usize },

    /// Requested cohomology degree is outside 0..=dim or above the supported cap.
    #[error("degree {degree} out of range for dimension {dim}: {reason}")]
    DegreeOutOfRange {
        degree: usize,
        dim: usize,
        reason: String,
    },

    /// The instance would allocate more matrix cells than the configured limit.
    #[error("instance needs {cells} matrix cells, over the limit {limit} (set LIETOR_MAX_CELLS to raise)")]
    TooLarge { cells: u64, limit: u64 },

    /// Malformed scalar, JSON document, or matrix text.
    #[error("parse error: {0}")]
    Parse(String),

    /// Catalog lookup with an unknown name.
    #[error("unknown catalog entry '{0}'")]
    UnknownCatalogEntry(String),

    /// Parameter missing, malformed, or outside its documented range.
    #[error("bad parameter: {0}")]
    BadParam(String),

    /// The complement part of an extension does not act diagonally on the
    /// nilradical basis, so the factorized cohomology route does not apply.
    #[error("complement action is not diagonal on the given basis: x_{part} maps e_{basis_index} off its own line")]
    NondiagonalAction { part: usize, basis_index: usize },

    /// Structural validation failed (Jacobi identity, index bounds,
    /// antisymmetry, certificate checks).
    #[error("validation failed: {0}")]
    Validation(String),

    /// Underlying I/O failure while reading or writing documents.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
