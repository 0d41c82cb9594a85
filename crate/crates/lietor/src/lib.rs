//! Exact-arithmetic toolkit for finite-dimensional Lie algebras given by
//! structure constants: Gaussian-rational linear algebra, derivation algebras,
//! maximal tori, maximal solvable extensions, and Chevalley-Eilenberg
//! cohomology (direct and factorized through the invariant subcomplex).
//!
//! All computation is over the field Q(i); results are exact and
//! deterministic. With the `parallel` feature (on by default) the heavy
//! eliminations and scans run on rayon but remain bit-identical to the
//! sequential code path.

pub mod catalog;
pub mod cohomology;
pub mod deriv;
pub mod error;
pub mod extension;
pub mod io;
pub mod lie;
pub mod matrix;
pub mod roots;
pub mod scalar;
pub mod torus;

pub use error::Error;
pub use extension::SolvableExtension;
pub use lie::LieAlgebra;
pub use matrix::{Matrix, Mode};
pub use scalar::Scalar;

/// Maximum number of matrix cells a single elimination instance may allocate,
/// from `LIETOR_MAX_CELLS` (default 2_000_000). Read per call so tests and
/// child processes can vary it.
pub fn cell_limit() -> u64 {
    std::env::var("LIETOR_MAX_CELLS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(2_000_000)
}

/// Refuses instances whose `rows x cols` workspace exceeds [`cell_limit`].
pub fn check_cells(rows: usize, cols: usize) -> Result<(), Error> {
    let cells = rows as u64 * cols as u64;
    let limit = cell_limit();
    if cells > limit {
        return Err(Error::TooLarge { cells, limit });
    }
    Ok(())
}
