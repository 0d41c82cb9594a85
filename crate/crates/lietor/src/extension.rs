//! Maximal solvable extensions: adjoining the canonical maximal torus to a
//! nilpotent algebra as abelian outer generators acting diagonally, the split
//! variant assembled per direct summand, a nilradical certificate, and
//! reconstruction of extension structure from a plain algebra.

use crate::error::Error;
use crate::lie::{LieAlgebra, Subspace, unit_vector};
use crate::matrix::{Matrix, Mode};
use crate::scalar::Scalar;
use crate::torus::{
    ConditionAReport, WeightMatrix, condition_a_check, diagonal_is_derivation, maximal_torus,
};

/// A solvable algebra `R = N + Q` on basis `e1..en, x1..xs` where the `x_j`
/// commute and act diagonally on the `e_i` with weights from `torus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvableExtension {
    pub algebra: LieAlgebra,
    pub nilradical_dim: usize,
    pub torus: WeightMatrix,
}

impl SolvableExtension {
    /// Codimension of the nilradical (number of torus generators).
    pub fn s(&self) -> usize {
        self.algebra.dim() - self.nilradical_dim
    }

    /// The restriction of the bracket to the first `nilradical_dim` basis
    /// vectors. Errors if those vectors do not close among themselves.
    pub fn nilradical(&self) -> Result<LieAlgebra, Error> {
        let n = self.nilradical_dim;
        let mut out = LieAlgebra::new(n);
        for (&(i, j), terms) in self.algebra.brackets() {
            if i >= n || j >= n {
                continue;
            }
            for (t, c) in terms {
                if *t >= n {
                    return Err(Error::Validation(format!(
                        "nilradical block is not closed: [e{}, e{}] hits basis vector {}",
                        i + 1,
                        j + 1,
                        t + 1
                    )));
                }
                out.add_bracket_term(i, j, *t, c.clone())?;
            }
        }
        Ok(out)
    }

    /// Generator-separation report for the stored torus on the nilradical.
    pub fn condition_a(&self, mode: Mode) -> Result<ConditionAReport, Error> {
        condition_a_check(&self.nilradical()?, &self.torus, mode)
    }
}

fn extension_labels(n: usize, s: usize) -> Vec<String> {
    (1..=n)
        .map(|k| format!("e{k}"))
        .chain((1..=s).map(|k| format!("x{k}")))
        .collect()
}

/// Semidirect sum of `n` with abelian generators acting by the given
/// diagonal weight rows: `[e_i, x_j] = rows[j][i] e_i`.
///
/// Each row must be a diagonal derivation of `n`; rows need not form a
/// maximal torus, which makes this the building block for non-maximal
/// extensions and hand-specified tables as well.
pub fn extension_with_weights(n: &LieAlgebra, rows: &Matrix) -> Result<LieAlgebra, Error> {
    let nd = n.dim();
    let s = rows.nrows();
    if rows.ncols() != nd {
        return Err(Error::DimensionMismatch(format!(
            "weight rows have {} columns for nilradical dimension {nd}",
            rows.ncols()
        )));
    }
    for k in 0..s {
        if !diagonal_is_derivation(n, rows.row(k)) {
            return Err(Error::Validation(format!(
                "weight row {} is not a diagonal derivation",
                k + 1
            )));
        }
    }
    let mut r = LieAlgebra::new(nd + s);
    for (&(i, j), terms) in n.brackets() {
        for (t, c) in terms {
            r.add_bracket_term(i, j, *t, c.clone())?;
        }
    }
    for j in 0..s {
        for i in 0..nd {
            let alpha = rows[(j, i)].clone();
            if !alpha.is_zero() {
                r.add_bracket_term(i, nd + j, i, alpha)?;
            }
        }
    }
    r.set_labels(extension_labels(nd, s))?;
    Ok(r)
}

/// Builds the maximal solvable extension of a nilpotent algebra by its
/// canonical maximal torus.
///
/// Errors when `n` fails the Jacobi identity, is not nilpotent, or has no
/// nonzero diagonal derivation at all (torus dimension zero).
pub fn build_max_extension(n: &LieAlgebra, mode: Mode) -> Result<SolvableExtension, Error> {
    n.validate()?;
    let torus = maximal_torus(n, mode)?;
    if torus.s() == 0 {
        return Err(Error::CharacteristicallyNilpotent);
    }
    let algebra = extension_with_weights(n, &torus.weights)?;
    algebra.validate()?;
    debug_assert!(algebra.is_solvable()?);
    Ok(SolvableExtension {
        algebra,
        nilradical_dim: n.dim(),
        torus,
    })
}

/// Certifies that the designated nilradical block really is the nilradical:
/// it must be a nilpotent ideal, and every torus row must be nonzero so that
/// no element of the complement acts nilpotently.
pub fn verify_nilradical_certificate(r: &SolvableExtension) -> Result<bool, Error> {
    let nd = r.nilradical_dim;
    let dim = r.algebra.dim();
    let Ok(block) = r.nilradical() else {
        return Ok(false);
    };
    if !block.is_nilpotent()? {
        return Ok(false);
    }
    // Ideal test: bracketing any basis vector into the block stays in it.
    let block_span = Subspace::from_vectors(
        dim,
        (0..nd).map(|i| unit_vector(dim, i)).collect(),
    )?;
    for a in 0..dim {
        for i in 0..nd {
            let v = r
                .algebra
                .bracket(&unit_vector(dim, a), &unit_vector(dim, i))?;
            if !block_span.contains(&v) {
                return Ok(false);
            }
        }
    }
    if r.torus.s() != dim - nd {
        return Ok(false);
    }
    for k in 0..r.torus.s() {
        if r.torus.weights.row(k).iter().all(Scalar::is_zero) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds the maximal extension of a direct sum part by part and reorders
/// the basis to `e`-first; the result is asserted to coincide with the
/// extension of the direct sum built in one step.
pub fn build_split_extension(
    parts: &[LieAlgebra],
    mode: Mode,
) -> Result<SolvableExtension, Error> {
    if parts.is_empty() {
        return Err(Error::Validation("split extension of zero parts".into()));
    }
    let mut extensions = Vec::with_capacity(parts.len());
    for (t, part) in parts.iter().enumerate() {
        match build_max_extension(part, mode) {
            Ok(ext) => extensions.push(ext),
            Err(Error::CharacteristicallyNilpotent) => {
                return Err(Error::Validation(format!(
                    "part {} of the split extension is characteristically nilpotent",
                    t + 1
                )));
            }
            Err(e) => return Err(e),
        }
    }

    let mut sum = extensions[0].algebra.clone();
    for ext in &extensions[1..] {
        sum = sum.direct_sum(&ext.algebra);
    }
    // Permute the interleaved (e-block, x-block) pairs into all e's first.
    let total_dim = sum.dim();
    let mut old_positions = Vec::with_capacity(total_dim);
    let mut offset = 0;
    for ext in &extensions {
        old_positions.extend(offset..offset + ext.nilradical_dim);
        offset += ext.algebra.dim();
    }
    offset = 0;
    for ext in &extensions {
        old_positions.extend(offset + ext.nilradical_dim..offset + ext.algebra.dim());
        offset += ext.algebra.dim();
    }
    let mut p = Matrix::zeros(total_dim, total_dim);
    for (new, &old) in old_positions.iter().enumerate() {
        p[(new, old)] = Scalar::one();
    }
    let mut permuted = sum.apply_basechange(&p)?;

    let mut nilradical = parts[0].clone();
    for part in &parts[1..] {
        nilradical = nilradical.direct_sum(part);
    }
    let canonical = build_max_extension(&nilradical, mode)?;
    if permuted != canonical.algebra {
        return Err(Error::Validation(
            "split extension disagrees with the direct construction".into(),
        ));
    }
    permuted.set_labels(extension_labels(
        canonical.nilradical_dim,
        canonical.s(),
    ))?;
    Ok(SolvableExtension {
        algebra: permuted,
        nilradical_dim: canonical.nilradical_dim,
        torus: canonical.torus,
    })
}

/// Reinterprets a plain algebra as a solvable extension with the given
/// nilradical dimension, validating the expected shape: Jacobi, commuting
/// complement generators acting diagonally, and a closed nilpotent block.
///
/// The recovered torus rows are read off the diagonal actions; no free-set
/// provenance is attached.
pub fn from_algebra(algebra: LieAlgebra, nilradical_dim: usize) -> Result<SolvableExtension, Error> {
    let dim = algebra.dim();
    let n = nilradical_dim;
    if n > dim {
        return Err(Error::DimensionMismatch(format!(
            "nilradical dimension {n} exceeds algebra dimension {dim}"
        )));
    }
    algebra.validate()?;
    let s = dim - n;
    let mut weights = Matrix::zeros(s, n);
    for (&(i, j), terms) in algebra.brackets() {
        match (i < n, j < n) {
            (true, true) => {
                for (t, _) in terms {
                    if *t >= n {
                        return Err(Error::Validation(format!(
                            "nilradical block is not closed: [e{}, e{}] hits basis vector {}",
                            i + 1,
                            j + 1,
                            t + 1
                        )));
                    }
                }
            }
            (true, false) => {
                // [e_i, x_{j-n}] must be a multiple of e_i.
                if terms.len() != 1 || terms[0].0 != i {
                    return Err(Error::NondiagonalAction {
                        part: j - n + 1,
                        basis_index: i + 1,
                    });
                }
                weights[(j - n, i)] = terms[0].1.clone();
            }
            (false, true) => unreachable!("brackets store i < j"),
            (false, false) => {
                return Err(Error::Validation(format!(
                    "complement is not abelian: [x{}, x{}] is nonzero",
                    i - n + 1,
                    j - n + 1
                )));
            }
        }
    }
    let ext = SolvableExtension {
        algebra,
        nilradical_dim: n,
        torus: WeightMatrix {
            weights,
            free_set: None,
        },
    };
    if !ext.nilradical()?.is_nilpotent()? {
        return Err(Error::NotNilpotent {
            stable_dim: ext
                .nilradical()?
                .lower_central_series()?
                .last()
                .expect("nonempty")
                .dim(),
        });
    }
    Ok(ext)
}
