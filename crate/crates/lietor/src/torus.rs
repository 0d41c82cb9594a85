//! Weight equations and maximal tori of nilpotent Lie algebras: the linear
//! system every diagonal derivation must solve, its canonical fundamental
//! solutions, and the separation condition on generator weights.

use crate::error::Error;
use crate::lie::LieAlgebra;
use crate::matrix::{Matrix, Mode};
use crate::scalar::Scalar;
use std::collections::HashSet;

/// The linear system on basis weights `(α_1, ..., α_n)`: one row
/// `α_i + α_j - α_t = 0` per nonzero structure constant, deduplicated.
#[derive(Clone, Debug)]
pub struct WeightEquations {
    pub matrix: Matrix,
}

impl WeightEquations {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// A maximal torus of diagonal derivations: row `k` of `weights` holds the
/// eigenvalues of the `k`-th torus generator on the basis.
///
/// Columns are the weight vectors of the basis elements. `free_set` records
/// which basis columns carry the identity pattern when the torus came out of
/// the canonical solver; it is `None` for tori reconstructed from documents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMatrix {
    pub weights: Matrix,
    pub free_set: Option<Vec<usize>>,
}

impl WeightMatrix {
    /// Torus dimension (number of independent diagonal derivations).
    pub fn s(&self) -> usize {
        self.weights.nrows()
    }

    pub fn dim(&self) -> usize {
        self.weights.ncols()
    }

    /// Weight vector of basis element `i` (0-based): column `i`.
    pub fn weight_column(&self, i: usize) -> Vec<Scalar> {
        (0..self.s()).map(|k| self.weights[(k, i)].clone()).collect()
    }
}

/// Builds the weight-equation system.
///
/// Rows are generated in lexicographic `(i, j, t)` order over the stored
/// brackets (`i < j`), coincident indices collapse into one accumulated row,
/// and duplicate rows keep only their first occurrence.
pub fn weight_equations(l: &LieAlgebra) -> WeightEquations {
    let n = l.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut seen: HashSet<Vec<Scalar>> = HashSet::new();
    for (&(i, j), terms) in l.brackets() {
        for (t, _) in terms {
            let mut row = vec![Scalar::zero(); n];
            row[i] += &Scalar::one();
            row[j] += &Scalar::one();
            row[*t] -= &Scalar::one();
            if seen.insert(row.clone()) {
                rows.push(row);
            }
        }
    }
    let matrix = if rows.is_empty() {
        Matrix::zeros(0, n)
    } else {
        Matrix::from_rows(rows).expect("rows share length n")
    };
    WeightEquations { matrix }
}

/// Canonical maximal torus of a nilpotent algebra.
///
/// Solves the weight equations with generator columns preferred as free
/// parameters (generators ascending, then the rest ascending), so each
/// torus generator restricts to the identity pattern on the free set; rows
/// are ordered by ascending free column. Every row is re-checked to be a
/// derivation.
pub fn maximal_torus(l: &LieAlgebra, mode: Mode) -> Result<WeightMatrix, Error> {
    if !l.is_nilpotent()? {
        let stable = l.lower_central_series()?.last().expect("nonempty").dim();
        return Err(Error::NotNilpotent { stable_dim: stable });
    }
    let n = l.dim();
    let eqs = weight_equations(l);
    let gens = l.generator_indices()?;
    let gen_set: HashSet<usize> = gens.iter().copied().collect();
    let mut priority = gens.clone();
    priority.extend((0..n).filter(|c| !gen_set.contains(c)));
    let (rows, free) = eqs.matrix.nullspace_with_priority_full(&priority, mode);
    let weights = if rows.is_empty() {
        Matrix::zeros(0, n)
    } else {
        Matrix::from_rows(rows).expect("solution rows share length n")
    };
    for k in 0..weights.nrows() {
        debug_assert!(diagonal_is_derivation(l, weights.row(k)));
    }
    Ok(WeightMatrix {
        weights,
        free_set: Some(free),
    })
}

/// Checks that `diag(α_1, ..., α_n)` satisfies the Leibniz rule.
pub fn diagonal_is_derivation(l: &LieAlgebra, alpha: &[Scalar]) -> bool {
    let n = l.dim();
    if alpha.len() != n {
        return false;
    }
    for (&(i, j), terms) in l.brackets() {
        let scale = &alpha[i] + &alpha[j];
        for (t, _) in terms {
            if alpha[*t] != scale {
                return false;
            }
        }
    }
    true
}

/// Result of the generator-separation check. Index pairs and the free set
/// are reported 1-based to match basis labels `e1..en`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionAReport {
    /// True when all generator pairs outside the free set have distinct
    /// weight columns (vacuously true when fewer than two such generators).
    pub holds: bool,
    /// Generator pairs `(i, j)` with `i < j`, both outside the free set,
    /// whose weight columns coincide.
    pub violations: Vec<(usize, usize)>,
    pub free_set: Vec<usize>,
    /// Set when some free column is not a generator; the predicate is still
    /// evaluated against the computed free set, but the basis is arranged
    /// unusually and the uniqueness theory may not apply as stated.
    pub free_set_outside_generators: bool,
}

/// Checks whether distinct generators outside the free set are separated by
/// the torus weights.
///
/// Uses `w.free_set` when present, otherwise recomputes the canonical torus
/// to obtain one. Column equality is basis-independent for a fixed row span.
pub fn condition_a_check(
    l: &LieAlgebra,
    w: &WeightMatrix,
    mode: Mode,
) -> Result<ConditionAReport, Error> {
    let free: Vec<usize> = match &w.free_set {
        Some(f) => f.clone(),
        None => maximal_torus(l, mode)?
            .free_set
            .expect("canonical torus always records its free set"),
    };
    let gens = l.generator_indices()?;
    let gen_set: HashSet<usize> = gens.iter().copied().collect();
    let free_set_outside_generators = free.iter().any(|c| !gen_set.contains(c));
    let check: Vec<usize> = gens
        .iter()
        .copied()
        .filter(|g| !free.contains(g))
        .collect();
    let mut violations = Vec::new();
    for (a, &i) in check.iter().enumerate() {
        for &j in &check[a + 1..] {
            if w.weight_column(i) == w.weight_column(j) {
                violations.push((i + 1, j + 1));
            }
        }
    }
    Ok(ConditionAReport {
        holds: violations.is_empty(),
        violations,
        free_set: free.iter().map(|c| c + 1).collect(),
        free_set_outside_generators,
    })
}
