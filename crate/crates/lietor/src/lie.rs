//! Lie algebras given by exact structure constants on a fixed basis:
//! brackets, Jacobi validation, canonical subspaces, central/derived series,
//! generators, direct sums, and base changes.

use crate::error::Error;
use crate::matrix::{Matrix, Mode};
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// Standard basis vector `e_i` (0-based) in dimension `dim`.
pub fn unit_vector(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = Scalar::one();
    v
}

/// A finite-dimensional algebra over Q(i) with an antisymmetric bracket
/// stored as sparse structure constants.
///
/// Only pairs `i < j` are stored; `[e_j, e_i]` is derived by sign flip and
/// `[e_i, e_i]` is always zero. Indices are 0-based internally.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
}

impl PartialEq for LieAlgebra {
    /// Structure-constant equality on the nose (labels do not participate).
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.brackets == other.brackets
    }
}

impl Eq for LieAlgebra {}

impl LieAlgebra {
    /// The abelian algebra of the given dimension, labeled `e1..en`.
    pub fn new(dim: usize) -> Self {
        LieAlgebra {
            dim,
            labels: (1..=dim).map(|k| format!("e{k}")).collect(),
            brackets: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<(), Error> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for dimension {}",
                labels.len(),
                self.dim
            )));
        }
        self.labels = labels;
        Ok(())
    }

    /// Iterates stored brackets as `((i, j), terms)` with `i < j` and terms
    /// sorted by target index, zero terms elided.
    pub fn brackets(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<(usize, Scalar)>)> {
        self.brackets.iter()
    }

    /// Adds `coeff * e_t` to `[e_i, e_j]`, flipping sign when `i > j`.
    pub fn add_bracket_term(
        &mut self,
        i: usize,
        j: usize,
        t: usize,
        coeff: Scalar,
    ) -> Result<(), Error> {
        if i >= self.dim || j >= self.dim || t >= self.dim {
            return Err(Error::Validation(format!(
                "bracket index out of range: [{i}, {j}] -> {t} in dimension {}",
                self.dim
            )));
        }
        if i == j {
            return Err(Error::Validation(format!(
                "bracket [{i}, {i}] is identically zero and cannot carry terms"
            )));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let (key, signed) = if i < j {
            ((i, j), coeff)
        } else {
            ((j, i), -coeff)
        };
        let terms = self.brackets.entry(key).or_default();
        match terms.binary_search_by_key(&t, |&(u, _)| u) {
            Ok(pos) => {
                terms[pos].1 += &signed;
                if terms[pos].1.is_zero() {
                    terms.remove(pos);
                }
            }
            Err(pos) => terms.insert(pos, (t, signed)),
        }
        if terms.is_empty() {
            self.brackets.remove(&key);
        }
        Ok(())
    }

    /// Integer-coefficient convenience used to spell out small tables.
    pub fn add_int_term(&mut self, i: usize, j: usize, t: usize, c: i64) -> Result<(), Error> {
        self.add_bracket_term(i, j, t, Scalar::from_int(c))
    }

    /// `[e_i, e_j]` as a sparse vector, with antisymmetry applied.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, Scalar)> {
        if i == j {
            return Vec::new();
        }
        let (key, flip) = if i < j { ((i, j), false) } else { ((j, i), true) };
        match self.brackets.get(&key) {
            None => Vec::new(),
            Some(terms) if !flip => terms.clone(),
            Some(terms) => terms.iter().map(|(t, c)| (*t, -c)).collect(),
        }
    }

    /// Bilinear bracket of two coordinate vectors.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        if u.len() != self.dim || v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "bracket of vectors of length {} and {} in dimension {}",
                u.len(),
                v.len(),
                self.dim
            )));
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for (&(i, j), terms) in &self.brackets {
            let coef = &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
            if coef.is_zero() {
                continue;
            }
            for (t, c) in terms {
                let delta = &coef * c;
                out[*t] += &delta;
            }
        }
        Ok(out)
    }

    /// Matrix of `ad x : y -> [x, y]` in the standard basis (columns are the
    /// images of the basis vectors).
    pub fn ad_matrix(&self, x: &[Scalar]) -> Result<Matrix, Error> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket(x, &unit_vector(self.dim, j))?;
            for (t, val) in col.into_iter().enumerate() {
                m[(t, j)] = val;
            }
        }
        Ok(m)
    }

    /// All basis triples `i < j < k` where the Jacobi identity fails.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let mut bad = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (t, coef) in self.bracket_basis(a, b) {
                            for (u, d) in self.bracket_basis(t, c) {
                                let delta = &coef * &d;
                                *acc.entry(u).or_insert_with(Scalar::zero) += &delta;
                            }
                        }
                    }
                    if acc.values().any(|v| !v.is_zero()) {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    /// Errors with the first offending triple unless the Jacobi identity
    /// holds everywhere.
    pub fn validate(&self) -> Result<(), Error> {
        match self.jacobi_violations().first() {
            None => Ok(()),
            Some(&(i, j, k)) => Err(Error::Validation(format!(
                "Jacobi identity fails on basis triple ({}, {}, {})",
                i + 1,
                j + 1,
                k + 1
            ))),
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// Span of all `[a, b]` with `a` in `left` and `b` in `right`.
    pub fn product_space(&self, left: &Subspace, right: &Subspace) -> Result<Subspace, Error> {
        let mut vectors = Vec::new();
        for a in left.basis_rows() {
            for b in right.basis_rows() {
                vectors.push(self.bracket(a, b)?);
            }
        }
        Subspace::from_vectors(self.dim, vectors)
    }

    /// Lower central series `L, [L, L], [L, [L, L]], ...`.
    ///
    /// Terms are pushed until a new term repeats the previous dimension or
    /// reaches zero, so the last entry shows whether the series stabilized
    /// or terminated.
    pub fn lower_central_series(&self) -> Result<Vec<Subspace>, Error> {
        let whole = Subspace::whole(self.dim);
        let mut series = vec![whole.clone()];
        loop {
            let prev = series.last().expect("series is nonempty");
            let prev_dim = prev.dim();
            let next = self.product_space(&whole, prev)?;
            let next_dim = next.dim();
            series.push(next);
            if next_dim == 0 || next_dim == prev_dim {
                return Ok(series);
            }
        }
    }

    /// Derived series `L, [L, L], [[L, L], [L, L]], ...` with the same stop
    /// rule as the lower central series.
    pub fn derived_series(&self) -> Result<Vec<Subspace>, Error> {
        let mut series = vec![Subspace::whole(self.dim)];
        loop {
            let prev = series.last().expect("series is nonempty");
            let prev_dim = prev.dim();
            let next = self.product_space(prev, prev)?;
            let next_dim = next.dim();
            series.push(next);
            if next_dim == 0 || next_dim == prev_dim {
                return Ok(series);
            }
        }
    }

    pub fn is_nilpotent(&self) -> Result<bool, Error> {
        Ok(self.lower_central_series()?.last().expect("nonempty").dim() == 0)
    }

    pub fn is_solvable(&self) -> Result<bool, Error> {
        Ok(self.derived_series()?.last().expect("nonempty").dim() == 0)
    }

    /// Index at which the lower central series first reaches zero, e.g. 2 for
    /// an algebra with `[L, [L, L]] = 0` but `[L, L] != 0`. Errors when the
    /// series stabilizes above zero.
    pub fn nilindex(&self) -> Result<usize, Error> {
        let series = self.lower_central_series()?;
        let last = series.last().expect("nonempty");
        if last.dim() != 0 {
            return Err(Error::NotNilpotent {
                stable_dim: last.dim(),
            });
        }
        Ok(series.len() - 1)
    }

    /// Elements bracketing to zero with the whole algebra.
    pub fn center(&self) -> Result<Subspace, Error> {
        let mut rows = Vec::new();
        for j in 0..self.dim {
            // Row block for the map x -> [x, e_j].
            let mut block = Matrix::zeros(self.dim, self.dim);
            for i in 0..self.dim {
                for (t, c) in self.bracket_basis(i, j) {
                    block[(t, i)] = c;
                }
            }
            rows.push(block);
        }
        let mut stacked = rows.remove(0);
        for b in rows {
            stacked = stacked.vstack(&b)?;
        }
        Subspace::from_vectors(self.dim, stacked.nullspace_basis())
    }

    /// Basis indices that generate the algebra, chosen greedily in ascending
    /// order on top of the derived subalgebra.
    pub fn generator_indices(&self) -> Result<Vec<usize>, Error> {
        let whole = Subspace::whole(self.dim);
        let derived = self.product_space(&whole, &whole)?;
        let mut span = derived;
        let mut gens = Vec::new();
        for i in 0..self.dim {
            let e = unit_vector(self.dim, i);
            if !span.contains(&e) {
                gens.push(i);
                span = span.extended(vec![e])?;
            }
        }
        Ok(gens)
    }

    /// Block direct sum; `other`'s basis is appended after `self`'s and
    /// labels are reset to `e1..e(n+m)`.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let mut sum = LieAlgebra::new(self.dim + other.dim);
        for (&(i, j), terms) in &self.brackets {
            sum.brackets.insert((i, j), terms.clone());
        }
        for (&(i, j), terms) in &other.brackets {
            let shifted = terms
                .iter()
                .map(|(t, c)| (t + self.dim, c.clone()))
                .collect();
            sum.brackets.insert((i + self.dim, j + self.dim), shifted);
        }
        sum
    }

    /// Rewrites the structure constants in the basis given by the rows of
    /// `p` (each row is a new basis vector in old coordinates).
    ///
    /// Coordinates transform by `(P^-1)^T`; the result is validated because a
    /// correct base change must preserve the Jacobi identity.
    pub fn apply_basechange(&self, p: &Matrix) -> Result<LieAlgebra, Error> {
        if p.nrows() != self.dim || p.ncols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "base change {}x{} for dimension {}",
                p.nrows(),
                p.ncols(),
                self.dim
            )));
        }
        let coord = p.inverse()?.transpose();
        let mut out = LieAlgebra::new(self.dim);
        for a in 0..self.dim {
            for b in (a + 1)..self.dim {
                let old = self.bracket(p.row(a), p.row(b))?;
                let new = coord.mul_vec(&old)?;
                for (t, c) in new.into_iter().enumerate() {
                    out.add_bracket_term(a, b, t, c)?;
                }
            }
        }
        out.validate()?;
        Ok(out)
    }
}

/// A subspace of Q(i)^n held in reduced row echelon form, so equal spans
/// compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonicalizes arbitrary spanning vectors.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in ambient dimension {ambient}",
                    v.len()
                )));
            }
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let m = Matrix::from_rows(vectors)?;
        let (red, pivots) = m.rref_with(Mode::default());
        let rank = pivots.len();
        let basis = Matrix::from_fn(rank, ambient, |r, c| red[(r, c)].clone());
        Ok(Subspace {
            ambient,
            basis,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    /// Canonical basis rows (RREF rows, pivot columns ascending).
    pub fn basis_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.basis.nrows()).map(|r| self.basis.row(r))
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    /// Membership test by reducing against the pivot rows.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut rest = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if rest[p].is_zero() {
                continue;
            }
            let factor = rest[p].clone();
            for (rest_c, b) in rest.iter_mut().zip(self.basis.row(row)) {
                if !b.is_zero() {
                    let delta = &factor * b;
                    *rest_c -= &delta;
                }
            }
        }
        rest.iter().all(Scalar::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis_rows().all(|r| other.contains(r))
    }

    /// Span of `self` together with extra vectors.
    pub fn extended(&self, extra: Vec<Vec<Scalar>>) -> Result<Subspace, Error> {
        let mut vectors: Vec<Vec<Scalar>> = self.basis_rows().map(<[Scalar]>::to_vec).collect();
        vectors.extend(extra);
        Subspace::from_vectors(self.ambient, vectors)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "sum of subspaces in ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        self.extended(other.basis_rows().map(<[Scalar]>::to_vec).collect())
    }
}

/// Dimensions along a series, e.g. `[3, 1, 0]`.
pub fn series_dims(series: &[Subspace]) -> Vec<usize> {
    series.iter().map(Subspace::dim).collect()
}
