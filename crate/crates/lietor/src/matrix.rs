//! Dense exact matrices over Q(i) with deterministic Gauss-Jordan
//! elimination. The parallel mode distributes independent row updates with
//! rayon and is bit-identical to the sequential path, so every result is
//! reproducible regardless of mode or thread count.

use crate::error::Error;
use crate::scalar::Scalar;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use std::fmt;
use std::ops::{Index, IndexMut};

/// Execution strategy for elimination-heavy operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    /// Rayon row updates; falls back to sequential when the `parallel`
    /// feature is disabled or the matrix is too small to be worth splitting.
    Parallel,
}

impl Default for Mode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

/// Row-major dense matrix of [`Scalar`]s.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Row updates cheaper than this many cells stay sequential even in
/// `Mode::Parallel`; the split overhead dominates below it.
const PAR_MIN_CELLS: usize = 4096;

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = Scalar::one();
        }
        m
    }

    /// Builds from explicit rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for (k, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch(format!(
                    "row {k} has {} entries, expected {ncols}",
                    r.len()
                )));
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [Scalar] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        self.data.chunks(self.cols.max(1))
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.rows_iter().map(<[Scalar]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Appends the columns of `right` to the right of `self`.
    pub fn hstack(&self, right: &Matrix) -> Result<Matrix, Error> {
        if self.rows != right.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, right.rows
            )));
        }
        let mut m = Matrix::zeros(self.rows, self.cols + right.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..right.cols {
                m[(r, self.cols + c)] = right[(r, c)].clone();
            }
        }
        Ok(m)
    }

    /// Stacks `below` under `self`; column counts must agree.
    pub fn vstack(&self, below: &Matrix) -> Result<Matrix, Error> {
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, below.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(r, c)] += &prod;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Applies `self` to a column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} columns, vector has {} entries",
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = &self[(r, c)];
                if !a.is_zero() && !v[c].is_zero() {
                    let prod = a * &v[c];
                    out[r] += &prod;
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form with the default mode.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        self.rref_with(Mode::default())
    }

    /// Reduced row echelon form, returning the reduced matrix and the pivot
    /// columns in the order they were claimed.
    ///
    /// Pivots are chosen leftmost column first, topmost unused row first, and
    /// every other row is fully reduced; the result is the unique RREF.
    pub fn rref_with(&self, mode: Mode) -> (Matrix, Vec<usize>) {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref_in_column_order(&order, mode)
    }

    /// Gauss-Jordan elimination visiting candidate pivot columns in `order`.
    ///
    /// Each visited column claims a pivot if any unused row is nonzero there;
    /// the output is fully reduced, so solutions can be read off no matter
    /// which order produced the pivots.
    fn rref_in_column_order(&self, order: &[usize], mode: Mode) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for &col in order {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m[(pivot_row, col)].inv().expect("pivot entry is nonzero");
            for c in 0..m.cols {
                if !m[(pivot_row, c)].is_zero() {
                    m[(pivot_row, c)] *= &inv;
                }
            }
            m.eliminate_column(pivot_row, col, mode);
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Subtracts multiples of the (already normalized) pivot row from every
    /// other row so `col` becomes a unit column. Rows are independent, which
    /// is what makes the parallel path bit-identical.
    fn eliminate_column(&mut self, pivot_row: usize, col: usize, mode: Mode) {
        let prow = self.row(pivot_row).to_vec();
        let nonzero: Vec<usize> = prow
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, _)| c)
            .collect();
        let update = |(r, row): (usize, &mut [Scalar])| {
            if r == pivot_row || row[col].is_zero() {
                return;
            }
            let factor = std::mem::take(&mut row[col]);
            for &c in &nonzero {
                if c == col {
                    continue;
                }
                let delta = &factor * &prow[c];
                row[c] -= &delta;
            }
        };
        match mode {
            #[cfg(feature = "parallel")]
            Mode::Parallel if self.data.len() >= PAR_MIN_CELLS => {
                self.data
                    .par_chunks_mut(self.cols)
                    .enumerate()
                    .for_each(update);
            }
            _ => {
                self.data.chunks_mut(self.cols).enumerate().for_each(update);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank_with(Mode::default())
    }

    pub fn rank_with(&self, mode: Mode) -> usize {
        self.rref_with(mode).1.len()
    }

    /// Basis of the right nullspace in the standard convention: pivots are
    /// leftmost, one vector per free column in ascending column order, each
    /// with a 1 at its free column and 0 at the other free columns.
    pub fn nullspace_basis(&self) -> Vec<Vec<Scalar>> {
        self.nullspace_with(Mode::default())
    }

    pub fn nullspace_with(&self, mode: Mode) -> Vec<Vec<Scalar>> {
        let order: Vec<usize> = (0..self.cols).collect();
        self.nullspace_in_column_order(&order, mode)
    }

    /// Nullspace basis whose free-column set is the earliest valid set in
    /// `priority` order (most preferred free column first).
    ///
    /// Claiming pivots while visiting columns in reverse priority order makes
    /// the pivot set the greedily latest one, so its complement, the free
    /// set, is the greedily earliest; vectors still come out ordered by
    /// ascending free column.
    pub fn nullspace_with_priority(&self, priority: &[usize], mode: Mode) -> Vec<Vec<Scalar>> {
        self.nullspace_with_priority_full(priority, mode).0
    }

    /// Like [`Matrix::nullspace_with_priority`] but also returns the free
    /// columns (ascending), one per basis vector.
    pub fn nullspace_with_priority_full(
        &self,
        priority: &[usize],
        mode: Mode,
    ) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        debug_assert_eq!(priority.len(), self.cols);
        let order: Vec<usize> = priority.iter().rev().copied().collect();
        self.nullspace_in_column_order_full(&order, mode)
    }

    fn nullspace_in_column_order(&self, order: &[usize], mode: Mode) -> Vec<Vec<Scalar>> {
        self.nullspace_in_column_order_full(order, mode).0
    }

    fn nullspace_in_column_order_full(
        &self,
        order: &[usize],
        mode: Mode,
    ) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        let (red, pivots) = self.rref_in_column_order(order, mode);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        let mut free_cols = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&red[(row, free)];
            }
            basis.push(v);
            free_cols.push(free);
        }
        (basis, free_cols)
    }

    /// Solves `self * x = b`, returning `None` when inconsistent. Free
    /// variables are set to zero.
    pub fn solve_linear(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, Error> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "system has {} rows, right side has {}",
                self.rows,
                b.len()
            )));
        }
        let rhs = Matrix::from_fn(self.rows, 1, |r, _| b[r].clone());
        let aug = self.hstack(&rhs)?;
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = red[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    /// Exact inverse via elimination on `[self | I]`.
    pub fn inverse(&self) -> Result<Matrix, Error> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "inverse of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n))?;
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
            return Err(Error::SingularMatrix(format!(
                "rank {} below size {n}",
                pivots.iter().filter(|&&p| p < n).count()
            )));
        }
        Ok(Matrix::from_fn(n, n, |r, c| red[(r, n + c)].clone()))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let shown: Vec<String> = self.row(r).iter().map(Scalar::to_string).collect();
            writeln!(f, "  [{}]", shown.join(", "))?;
        }
        write!(f, "]")
    }
}
