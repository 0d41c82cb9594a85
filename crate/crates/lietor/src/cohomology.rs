//! Chevalley-Eilenberg cohomology with coefficients in an explicit module:
//! coboundary matrices on the ordered-subset cochain basis, cohomology
//! dimensions, the subcomplex of cochains invariant under the extension's
//! torus, and the factorized total dimension for a solvable extension.

use crate::check_cells;
use crate::error::Error;
use crate::extension::SolvableExtension;
use crate::lie::{LieAlgebra, unit_vector};
use crate::matrix::{Matrix, Mode};
use crate::scalar::Scalar;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use std::collections::HashMap;

/// A representation of `algebra` on a `module_dim`-dimensional space given by
/// one matrix per basis vector; the bracket law is verified on construction.
#[derive(Clone, Debug)]
pub struct ModuleAction {
    pub algebra: LieAlgebra,
    pub module_dim: usize,
    pub action: Vec<Matrix>,
}

impl ModuleAction {
    /// Validates shape and the representation law
    /// `ρ([e_i, e_j]) = ρ(e_i) ρ(e_j) − ρ(e_j) ρ(e_i)` for all `i < j`.
    pub fn new(algebra: LieAlgebra, action: Vec<Matrix>) -> Result<Self, Error> {
        let n = algebra.dim();
        if action.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for dimension {n}",
                action.len()
            )));
        }
        let md = action.first().map_or(0, Matrix::nrows);
        for (i, m) in action.iter().enumerate() {
            if m.nrows() != md || m.ncols() != md {
                return Err(Error::DimensionMismatch(format!(
                    "action matrix {} is {}x{}, expected {md}x{md}",
                    i + 1,
                    m.nrows(),
                    m.ncols()
                )));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let mut lhs = Matrix::zeros(md, md);
                for (t, c) in algebra.bracket_basis(i, j) {
                    for r in 0..md {
                        for s in 0..md {
                            let delta = &c * &action[t][(r, s)];
                            lhs[(r, s)] += &delta;
                        }
                    }
                }
                let rhs1 = action[i].mul(&action[j])?;
                let rhs2 = action[j].mul(&action[i])?;
                for r in 0..md {
                    for s in 0..md {
                        let got = &rhs1[(r, s)] - &rhs2[(r, s)];
                        if lhs[(r, s)] != got {
                            return Err(Error::Validation(format!(
                                "action violates the bracket law at pair ({}, {})",
                                i + 1,
                                j + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(ModuleAction {
            algebra,
            module_dim: md,
            action,
        })
    }
}

/// The adjoint representation: `ρ(e_i) = ad e_i`.
pub fn adjoint_action(l: &LieAlgebra) -> Result<ModuleAction, Error> {
    let n = l.dim();
    let mats = (0..n)
        .map(|i| l.ad_matrix(&unit_vector(n, i)))
        .collect::<Result<Vec<_>, _>>()?;
    ModuleAction::new(l.clone(), mats)
}

/// The nilradical acting on the whole extension: source is the nilradical,
/// module is the full algebra, `ρ(e_i) = ad e_i` computed in the extension.
pub fn restriction_action(r: &SolvableExtension) -> Result<ModuleAction, Error> {
    let nilradical = r.nilradical()?;
    let dim = r.algebra.dim();
    let mats = (0..r.nilradical_dim)
        .map(|i| r.algebra.ad_matrix(&unit_vector(dim, i)))
        .collect::<Result<Vec<_>, _>>()?;
    ModuleAction::new(nilradical, mats)
}

/// All `m`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, m: usize) -> Vec<Vec<usize>> {
    if m > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..m).collect();
    loop {
        out.push(cur.clone());
        // Advance the rightmost index that still has room.
        let mut k = m;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < n - (m - k) {
                cur[k] += 1;
                for t in (k + 1)..m {
                    cur[t] = cur[t - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Dimension of `C^m` = (m-subsets of the source basis) x (module basis).
pub fn cochain_dim(source_dim: usize, m: usize, module_dim: usize) -> usize {
    binomial(source_dim, m) * module_dim
}

/// Inserts `u` into the sorted list `rest`; returns the sorted result and
/// the sign `(-1)^p` of moving `u` from the front past `p` smaller entries,
/// or `None` when `u` already occurs (alternating cochains vanish there).
fn insert_sorted(rest: &[usize], u: usize) -> Option<(Vec<usize>, bool)> {
    if rest.contains(&u) {
        return None;
    }
    let p = rest.iter().take_while(|&&r| r < u).count();
    let mut combo = Vec::with_capacity(rest.len() + 1);
    combo.extend_from_slice(&rest[..p]);
    combo.push(u);
    combo.extend_from_slice(&rest[p..]);
    Some((combo, p % 2 == 1))
}

/// The coboundary matrix `d^m : C^m -> C^{m+1}` plus its basis bookkeeping.
#[derive(Clone, Debug)]
pub struct CochainSlice {
    pub degree: usize,
    /// Rows indexed by `C^{m+1}` basis, columns by `C^m` basis; basis index
    /// is `combination_rank * module_dim + module_index` with combinations
    /// in lexicographic order.
    pub boundary: Matrix,
}

/// Builds the coboundary matrix of degree `m` for the given module.
///
/// `(d φ)(x_1..x_{m+1}) = Σ_a (-1)^{a+1} ρ(x_a) φ(.. x̂_a ..) + Σ_{a<b}
/// (-1)^{a+b} φ([x_a, x_b], .. x̂_a .. x̂_b ..)`, assembled row-block per
/// `(m+1)`-subset; blocks are independent, so the parallel mode is
/// bit-identical to the sequential one.
pub fn coboundary_matrix(
    action: &ModuleAction,
    m: usize,
    mode: Mode,
) -> Result<CochainSlice, Error> {
    let n = action.algebra.dim();
    if m > n {
        return Err(Error::DegreeOutOfRange {
            degree: m,
            dim: n,
            reason: "cochain degree exceeds source dimension".into(),
        });
    }
    let md = action.module_dim;
    let cols = cochain_dim(n, m, md);
    let rows = cochain_dim(n, m + 1, md);
    check_cells(rows, cols)?;

    let col_combos = combinations(n, m);
    let mut col_rank: HashMap<Vec<usize>, usize> = HashMap::new();
    for (r, c) in col_combos.iter().enumerate() {
        col_rank.insert(c.clone(), r);
    }
    let row_combos = combinations(n, m + 1);

    let build_block = |t_combo: &Vec<usize>| -> Vec<Vec<Scalar>> {
        let mut block = vec![vec![Scalar::zero(); cols]; md];
        // Action sum: remove one argument and act by it.
        for (a, &ta) in t_combo.iter().enumerate() {
            let mut s_combo = t_combo.clone();
            s_combo.remove(a);
            let s_rank = col_rank[&s_combo];
            let negate = a % 2 == 1;
            let rho = &action.action[ta];
            for w in 0..md {
                for v in 0..md {
                    let entry = &rho[(w, v)];
                    if entry.is_zero() {
                        continue;
                    }
                    let signed = if negate { -entry } else { entry.clone() };
                    block[w][s_rank * md + v] += &signed;
                }
            }
        }
        // Bracket sum: fuse two arguments through the source bracket.
        for a in 0..t_combo.len() {
            for b in (a + 1)..t_combo.len() {
                let pair_negate = (a + b) % 2 == 1;
                let mut rest = t_combo.clone();
                rest.remove(b);
                rest.remove(a);
                for (u, c) in action.algebra.bracket_basis(t_combo[a], t_combo[b]) {
                    let Some((s_combo, ins_negate)) = insert_sorted(&rest, u) else {
                        continue;
                    };
                    let s_rank = col_rank[&s_combo];
                    let signed = if pair_negate != ins_negate { -&c } else { c.clone() };
                    for v in 0..md {
                        block[v][s_rank * md + v] += &signed;
                    }
                }
            }
        }
        block
    };

    let blocks: Vec<Vec<Vec<Scalar>>> = match mode {
        #[cfg(feature = "parallel")]
        Mode::Parallel if rows * cols >= 4096 => row_combos.par_iter().map(build_block).collect(),
        _ => row_combos.iter().map(build_block).collect(),
    };
    let flat: Vec<Vec<Scalar>> = blocks.into_iter().flatten().collect();
    let boundary = if flat.is_empty() {
        Matrix::zeros(0, cols)
    } else {
        Matrix::from_rows(flat)?
    };
    Ok(CochainSlice {
        degree: m,
        boundary,
    })
}

/// `dim H^m = dim C^m − rank d^m − rank d^{m−1}` (with `d^{−1} = 0`).
pub fn cohomology_dim(action: &ModuleAction, m: usize, mode: Mode) -> Result<usize, Error> {
    let n = action.algebra.dim();
    if m > n {
        return Err(Error::DegreeOutOfRange {
            degree: m,
            dim: n,
            reason: "cohomology degree exceeds source dimension".into(),
        });
    }
    let dim_cm = cochain_dim(n, m, action.module_dim);
    let rank_dm = coboundary_matrix(action, m, mode)?.boundary.rank_with(mode);
    let rank_prev = if m == 0 {
        0
    } else {
        coboundary_matrix(action, m - 1, mode)?
            .boundary
            .rank_with(mode)
    };
    Ok(dim_cm - rank_dm - rank_prev)
}

/// Matrix of the torus generator `x_j` acting on `C^m(N, R)`:
/// `(x.φ)(e_δ) = [x, φ(e_δ)] − Σ_s φ(e_δ1, .., [x, e_δs], .., e_δm)`.
fn torus_action_on_cochains(
    r: &SolvableExtension,
    action: &ModuleAction,
    j: usize,
    combos: &[Vec<usize>],
    col_rank: &HashMap<Vec<usize>, usize>,
) -> Result<Matrix, Error> {
    let n = r.nilradical_dim;
    let dim = r.algebra.dim();
    let md = action.module_dim;
    let size = combos.len() * md;
    let x = unit_vector(dim, n + j);
    let ad_x = r.algebra.ad_matrix(&x)?;
    let mut out = Matrix::zeros(size, size);
    for (rank, combo) in combos.iter().enumerate() {
        // [x, φ(e_δ)]: acts on the module coordinate.
        for w in 0..md {
            for v in 0..md {
                if !ad_x[(w, v)].is_zero() {
                    out[(rank * md + w, rank * md + v)] += &ad_x[(w, v)];
                }
            }
        }
        // − φ(.., [x, e_δs], ..): replace one argument by the bracket image.
        for (slot, &ds) in combo.iter().enumerate() {
            let image = r.algebra.bracket(&x, &unit_vector(dim, ds))?;
            debug_assert!(
                image[n..].iter().all(Scalar::is_zero),
                "torus action must keep the nilradical invariant"
            );
            let mut rest = combo.clone();
            rest.remove(slot);
            for (u, c) in image.iter().enumerate().take(n) {
                if c.is_zero() {
                    continue;
                }
                let Some((s_combo, ins_negate)) = insert_sorted(&rest, u) else {
                    continue;
                };
                let s_rank = col_rank[&s_combo];
                // Sign: move the replacement from its slot to the front,
                // then sort it in; plus the leading minus of the term.
                let negate = ins_negate != (slot % 2 == 1);
                let signed = if negate { c.clone() } else { -c };
                for v in 0..md {
                    out[(rank * md + v, s_rank * md + v)] += &signed;
                }
            }
        }
    }
    Ok(out)
}

/// Basis of the torus-invariant cochains `C^m(N, R)^Q`, computed by solving
/// the stacked linear system "every torus generator acts by zero".
///
/// For the diagonal torus actions produced by extensions the solutions are
/// unit vectors, one per cochain coordinate whose module weight equals the
/// sum of its source weights (see [`invariant_coordinate_filter`]).
pub fn invariant_cochain_basis(
    r: &SolvableExtension,
    m: usize,
    mode: Mode,
) -> Result<Vec<Vec<Scalar>>, Error> {
    let n = r.nilradical_dim;
    if m > n {
        return Err(Error::DegreeOutOfRange {
            degree: m,
            dim: n,
            reason: "cochain degree exceeds nilradical dimension".into(),
        });
    }
    let action = restriction_action(r)?;
    let combos = combinations(n, m);
    let mut col_rank = HashMap::new();
    for (rank, c) in combos.iter().enumerate() {
        col_rank.insert(c.clone(), rank);
    }
    let size = combos.len() * action.module_dim;
    let s = r.s();
    check_cells(size.max(1) * s.max(1), size)?;
    if s == 0 {
        return Ok((0..size).map(|k| unit_vector(size, k)).collect());
    }
    let mut stacked: Option<Matrix> = None;
    for j in 0..s {
        let a = torus_action_on_cochains(r, &action, j, &combos, &col_rank)?;
        stacked = Some(match stacked {
            None => a,
            Some(prev) => prev.vstack(&a)?,
        });
    }
    Ok(stacked.expect("s >= 1").nullspace_with(mode))
}

/// Cochain coordinates (ascending) whose module weight matches the sum of
/// their source weights; the fast path equivalent of the literal system.
pub fn invariant_coordinate_filter(r: &SolvableExtension, m: usize) -> Result<Vec<usize>, Error> {
    let n = r.nilradical_dim;
    if m > n {
        return Err(Error::DegreeOutOfRange {
            degree: m,
            dim: n,
            reason: "cochain degree exceeds nilradical dimension".into(),
        });
    }
    let s = r.s();
    let md = r.algebra.dim();
    let weight_of = |u: usize| -> Vec<Scalar> {
        if u < n {
            r.torus.weight_column(u)
        } else {
            vec![Scalar::zero(); s]
        }
    };
    let mut coords = Vec::new();
    for (rank, combo) in combinations(n, m).iter().enumerate() {
        let mut total = vec![Scalar::zero(); s];
        for &i in combo {
            let w = r.torus.weight_column(i);
            for k in 0..s {
                total[k] += &w[k];
            }
        }
        for u in 0..md {
            if weight_of(u) == total {
                coords.push(rank * md + u);
            }
        }
    }
    Ok(coords)
}

/// Invariant coordinates extracted from the literal system, with the
/// unit-vector shape asserted.
fn invariant_coords_literal(
    r: &SolvableExtension,
    m: usize,
    mode: Mode,
) -> Result<Vec<usize>, Error> {
    let basis = invariant_cochain_basis(r, m, mode)?;
    let mut coords = Vec::with_capacity(basis.len());
    for v in &basis {
        let nonzero: Vec<usize> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, _)| k)
            .collect();
        if nonzero.len() != 1 || !v[nonzero[0]].is_one() {
            return Err(Error::Validation(
                "invariant cochain basis is not coordinate-aligned; \
                 the torus action is not diagonal on this module"
                    .into(),
            ));
        }
        coords.push(nonzero[0]);
    }
    Ok(coords)
}

/// Restriction of `d^m` to the invariant coordinates, asserting that images
/// of invariant cochains stay inside the invariant span.
fn restricted_boundary(
    action: &ModuleAction,
    m: usize,
    cols_inv: &[usize],
    rows_inv: &[usize],
    mode: Mode,
) -> Result<Matrix, Error> {
    let full = coboundary_matrix(action, m, mode)?.boundary;
    let row_set: std::collections::HashSet<usize> = rows_inv.iter().copied().collect();
    for &c in cols_inv {
        for row in 0..full.nrows() {
            if !full[(row, c)].is_zero() && !row_set.contains(&row) {
                return Err(Error::Validation(format!(
                    "boundary leaves the invariant subcomplex at degree {m}"
                )));
            }
        }
    }
    Ok(Matrix::from_fn(rows_inv.len(), cols_inv.len(), |a, b| {
        full[(rows_inv[a], cols_inv[b])].clone()
    }))
}

/// `dim H^b(N, R)^Q`: cohomology of the invariant subcomplex at degree `b`.
pub fn invariant_cohomology_dim(
    r: &SolvableExtension,
    b: usize,
    mode: Mode,
) -> Result<usize, Error> {
    let n = r.nilradical_dim;
    if b > n {
        return Ok(0);
    }
    let action = restriction_action(r)?;
    let inv_b = invariant_coords_literal(r, b, mode)?;
    let rank_db = if b == n {
        0
    } else {
        let inv_up = invariant_coords_literal(r, b + 1, mode)?;
        restricted_boundary(&action, b, &inv_b, &inv_up, mode)?.rank_with(mode)
    };
    let rank_prev = if b == 0 {
        0
    } else {
        let inv_down = invariant_coords_literal(r, b - 1, mode)?;
        restricted_boundary(&action, b - 1, &inv_down, &inv_b, mode)?.rank_with(mode)
    };
    Ok(inv_b.len() - rank_db - rank_prev)
}

/// Total adjoint cohomology of the extension through the factorization
/// `dim H^p(R, R) = Σ_{a+b=p} C(s, a) · dim H^b(N, R)^Q`.
pub fn hochschild_serre_dim(r: &SolvableExtension, p: usize, mode: Mode) -> Result<usize, Error> {
    let s = r.s();
    let mut total = 0usize;
    for a in 0..=p.min(s) {
        let b = p - a;
        let factor = binomial(s, a);
        if factor == 0 {
            continue;
        }
        let inv = invariant_cohomology_dim(r, b, mode)?;
        total += factor * inv;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::build_max_extension;
    use crate::lie::fixtures::{heisenberg, sl2};

    fn ext_h1() -> SolvableExtension {
        build_max_extension(&heisenberg(), Mode::Sequential).unwrap()
    }

    #[test]
    fn adjoint_action_satisfies_the_bracket_law() {
        let a = adjoint_action(&sl2()).unwrap();
        assert_eq!(a.module_dim, 3);
        let trivially = adjoint_action(&LieAlgebra::new(3)).unwrap();
        assert!(trivially.action.iter().all(Matrix::is_zero));

        // A wrong action is rejected.
        let bad = vec![Matrix::identity(3); 3];
        assert!(ModuleAction::new(sl2(), bad).is_err());
    }

    #[test]
    fn combinations_enumerate_in_lexicographic_order() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn degree_zero_boundary_is_the_action_itself() {
        let a = adjoint_action(&heisenberg()).unwrap();
        let d0 = coboundary_matrix(&a, 0, Mode::Sequential).unwrap();
        assert_eq!(d0.boundary.nrows(), 9);
        assert_eq!(d0.boundary.ncols(), 3);
        // (d v)(e_2) = [e_2, v]: the e_2 block must equal ad e_2.
        for w in 0..3 {
            for v in 0..3 {
                assert_eq!(d0.boundary[(3 + w, v)], a.action[1][(w, v)]);
            }
        }
        // Kernel of d^0 = center.
        assert_eq!(d0.boundary.rank(), 2);
    }

    #[test]
    fn consecutive_boundaries_compose_to_zero() {
        for l in [heisenberg(), sl2(), ext_h1().algebra] {
            let a = adjoint_action(&l).unwrap();
            for m in 0..l.dim() {
                let dm = coboundary_matrix(&a, m, Mode::Sequential).unwrap();
                let dnext = coboundary_matrix(&a, m + 1, Mode::Sequential).unwrap();
                assert!(dnext.boundary.mul(&dm.boundary).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn adjoint_cohomology_matches_derivation_counts() {
        let l = heisenberg();
        let a = adjoint_action(&l).unwrap();
        // H^0 = center, H^1 = Der / inner.
        assert_eq!(cohomology_dim(&a, 0, Mode::Sequential).unwrap(), 1);
        assert_eq!(cohomology_dim(&a, 1, Mode::Sequential).unwrap(), 4);

        let whitehead = adjoint_action(&sl2()).unwrap();
        for p in 0..=3 {
            assert_eq!(cohomology_dim(&whitehead, p, Mode::Sequential).unwrap(), 0);
        }
        assert!(cohomology_dim(&whitehead, 4, Mode::Sequential).is_err());
    }

    #[test]
    fn invariant_basis_agrees_with_the_weight_filter() {
        let r = ext_h1();
        for m in 0..=3 {
            let literal = invariant_cochain_basis(&r, m, Mode::Sequential).unwrap();
            let filter = invariant_coordinate_filter(&r, m).unwrap();
            assert_eq!(literal.len(), filter.len(), "degree {m}");
            let size = cochain_dim(3, m, 5);
            for (v, &coord) in literal.iter().zip(&filter) {
                assert_eq!(v, &unit_vector(size, coord), "degree {m}");
            }
        }
    }

    #[test]
    fn invariant_one_cochains_of_a_diagonal_extension() {
        let r = build_max_extension(&LieAlgebra::new(2), Mode::Sequential).unwrap();
        let coords = invariant_coordinate_filter(&r, 1).unwrap();
        // Module dim 4: coordinates ({e1}, e1) = 0 and ({e2}, e2) = 5.
        assert_eq!(coords, vec![0, 5]);
    }

    #[test]
    fn invariant_cohomology_of_the_heisenberg_extension_vanishes() {
        let r = ext_h1();
        assert_eq!(invariant_cohomology_dim(&r, 0, Mode::Sequential).unwrap(), 0);
        assert_eq!(invariant_cohomology_dim(&r, 1, Mode::Sequential).unwrap(), 0);
    }

    #[test]
    fn invariant_complex_of_the_q6_extension_vanishes() {
        let r = build_max_extension(&crate::torus::fixtures::q6(), Mode::Sequential).unwrap();
        let dims: Vec<usize> = (0..=3)
            .map(|b| invariant_coordinate_filter(&r, b).unwrap().len())
            .collect();
        assert_eq!(dims, vec![2, 6, 5, 1]);
        for b in 0..=3 {
            assert_eq!(
                invariant_cohomology_dim(&r, b, Mode::Sequential).unwrap(),
                0,
                "degree {b}"
            );
            assert_eq!(
                invariant_cohomology_dim(&r, b, Mode::Parallel).unwrap(),
                0,
                "degree {b} parallel"
            );
        }
    }

    #[test]
    fn factorized_and_direct_dimensions_agree() {
        let r = ext_h1();
        let adj = adjoint_action(&r.algebra).unwrap();
        for p in 0..=2 {
            let direct = cohomology_dim(&adj, p, Mode::Sequential).unwrap();
            let factored = hochschild_serre_dim(&r, p, Mode::Sequential).unwrap();
            assert_eq!(direct, factored, "degree {p}");
        }
        assert_eq!(hochschild_serre_dim(&r, 0, Mode::Sequential).unwrap(), 0);
        assert_eq!(hochschild_serre_dim(&r, 1, Mode::Sequential).unwrap(), 0);
    }
}
