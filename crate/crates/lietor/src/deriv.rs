//! Derivation algebras: the space of all Leibniz-compatible linear maps of a
//! Lie algebra, an Engel-style flag test deciding whether every map in a
//! commutator-closed space is nilpotent, and the combined characteristic
//! nilpotency check.

use crate::error::Error;
use crate::lie::{LieAlgebra, Subspace};
use crate::matrix::{Matrix, Mode};
use crate::scalar::Scalar;
use crate::check_cells;

/// Basis of the derivation algebra, one matrix per free parameter of the
/// Leibniz system, in the deterministic nullspace order.
///
/// A map `D` (columns are images of basis vectors) is a derivation when
/// `D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j]` for all `i < j`; each target
/// coordinate of each pair contributes one linear equation in the `n^2`
/// entries of `D`.
pub fn derivation_space(l: &LieAlgebra, mode: Mode) -> Result<Vec<Matrix>, Error> {
    let n = l.dim();
    let unknowns = n * n;
    let pair_count = n * (n - 1) / 2;
    check_cells(pair_count * n, unknowns)?;
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(pair_count * n);
    let idx = |a: usize, b: usize| a * n + b;
    for i in 0..n {
        for j in (i + 1)..n {
            let mut block = vec![vec![Scalar::zero(); unknowns]; n];
            for (w, c) in l.bracket_basis(i, j) {
                for (t, row) in block.iter_mut().enumerate() {
                    row[idx(t, w)] += &c;
                }
            }
            for u in 0..n {
                for (t, c) in l.bracket_basis(u, j) {
                    block[t][idx(u, i)] -= &c;
                }
                for (t, c) in l.bracket_basis(i, u) {
                    block[t][idx(u, j)] -= &c;
                }
            }
            rows.extend(block);
        }
    }
    if rows.is_empty() {
        // Abelian in dimension < 2: every linear map is a derivation.
        rows.push(vec![Scalar::zero(); unknowns]);
    }
    let system = Matrix::from_rows(rows)?;
    let kernel = system.nullspace_with(mode);
    Ok(kernel
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |a, b| v[idx(a, b)].clone()))
        .collect())
}

/// The inner derivations `ad e_i` for each basis vector.
pub fn inner_derivations(l: &LieAlgebra) -> Result<Vec<Matrix>, Error> {
    (0..l.dim())
        .map(|i| l.ad_matrix(&crate::lie::unit_vector(l.dim(), i)))
        .collect()
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    let mut v = Vec::with_capacity(m.nrows() * m.ncols());
    for r in 0..m.nrows() {
        v.extend(m.row(r).iter().cloned());
    }
    v
}

/// Matrix whose kernel is exactly the span of `space`: `I - B^T T` where `B`
/// holds the canonical basis rows and `T` selects their pivot coordinates.
fn complement_projector(space: &Subspace) -> Result<Matrix, Error> {
    let n = space.ambient_dim();
    let b = space.basis_matrix();
    let mut t = Matrix::zeros(space.dim(), n);
    for (row, r) in space.basis_rows().enumerate() {
        let pivot = r
            .iter()
            .position(|x| !x.is_zero())
            .expect("canonical basis rows are nonzero");
        t[(row, pivot)] = Scalar::one();
    }
    let bt_t = b.transpose().mul(&t)?;
    let mut q = Matrix::identity(n);
    for r in 0..n {
        for c in 0..n {
            q[(r, c)] -= &bt_t[(r, c)];
        }
    }
    Ok(q)
}

/// Decides whether every matrix in the span of `mats` is nilpotent, for a
/// span closed under the matrix commutator.
///
/// Builds the flag `U_0 = 0`, `U_{m+1} = { v : D v in U_m for all D }`; for a
/// commutator-closed span the matrices are simultaneously strictly
/// triangularizable exactly when the flag exhausts the whole space. Errors
/// with the offending pair if the span is not commutator-closed.
pub fn all_nilpotent(mats: &[Matrix], mode: Mode) -> Result<bool, Error> {
    let Some(first) = mats.first() else {
        return Ok(true);
    };
    let n = first.nrows();
    for m in mats {
        if m.nrows() != n || m.ncols() != n {
            return Err(Error::DimensionMismatch(format!(
                "matrix {}x{} in a family on dimension {n}",
                m.nrows(),
                m.ncols()
            )));
        }
    }
    let span = Subspace::from_vectors(n * n, mats.iter().map(flatten).collect())?;
    for (p, a) in mats.iter().enumerate() {
        for (q, b) in mats.iter().enumerate().skip(p + 1) {
            let ab = a.mul(b)?;
            let ba = b.mul(a)?;
            let mut comm = ab;
            for r in 0..n {
                for c in 0..n {
                    comm[(r, c)] -= &ba[(r, c)];
                }
            }
            if !span.contains(&flatten(&comm)) {
                return Err(Error::NotClosedUnderCommutator { left: p, right: q });
            }
        }
    }

    let mut flag = Subspace::zero(n);
    loop {
        let q = complement_projector(&flag)?;
        let mut stacked: Option<Matrix> = None;
        for d in mats {
            let qd = q.mul(d)?;
            stacked = Some(match stacked {
                None => qd,
                Some(s) => s.vstack(&qd)?,
            });
        }
        let system = stacked.expect("mats is nonempty");
        let next = Subspace::from_vectors(n, system.nullspace_with(mode))?;
        if next.dim() == n {
            return Ok(true);
        }
        if next.dim() == flag.dim() {
            return Ok(false);
        }
        flag = next;
    }
}

/// True when the algebra is nilpotent and every derivation is nilpotent, so
/// it admits no nonzero diagonalizable derivation at all.
pub fn is_characteristically_nilpotent(l: &LieAlgebra, mode: Mode) -> Result<bool, Error> {
    if !l.is_nilpotent()? {
        return Ok(false);
    }
    let ders = derivation_space(l, mode)?;
    all_nilpotent(&ders, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::fixtures::{heisenberg, sl2};
    use crate::lie::unit_vector;

    fn leibniz_holds(l: &LieAlgebra, d: &Matrix) -> bool {
        let n = l.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                let ei = unit_vector(n, i);
                let ej = unit_vector(n, j);
                let lhs = d.mul_vec(&l.bracket(&ei, &ej).unwrap()).unwrap();
                let dei = d.mul_vec(&ei).unwrap();
                let dej = d.mul_vec(&ej).unwrap();
                let rhs1 = l.bracket(&dei, &ej).unwrap();
                let rhs2 = l.bracket(&ei, &dej).unwrap();
                for t in 0..n {
                    if lhs[t] != &rhs1[t] + &rhs2[t] {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn derivation_space_solves_the_leibniz_system() {
        let l = heisenberg();
        let ders = derivation_space(&l, Mode::Sequential).unwrap();
        assert_eq!(ders.len(), 6);
        for d in &ders {
            assert!(leibniz_holds(&l, d));
        }
        assert_eq!(derivation_space(&sl2(), Mode::Sequential).unwrap().len(), 3);
        assert_eq!(
            derivation_space(&LieAlgebra::new(2), Mode::Sequential)
                .unwrap()
                .len(),
            4
        );
    }

    #[test]
    fn inner_derivations_lie_inside_the_derivation_space() {
        let l = heisenberg();
        let ders = derivation_space(&l, Mode::Sequential).unwrap();
        let span =
            Subspace::from_vectors(9, ders.iter().map(super::flatten).collect()).unwrap();
        for ad in inner_derivations(&l).unwrap() {
            assert!(span.contains(&super::flatten(&ad)));
        }
    }

    #[test]
    fn engel_flag_separates_nilpotent_from_semisimple_families() {
        let strictly_upper = Matrix::from_rows(vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![Scalar::zero(), Scalar::zero()],
        ])
        .unwrap();
        assert!(all_nilpotent(&[strictly_upper], Mode::Sequential).unwrap());

        let diag = Matrix::from_rows(vec![
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero()],
        ])
        .unwrap();
        assert!(!all_nilpotent(&[diag], Mode::Sequential).unwrap());

        assert!(all_nilpotent(&[], Mode::Sequential).unwrap());
    }

    #[test]
    fn commutator_closure_is_a_precondition() {
        let e12 = Matrix::from_rows(vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![Scalar::zero(), Scalar::zero()],
        ])
        .unwrap();
        let e21 = e12.transpose();
        let err = all_nilpotent(&[e12, e21], Mode::Sequential).unwrap_err();
        assert!(matches!(
            err,
            Error::NotClosedUnderCommutator { left: 0, right: 1 }
        ));
    }

    #[test]
    fn characteristic_nilpotency_needs_both_conditions() {
        // Nilpotent but with diagonalizable derivations.
        assert!(!is_characteristically_nilpotent(&heisenberg(), Mode::Sequential).unwrap());
        // Not nilpotent at all.
        assert!(!is_characteristically_nilpotent(&sl2(), Mode::Sequential).unwrap());
    }
}
