//! Root-space decomposition of a nilradical under its torus, combinatorial
//! bounds on the restricted coboundary ranks, closed-form invariant-cochain
//! counts in the multiplicity-one case, and the vanishing predictors.

use crate::cohomology::combinations;
use crate::error::Error;
use crate::extension::SolvableExtension;
use crate::scalar::Scalar;

/// Weight columns of the nilradical grouped into root spaces.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSystemData {
    /// Distinct weight vectors, sorted lexicographically.
    pub roots: Vec<Vec<Scalar>>,
    /// Basis indices of each root space, parallel to `roots`.
    pub spaces: Vec<Vec<usize>>,
}

impl RootSystemData {
    /// Number of distinct roots.
    pub fn count(&self) -> usize {
        self.roots.len()
    }

    /// Dimension of the root space of `w`, zero when `w` is not a root.
    pub fn multiplicity(&self, w: &[Scalar]) -> usize {
        match self.roots.binary_search_by(|r| r.as_slice().cmp(w)) {
            Ok(k) => self.spaces[k].len(),
            Err(_) => 0,
        }
    }

    pub fn contains(&self, w: &[Scalar]) -> bool {
        self.multiplicity(w) > 0
    }

    pub fn multiplicity_one(&self) -> bool {
        self.spaces.iter().all(|s| s.len() == 1)
    }
}

fn root_sum(roots: &[Vec<Scalar>], subset: &[usize], s: usize) -> Vec<Scalar> {
    let mut total = vec![Scalar::zero(); s];
    for &k in subset {
        for (t, c) in total.iter_mut().zip(&roots[k]) {
            *t += c;
        }
    }
    total
}

/// Groups the nilradical basis by weight column and verifies the grading
/// property: the bracket of two root vectors lands in the sum root space.
pub fn root_decomposition(r: &SolvableExtension) -> Result<RootSystemData, Error> {
    let n = r.nilradical_dim;
    let s = r.s();
    let columns: Vec<Vec<Scalar>> = (0..n).map(|i| r.torus.weight_column(i)).collect();
    let mut roots: Vec<Vec<Scalar>> = columns.clone();
    roots.sort();
    roots.dedup();
    let spaces: Vec<Vec<usize>> = roots
        .iter()
        .map(|w| (0..n).filter(|&i| &columns[i] == w).collect())
        .collect();
    let data = RootSystemData { roots, spaces };

    for (&(i, j), terms) in r.algebra.brackets() {
        if j >= n {
            continue;
        }
        let expected = root_sum(&columns, &[i, j], s);
        for (t, _) in terms {
            if columns[*t] != expected {
                return Err(Error::GradingViolation {
                    left: i + 1,
                    right: j + 1,
                });
            }
        }
    }
    Ok(data)
}

/// Combinatorial upper bound on the rank of the restricted coboundary at
/// degree `m`: sum over unordered pairwise-distinct `(m+1)`-subsets of the
/// roots of the product of their multiplicities times the multiplicity of
/// their sum.
pub fn sm_bound(roots: &RootSystemData, m: usize) -> Result<usize, Error> {
    if m == 0 {
        return Err(Error::BadParam("sm_bound requires degree >= 1".into()));
    }
    let s = roots.roots.first().map_or(0, Vec::len);
    let mut total = 0usize;
    for subset in combinations(roots.count(), m + 1) {
        let target = roots.multiplicity(&root_sum(&roots.roots, &subset, s));
        if target == 0 {
            continue;
        }
        let product: usize = subset.iter().map(|&k| roots.spaces[k].len()).product();
        total += product * target;
    }
    Ok(total)
}

/// True iff no pairwise-distinct triple of roots sums to a root. This is the
/// reading used by the vanishing argument; see also
/// [`distinct_triple_condition_literal`].
pub fn distinct_triple_condition(roots: &RootSystemData) -> bool {
    let s = roots.roots.first().map_or(0, Vec::len);
    combinations(roots.count(), 3)
        .iter()
        .all(|t| !roots.contains(&root_sum(&roots.roots, t, s)))
}

/// Literal reading over ordered triples: whenever `a + b + g` is a root, `g`
/// equals `a` or `b`. Stronger than the unordered predicate because it also
/// rules out sums `2a + g` with `g` distinct from `a`.
pub fn distinct_triple_condition_literal(roots: &RootSystemData) -> bool {
    let s = roots.roots.first().map_or(0, Vec::len);
    let w = roots.count();
    for a in 0..w {
        for b in 0..w {
            for g in 0..w {
                if g == a || g == b {
                    continue;
                }
                if roots.contains(&root_sum(&roots.roots, &[a, b, g], s)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Raw facts plus the two sufficient criteria for total adjoint cohomology
/// vanishing: multiplicity-one roots with no distinct triple summing to a
/// root, or a multiplicity-one two-step nilradical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VanishReport {
    pub multiplicity_one: bool,
    pub distinct_triple: bool,
    pub two_step_nilpotent: bool,
    pub triple_criterion: bool,
    pub two_step_criterion: bool,
}

/// Evaluates both vanishing criteria on an extension.
pub fn vanish_predictor(r: &SolvableExtension) -> Result<VanishReport, Error> {
    let roots = root_decomposition(r)?;
    let multiplicity_one = roots.multiplicity_one();
    let distinct_triple = distinct_triple_condition(&roots);
    let nilradical = r.nilradical()?;
    let n2 = nilradical.product_space(
        &crate::lie::Subspace::whole(nilradical.dim()),
        &crate::lie::Subspace::whole(nilradical.dim()),
    )?;
    let n3 = nilradical.product_space(&crate::lie::Subspace::whole(nilradical.dim()), &n2)?;
    let two_step_nilpotent = n3.dim() == 0;
    Ok(VanishReport {
        multiplicity_one,
        distinct_triple,
        two_step_nilpotent,
        triple_criterion: multiplicity_one && distinct_triple,
        two_step_criterion: multiplicity_one && two_step_nilpotent,
    })
}

/// Closed-form count of invariant `m`-cochain coordinates valued in the
/// nilradical when every root space is one-dimensional: the number of
/// unordered pairwise-distinct `m`-subsets of roots whose sum is a root.
pub fn invariant_count_formula(roots: &RootSystemData, m: usize) -> Result<usize, Error> {
    if let Some(k) = roots.spaces.iter().position(|s| s.len() > 1) {
        return Err(Error::MultiplicityTooHigh {
            root: k + 1,
            multiplicity: roots.spaces[k].len(),
        });
    }
    let s = roots.roots.first().map_or(0, Vec::len);
    Ok(combinations(roots.count(), m)
        .iter()
        .filter(|subset| roots.contains(&root_sum(&roots.roots, subset, s)))
        .count())
}

/// Count of unordered pairwise-distinct `m`-subsets of roots summing to
/// zero; each contributes `s` torus-valued invariant coordinates.
pub fn zero_sum_count(roots: &RootSystemData, m: usize) -> Result<usize, Error> {
    if let Some(k) = roots.spaces.iter().position(|s| s.len() > 1) {
        return Err(Error::MultiplicityTooHigh {
            root: k + 1,
            multiplicity: roots.spaces[k].len(),
        });
    }
    let s = roots.roots.first().map_or(0, Vec::len);
    let zero = vec![Scalar::zero(); s];
    Ok(combinations(roots.count(), m)
        .iter()
        .filter(|subset| root_sum(&roots.roots, subset, s) == zero)
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::build_max_extension;
    use crate::lie::fixtures::heisenberg;
    use crate::matrix::Mode;
    use crate::torus::fixtures::q6;

    fn int_vec(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    fn ext_h1() -> SolvableExtension {
        build_max_extension(&heisenberg(), Mode::Sequential).unwrap()
    }

    #[test]
    fn heisenberg_extension_has_three_singleton_roots() {
        let roots = root_decomposition(&ext_h1()).unwrap();
        assert_eq!(
            roots.roots,
            vec![int_vec(&[0, 1]), int_vec(&[1, 0]), int_vec(&[1, 1])]
        );
        assert_eq!(roots.spaces, vec![vec![2], vec![1], vec![0]]);
        assert!(roots.multiplicity_one());
        assert_eq!(roots.multiplicity(&int_vec(&[1, 1])), 1);
        assert_eq!(roots.multiplicity(&int_vec(&[2, 2])), 0);
    }

    #[test]
    fn grading_violations_are_reported() {
        let mut r = ext_h1();
        // [e1, e2] = e2 breaks the grading: weights (1,1) + (1,0) != (1,0).
        r.algebra.add_int_term(0, 1, 1, 1).unwrap();
        assert!(matches!(
            root_decomposition(&r),
            Err(Error::GradingViolation { left: 1, right: 2 })
        ));
    }

    #[test]
    fn rank_bound_counts_subset_sums() {
        let roots = root_decomposition(&ext_h1()).unwrap();
        assert_eq!(sm_bound(&roots, 1).unwrap(), 1);
        assert_eq!(sm_bound(&roots, 2).unwrap(), 0);
        assert_eq!(sm_bound(&roots, 3).unwrap(), 0);
        assert!(matches!(sm_bound(&roots, 0), Err(Error::BadParam(_))));
    }

    #[test]
    fn operative_and_literal_triple_conditions_differ() {
        let h1 = root_decomposition(&ext_h1()).unwrap();
        assert!(distinct_triple_condition(&h1));
        assert!(distinct_triple_condition_literal(&h1));

        // 1 + 1 + 2 = 4: no pairwise-distinct triple exists, but the ordered
        // reading catches the doubled root.
        let doubling = RootSystemData {
            roots: vec![int_vec(&[1]), int_vec(&[2]), int_vec(&[4])],
            spaces: vec![vec![0], vec![1], vec![2]],
        };
        assert!(distinct_triple_condition(&doubling));
        assert!(!distinct_triple_condition_literal(&doubling));

        let q = root_decomposition(&build_max_extension(&q6(), Mode::Sequential).unwrap())
            .unwrap();
        // (1,0) + (0,1) + (2,1) = (3,2) is again a root.
        assert!(!distinct_triple_condition(&q));
    }

    #[test]
    fn vanishing_criteria_on_the_two_extensions() {
        let h1 = vanish_predictor(&ext_h1()).unwrap();
        assert!(h1.multiplicity_one);
        assert!(h1.distinct_triple);
        assert!(h1.two_step_nilpotent);
        assert!(h1.triple_criterion);
        assert!(h1.two_step_criterion);

        let q = vanish_predictor(&build_max_extension(&q6(), Mode::Sequential).unwrap()).unwrap();
        assert!(q.multiplicity_one);
        assert!(!q.distinct_triple);
        assert!(!q.two_step_nilpotent);
        assert!(!q.triple_criterion);
        assert!(!q.two_step_criterion);
    }

    #[test]
    fn closed_form_counts_match_the_invariant_filter() {
        let r = ext_h1();
        let roots = root_decomposition(&r).unwrap();
        assert_eq!(invariant_count_formula(&roots, 1).unwrap(), 3);
        assert_eq!(invariant_count_formula(&roots, 2).unwrap(), 1);
        assert_eq!(invariant_count_formula(&roots, 3).unwrap(), 0);
        assert_eq!(zero_sum_count(&roots, 0).unwrap(), 1);
        assert_eq!(zero_sum_count(&roots, 2).unwrap(), 0);
        // Filter dimension = nilradical-valued count + s * zero-sum count.
        for m in 0..=3 {
            let filter = crate::cohomology::invariant_coordinate_filter(&r, m)
                .unwrap()
                .len();
            let formula = invariant_count_formula(&roots, m).unwrap()
                + r.s() * zero_sum_count(&roots, m).unwrap();
            assert_eq!(filter, formula, "degree {m}");
        }

        let fat = RootSystemData {
            roots: vec![int_vec(&[1, 0])],
            spaces: vec![vec![0, 1]],
        };
        assert!(matches!(
            invariant_count_formula(&fat, 2),
            Err(Error::MultiplicityTooHigh { multiplicity: 2, .. })
        ));
    }
}
