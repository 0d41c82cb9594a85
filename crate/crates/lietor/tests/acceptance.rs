//! End-to-end acceptance checks: each test pins one documented end result of
//! the full pipeline (torus, extension, base change, derivations, cohomology,
//! counting identities) with exact frozen values and prints one line.

use lietor::catalog;
use lietor::cohomology::{
    adjoint_action, coboundary_matrix, cohomology_dim, hochschild_serre_dim,
    invariant_cohomology_dim, invariant_coordinate_filter, restriction_action,
};
use lietor::deriv::{derivation_space, is_characteristically_nilpotent};
use lietor::extension::{build_max_extension, build_split_extension, extension_with_weights};
use lietor::lie::Subspace;
use lietor::roots::{
    invariant_count_formula, root_decomposition, sm_bound, vanish_predictor, zero_sum_count,
};
use lietor::torus::weight_equations;
use lietor::{LieAlgebra, Matrix, Mode, Scalar, SolvableExtension};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn der_dim(l: &LieAlgebra) -> usize {
    derivation_space(l, Mode::default()).unwrap().len()
}

fn h_direct(l: &LieAlgebra, p: usize) -> usize {
    cohomology_dim(&adjoint_action(l).unwrap(), p, Mode::default()).unwrap()
}

fn h_factorized(r: &SolvableExtension, p: usize) -> usize {
    hochschild_serre_dim(r, p, Mode::default()).unwrap()
}

/// Identity base-change matrix with the listed rows replaced.
fn basechange(dim: usize, overrides: &[(usize, usize, i64)]) -> Matrix {
    let mut p = Matrix::identity(dim);
    for &(r, _, _) in overrides {
        p[(r, r)] = Scalar::zero();
    }
    for &(r, c, v) in overrides {
        p[(r, c)] = Scalar::from_int(v);
    }
    p
}

/// Rank of the coboundary restricted to the invariant subcomplex at degree m.
fn restricted_rank(r: &SolvableExtension, m: usize) -> usize {
    let action = restriction_action(r).unwrap();
    let d = coboundary_matrix(&action, m, Mode::default()).unwrap().boundary;
    let cols = invariant_coordinate_filter(r, m).unwrap();
    if cols.is_empty() || d.nrows() == 0 {
        return 0;
    }
    let dt = d.transpose();
    let picked: Vec<Vec<Scalar>> = cols.iter().map(|&c| dt.row(c).to_vec()).collect();
    Matrix::from_rows(picked).unwrap().rank()
}

#[test]
fn check_01_heisenberg_tower_is_exact_and_vanishes() {
    let h = catalog::heisenberg3();
    let r = build_max_extension(&h, Mode::default()).unwrap();
    assert_eq!(r.s(), 2, "torus dimension");

    // The documented five-dimensional table; the canonical build hits it
    // on the nose, so the base change is the identity.
    let mut printed = LieAlgebra::new(5);
    printed.add_int_term(1, 2, 0, 1).unwrap();
    printed.add_int_term(0, 3, 0, 1).unwrap();
    printed.add_int_term(1, 3, 1, 1).unwrap();
    printed.add_int_term(0, 4, 0, 1).unwrap();
    printed.add_int_term(2, 4, 2, 1).unwrap();
    assert_eq!(r.algebra, printed, "five-dimensional extension table");

    for p in 0..=3 {
        assert_eq!(h_direct(&r.algebra, p), 0, "direct H^{p}");
        assert_eq!(h_factorized(&r, p), 0, "factorized H^{p}");
    }
    println!("acceptance 01 PASS: heisenberg tower exact, H^0..H^3 = 0 both ways");
}

#[test]
fn check_02_filiform_q6_tower_and_its_triple_predictor() {
    let q6 = catalog::q2n(3).unwrap();
    assert_eq!(weight_equations(&q6).rank(), 4, "weight equation rank");
    let r = build_max_extension(&q6, Mode::default()).unwrap();
    assert_eq!(r.s(), 2, "torus dimension");
    assert_eq!(r.algebra.dim(), 8, "extension dimension");

    // x1' = -x1 - 2*x2, x2' = -x2 carries the canonical tower onto the
    // printed eight-dimensional table.
    let p = basechange(8, &[(6, 6, -1), (6, 7, -2), (7, 7, -1)]);
    let moved = r.algebra.apply_basechange(&p).unwrap();
    assert_eq!(moved, catalog::r2n2(3).unwrap().algebra, "printed table");

    for deg in 0..=3 {
        assert_eq!(h_direct(&r.algebra, deg), 0, "direct H^{deg}");
        assert_eq!(h_factorized(&r, deg), 0, "factorized H^{deg}");
    }

    let prediction = vanish_predictor(&r).unwrap();
    if !prediction.triple_criterion {
        println!(
            "acceptance 02 FAIL: distinct-triple predictor computed false \
             (documented expectation: true); every other assertion passed"
        );
    }
    assert!(
        prediction.triple_criterion,
        "the distinct-triple predictor is documented as true for this tower, \
         but the roots contain the pairwise-distinct triple a1, a2, 2*a1+a2 \
         whose sum 3*a1+2*a2 is again a root, so the faithful value is false; \
         the cohomology itself does vanish (asserted above)"
    );
    println!("acceptance 02 PASS: q6 tower exact, predictor true, H^0..H^3 = 0");
}

#[test]
fn check_03_chain_algebra_towers_match_their_printed_tables() {
    // One-chain algebra on five elements.
    let n51 = catalog::nn1(5).unwrap();
    let r51 = build_max_extension(&n51, Mode::default()).unwrap();
    assert_eq!(r51.s(), 2, "chain tower torus dimension");
    // f1 = -x2, f2 = -x1.
    let p = basechange(7, &[(5, 6, -1), (6, 5, -1)]);
    let moved = r51.algebra.apply_basechange(&p).unwrap();
    assert_eq!(moved, catalog::sn2(5).unwrap().algebra, "printed n51 table");
    for deg in 0..=3 {
        assert_eq!(h_direct(&r51.algebra, deg), 0, "n51 direct H^{deg}");
        assert_eq!(h_factorized(&r51, deg), 0, "n51 factorized H^{deg}");
    }

    // Downward-shift algebra on six elements.
    let nbar = catalog::nbar(6).unwrap();
    let rbar = build_max_extension(&nbar, Mode::default()).unwrap();
    assert_eq!(rbar.s(), 3, "shift tower torus dimension");
    // h1 = -x3, h2 = -x1, h3 = -x2.
    let p = basechange(9, &[(6, 8, -1), (7, 6, -1), (8, 7, -1)]);
    let moved = rbar.algebra.apply_basechange(&p).unwrap();
    let mut printed = LieAlgebra::new(9);
    for i in 2..=4 {
        printed.add_int_term(i - 1, 5, i - 2, -1).unwrap();
    }
    printed.add_int_term(5, 6, 5, -1).unwrap();
    for i in 1..=3 {
        printed.add_int_term(i - 1, 6, i - 1, -(4 - i as i64)).unwrap();
    }
    for i in 1..=4 {
        printed.add_int_term(i - 1, 7, i - 1, -1).unwrap();
    }
    printed.add_int_term(4, 8, 4, -1).unwrap();
    assert_eq!(moved, printed, "printed shift-algebra table");
    for deg in 0..=3 {
        assert_eq!(h_direct(&rbar.algebra, deg), 0, "shift direct H^{deg}");
        assert_eq!(h_factorized(&rbar, deg), 0, "shift factorized H^{deg}");
    }
    println!("acceptance 03 PASS: both chain towers match their tables, H^0..H^3 = 0");
}

#[test]
fn check_04_weight_clash_embeds_in_the_documented_derivations() {
    let n = catalog::weightclash11();
    // The displayed derivation pattern resolves to 35 free parameters: seven
    // in the generator block plus seven rows of four tail entries (the final
    // displayed symbol is the dependent value -a13, not a new parameter).
    assert_eq!(der_dim(&n), 35, "derivation dimension");

    let r = build_max_extension(&n, Mode::default()).unwrap();
    assert_eq!(r.s(), 3, "torus dimension");
    let printed = [
        vec![1, 0, 0, -1, 1, 0, -1, 1, 1, 0, -1],
        vec![0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1],
        vec![0, 0, 1, 1, 0, 1, 1, 0, 1, 1, 2],
    ];
    let printed_span = Subspace::from_vectors(
        11,
        printed
            .iter()
            .map(|row| row.iter().map(|&v| Scalar::from_int(v)).collect())
            .collect(),
    )
    .unwrap();
    let torus_span = Subspace::from_vectors(
        11,
        (0..r.torus.s()).map(|k| r.torus.weights.row(k).to_vec()).collect(),
    )
    .unwrap();
    assert!(torus_span.is_subspace_of(&printed_span), "torus inside printed span");
    assert!(printed_span.is_subspace_of(&torus_span), "printed span inside torus");

    let report = r.condition_a(Mode::default()).unwrap();
    assert!(!report.holds, "generator separation must fail");
    assert_eq!(report.violations, vec![(4, 7)], "clashing generator pair");
    println!("acceptance 04 PASS: dim Der 35, torus span matches, clash pair (4,7)");
}

#[test]
fn check_05_twisted_split_towers_have_distinct_derivation_counts() {
    let r1 = catalog::gorbatsevich_r(1).unwrap();
    let r2 = catalog::gorbatsevich_r(2).unwrap();
    assert_eq!(der_dim(&r1), 13, "untwisted tower");
    assert_eq!(der_dim(&r2), 12, "twisted tower");
    assert!(
        is_characteristically_nilpotent(&catalog::gorbatsevich_n7(), Mode::default()).unwrap(),
        "seven-dimensional factor"
    );
    println!("acceptance 05 PASS: dim Der 13 vs 12, factor characteristically nilpotent");
}

#[test]
fn check_06_fano_tower_has_one_dimensional_second_cohomology() {
    let r = catalog::fano_ext().unwrap();
    assert_eq!(h_factorized(&r, 2), 1, "second cohomology");
    let prediction = vanish_predictor(&r).unwrap();
    assert!(!prediction.triple_criterion, "triple criterion");
    assert!(!prediction.two_step_criterion, "two-step criterion");
    println!("acceptance 06 PASS: dim H^2 = 1, both vanishing predictors false");
}

#[test]
fn check_07_separated_towers_have_only_inner_derivations() {
    let cases: Vec<(&str, SolvableExtension)> = vec![
        ("heisenberg", build_max_extension(&catalog::heisenberg3(), Mode::default()).unwrap()),
        ("abelian2", build_max_extension(&LieAlgebra::new(2), Mode::default()).unwrap()),
        ("q6", build_max_extension(&catalog::q2n(3).unwrap(), Mode::default()).unwrap()),
        ("n51", build_max_extension(&catalog::nn1(5).unwrap(), Mode::default()).unwrap()),
        ("nbar6", build_max_extension(&catalog::nbar(6).unwrap(), Mode::default()).unwrap()),
        ("g4", build_max_extension(&catalog::g4(), Mode::default()).unwrap()),
        ("fano", catalog::fano_ext().unwrap()),
    ];
    for (name, r) in cases {
        assert!(r.condition_a(Mode::default()).unwrap().holds, "{name}: separation");
        assert_eq!(r.algebra.center().unwrap().dim(), 0, "{name}: center");
        assert_eq!(der_dim(&r.algebra), r.algebra.dim(), "{name}: all derivations inner");
        assert_eq!(h_direct(&r.algebra, 1), 0, "{name}: direct H^1");
        assert_eq!(h_factorized(&r, 1), 0, "{name}: factorized H^1");
    }
    println!("acceptance 07 PASS: seven towers are complete with H^1 = 0 both ways");
}

#[test]
fn check_08_dropping_a_torus_row_creates_an_outer_derivation() {
    let h = catalog::heisenberg3();
    let full = build_max_extension(&h, Mode::default()).unwrap();
    let one_row = Matrix::from_rows(vec![full.torus.weights.row(0).to_vec()]).unwrap();
    let partial = extension_with_weights(&h, &one_row).unwrap();
    assert!(der_dim(&partial) > partial.dim(), "outer derivation must appear");
    println!("acceptance 08 PASS: non-maximal tower has an outer derivation");
}

#[test]
fn check_09_nilpotent_algebras_have_nontrivial_first_cohomology() {
    let nilpotents: Vec<(&str, LieAlgebra)> = vec![
        ("heisenberg3", catalog::heisenberg3()),
        ("gorbatsevich_n7", catalog::gorbatsevich_n7()),
        ("weightclash11", catalog::weightclash11()),
        ("q6", catalog::q2n(3).unwrap()),
        ("nbar5", catalog::nbar(5).unwrap()),
        ("nn1_4", catalog::nn1(4).unwrap()),
        ("abelian2", LieAlgebra::new(2)),
        ("g4", catalog::g4()),
        ("fano7", catalog::fano7()),
    ];
    for (name, n) in nilpotents {
        assert!(n.is_nilpotent().unwrap(), "{name}: nilpotent");
        assert!(h_direct(&n, 1) >= 1, "{name}: H^1 must be nonzero");
    }
    println!("acceptance 09 PASS: H^1(N,N) >= 1 for all nine nilpotent entries");
}

#[test]
fn check_10_all_five_printed_base_changes_are_exact() {
    // Filiform tower onto its printed table.
    let rq = build_max_extension(&catalog::q2n(3).unwrap(), Mode::default()).unwrap();
    let p = basechange(8, &[(6, 6, -1), (6, 7, -2), (7, 7, -1)]);
    assert_eq!(
        rq.algebra.apply_basechange(&p).unwrap(),
        catalog::r2n2(3).unwrap().algebra,
        "filiform tower"
    );

    // One-chain tower onto its printed table.
    let r51 = build_max_extension(&catalog::nn1(5).unwrap(), Mode::default()).unwrap();
    let p = basechange(7, &[(5, 6, -1), (6, 5, -1)]);
    assert_eq!(
        r51.algebra.apply_basechange(&p).unwrap(),
        catalog::sn2(5).unwrap().algebra,
        "one-chain tower"
    );

    // Downward-shift tower onto its printed table (as in check 03).
    let rbar = build_max_extension(&catalog::nbar(6).unwrap(), Mode::default()).unwrap();
    let p = basechange(9, &[(6, 8, -1), (7, 6, -1), (8, 7, -1)]);
    let mut printed = LieAlgebra::new(9);
    for i in 2..=4 {
        printed.add_int_term(i - 1, 5, i - 2, -1).unwrap();
    }
    printed.add_int_term(5, 6, 5, -1).unwrap();
    for i in 1..=3 {
        printed.add_int_term(i - 1, 6, i - 1, -(4 - i as i64)).unwrap();
    }
    for i in 1..=4 {
        printed.add_int_term(i - 1, 7, i - 1, -1).unwrap();
    }
    printed.add_int_term(4, 8, 4, -1).unwrap();
    assert_eq!(rbar.algebra.apply_basechange(&p).unwrap(), printed, "shift tower");

    // Abelian tower onto the rotation table, over the Gaussian rationals.
    let rab = build_max_extension(&LieAlgebra::new(2), Mode::default()).unwrap();
    let p = Matrix::from_rows(vec![
        vec![Scalar::i(), -Scalar::i(), Scalar::zero(), Scalar::zero()],
        vec![Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::zero()],
        vec![Scalar::zero(), Scalar::zero(), Scalar::one(), Scalar::one()],
        vec![Scalar::zero(), Scalar::zero(), Scalar::i(), -Scalar::i()],
    ])
    .unwrap();
    assert_eq!(
        rab.algebra.apply_basechange(&p).unwrap(),
        catalog::s412(),
        "abelian tower"
    );

    // Two-step tower onto its printed table: e5 = -x2, e6 = -x1 in the
    // canonical order.
    let rg = build_max_extension(&catalog::g4(), Mode::default()).unwrap();
    let p = basechange(6, &[(4, 5, -1), (5, 4, -1)]);
    assert_eq!(
        rg.algebra.apply_basechange(&p).unwrap(),
        catalog::s6242().unwrap().algebra,
        "two-step tower"
    );
    println!("acceptance 10 PASS: all five printed base changes land exactly");
}

fn two_step(v: usize, z: usize, coeffs: &[i64]) -> LieAlgebra {
    let mut l = LieAlgebra::new(v + z);
    let mut idx = 0;
    for i in 0..v {
        for j in (i + 1)..v {
            for t in 0..z {
                l.add_int_term(i, j, v + t, coeffs[idx]).unwrap();
                idx += 1;
            }
        }
    }
    l
}

#[test]
fn check_11_factorized_cohomology_agrees_with_direct_everywhere() {
    let params = |name: &str| -> Vec<(String, i64)> {
        match name {
            "gorbatsevich_r" => vec![("variant".into(), 1)],
            "q2n" | "r2n2" => vec![("n".into(), 3)],
            "nbar" | "nbar_ext" => vec![("n".into(), 5)],
            "nn1" | "sn2" => vec![("n".into(), 4)],
            "abelian" => vec![("n".into(), 2)],
            "ancochea" => vec![("n1".into(), 2), ("n2".into(), 2)],
            _ => vec![],
        }
    };
    let mut checked = 0usize;
    for entry in catalog::catalog_entries() {
        let built = catalog::catalog_build(entry.name, &params(entry.name)).unwrap();
        let Some(r) = built.algebra.extension() else { continue };
        if r.algebra.dim() > 8 {
            continue;
        }
        for p in 0..=2 {
            assert_eq!(
                h_factorized(r, p),
                h_direct(&r.algebra, p),
                "{}: degree {p}",
                entry.name
            );
        }
        checked += 1;
    }
    assert!(checked >= 6, "catalog sweep covered {checked} extensions");

    let mut rng = ChaCha8Rng::seed_from_u64(2718);
    let mut built = 0usize;
    while built < 25 {
        let v = rng.gen_range(2..=4usize);
        let z = rng.gen_range(1..=(5 - v).clamp(1, 2));
        let count = v * (v - 1) / 2 * z;
        let coeffs: Vec<i64> = (0..count).map(|_| rng.gen_range(-2..=2)).collect();
        let n = two_step(v, z, &coeffs);
        if n.is_abelian() {
            continue;
        }
        let r = build_max_extension(&n, Mode::default()).unwrap();
        for p in 0..=2 {
            assert_eq!(
                h_factorized(&r, p),
                h_direct(&r.algebra, p),
                "random instance {built}, degree {p}"
            );
        }
        built += 1;
    }
    println!(
        "acceptance 11 PASS: factorized = direct on {checked} catalog towers and 25 random ones"
    );
}

#[test]
fn check_12_borel_towers_have_vanishing_cohomology() {
    for (name, r) in [
        ("borel_sl2", catalog::borel_sl2().unwrap()),
        ("borel_sl3", catalog::borel_sl3().unwrap()),
    ] {
        for p in 0..=2 {
            assert_eq!(h_direct(&r.algebra, p), 0, "{name}: H^{p}");
        }
    }
    println!("acceptance 12 PASS: H^0..H^2 = 0 for both borel towers");
}

#[test]
fn check_13_split_towers_assemble_part_by_part() {
    let h = catalog::heisenberg3();
    let split = build_split_extension(&[h.clone(), h.clone()], Mode::default()).unwrap();
    assert_eq!(split.s(), 4, "torus dimension");
    let direct = build_max_extension(&h.direct_sum(&h), Mode::default()).unwrap();
    assert_eq!(split.algebra, direct.algebra, "part-by-part equals one-step");
    assert_eq!(split.torus.weights, direct.torus.weights, "same torus");
    println!("acceptance 13 PASS: split assembly matches the one-step tower, torus dim 4");
}

#[test]
fn check_14_root_counting_identities_hold_on_simple_towers() {
    let cases: Vec<(&str, SolvableExtension)> = vec![
        ("heisenberg3_ext", build_max_extension(&catalog::heisenberg3(), Mode::default()).unwrap()),
        ("r2n2_3", catalog::r2n2(3).unwrap()),
        ("nbar_ext_5", build_max_extension(&catalog::nbar(5).unwrap(), Mode::default()).unwrap()),
        ("sn2_4", catalog::sn2(4).unwrap()),
        ("s6242", catalog::s6242().unwrap()),
        ("ancochea_2_2", catalog::ancochea(&[2, 2]).unwrap()),
        ("fano_ext", catalog::fano_ext().unwrap()),
        ("borel_sl2", catalog::borel_sl2().unwrap()),
        ("borel_sl3", catalog::borel_sl3().unwrap()),
    ];
    let mut covered = 0usize;
    for (name, r) in cases {
        let roots = root_decomposition(&r).unwrap();
        assert!(roots.multiplicity_one(), "{name}: simple roots expected");
        covered += 1;
        let n = r.nilradical_dim;
        let md = r.algebra.dim();
        let s = r.s();
        let mut rank_prev = 0usize;
        for m in 0..=3usize.min(n) {
            let filter = invariant_coordinate_filter(&r, m).unwrap();
            let into_nilradical = filter.iter().filter(|&&c| c % md < n).count();
            let formula = invariant_count_formula(&roots, m).unwrap();
            assert_eq!(formula, into_nilradical, "{name}: count at degree {m}");
            let zero_sums = zero_sum_count(&roots, m).unwrap();
            assert_eq!(
                formula + s * zero_sums,
                filter.len(),
                "{name}: split count at degree {m}"
            );

            let rank_m = restricted_rank(&r, m);
            if m >= 1 {
                let bound = sm_bound(&roots, m).unwrap();
                assert!(rank_m <= bound, "{name}: rank {rank_m} over bound {bound} at {m}");
            }
            assert_eq!(
                invariant_cohomology_dim(&r, m, Mode::default()).unwrap(),
                filter.len() - rank_m - rank_prev,
                "{name}: dimension arithmetic at degree {m}"
            );
            rank_prev = rank_m;
        }
    }
    assert_eq!(covered, 9, "all simple-root towers covered");
    println!("acceptance 14 PASS: counting identities verified on 9 towers, degrees 0..3");
}
