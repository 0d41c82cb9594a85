//! Named builders for the worked algebra examples: nilpotent model algebras,
//! their printed solvable extensions (including parameterized families), and
//! the reference facts each table is documented to satisfy.

use crate::error::Error;
use crate::extension::{SolvableExtension, build_max_extension, extension_with_weights, from_algebra};
use crate::lie::LieAlgebra;
use crate::matrix::{Matrix, Mode};
use crate::scalar::Scalar;

/// A catalog result: either a plain algebra or an algebra packaged with its
/// nilradical split and torus data.
#[derive(Clone, Debug)]
pub enum BuiltAlgebra {
    Plain(LieAlgebra),
    Extension(SolvableExtension),
}

impl BuiltAlgebra {
    pub fn algebra(&self) -> &LieAlgebra {
        match self {
            BuiltAlgebra::Plain(l) => l,
            BuiltAlgebra::Extension(r) => &r.algebra,
        }
    }

    pub fn extension(&self) -> Option<&SolvableExtension> {
        match self {
            BuiltAlgebra::Plain(_) => None,
            BuiltAlgebra::Extension(r) => Some(r),
        }
    }
}

/// Documented reference facts for an entry; `None` fields are unclaimed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    /// Dimension of the maximal torus of the (nilpotent) algebra, or of the
    /// extension's torus.
    pub torus_rank: Option<usize>,
    /// Dimension of the full derivation algebra.
    pub derivation_dim: Option<usize>,
    /// Pinned adjoint second-cohomology dimension.
    pub adjoint_h2: Option<usize>,
    /// The source documents total adjoint cohomology vanishing.
    pub vanishing_claimed: bool,
}

/// A built entry together with its documented facts.
#[derive(Clone, Debug)]
pub struct Built {
    pub name: String,
    pub algebra: BuiltAlgebra,
    pub expected: Expected,
}

/// Static description of one catalog entry for listings.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: &'static str,
    pub summary: &'static str,
}

/// All entries, in listing order.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry { name: "heisenberg3", params: "", summary: "3-dimensional Heisenberg algebra" },
        CatalogEntry { name: "heisenberg3_ext", params: "", summary: "maximal solvable extension of heisenberg3 (dim 5)" },
        CatalogEntry { name: "gorbatsevich_n7", params: "", summary: "7-dimensional characteristically nilpotent algebra" },
        CatalogEntry { name: "gorbatsevich_r", params: "variant=1|2", summary: "two non-isomorphic 9-dimensional solvable algebras over the same split nilradical" },
        CatalogEntry { name: "weightclash11", params: "", summary: "11-dimensional nilpotent algebra with two generator weight columns equal" },
        CatalogEntry { name: "weightclash11_ext", params: "", summary: "maximal solvable extension of weightclash11 (dim 14)" },
        CatalogEntry { name: "q2n", params: "n>=3", summary: "2n-dimensional filiform-type nilpotent algebra Q_2n" },
        CatalogEntry { name: "r2n2", params: "n>=3", summary: "(2n+2)-dimensional solvable algebra over q2n, literal printed basis" },
        CatalogEntry { name: "nbar", params: "n>=5", summary: "n-dimensional nilpotent algebra with a length n-3 chain and 3 generators" },
        CatalogEntry { name: "nbar_ext", params: "n>=5", summary: "maximal solvable extension of nbar (dim n+3)" },
        CatalogEntry { name: "nn1", params: "n>=4", summary: "n-dimensional nilpotent chain algebra n_{n,1}" },
        CatalogEntry { name: "sn2", params: "n>=4", summary: "(n+2)-dimensional solvable algebra over nn1, literal printed basis" },
        CatalogEntry { name: "abelian", params: "n>=1", summary: "abelian algebra" },
        CatalogEntry { name: "s412", params: "", summary: "4-dimensional solvable algebra with rotation action on an abelian nilradical" },
        CatalogEntry { name: "g4", params: "", summary: "4-dimensional two-step nilpotent algebra" },
        CatalogEntry { name: "s6242", params: "", summary: "6-dimensional solvable algebra over g4, literal printed basis" },
        CatalogEntry { name: "ancochea", params: "n1>=1 [n2>=1 ...]", summary: "shift algebra on k chains with its (k+1)-torus extension" },
        CatalogEntry { name: "fano7", params: "", summary: "7-dimensional nilpotent algebra whose seven roots pairwise sum into each other" },
        CatalogEntry { name: "fano_ext", params: "", summary: "maximal solvable extension of fano7 (dim 10), nonvanishing second cohomology" },
        CatalogEntry { name: "borel_sl2", params: "", summary: "Borel subalgebra of sl2" },
        CatalogEntry { name: "borel_sl3", params: "", summary: "Borel subalgebra of sl3 in the Cartan root basis" },
        CatalogEntry { name: "sl2", params: "", summary: "simple algebra sl2" },
        CatalogEntry { name: "g5_36", params: "", summary: "5-dimensional solvable algebra with diagonal torus action" },
        CatalogEntry { name: "g5_37", params: "", summary: "5-dimensional solvable algebra with a rotational (nondiagonal) torus action" },
    ]
}

fn int_matrix(rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
            .collect(),
    )
    .expect("static weight rows are well formed")
}

fn get_param(params: &[(String, i64)], name: &str) -> Option<i64> {
    params.iter().find(|(k, _)| k == name).map(|&(_, v)| v)
}

fn require_param(params: &[(String, i64)], name: &str, min: i64) -> Result<usize, Error> {
    let v = get_param(params, name)
        .ok_or_else(|| Error::BadParam(format!("missing parameter '{name}'")))?;
    if v < min || v > 10_000 {
        return Err(Error::BadParam(format!(
            "parameter '{name}' = {v} outside {min}..=10000"
        )));
    }
    Ok(v as usize)
}

fn reject_unknown(params: &[(String, i64)], allowed: &[&str]) -> Result<(), Error> {
    for (k, _) in params {
        if !allowed.contains(&k.as_str()) {
            return Err(Error::BadParam(format!("unknown parameter '{k}'")));
        }
    }
    Ok(())
}

fn ext_labels(n: usize, s: usize) -> Vec<String> {
    (1..=n)
        .map(|i| format!("e{i}"))
        .chain((1..=s).map(|j| format!("x{j}")))
        .collect()
}

pub fn heisenberg3() -> LieAlgebra {
    let mut l = LieAlgebra::new(3);
    l.add_int_term(1, 2, 0, 1).unwrap();
    l
}

pub fn q2n(n: usize) -> Result<LieAlgebra, Error> {
    if n < 3 {
        return Err(Error::BadParam(format!("q2n requires n >= 3, got {n}")));
    }
    let mut l = LieAlgebra::new(2 * n);
    for k in 2..=(2 * n - 2) {
        l.add_int_term(0, k - 1, k, 1)?;
    }
    for k in 2..=n {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        l.add_int_term(k - 1, 2 * n - k, 2 * n - 1, sign)?;
    }
    Ok(l)
}

/// The printed (2n+2)-dimensional solvable basis over `q2n`: the two torus
/// elements act from the left, so the stored weights are negated. The second
/// one fixes `e1`; extending its scaling to `e1` breaks the Jacobi identity.
pub fn r2n2(n: usize) -> Result<SolvableExtension, Error> {
    let q = q2n(n)?;
    let dim = 2 * n + 2;
    let mut l = LieAlgebra::new(dim);
    for (&(i, j), terms) in q.brackets() {
        for (t, c) in terms {
            l.add_bracket_term(i, j, *t, c.clone())?;
        }
    }
    let (x1, x2) = (2 * n, 2 * n + 1);
    for k in 1..=(2 * n - 1) {
        l.add_int_term(k - 1, x1, k - 1, -(k as i64))?;
    }
    l.add_int_term(2 * n - 1, x1, 2 * n - 1, -(2 * n as i64 + 1))?;
    for k in 2..=(2 * n - 1) {
        l.add_int_term(k - 1, x2, k - 1, -1)?;
    }
    l.add_int_term(2 * n - 1, x2, 2 * n - 1, -2)?;
    l.set_labels(ext_labels(2 * n, 2))?;
    from_algebra(l, 2 * n)
}

pub fn nbar(n: usize) -> Result<LieAlgebra, Error> {
    if n < 5 {
        return Err(Error::BadParam(format!("nbar requires n >= 5, got {n}")));
    }
    let mut l = LieAlgebra::new(n);
    for i in 2..=(n - 2) {
        l.add_int_term(i - 1, n - 1, i - 2, -1)?;
    }
    Ok(l)
}

pub fn nn1(n: usize) -> Result<LieAlgebra, Error> {
    if n < 4 {
        return Err(Error::BadParam(format!("nn1 requires n >= 4, got {n}")));
    }
    let mut l = LieAlgebra::new(n);
    for k in 2..=(n - 1) {
        l.add_int_term(k - 1, n - 1, k - 2, 1)?;
    }
    Ok(l)
}

/// The printed (n+2)-dimensional solvable basis over `nn1` with the two
/// torus elements `f1, f2` acting from the left (stored weights negated).
pub fn sn2(n: usize) -> Result<SolvableExtension, Error> {
    let nil = nn1(n)?;
    let mut l = LieAlgebra::new(n + 2);
    for (&(i, j), terms) in nil.brackets() {
        for (t, c) in terms {
            l.add_bracket_term(i, j, *t, c.clone())?;
        }
    }
    let (f1, f2) = (n, n + 1);
    l.add_int_term(n - 1, f1, n - 1, -1)?;
    for k in 1..=(n - 1) {
        let w = (n - 1 - k) as i64;
        if w != 0 {
            l.add_int_term(k - 1, f1, k - 1, -w)?;
        }
        l.add_int_term(k - 1, f2, k - 1, -1)?;
    }
    let mut labels: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    labels.push("f1".into());
    labels.push("f2".into());
    l.set_labels(labels)?;
    from_algebra(l, n)
}

pub fn s412() -> LieAlgebra {
    let mut l = LieAlgebra::new(4);
    l.add_int_term(0, 2, 0, 1).unwrap();
    l.add_int_term(1, 2, 1, 1).unwrap();
    l.add_int_term(0, 3, 1, -1).unwrap();
    l.add_int_term(1, 3, 0, 1).unwrap();
    l
}

pub fn g4() -> LieAlgebra {
    let mut l = LieAlgebra::new(4);
    l.add_int_term(1, 3, 0, 1).unwrap();
    l.add_int_term(2, 3, 1, 1).unwrap();
    l
}

/// The printed 6-dimensional solvable basis over `g4` with `e5, e6` acting
/// from the left (stored weights negated).
pub fn s6242() -> Result<SolvableExtension, Error> {
    let mut l = LieAlgebra::new(6);
    l.add_int_term(1, 3, 0, 1)?;
    l.add_int_term(2, 3, 1, 1)?;
    l.add_int_term(0, 4, 0, -2)?;
    l.add_int_term(1, 4, 1, -1)?;
    l.add_int_term(3, 4, 3, -1)?;
    l.add_int_term(0, 5, 0, -1)?;
    l.add_int_term(1, 5, 1, -1)?;
    l.add_int_term(2, 5, 2, -1)?;
    from_algebra(l, 4)
}

/// Shift algebra on `k` chains: `e1` moves each chain one step forward;
/// chain `t` has `chains[t]` elements.
pub fn ancochea_nilradical(chains: &[usize]) -> Result<LieAlgebra, Error> {
    if chains.is_empty() || chains.contains(&0) {
        return Err(Error::BadParam(
            "ancochea requires at least one chain of length >= 1".into(),
        ));
    }
    let total: usize = chains.iter().sum();
    let mut l = LieAlgebra::new(total + 1);
    let mut prefix = 0usize;
    for &len in chains {
        // Chain occupies 1-based indices prefix+2 ..= prefix+len+1.
        for i in 2..=len {
            l.add_int_term(0, prefix + i - 1, prefix + i, -1)?;
        }
        prefix += len;
    }
    Ok(l)
}

/// The `(k+1)`-torus extension of the chain-shift algebra: one position
/// weight plus one indicator weight per chain.
pub fn ancochea(chains: &[usize]) -> Result<SolvableExtension, Error> {
    let nil = ancochea_nilradical(chains)?;
    let n = nil.dim();
    let k = chains.len();
    let mut rows = vec![vec![Scalar::zero(); n]; k + 1];
    rows[0][0] = Scalar::one();
    let mut prefix = 0usize;
    for (t, &len) in chains.iter().enumerate() {
        for i in 2..=(len + 1) {
            rows[0][prefix + i - 1] = Scalar::from_int(i as i64 - 2);
            rows[t + 1][prefix + i - 1] = Scalar::one();
        }
        prefix += len;
    }
    let weights = Matrix::from_rows(rows)?;
    let algebra = extension_with_weights(&nil, &weights)?;
    from_algebra(algebra, n)
}

pub fn weightclash11() -> LieAlgebra {
    let mut l = LieAlgebra::new(11);
    for (i, j, t) in [
        (2, 1, 8),
        (1, 4, 10),
        (5, 7, 10),
        (1, 3, 9),
        (5, 6, 9),
        (4, 3, 11),
        (7, 6, 11),
        (2, 3, 10),
    ] {
        l.add_int_term(i - 1, j - 1, t - 1, 1).unwrap();
    }
    l
}

pub fn fano7() -> LieAlgebra {
    let mut l = LieAlgebra::new(7);
    l.add_int_term(0, 1, 3, 1).unwrap();
    l.add_int_term(0, 2, 4, 1).unwrap();
    l.add_int_term(1, 2, 5, 1).unwrap();
    l.add_int_term(2, 3, 6, -1).unwrap();
    l.add_int_term(0, 5, 6, 1).unwrap();
    l
}

pub fn fano_ext() -> Result<SolvableExtension, Error> {
    let rows = int_matrix(&[
        &[1, 0, 0, 1, 1, 0, 1],
        &[0, 1, 0, 1, 0, 1, 1],
        &[0, 0, 1, 0, 1, 1, 1],
    ]);
    let algebra = extension_with_weights(&fano7(), &rows)?;
    from_algebra(algebra, 7)
}

pub fn borel_sl2() -> Result<SolvableExtension, Error> {
    let algebra = extension_with_weights(&LieAlgebra::new(1), &int_matrix(&[&[2]]))?;
    from_algebra(algebra, 1)
}

pub fn borel_sl3() -> Result<SolvableExtension, Error> {
    // Positive root vectors with [e1, e2] = e3; torus rows are the two
    // coroots acting through the Cartan matrix.
    let mut h = LieAlgebra::new(3);
    h.add_int_term(0, 1, 2, 1)?;
    let rows = int_matrix(&[&[2, -1, 1], &[-1, 2, 1]]);
    let algebra = extension_with_weights(&h, &rows)?;
    from_algebra(algebra, 3)
}

pub fn sl2() -> LieAlgebra {
    let mut l = LieAlgebra::new(3);
    l.add_int_term(0, 1, 2, 1).unwrap();
    l.add_int_term(2, 0, 0, 2).unwrap();
    l.add_int_term(2, 1, 1, -2).unwrap();
    l
}

pub fn g5_36() -> LieAlgebra {
    let mut l = LieAlgebra::new(5);
    l.add_int_term(1, 2, 0, 1).unwrap();
    l.add_int_term(0, 3, 0, 1).unwrap();
    l.add_int_term(1, 3, 1, 1).unwrap();
    l.add_int_term(1, 4, 1, -1).unwrap();
    l.add_int_term(2, 4, 2, 1).unwrap();
    l.set_labels(ext_labels(3, 2)).unwrap();
    l
}

pub fn g5_37() -> LieAlgebra {
    let mut l = LieAlgebra::new(5);
    l.add_int_term(1, 2, 0, 1).unwrap();
    l.add_int_term(0, 3, 0, 2).unwrap();
    l.add_int_term(1, 3, 1, 1).unwrap();
    l.add_int_term(2, 3, 2, 1).unwrap();
    l.add_int_term(1, 4, 2, -1).unwrap();
    l.add_int_term(2, 4, 1, 1).unwrap();
    l.set_labels(ext_labels(3, 2)).unwrap();
    l
}

pub fn gorbatsevich_n7() -> LieAlgebra {
    let mut l = LieAlgebra::new(7);
    for (i, j, t, c) in [
        (1, 2, 3, 1),
        (1, 3, 4, 1),
        (1, 4, 5, 1),
        (1, 5, 6, 1),
        (1, 6, 7, 1),
        (2, 3, 6, 1),
        (2, 4, 7, 1),
        (2, 5, 7, 1),
        (3, 4, 7, -1),
    ] {
        l.add_int_term(i - 1, j - 1, t - 1, c).unwrap();
    }
    l
}

/// The two 9-dimensional solvable algebras over the split nilradical
/// `gorbatsevich_n7 + <e8>`; variant 2 twists the action by the outer
/// derivation e1 -> e5, e2 -> e6, dropping the derivation dimension from
/// 13 to 12. Most outer twists drop the dimension; a twist congruent to
/// e1 -> e6 modulo inner derivations is the one exception and keeps 13.
pub fn gorbatsevich_r(variant: usize) -> Result<LieAlgebra, Error> {
    if variant != 1 && variant != 2 {
        return Err(Error::BadParam(format!(
            "gorbatsevich_r variant must be 1 or 2, got {variant}"
        )));
    }
    let n7 = gorbatsevich_n7();
    let mut l = LieAlgebra::new(9);
    for (&(i, j), terms) in n7.brackets() {
        for (t, c) in terms {
            l.add_bracket_term(i, j, *t, c.clone())?;
        }
    }
    l.add_int_term(7, 8, 7, 1)?;
    if variant == 2 {
        l.add_int_term(0, 8, 4, 1)?;
        l.add_int_term(1, 8, 5, 1)?;
    }
    let mut labels: Vec<String> = (1..=8).map(|i| format!("e{i}")).collect();
    labels.push("x".into());
    l.set_labels(labels)?;
    Ok(l)
}

/// Builds a catalog entry by name. Parameters are name/value pairs; unknown
/// names and out-of-range values are rejected.
pub fn catalog_build(name: &str, params: &[(String, i64)]) -> Result<Built, Error> {
    let built = |algebra: BuiltAlgebra, expected: Expected| -> Result<Built, Error> {
        Ok(Built {
            name: name.to_string(),
            algebra,
            expected,
        })
    };
    let plain = |l: LieAlgebra, expected: Expected| -> Result<Built, Error> {
        built(BuiltAlgebra::Plain(l), expected)
    };
    let ext = |r: SolvableExtension, expected: Expected| -> Result<Built, Error> {
        built(BuiltAlgebra::Extension(r), expected)
    };
    match name {
        "heisenberg3" => {
            reject_unknown(params, &[])?;
            plain(heisenberg3(), Expected { torus_rank: Some(2), ..Default::default() })
        }
        "heisenberg3_ext" => {
            reject_unknown(params, &[])?;
            ext(
                build_max_extension(&heisenberg3(), Mode::default())?,
                Expected {
                    torus_rank: Some(2),
                    derivation_dim: Some(5),
                    vanishing_claimed: true,
                    ..Default::default()
                },
            )
        }
        "gorbatsevich_n7" => {
            reject_unknown(params, &[])?;
            plain(gorbatsevich_n7(), Expected { torus_rank: Some(0), ..Default::default() })
        }
        "gorbatsevich_r" => {
            reject_unknown(params, &["variant"])?;
            let variant = require_param(params, "variant", 1)?;
            let der = if variant == 1 { 13 } else { 12 };
            plain(
                gorbatsevich_r(variant)?,
                Expected { derivation_dim: Some(der), ..Default::default() },
            )
        }
        "weightclash11" => {
            reject_unknown(params, &[])?;
            plain(
                weightclash11(),
                Expected { torus_rank: Some(3), derivation_dim: Some(35), ..Default::default() },
            )
        }
        "weightclash11_ext" => {
            reject_unknown(params, &[])?;
            ext(
                build_max_extension(&weightclash11(), Mode::default())?,
                Expected { torus_rank: Some(3), ..Default::default() },
            )
        }
        "q2n" => {
            reject_unknown(params, &["n"])?;
            let n = require_param(params, "n", 3)?;
            plain(q2n(n)?, Expected { torus_rank: Some(2), ..Default::default() })
        }
        "r2n2" => {
            reject_unknown(params, &["n"])?;
            let n = require_param(params, "n", 3)?;
            ext(
                r2n2(n)?,
                Expected {
                    torus_rank: Some(2),
                    derivation_dim: Some(2 * n + 2),
                    vanishing_claimed: true,
                    ..Default::default()
                },
            )
        }
        "nbar" => {
            reject_unknown(params, &["n"])?;
            let n = require_param(params, "n", 5)?;
            plain(nbar(n)?, Expected { torus_rank: Some(3), ..Default::default() })
        }
        "nbar_ext" => {
            reject_unknown(params, &["n"])?;
            let n = require_param(params, "n", 5)?;
            ext(
                build_max_extension(&nbar(n)?, Mode::default())?,
                Expected {
                    torus_rank: Some(3),
                    derivation_dim: Some(n + 3),
                    vanishing_claimed: true,
                    ..Default::default()
                },
            )
        }
        "nn1" => {
            reject_unknown(params, &["n"])?;
            let n = require_param(params, "n", 4)?;
            plain(nn1(n)?, Expected { torus_rank: Some(2), ..Default::default() })
        }
        "sn2" => {
            reject_unknown(params, &["n"])?;
            let n = require_param(params, "n", 4)?;
            ext(
                sn2(n)?,
                Expected {
                    torus_rank: Some(2),
                    derivation_dim: Some(n + 2),
                    vanishing_claimed: true,
                    ..Default::default()
                },
            )
        }
        "abelian" => {
            reject_unknown(params, &["n"])?;
            let n = require_param(params, "n", 1)?;
            plain(LieAlgebra::new(n), Expected { torus_rank: Some(n), ..Default::default() })
        }
        "s412" => {
            reject_unknown(params, &[])?;
            plain(s412(), Expected::default())
        }
        "g4" => {
            reject_unknown(params, &[])?;
            plain(g4(), Expected { torus_rank: Some(2), ..Default::default() })
        }
        "s6242" => {
            reject_unknown(params, &[])?;
            ext(
                s6242()?,
                Expected {
                    torus_rank: Some(2),
                    derivation_dim: Some(6),
                    ..Default::default()
                },
            )
        }
        "ancochea" => {
            let mut chains = Vec::new();
            let mut allowed = Vec::new();
            let names: Vec<String> = (1..=params.len().max(1)).map(|t| format!("n{t}")).collect();
            for nm in &names {
                allowed.push(nm.as_str());
            }
            reject_unknown(params, &allowed)?;
            for nm in &names {
                chains.push(require_param(params, nm, 1)?);
            }
            let k = chains.len();
            let r = ancochea(&chains)?;
            let dim = r.algebra.dim();
            ext(
                r,
                Expected {
                    torus_rank: Some(k + 1),
                    derivation_dim: Some(dim),
                    vanishing_claimed: true,
                    ..Default::default()
                },
            )
        }
        "fano7" => {
            reject_unknown(params, &[])?;
            plain(fano7(), Expected { torus_rank: Some(3), ..Default::default() })
        }
        "fano_ext" => {
            reject_unknown(params, &[])?;
            ext(
                fano_ext()?,
                Expected {
                    torus_rank: Some(3),
                    derivation_dim: Some(10),
                    adjoint_h2: Some(1),
                    ..Default::default()
                },
            )
        }
        "borel_sl2" => {
            reject_unknown(params, &[])?;
            ext(
                borel_sl2()?,
                Expected {
                    torus_rank: Some(1),
                    derivation_dim: Some(2),
                    vanishing_claimed: true,
                    ..Default::default()
                },
            )
        }
        "borel_sl3" => {
            reject_unknown(params, &[])?;
            ext(
                borel_sl3()?,
                Expected {
                    torus_rank: Some(2),
                    derivation_dim: Some(5),
                    vanishing_claimed: true,
                    ..Default::default()
                },
            )
        }
        "sl2" => {
            reject_unknown(params, &[])?;
            plain(sl2(), Expected::default())
        }
        "g5_36" => {
            reject_unknown(params, &[])?;
            plain(g5_36(), Expected { torus_rank: Some(2), ..Default::default() })
        }
        "g5_37" => {
            reject_unknown(params, &[])?;
            plain(g5_37(), Expected::default())
        }
        other => Err(Error::UnknownCatalogEntry(other.to_string())),
    }
}
