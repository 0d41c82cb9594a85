//! JSON documents for algebras and matrices: a stable 1-based schema with
//! canonical emission, field-positioned validation errors, and conversion to
//! and from the in-memory types.

use crate::error::Error;
use crate::extension::{SolvableExtension, from_algebra};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::path::Path;

/// One `coeff * e_basis` contribution to a bracket, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub basis: usize,
    pub coeff: Scalar,
}

/// The full expansion of one bracket `[e_left, e_right]`, with `left < right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketEntry {
    pub left: usize,
    pub right: usize,
    pub terms: Vec<Term>,
}

/// A validated algebra file: all indices 1-based, brackets stored once per
/// unordered pair, coefficients in the canonical scalar text form.
///
/// `nilradical_dim` marks a solvable extension split `R = N + Q` where the
/// first `nilradical_dim` basis vectors span the nilradical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilradical_dim: Option<usize>,
}

/// Loose mirror of the on-disk schema: coefficients stay text until the
/// validator can blame the exact field that fails to parse.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    name: String,
    dim: usize,
    #[serde(default)]
    basis: Vec<String>,
    #[serde(default)]
    brackets: Vec<RawBracket>,
    #[serde(default)]
    nilradical_dim: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBracket {
    left: usize,
    right: usize,
    terms: Vec<RawTerm>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    basis: usize,
    coeff: String,
}

fn check_index(value: usize, dim: usize, field: &str) -> Result<(), Error> {
    if value == 0 || value > dim {
        return Err(Error::Parse(format!(
            "{field}: index {value} out of range 1..={dim}"
        )));
    }
    Ok(())
}

/// Parses and validates a JSON algebra document.
///
/// Zero-coefficient terms and emptied brackets are pruned, and terms are
/// merged and sorted by target, so the result is in canonical form. Errors
/// carry the JSON path of the offending field.
pub fn parse_algebra(text: &str) -> Result<AlgebraDocument, Error> {
    let raw: RawDocument = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("invalid algebra document: {e}")))?;
    let dim = raw.dim;
    if !raw.basis.is_empty() && raw.basis.len() != dim {
        return Err(Error::Parse(format!(
            "basis: {} labels for dimension {dim}",
            raw.basis.len()
        )));
    }
    if let Some(nd) = raw.nilradical_dim {
        if nd > dim {
            return Err(Error::Parse(format!(
                "nilradical_dim: {nd} exceeds dimension {dim}"
            )));
        }
    }
    let basis = if raw.basis.is_empty() {
        (1..=dim).map(|k| format!("e{k}")).collect()
    } else {
        raw.basis
    };
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut brackets = Vec::new();
    for (k, entry) in raw.brackets.iter().enumerate() {
        check_index(entry.left, dim, &format!("brackets[{k}].left"))?;
        check_index(entry.right, dim, &format!("brackets[{k}].right"))?;
        if entry.left >= entry.right {
            return Err(Error::Parse(format!(
                "brackets[{k}]: left {} is not smaller than right {}",
                entry.left, entry.right
            )));
        }
        if !seen.insert((entry.left, entry.right)) {
            return Err(Error::Parse(format!(
                "brackets[{k}]: duplicate bracket ({}, {})",
                entry.left, entry.right
            )));
        }
        let mut terms: Vec<Term> = Vec::new();
        for (t, term) in entry.terms.iter().enumerate() {
            check_index(term.basis, dim, &format!("brackets[{k}].terms[{t}].basis"))?;
            let coeff: Scalar = term.coeff.parse().map_err(|e: Error| {
                Error::Parse(format!("brackets[{k}].terms[{t}].coeff: {e}"))
            })?;
            if coeff.is_zero() {
                continue;
            }
            match terms.binary_search_by_key(&term.basis, |t| t.basis) {
                Ok(pos) => {
                    terms[pos].coeff += &coeff;
                    if terms[pos].coeff.is_zero() {
                        terms.remove(pos);
                    }
                }
                Err(pos) => terms.insert(
                    pos,
                    Term {
                        basis: term.basis,
                        coeff,
                    },
                ),
            }
        }
        if !terms.is_empty() {
            brackets.push(BracketEntry {
                left: entry.left,
                right: entry.right,
                terms,
            });
        }
    }
    Ok(AlgebraDocument {
        name: raw.name,
        dim,
        basis,
        brackets,
        nilradical_dim: raw.nilradical_dim,
    })
}

/// Canonical JSON text: pretty-printed, stable field order, trailing newline.
pub fn emit_algebra(doc: &AlgebraDocument) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("document serializes");
    text.push('\n');
    text
}

/// Captures an algebra into a document under the given name.
pub fn document_from_algebra(name: &str, l: &LieAlgebra) -> AlgebraDocument {
    let brackets = l
        .brackets()
        .map(|(&(i, j), terms)| BracketEntry {
            left: i + 1,
            right: j + 1,
            terms: terms
                .iter()
                .map(|(t, c)| Term {
                    basis: t + 1,
                    coeff: c.clone(),
                })
                .collect(),
        })
        .collect();
    AlgebraDocument {
        name: name.to_string(),
        dim: l.dim(),
        basis: l.labels().to_vec(),
        brackets,
        nilradical_dim: None,
    }
}

/// Captures a solvable extension, marking the nilradical split.
pub fn document_from_extension(name: &str, r: &SolvableExtension) -> AlgebraDocument {
    let mut doc = document_from_algebra(name, &r.algebra);
    doc.nilradical_dim = Some(r.nilradical_dim);
    doc
}

impl AlgebraDocument {
    /// Builds the algebra the document describes. Structure is taken as
    /// written; run `validate` on the result to check the Jacobi identity.
    pub fn to_algebra(&self) -> Result<LieAlgebra, Error> {
        let mut l = LieAlgebra::new(self.dim);
        if !self.basis.is_empty() {
            l.set_labels(self.basis.clone())?;
        }
        for entry in &self.brackets {
            for term in &entry.terms {
                l.add_bracket_term(
                    entry.left - 1,
                    entry.right - 1,
                    term.basis - 1,
                    term.coeff.clone(),
                )?;
            }
        }
        Ok(l)
    }

    /// Reconstructs the extension split when `nilradical_dim` is present,
    /// validating the expected block shape.
    pub fn to_extension(&self) -> Result<Option<SolvableExtension>, Error> {
        let Some(nd) = self.nilradical_dim else {
            return Ok(None);
        };
        Ok(Some(from_algebra(self.to_algebra()?, nd)?))
    }
}

/// On-disk matrix: rows of canonical scalar strings under a `rows` key.
#[derive(Serialize)]
struct MatrixDocument {
    rows: Vec<Vec<Scalar>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrixDocument {
    rows: Vec<Vec<String>>,
}

/// Parses a matrix document, requiring rectangular rows.
pub fn parse_matrix(text: &str) -> Result<Matrix, Error> {
    let raw: RawMatrixDocument = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("invalid matrix document: {e}")))?;
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(raw.rows.len());
    for (i, row) in raw.rows.iter().enumerate() {
        if let Some(first) = raw.rows.first() {
            if row.len() != first.len() {
                return Err(Error::Parse(format!(
                    "rows[{i}]: {} entries where row 0 has {}",
                    row.len(),
                    first.len()
                )));
            }
        }
        let mut out = Vec::with_capacity(row.len());
        for (j, cell) in row.iter().enumerate() {
            out.push(
                cell.parse()
                    .map_err(|e: Error| Error::Parse(format!("rows[{i}][{j}]: {e}")))?,
            );
        }
        rows.push(out);
    }
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(rows)
}

/// Canonical JSON text for a matrix.
pub fn emit_matrix(m: &Matrix) -> String {
    let doc = MatrixDocument { rows: m.to_rows() };
    let mut text = serde_json::to_string_pretty(&doc).expect("matrix serializes");
    text.push('\n');
    text
}

/// Reads and parses an algebra file.
pub fn read_algebra_file(path: &Path) -> Result<AlgebraDocument, Error> {
    parse_algebra(&std::fs::read_to_string(path)?)
}

/// Writes a document in canonical form.
pub fn write_algebra_file(path: &Path, doc: &AlgebraDocument) -> Result<(), Error> {
    Ok(std::fs::write(path, emit_algebra(doc))?)
}

/// Reads and parses a matrix file.
pub fn read_matrix_file(path: &Path) -> Result<Matrix, Error> {
    parse_matrix(&std::fs::read_to_string(path)?)
}
