//! The JSON algebra-file format and machine-readable reports.
//!
//! An algebra file is a UTF-8 JSON document with 1-based indices matching the
//! `e_1, ..., e_n` notation: bracket entries `{i, j, coeffs}` with `i < j`,
//! an optional metric grid (identity by default), an optional `acm` block
//! `(phi, xi, eta)` and an optional `kahler` block `(J, omega)`. Scalars are
//! strings, integers or `"p/q"`; 2-forms are maps keyed by index-pair strings
//! such as `"14"`. Emission is canonical (sorted maps, fixed field order), so
//! parse -> emit is byte-stable.

use crate::extension::SymplecticKahlerData;
use crate::forms::KForm;
use crate::lie::{BracketTable, LieAlgebra, LieError};
use crate::linalg::{Matrix, Vector};
use crate::riemann::{FrameEntry, FrameRicci, MetricLieAlgebra, RicciForm};
use crate::scalar::Scalar;
use crate::structures::{AcmStructure, KahlerStructure};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FileError {
    /// Structural problems: malformed JSON, bad scalars, bad indices.
    #[error("parse error: {0}")]
    Parse(String),
    /// Well-formed input that fails a mathematical validation.
    #[error("validation error: {0}")]
    Invalid(String),
}

impl FileError {
    /// Exit code of the failure class: 2 for parse errors, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            FileError::Parse(_) => 2,
            FileError::Invalid(_) => 1,
        }
    }
}

/// One stored bracket `[e_i, e_j] = sum_k coeffs[k] e_k`, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, Scalar>,
}

/// The `acm` block: endomorphism grid, Reeb components, eta components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcmBlock {
    pub phi: Vec<Vec<Scalar>>,
    pub xi: Vec<Scalar>,
    pub eta: Vec<Scalar>,
}

/// The `kahler` block: complex-structure grid and a 2-form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KahlerBlock {
    #[serde(rename = "J")]
    pub j: Vec<Vec<Scalar>>,
    pub omega: BTreeMap<String, Scalar>,
}

/// The algebra-file document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub acm: Option<AcmBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kahler: Option<KahlerBlock>,
}

fn parse_index_pair(key: &str, dim: usize) -> Result<(usize, usize), FileError> {
    let chars: Vec<char> = key.chars().collect();
    let bad = || FileError::Parse(format!("bad index pair {key:?}"));
    if chars.len() != 2 {
        return Err(bad());
    }
    let i = chars[0].to_digit(10).ok_or_else(bad)? as usize;
    let j = chars[1].to_digit(10).ok_or_else(bad)? as usize;
    if i == 0 || j == 0 || i > dim || j > dim || i >= j {
        return Err(FileError::Parse(format!(
            "index pair {key:?} must satisfy 1 <= i < j <= {dim}"
        )));
    }
    Ok((i, j))
}

fn format_index_pair(i: usize, j: usize) -> String {
    format!("{i}{j}")
}

/// A 2-form from an index-pair-keyed map.
pub fn two_form_from_map(
    map: &BTreeMap<String, Scalar>,
    dim: usize,
) -> Result<KForm, FileError> {
    let mut f = KForm::zero(dim, 2);
    for (key, value) in map {
        let (i, j) = parse_index_pair(key, dim)?;
        f.set(&[i, j], value.clone());
    }
    Ok(f)
}

/// The canonical map of a 2-form (zero components omitted).
pub fn two_form_to_map(f: &KForm) -> BTreeMap<String, Scalar> {
    f.terms()
        .filter(|(_, c)| !c.is_zero())
        .map(|(idx, c)| (format_index_pair(idx[0], idx[1]), c.clone()))
        .collect()
}

fn grid_to_matrix(grid: &[Vec<Scalar>], dim: usize, what: &str) -> Result<Matrix, FileError> {
    if grid.len() != dim || grid.iter().any(|row| row.len() != dim) {
        return Err(FileError::Parse(format!(
            "{what} must be a {dim} x {dim} grid"
        )));
    }
    Ok(Matrix::from_rows(grid.to_vec()))
}

fn matrix_to_grid(m: &Matrix) -> Vec<Vec<Scalar>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].clone()).collect())
        .collect()
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self, FileError> {
        serde_json::from_str(text).map_err(|e| FileError::Parse(e.to_string()))
    }

    /// Canonical emission; stable across runs and platforms.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable document");
        s.push('\n');
        s
    }

    /// Structural checks plus the Jacobi validation. Bracket entries must
    /// have `i < j` and appear at most once per pair, so an antisymmetric
    /// duplicate (both orientations of the same pair) can never parse.
    pub fn to_algebra(&self) -> Result<LieAlgebra, FileError> {
        if self.dim == 0 || self.dim > 9 {
            return Err(FileError::Parse("dim must be between 1 and 9".into()));
        }
        let mut table = BracketTable::new(self.dim);
        let mut seen = std::collections::BTreeSet::new();
        for entry in &self.brackets {
            if entry.i >= entry.j || entry.i == 0 || entry.j > self.dim {
                return Err(FileError::Parse(format!(
                    "bracket ({}, {}) must satisfy 1 <= i < j <= {}",
                    entry.i, entry.j, self.dim
                )));
            }
            if !seen.insert((entry.i, entry.j)) {
                return Err(FileError::Parse(format!(
                    "duplicate bracket entry ({}, {})",
                    entry.i, entry.j
                )));
            }
            let mut v = Vector::zero(self.dim);
            for (k_str, c) in &entry.coeffs {
                let k: usize = k_str
                    .parse()
                    .map_err(|_| FileError::Parse(format!("bad basis index {k_str:?}")))?;
                if k == 0 || k > self.dim {
                    return Err(FileError::Parse(format!("basis index {k} out of range")));
                }
                v.0[k - 1] = c.clone();
            }
            table
                .set(entry.i, entry.j, v)
                .map_err(|e| FileError::Parse(e.to_string()))?;
        }
        LieAlgebra::new(table).map_err(|e| match e {
            LieError::JacobiFailure(i, j, k, _) => {
                FileError::Invalid(format!("jacobi ({i},{j},{k})"))
            }
            other => FileError::Parse(other.to_string()),
        })
    }

    pub fn to_metric_algebra(&self) -> Result<MetricLieAlgebra, FileError> {
        let algebra = self.to_algebra()?;
        let g = match &self.metric {
            Some(grid) => grid_to_matrix(grid, self.dim, "metric")?,
            None => Matrix::identity(self.dim),
        };
        MetricLieAlgebra::new(algebra, g).map_err(|e| FileError::Invalid(e.to_string()))
    }

    pub fn to_acm(&self) -> Result<AcmStructure, FileError> {
        let block = self
            .acm
            .as_ref()
            .ok_or_else(|| FileError::Parse("missing acm block".into()))?;
        let m = self.to_metric_algebra()?;
        let phi = grid_to_matrix(&block.phi, self.dim, "acm.phi")?;
        if block.xi.len() != self.dim || block.eta.len() != self.dim {
            return Err(FileError::Parse(
                "acm.xi and acm.eta must have length dim".into(),
            ));
        }
        let xi = Vector(block.xi.clone());
        let mut eta = KForm::zero(self.dim, 1);
        for (idx, c) in block.eta.iter().enumerate() {
            eta.set(&[idx + 1], c.clone());
        }
        AcmStructure::new(m, phi, xi, eta).map_err(|e| FileError::Invalid(e.to_string()))
    }

    pub fn to_kahler(&self) -> Result<(KahlerStructure, KForm), FileError> {
        let block = self
            .kahler
            .as_ref()
            .ok_or_else(|| FileError::Parse("missing kahler block".into()))?;
        let m = self.to_metric_algebra()?;
        let j = grid_to_matrix(&block.j, self.dim, "kahler.J")?;
        let omega = two_form_from_map(&block.omega, self.dim)?;
        let k = KahlerStructure::new(m, j).map_err(|e| FileError::Invalid(e.to_string()))?;
        Ok((k, omega))
    }

    /// Serializes a bare Lie algebra.
    pub fn from_algebra(algebra: &LieAlgebra) -> Self {
        let n = algebra.dim();
        let mut brackets = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                let v = algebra.bracket_basis(i, j);
                if v.is_zero() {
                    continue;
                }
                let coeffs: BTreeMap<String, Scalar> = v
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| ((k + 1).to_string(), c.clone()))
                    .collect();
                brackets.push(BracketEntry { i, j, coeffs });
            }
        }
        AlgebraFile {
            dim: n,
            brackets,
            metric: None,
            acm: None,
            kahler: None,
        }
    }

    pub fn from_acm(s: &AcmStructure) -> Self {
        let mut doc = Self::from_algebra(s.metric_algebra().algebra());
        doc.metric = Some(matrix_to_grid(s.metric_algebra().metric()));
        doc.acm = Some(AcmBlock {
            phi: matrix_to_grid(s.phi()),
            xi: s.xi().0.clone(),
            eta: (1..=s.dim()).map(|j| s.eta().coeff(&[j]).clone()).collect(),
        });
        doc
    }

    pub fn from_symplectic_kahler(data: &SymplecticKahlerData) -> Self {
        let k = data.kahler();
        let mut doc = Self::from_algebra(k.metric_algebra().algebra());
        doc.metric = Some(matrix_to_grid(k.metric_algebra().metric()));
        doc.kahler = Some(KahlerBlock {
            j: matrix_to_grid(k.j()),
            omega: two_form_to_map(data.omega()),
        });
        doc
    }

    pub fn from_kahler(k: &KahlerStructure) -> Self {
        let mut doc = Self::from_algebra(k.metric_algebra().algebra());
        doc.metric = Some(matrix_to_grid(k.metric_algebra().metric()));
        doc.kahler = Some(KahlerBlock {
            j: matrix_to_grid(k.j()),
            omega: two_form_to_map(&k.omega()),
        });
        doc
    }
}

/// One cell of the orthonormal-frame Ricci view, JSON-friendly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FrameCell {
    Exact(Scalar),
    Flagged {
        raw: Scalar,
        normalizer_square: Scalar,
    },
}

impl From<&FrameEntry> for FrameCell {
    fn from(e: &FrameEntry) -> Self {
        match e {
            FrameEntry::Exact(v) => FrameCell::Exact(v.clone()),
            FrameEntry::Flagged {
                raw,
                normalizer_square,
            } => FrameCell::Flagged {
                raw: raw.clone(),
                normalizer_square: normalizer_square.clone(),
            },
        }
    }
}

/// Machine form of a curvature report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureReport {
    pub ricci: Vec<Vec<Scalar>>,
    pub scalar_curvature: Scalar,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orthonormal: Option<Vec<Vec<FrameCell>>>,
}

impl CurvatureReport {
    pub fn new(rho: &RicciForm, scalar: Scalar, frame: Option<&FrameRicci>) -> Self {
        CurvatureReport {
            ricci: matrix_to_grid(rho.matrix()),
            scalar_curvature: scalar,
            orthonormal: frame.map(|fr| {
                fr.entries
                    .iter()
                    .map(|row| row.iter().map(FrameCell::from).collect())
                    .collect()
            }),
        }
    }
}

/// One compared cell of a reproduced table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellComparison {
    pub cell: String,
    pub computed: String,
    pub expected: String,
    pub matched: bool,
}

/// One table row at one documented sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowComparison {
    pub row: String,
    pub sample: String,
    pub cells: Vec<CellComparison>,
    pub matched: bool,
}

impl RowComparison {
    pub fn new(row: String, sample: String, cells: Vec<CellComparison>) -> Self {
        let matched = cells.iter().all(|c| c.matched);
        RowComparison {
            row,
            sample,
            cells,
            matched,
        }
    }
}

/// The full table-reproduction report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub kahler_ricci: Vec<RowComparison>,
    pub eta_einstein: Vec<RowComparison>,
    pub all_match: bool,
}

/// Renders a symmetric scalar grid with aligned columns.
pub fn render_grid(grid: &[Vec<Scalar>]) -> String {
    let cells: Vec<Vec<String>> = grid
        .iter()
        .map(|row| row.iter().map(Scalar::to_string).collect())
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(String::len)
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in &cells {
        out.push_str("  [");
        for (j, c) in row.iter().enumerate() {
            if j > 0 {
                out.push_str("  ");
            }
            out.push_str(&format!("{c:>width$}"));
        }
        out.push_str("]\n");
    }
    out
}
