//! JSON model and problem files.
//!
//! Rationals are always strings (`"p"` or `"p/q"`), bracket indices are
//! 0-based with `i < j`.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixtures;
use crate::lie::LieAlgebra;
use crate::linalg::{format_rational, parse_rational, Subspace, Vector};
use crate::submanifold::{AffineSubspace, SampleSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    #[serde(default)]
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub k: usize,
    pub coefficient: String,
}

impl ModelFile {
    pub fn from_algebra(name: &str, l: &LieAlgebra) -> Self {
        let brackets = l
            .nonzero_brackets()
            .into_iter()
            .map(|(i, j, v)| BracketEntry {
                i,
                j,
                terms: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(k, c)| Term {
                        k,
                        coefficient: format_rational(c),
                    })
                    .collect(),
            })
            .collect();
        ModelFile {
            name: name.to_string(),
            dim: l.dim(),
            basis: l.labels().to_vec(),
            brackets,
        }
    }

    /// Builds the algebra without running the Jacobi check.
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        if self.basis.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: self.basis.len(),
            });
        }
        let n = self.dim;
        let mut seen = std::collections::BTreeSet::new();
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            if b.i >= b.j || b.j >= n {
                return Err(Error::IndexOutOfRange(format!(
                    "bracket ({}, {}) needs 0 <= i < j < {n}",
                    b.i, b.j
                )));
            }
            if !seen.insert((b.i, b.j)) {
                return Err(Error::Malformed(format!(
                    "bracket ({}, {}) listed twice",
                    b.i, b.j
                )));
            }
            let mut v = crate::linalg::zero_vector(n);
            for t in &b.terms {
                if t.k >= n {
                    return Err(Error::IndexOutOfRange(format!(
                        "term index k = {} in dimension {n}",
                        t.k
                    )));
                }
                v[t.k] += parse_rational(&t.coefficient)?;
            }
            brackets.push((b.i, b.j, v));
        }
        LieAlgebra::new(self.basis.clone(), brackets)
    }
}

/// Parses and validates a model; Jacobi failures name the violating triple.
pub fn parse_model(text: &str) -> Result<LieAlgebra> {
    let file: ModelFile = serde_json::from_str(text)?;
    let l = file.to_algebra()?;
    l.validate_jacobi().into_result()?;
    Ok(l)
}

pub fn serialize_model(name: &str, l: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&ModelFile::from_algebra(name, l)).expect("serializable model")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModelRef {
    Path(String),
    Inline(ModelFile),
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelRef>,
    #[serde(default)]
    pub h_basis: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<String>>,
    #[serde(rename = "R_basis", default, skip_serializing_if = "Option::is_none")]
    pub r_basis: Option<Vec<Vec<String>>>,
    /// Explicit `k ⊕ p` decomposition for `pair`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_basis: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_basis: Option<Vec<Vec<String>>>,
    /// Extra points of the extension checked by `extend`, in addition to
    /// the random samples.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<String>>>,
    /// Extend over the open part of `C` where the rank is generic.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restrict: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// A problem with its model resolved and all vectors parsed.
#[derive(Debug, Clone)]
pub struct Problem {
    pub model_name: String,
    pub algebra: LieAlgebra,
    pub h: Subspace,
    pub lambda: Vector,
    pub r: Option<Subspace>,
    pub k: Option<Subspace>,
    pub p: Option<Subspace>,
    pub points: Vec<Vector>,
    pub restrict: bool,
    pub sampling: SampleSpec,
}

impl Problem {
    pub fn affine(&self) -> Result<AffineSubspace> {
        AffineSubspace::new(self.algebra.clone(), self.h.clone(), self.lambda.clone())
    }
}

pub fn parse_vector(n: usize, v: &[String]) -> Result<Vector> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    v.iter().map(|s| parse_rational(s)).collect()
}

fn parse_span(n: usize, rows: &[Vec<String>]) -> Result<Subspace> {
    let gens = rows
        .iter()
        .map(|r| parse_vector(n, r))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(n, gens)
}

/// Loads a model from a path; bare names of bundled fixtures
/// (`sl2`, `gl2`, `heisenberg`, `abelian_n`) resolve without touching disk.
pub fn load_model(path: &Path) -> Result<(String, LieAlgebra)> {
    let raw = path.to_string_lossy().to_string();
    let text = match fixtures::model_text(raw.trim_end_matches(".json")) {
        Some(text) if !path.exists() => text.to_string(),
        _ => std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
    };
    let file: ModelFile = serde_json::from_str(&text)?;
    let l = file.to_algebra()?;
    l.validate_jacobi().into_result()?;
    let name = if file.name.is_empty() {
        path.file_stem()
            .map(|s| s.to_string_lossy().to_string())
            .unwrap_or(raw)
    } else {
        file.name
    };
    Ok((name, l))
}

impl ProblemFile {
    /// Resolves the problem. `base_dir` anchors relative model paths;
    /// `model_override` wins over the file's own `model` entry.
    pub fn resolve(
        &self,
        base_dir: &Path,
        model_override: Option<(String, LieAlgebra)>,
    ) -> Result<Problem> {
        let (model_name, algebra) = match (model_override, &self.model) {
            (Some(m), _) => m,
            (None, Some(ModelRef::Inline(m))) => {
                let l = m.to_algebra()?;
                l.validate_jacobi().into_result()?;
                (m.name.clone(), l)
            }
            (None, Some(ModelRef::Path(p))) => {
                let path = PathBuf::from(p);
                let full = if path.is_absolute() {
                    path
                } else {
                    base_dir.join(path)
                };
                if full.exists() {
                    load_model(&full)?
                } else {
                    load_model(Path::new(p))?
                }
            }
            (None, None) => return Err(Error::Malformed("no model given".into())),
        };
        let n = algebra.dim();
        let h = parse_span(n, &self.h_basis)?;
        let lambda = match &self.lambda {
            Some(v) => parse_vector(n, v)?,
            None => crate::linalg::zero_vector(n),
        };
        let opt_span = |rows: &Option<Vec<Vec<String>>>| -> Result<Option<Subspace>> {
            rows.as_ref().map(|r| parse_span(n, r)).transpose()
        };
        let points = self
            .points
            .as_ref()
            .map(|ps| {
                ps.iter()
                    .map(|p| parse_vector(n, p))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?
            .unwrap_or_default();
        let mut sampling = SampleSpec::default();
        if let Some(c) = self.samples {
            sampling.count = c;
        }
        if let Some(s) = self.seed {
            sampling.seed = s;
        }
        Ok(Problem {
            model_name,
            h,
            lambda,
            r: opt_span(&self.r_basis)?,
            k: opt_span(&self.k_basis)?,
            p: opt_span(&self.p_basis)?,
            points,
            restrict: self.restrict.unwrap_or(false),
            sampling,
            algebra,
        })
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    Ok(serde_json::from_str(text)?)
}
