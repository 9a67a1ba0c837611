//! JSON manifests: a real Lie algebra, an almost complex structure, an
//! optional Hermitian metric and a coefficient model.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::acs::{validate, AlmostComplexStructure, Bracket, LieAlgebraSpec, ValidationReport};
use crate::complex::{AlmostComplexModel, CoefficientModel};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::metric::HermitianMetric;
use crate::scalar::{parse_rational, Scalar};

/// `[e_i, e_j] = value · e_k`, 1-based, value a rational string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CoefficientsEntry {
    #[default]
    Invariant,
    TorusFourier {
        rank: usize,
        /// One row of rational strings per real frame vector.
        actions: Vec<Vec<String>>,
        truncation: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    Diamond,
    Verify,
    Taming,
}

/// The manifest as written on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestFile {
    pub name: String,
    pub real_dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    pub j_matrix: Vec<Vec<String>>,
    /// Hermitian matrix `g_{kj̄}` of Gaussian-rational strings; identity if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub coefficients: CoefficientsEntry,
    #[serde(default = "all_tasks")]
    pub tasks: Vec<Task>,
}

fn all_tasks() -> Vec<Task> {
    vec![Task::Diamond, Task::Verify, Task::Taming]
}

/// A parsed and validated manifest.
#[derive(Clone, Debug)]
pub struct Manifest {
    pub file: ManifestFile,
    pub model: AlmostComplexModel,
    pub metric: HermitianMetric,
}

impl Manifest {
    /// Truncations computed when none are requested.
    pub fn default_truncations(&self) -> Vec<u32> {
        (0..=self.model.coefficients.truncation()).collect()
    }
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

fn invalid(invariant: &str, detail: impl Into<String>) -> Error {
    Error::Validation {
        invariant: invariant.into(),
        detail: detail.into(),
    }
}

fn rational(s: &str, location: String) -> Result<BigRational> {
    parse_rational(s).map_err(|e| parse_error(location, e.to_string()))
}

fn square<T>(rows: &[Vec<T>], n: usize, invariant: &str, what: &str) -> Result<()> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(invalid(invariant, format!("{what} must be {n}x{n}")));
    }
    Ok(())
}

impl ManifestFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| parse_error(format!("line {} column {}", e.line(), e.column()), e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes")
    }

    pub fn algebra(&self) -> Result<LieAlgebraSpec> {
        let m = self.real_dim;
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for (x, b) in self.brackets.iter().enumerate() {
            if [b.i, b.j, b.k].iter().any(|&v| v == 0 || v > m) {
                return Err(invalid(
                    "LieAlgebraSpec",
                    format!("bracket {} has an index outside 1..={m}", x + 1),
                ));
            }
            brackets.push(Bracket {
                i: b.i - 1,
                j: b.j - 1,
                k: b.k - 1,
                value: rational(&b.value, format!("brackets[{x}].value"))?,
            });
        }
        Ok(LieAlgebraSpec::new(m, brackets))
    }

    pub fn j(&self) -> Result<AlmostComplexStructure> {
        square(&self.j_matrix, self.real_dim, "AlmostComplexStructure", "j_matrix")?;
        let rows = self
            .j_matrix
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .map(|(c, s)| rational(s, format!("j_matrix[{r}][{c}]")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AlmostComplexStructure::from_rows(&rows))
    }

    pub fn coefficient_model(&self) -> Result<CoefficientModel> {
        match &self.coefficients {
            CoefficientsEntry::Invariant => Ok(CoefficientModel::Invariant),
            CoefficientsEntry::TorusFourier { rank, actions, truncation } => {
                let actions = actions
                    .iter()
                    .enumerate()
                    .map(|(r, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(c, s)| rational(s, format!("coefficients.actions[{r}][{c}]")))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(CoefficientModel::TorusFourier {
                    rank: *rank,
                    actions,
                    truncation: *truncation,
                })
            }
        }
    }

    pub fn hermitian_metric(&self) -> Result<HermitianMetric> {
        let n = self.real_dim / 2;
        let Some(rows) = &self.metric else {
            return Ok(HermitianMetric::standard(n));
        };
        square(rows, n, "HermitianMetric", "metric")?;
        let rows = rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .map(|(c, s)| {
                        s.parse::<Scalar>()
                            .map_err(|e| parse_error(format!("metric[{r}][{c}]"), e.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        HermitianMetric::new(ExactMatrix::from_rows(n, &rows)).map_err(|e| invalid("HermitianMetric", e.to_string()))
    }

    /// Structural checks on the algebra and `J`.
    pub fn validation(&self) -> Result<ValidationReport> {
        let algebra = self.algebra()?;
        let j = self.j()?;
        Ok(validate(&algebra, &j))
    }

    /// Parses every field and checks every invariant, naming the first
    /// violated one.
    pub fn build(self) -> Result<Manifest> {
        let report = self.validation()?;
        if let Some(c) = report.checks.iter().find(|c| !c.passed) {
            let invariant = match c.name.as_str() {
                "j_squared" => "AlmostComplexStructure",
                _ => "LieAlgebraSpec",
            };
            return Err(invalid(invariant, format!("{}: {}", c.name, c.detail)));
        }
        let metric = self.hermitian_metric()?;
        let model = AlmostComplexModel::new(self.algebra()?, self.j()?, self.coefficient_model()?).map_err(|e| match e {
            Error::DegenerateJ(d) => invalid("AlmostComplexStructure", d),
            Error::InconsistentModel(d) => invalid("CoefficientModel", d),
            other => other,
        })?;
        Ok(Manifest {
            file: self,
            model,
            metric,
        })
    }
}

/// Reads, parses and validates a manifest.
pub fn parse_manifest(text: &str) -> Result<Manifest> {
    ManifestFile::from_json(text)?.build()
}

pub fn load_manifest(path: &std::path::Path) -> Result<Manifest> {
    parse_manifest(&std::fs::read_to_string(path)?)
}
