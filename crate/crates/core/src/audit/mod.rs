//! Exact checks of identities, dimension relations and lemmas on a
//! finite model, plus the taming-form solver.

mod identities;
mod relations;
mod taming;

use serde::{Deserialize, Serialize};

use crate::cohomology::{compute_with, subcomplex_label, TruncationResult};
use crate::complex::form::{Bidegree, Form, Weight};
use crate::complex::{AlmostComplexModel, FormSpace, Operators};
use crate::error::Result;
use crate::linalg::Vector;
use crate::metric::{HermitianMetric, Hodge, KahlerPredicates};

pub use identities::{audit_ddbar_annihilation, audit_identities};
pub use relations::{audit_ddbar_lemma, audit_descent, audit_dualities, audit_four_manifold, audit_general_relations};
pub use taming::{
    check_nondegenerate, perturbed_fundamental_form, solve_taming, Nondegeneracy, SampleValue, TamingCertificate,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// Evidence attached to a claim. Every failing claim carries one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    None,
    /// Named integers, e.g. the two sides of a dimension relation.
    Numbers { values: Vec<(String, usize)> },
    /// Forms, rendered in the coframe basis.
    Forms { forms: Vec<String> },
    /// Operator blocks where an identity fails.
    Blocks { blocks: Vec<String> },
}

impl Witness {
    pub fn numbers(values: &[(&str, usize)]) -> Witness {
        Witness::Numbers {
            values: values.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub witness: Witness,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Claim {
    pub fn check(id: &str, statement: &str, holds: bool, witness: Witness) -> Claim {
        Claim {
            id: id.into(),
            statement: statement.into(),
            status: if holds { Status::Pass } else { Status::Fail },
            witness,
            note: None,
        }
    }

    pub fn not_applicable(id: &str, statement: &str, reason: &str) -> Claim {
        Claim {
            id: id.into(),
            statement: statement.into(),
            status: Status::NotApplicable,
            witness: Witness::None,
            note: Some(reason.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Claim {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub claims: Vec<Claim>,
}

impl AuditReport {
    pub fn push(&mut self, c: Claim) {
        self.claims.push(c);
    }

    pub fn extend(&mut self, other: AuditReport) {
        self.claims.extend(other.claims);
    }

    pub fn get(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.status == Status::Fail)
    }

    /// No claim failed (not-applicable claims are allowed).
    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn count(&self, s: Status) -> usize {
        self.claims.iter().filter(|c| c.status == s).count()
    }
}

/// Operators, optional metric data and the computed numbers of one
/// truncation, shared by every audit.
pub struct AuditContext {
    pub model: AlmostComplexModel,
    pub ops: Operators,
    pub hodge: Option<Hodge>,
    pub numbers: TruncationResult,
    pub predicates: Option<KahlerPredicates>,
}

impl AuditContext {
    pub fn new(model: &AlmostComplexModel, metric: Option<&HermitianMetric>) -> Result<Self> {
        let ops = model.operators();
        let hodge = metric.map(|g| Hodge::new(g.clone(), &ops.space)).transpose()?;
        let numbers = compute_with(&ops, hodge.as_ref(), model.coefficients.truncation())?;
        let predicates = hodge.as_ref().map(|h| h.kahler_predicates(&ops));
        Ok(AuditContext {
            model: model.clone(),
            ops,
            hodge,
            numbers,
            predicates,
        })
    }

    pub fn n(&self) -> usize {
        self.ops.n()
    }

    pub fn space(&self) -> &FormSpace {
        &self.ops.space
    }

    pub fn is_almost_kahler(&self) -> bool {
        self.predicates.is_some_and(|p| p.almost_kahler)
    }

    pub fn refined(&self, p: usize, q: usize) -> usize {
        self.numbers.refined[p][q]
    }

    pub fn dolbeault(&self, p: usize, q: usize) -> usize {
        self.numbers.dolbeault[p][q]
    }

    pub fn harmonic(&self, p: usize, q: usize) -> Option<usize> {
        self.numbers.harmonic.as_ref().map(|g| g[p][q])
    }

    pub fn b(&self, r: usize) -> usize {
        self.numbers.betti[r]
    }

    /// Text appended to relations that fail on the finite model only.
    pub fn subcomplex_note(&self) -> String {
        format!(
            "computed on the {} (truncation {}); the relation concerns the full form space, so a failure here is a subcomplex artifact",
            subcomplex_label(&self.model),
            self.numbers.truncation
        )
    }

    pub(crate) fn render(&self, v: &[crate::scalar::Scalar], b: Bidegree, w: &Weight) -> String {
        self.space().block_form(v, b, w).to_string()
    }
}

/// Every audit that applies to the model, in a fixed order.
pub fn audit_all(ctx: &AuditContext) -> Result<AuditReport> {
    let mut r = audit_identities(ctx);
    r.extend(audit_ddbar_annihilation(ctx));
    r.extend(audit_dualities(ctx));
    r.extend(audit_general_relations(ctx));
    if ctx.n() == 2 {
        r.extend(audit_four_manifold(ctx)?);
        r.extend(audit_ddbar_lemma(ctx)?);
        r.extend(audit_descent(ctx)?);
    }
    Ok(r)
}

pub(crate) fn forms_witness(forms: impl IntoIterator<Item = Form>) -> Witness {
    Witness::Forms {
        forms: forms.into_iter().take(5).map(|f| f.to_string()).collect(),
    }
}

pub(crate) fn vectors_witness(ctx: &AuditContext, vs: &[Vector], b: Bidegree, w: &Weight) -> Witness {
    Witness::Forms {
        forms: vs.iter().take(5).map(|v| ctx.render(v, b, w)).collect(),
    }
}

#[cfg(test)]
mod tests;
