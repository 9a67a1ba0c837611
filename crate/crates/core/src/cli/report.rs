//! Report assembly and rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::manifest::{Manifest, ManifestFile};
use crate::acs::ValidationReport;
use crate::audit::{audit_all, perturbed_fundamental_form, solve_taming, AuditContext, AuditReport, Status, TamingCertificate};
use crate::cohomology::{diamond, HodgeDiamond, TruncationResult};
use crate::complex::form::Form;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum PsiSelector {
    /// The fundamental form of the manifest metric.
    Fundamental,
    /// The fundamental form plus a small ∂∂̄-closed, non-closed invariant
    /// (1,1)-form.
    Perturbed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditSection {
    pub truncation: u32,
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
    pub report: AuditReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateEntry {
    pub truncation: u32,
    pub psi: PsiSelector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<TamingCertificate>,
    /// Why no certificate was produced.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub obstruction: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub manifest: ManifestFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationReport>,
    pub diamonds: Option<HodgeDiamond>,
    pub audits: Vec<AuditSection>,
    pub certificates: Vec<CertificateEntry>,
    pub version: String,
    /// Wall-clock time; the only field that varies between identical runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl Report {
    pub fn new(file: &ManifestFile) -> Report {
        Report {
            manifest: file.clone(),
            validation: None,
            diamonds: None,
            audits: Vec::new(),
            certificates: Vec::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            timing: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Report> {
        let mut r: Report = serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        let rank = r.manifest.coefficient_model()?.rank();
        for c in &mut r.certificates {
            c.certificate = c.certificate.take().map(|t| t.with_weight_rank(rank));
        }
        Ok(r)
    }
}

pub fn diamond_section(m: &Manifest, truncations: &[u32]) -> Result<HodgeDiamond> {
    diamond(&m.model, Some(&m.metric), truncations)
}

fn context(m: &Manifest, t: u32) -> Result<AuditContext> {
    AuditContext::new(&m.model.with_truncation(t), Some(&m.metric))
}

pub fn audit_section(m: &Manifest, t: u32) -> Result<AuditSection> {
    let report = audit_all(&context(m, t)?)?;
    Ok(AuditSection {
        truncation: t,
        passed: report.count(Status::Pass),
        failed: report.count(Status::Fail),
        not_applicable: report.count(Status::NotApplicable),
        report,
    })
}

/// Runs the taming solver; solver failures are recorded, not propagated.
pub fn certificate_entry(m: &Manifest, t: u32, psi: PsiSelector) -> Result<CertificateEntry> {
    let mut entry = CertificateEntry {
        truncation: t,
        psi,
        certificate: None,
        error: None,
        obstruction: Vec::new(),
    };
    if m.model.n() != 2 {
        entry.error = Some(Error::Not4Manifold(m.model.real_dim()).to_string());
        return Ok(entry);
    }
    let ctx = context(m, t)?;
    let form = match psi {
        PsiSelector::Fundamental => Ok(m.metric.fundamental_form()),
        PsiSelector::Perturbed => perturbed_fundamental_form(&ctx),
    };
    match form.and_then(|f| solve_taming(&ctx, &f)) {
        Ok(c) => entry.certificate = Some(c),
        Err(Error::NoSolution { obstruction }) => {
            entry.error = Some("correction equation has no solution at model level".into());
            entry.obstruction = obstruction;
        }
        Err(e @ (Error::Not4Manifold(_) | Error::NotDdcClosed | Error::InvalidForm(_) | Error::DegenerateAtSample(_))) => {
            entry.error = Some(e.to_string())
        }
        Err(e) => return Err(e),
    }
    Ok(entry)
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "yes"
    } else {
        "no"
    }
}

fn grid_rows(out: &mut String, label: &str, g: &[Vec<usize>]) {
    let _ = writeln!(out, "  {label}");
    for (p, row) in g.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>4}")).collect();
        let _ = writeln!(out, "    p={p} {}", cells.join(""));
    }
}

fn truncation_table(out: &mut String, t: &TruncationResult) {
    let _ = writeln!(out, "N = {} ({} weights)", t.truncation, t.weights);
    let _ = writeln!(out, "  betti {:?}", t.betti);
    grid_rows(out, "dolbeault h^{p,q} (columns q)", &t.dolbeault);
    grid_rows(out, "refined h~^{p,q}", &t.refined);
    if let Some(h) = &t.harmonic {
        grid_rows(out, "harmonic l^{p,q}", h);
    }
    let _ = writeln!(
        out,
        "  hat h^01 = {}  hat h^1 = {}  hat h^1 (diagonal) = {}",
        t.hat_h01, t.hat_h1, t.hat_h1_diagonal
    );
    let s = &t.special_11;
    let ddc = s.ddc.map_or("n/a".to_string(), |v| v.to_string());
    let _ = writeln!(out, "  (1,1): de Rham {}  Bott-Chern {}  dd^c {ddc}", s.de_rham, s.bott_chern);
}

pub fn diamond_table(d: &HodgeDiamond) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} (complex dimension {})", d.subcomplex, d.n);
    for t in &d.history {
        truncation_table(&mut out, t);
    }
    let _ = writeln!(out, "strictly growing: {}", if d.unbounded.is_empty() { "none".into() } else { d.unbounded.join(", ") });
    out
}

pub fn audit_table(s: &AuditSection) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "audits at N = {}: {} pass, {} fail, {} not applicable",
        s.truncation, s.passed, s.failed, s.not_applicable
    );
    for c in &s.report.claims {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "N/A ",
        };
        let _ = writeln!(out, "  {tag} {:<36} {}", c.id, c.statement);
        if c.status == Status::Fail {
            let _ = writeln!(out, "       witness: {}", serde_json::to_string(&c.witness).unwrap_or_default());
        }
        if c.status != Status::Pass {
            if let Some(n) = &c.note {
                let _ = writeln!(out, "       note: {n}");
            }
        }
    }
    out
}

fn form_line(out: &mut String, label: &str, f: &Form) {
    let _ = writeln!(out, "  {label:<8} {f}");
}

pub fn certificate_table(e: &CertificateEntry) -> String {
    let mut out = String::new();
    let psi = match e.psi {
        PsiSelector::Fundamental => "fundamental",
        PsiSelector::Perturbed => "perturbed",
    };
    let _ = writeln!(out, "taming at N = {} with ψ = {psi} form", e.truncation);
    if let Some(err) = &e.error {
        let _ = writeln!(out, "  no certificate: {err}");
        for o in &e.obstruction {
            let _ = writeln!(out, "  obstruction: {o}");
        }
    }
    if let Some(c) = &e.certificate {
        form_line(&mut out, "ψ", &c.psi);
        form_line(&mut out, "u", &c.u);
        form_line(&mut out, "σ", &c.sigma);
        form_line(&mut out, "ω′", &c.omega_prime);
        let _ = writeln!(
            out,
            "  closed {}  real {}  residual zero {}  same ω′ from both pivot orders {}",
            mark(c.closed),
            mark(c.real),
            mark(c.residual_zero),
            mark(c.well_defined)
        );
        let _ = writeln!(
            out,
            "  h~10 = {}  h~01 = {}  hypothesis {}",
            c.refined_10,
            c.refined_01,
            mark(c.hypothesis_holds)
        );
        let nd = &c.nondegeneracy;
        let _ = writeln!(out, "  nondegeneracy: {}", nd.method);
        let _ = writeln!(out, "    positive (1,1)-part at every sample {}", mark(nd.positive_11_part));
        for s in nd.samples.iter().take(4) {
            let _ = writeln!(out, "    {}: top coefficient {}", s.point.join(" "), s.top);
        }
        if nd.samples.len() > 4 {
            let _ = writeln!(out, "    ... {} samples, all nonzero", nd.samples.len());
        }
    }
    out
}

pub fn validation_table(name: &str, v: &ValidationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "manifest {name}");
    for c in &v.checks {
        let line = format!("  {} {:<16} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

pub fn report_table(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "acx {} report for {}", r.version, r.manifest.name);
    if let Some(v) = &r.validation {
        out.push_str(&validation_table(&r.manifest.name, v));
    }
    if let Some(d) = &r.diamonds {
        out.push_str(&diamond_table(d));
    }
    for a in &r.audits {
        out.push_str(&audit_table(a));
    }
    for c in &r.certificates {
        out.push_str(&certificate_table(c));
    }
    out
}
