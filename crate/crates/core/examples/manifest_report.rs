//! Library route to what `acx report` prints: load a manifest, compute its
//! sections and render them.
//!
//!     cargo run --example manifest_report -- crates/core/manifests/torus4.json

use acx::cli::report::{audit_section, certificate_entry, diamond_section, report_table};
use acx::cli::{load_manifest, PsiSelector, Report};

fn main() -> acx::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/manifests/kt4.json").to_string());
    let m = load_manifest(path.as_ref())?;
    let truncations = m.default_truncations();
    let mut r = Report::new(&m.file);
    r.diamonds = Some(diamond_section(&m, &truncations)?);
    let last = *truncations.last().expect("at least one truncation");
    r.audits.push(audit_section(&m, last)?);
    r.certificates.push(certificate_entry(&m, last, PsiSelector::Fundamental)?);
    print!("{}", report_table(&r));
    Ok(())
}
