//! Runs every applicable audit on the Fourier model of KT⁴ and prints the
//! claims that are not plain passes.

use acx::audit::{audit_all, AuditContext, Status};
use acx::complex::AlmostComplexModel;
use acx::metric::HermitianMetric;
use acx::models::{kt4_algebra, kt4_fourier, kt4_j};

fn main() -> acx::Result<()> {
    let model = AlmostComplexModel::new(kt4_algebra(), kt4_j(), kt4_fourier(1))?;
    let ctx = AuditContext::new(&model, Some(&HermitianMetric::standard(2)))?;
    let report = audit_all(&ctx)?;
    println!(
        "{} pass, {} fail, {} not applicable",
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::NotApplicable)
    );
    for c in report.claims.iter().filter(|c| c.status != Status::Pass) {
        println!("{:?} {}: {}", c.status, c.id, c.statement);
        if let Some(note) = &c.note {
            println!("  {note}");
        }
    }
    Ok(())
}
