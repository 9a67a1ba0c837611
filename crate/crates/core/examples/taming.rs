//! Corrects a ∂∂̄-closed but not closed (1,1)-form on KT⁴ into a closed
//! taming form.

use acx::audit::{perturbed_fundamental_form, solve_taming, AuditContext};
use acx::complex::AlmostComplexModel;
use acx::metric::HermitianMetric;
use acx::models::{kt4_algebra, kt4_fourier, kt4_j};

fn main() -> acx::Result<()> {
    let model = AlmostComplexModel::new(kt4_algebra(), kt4_j(), kt4_fourier(1))?;
    let ctx = AuditContext::new(&model, Some(&HermitianMetric::standard(2)))?;
    let psi = perturbed_fundamental_form(&ctx)?;
    let c = solve_taming(&ctx, &psi)?;
    println!("ψ  = {}", c.psi);
    println!("u  = {}", c.u);
    println!("σ  = {}", c.sigma);
    println!("ω′ = {}", c.omega_prime);
    println!("closed {}  real {}  same ω′ from both pivot orders {}", c.closed, c.real, c.well_defined);
    for s in &c.nondegeneracy.samples {
        println!("ω′² at {}: {}", s.point.join(" "), s.top);
    }
    Ok(())
}
