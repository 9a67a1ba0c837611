//! Refined Dolbeault diamond of the Kodaira–Thurston manifold on the Fourier
//! subcomplex, at increasing truncations.

use acx::cohomology::diamond;
use acx::complex::AlmostComplexModel;
use acx::metric::HermitianMetric;
use acx::models::{kt4_algebra, kt4_fourier, kt4_j};

fn main() -> acx::Result<()> {
    let model = AlmostComplexModel::new(kt4_algebra(), kt4_j(), kt4_fourier(0))?;
    let metric = HermitianMetric::standard(2);
    let d = diamond(&model, Some(&metric), &[0, 1, 2, 3])?;
    println!("{}", d.subcomplex);
    for t in &d.history {
        println!("N = {} ({} weights)", t.truncation, t.weights);
        println!("  betti        {:?}", t.betti);
        println!("  dolbeault    {:?}", t.dolbeault);
        println!("  refined      {:?}", t.refined);
        println!("  harmonic     {:?}", t.harmonic);
        println!("  ĥ01 {}  ĥ1 {}  ĥ1(diag) {}", t.hat_h01, t.hat_h1, t.hat_h1_diagonal);
        println!("  (1,1): {:?}", t.special_11);
    }
    println!("unbounded: {:?}", d.unbounded);
    Ok(())
}
