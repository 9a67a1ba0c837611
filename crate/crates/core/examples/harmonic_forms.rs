//! Metric side of invariant KT⁴: Kähler predicates, the commutator
//! identities with `L` and `Λ`, harmonic numbers and the self-dual split.

use acx::complex::{AlmostComplexModel, Bidegree, CoefficientModel, Differential};
use acx::metric::{Hodge, HermitianMetric};
use acx::models::{kt4_algebra, kt4_j};

fn main() -> acx::Result<()> {
    let model = AlmostComplexModel::new(kt4_algebra(), kt4_j(), CoefficientModel::Invariant)?;
    let ops = model.operators();
    let metric = HermitianMetric::standard(2);
    println!("ω = {}", metric.fundamental_form());
    let hodge = Hodge::new(metric, &ops.space)?;
    println!("{:?}", hodge.kahler_predicates(&ops));
    for (name, holds) in hodge.kahler_identities(&ops) {
        println!("  {name:<14} {}", if holds { "holds" } else { "fails" });
    }
    let pair = [Differential::PartialBar, Differential::Mu];
    for p in 0..=2 {
        let row: Vec<usize> = (0..=2).map(|q| hodge.harmonic_dim(&ops, &pair, Bidegree::new(p, q))).collect();
        println!("ℓ^{{{p},*}} = {row:?}");
    }
    let (sd, asd) = hodge.asd_split(&ops.weights()[0])?;
    println!("self-dual {} + anti-self-dual {} = 6", sd.dim(), asd.dim());
    Ok(())
}
