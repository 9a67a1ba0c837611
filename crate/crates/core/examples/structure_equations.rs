//! Complex structure equations and Nijenhuis data of the Kodaira–Thurston
//! structure and of a six-dimensional nilpotent example.

use acx::acs::{build_frame, real_nijenhuis_vanishes, AlmostComplexStructure, DPart, LieAlgebraSpec};
use acx::models::{kt4_algebra, kt4_j, nil6_algebra, nil6_j};

fn show(name: &str, algebra: &LieAlgebraSpec, j: &AlmostComplexStructure) -> acx::Result<()> {
    let frame = build_frame(algebra, j)?;
    let acts = frame.split_d();
    println!("{name}");
    for g in 0..frame.n {
        println!("  dθ{} = {}", g + 1, acts.d[g]);
        for p in DPart::ALL {
            let f = &acts.part(p)[g];
            if !f.is_zero() {
                println!("    {}θ{} = {f}", p.symbol(), g + 1);
            }
        }
    }
    println!("  Nijenhuis rank {} (integrable: {})", frame.nijenhuis_rank(), real_nijenhuis_vanishes(algebra, j));
    Ok(())
}

fn main() -> acx::Result<()> {
    show("Kodaira–Thurston", &kt4_algebra(), &kt4_j())?;
    show("nil6", &nil6_algebra(), &nil6_j())
}
