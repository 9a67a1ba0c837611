//! Built-in algebras and structures used by tests, examples and manifests.

use num_rational::BigRational;

use crate::acs::{AlmostComplexStructure, LieAlgebraSpec};
use crate::complex::CoefficientModel;

/// Kodaira–Thurston algebra: `[V₂, V₃] = V₄`.
pub fn kt4_algebra() -> LieAlgebraSpec {
    LieAlgebraSpec::from_i64(4, &[(1, 2, 3, 1)])
}

/// `J V₁ = V₂`, `J V₃ = V₄`; non-integrable on [`kt4_algebra`].
pub fn kt4_j() -> AlmostComplexStructure {
    AlmostComplexStructure::standard(4)
}

/// Fourier modes in the closed directions `V₁`, `V₂` of [`kt4_algebra`].
pub fn kt4_fourier(truncation: u32) -> CoefficientModel {
    let r = |x: i64| BigRational::from_integer(x.into());
    CoefficientModel::TorusFourier {
        rank: 2,
        actions: vec![vec![r(1), r(0)], vec![r(0), r(1)], vec![r(0), r(0)], vec![r(0), r(0)]],
        truncation,
    }
}

/// Six-dimensional nilpotent algebra `[V₁, V₂] = V₃`, `[V₁, V₃] = V₅`,
/// `[V₂, V₃] = V₄`.
pub fn nil6_algebra() -> LieAlgebraSpec {
    LieAlgebraSpec::from_i64(6, &[(0, 1, 2, 1), (0, 2, 4, 1), (1, 2, 3, 1)])
}

/// `J V₁ = V₄`, `J V₂ = V₅`, `J V₃ = V₆`; its Nijenhuis tensor has maximal
/// rank on [`nil6_algebra`].
pub fn nil6_j() -> AlmostComplexStructure {
    AlmostComplexStructure::from_i64(&[
        &[0, 0, 0, -1, 0, 0],
        &[0, 0, 0, 0, -1, 0],
        &[0, 0, 0, 0, 0, -1],
        &[1, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, 0],
    ])
}
