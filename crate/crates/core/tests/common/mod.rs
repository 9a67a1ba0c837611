#![allow(dead_code)]

use std::path::PathBuf;

use acx::acs::AlmostComplexStructure;
use acx::cli::{BracketEntry, CoefficientsEntry, ManifestFile, Task};
use acx::linalg::{determinant, ExactMatrix};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

pub fn manifest_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("manifests").join(name)
}

/// Unimodular real 4-dimensional Lie algebras, as 0-based `(i, j, k, c)`
/// brackets scaled by `a` and `b`.
fn family(kind: usize, a: i64, b: i64) -> Vec<(usize, usize, usize, i64)> {
    match kind {
        0 => vec![],
        // heisenberg × ℝ
        1 => vec![(0, 1, 2, a)],
        // filiform
        2 => vec![(0, 1, 2, a), (0, 2, 3, b)],
        // sol × ℝ
        3 => vec![(3, 0, 0, a), (3, 1, 1, -a)],
        // euclidean motions × ℝ
        4 => vec![(2, 0, 1, a), (2, 1, 0, -a)],
        // sl(2) × ℝ
        _ => vec![(0, 1, 1, 2 * a), (0, 2, 2, -2 * a), (1, 2, 0, a)],
    }
}

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-3i64..=-1, 1i64..=3]
}

fn invertible() -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(-2i64..=2, 16)
        .prop_map(|v| {
            let rows: Vec<&[i64]> = v.chunks(4).collect();
            ExactMatrix::from_i64(&rows)
        })
        .prop_filter("singular change of basis", |m| !determinant(m).is_zero())
}

/// A valid invariant manifest on a random unimodular 4-dimensional algebra,
/// with a random almost complex structure conjugate to the standard one.
pub fn four_manifold() -> impl Strategy<Value = ManifestFile> {
    (
        0usize..6,
        nonzero(),
        nonzero(),
        Just((0usize..4).collect::<Vec<_>>()).prop_shuffle(),
        invertible(),
    )
        .prop_map(|(kind, a, b, perm, basis)| {
            let brackets = family(kind, a, b)
                .into_iter()
                .map(|(i, j, k, c)| BracketEntry {
                    i: perm[i] + 1,
                    j: perm[j] + 1,
                    k: perm[k] + 1,
                    value: c.to_string(),
                })
                .collect();
            let j = AlmostComplexStructure::standard(4).conjugated_by(&basis).expect("invertible");
            let j_matrix = (0..4)
                .map(|r| (0..4).map(|c| j.matrix.get(r, c).re.to_string()).collect())
                .collect();
            ManifestFile {
                name: format!("random-{kind}"),
                real_dim: 4,
                brackets,
                j_matrix,
                metric: None,
                coefficients: CoefficientsEntry::Invariant,
                tasks: vec![Task::Verify],
            }
        })
}

/// `count` manifests from a fixed seed.
pub fn random_manifests(count: usize) -> Vec<ManifestFile> {
    let mut runner = TestRunner::deterministic();
    let strategy = four_manifold();
    (0..count)
        .map(|_| strategy.new_tree(&mut runner).expect("strategy").current())
        .collect()
}
