use super::elim::{kernel_basis, rank, rref};
use super::matrix::{is_zero_vector, ExactMatrix, Vector};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A linear subspace of ℚ(i)^ambient, stored by its reduced row echelon
/// basis. Two subspaces are equal exactly when their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, &ExactMatrix::identity(ambient).to_dense())
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let e = rref(&ExactMatrix::from_rows(ambient, vectors));
        Subspace {
            ambient,
            basis: e.rows,
            pivots: e.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_columns(self.ambient, &self.basis)
    }

    /// Remainder of `v` after reduction against the echelon basis.
    fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector has wrong ambient dimension");
        is_zero_vector(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in terms of the stored basis, if `v` lies in the
    /// subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_ambient(self, other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Ok(Subspace::span(self.ambient, &all))
    }

    /// Image of the subspace under `m`.
    pub fn map(&self, m: &ExactMatrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "map has wrong source dimension");
        let images: Vec<Vector> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(m.rows(), &images)
    }

    /// Image under the map that keeps coordinates `range`.
    pub fn project(&self, range: std::ops::Range<usize>) -> Subspace {
        let len = range.len();
        let vs: Vec<Vector> = self.basis.iter().map(|v| v[range.clone()].to_vec()).collect();
        Subspace::span(len, &vs)
    }

    /// Embeds into a larger ambient space at coordinate offset `offset`.
    pub fn embed(&self, ambient: usize, offset: usize) -> Subspace {
        assert!(offset + self.ambient <= ambient);
        let vs: Vec<Vector> = self
            .basis
            .iter()
            .map(|v| {
                let mut w = super::matrix::zero_vector(ambient);
                w[offset..offset + self.ambient].clone_from_slice(v);
                w
            })
            .collect();
        Subspace::span(ambient, &vs)
    }

    /// Entrywise conjugate of the subspace.
    pub fn conj(&self) -> Subspace {
        let vs: Vec<Vector> = self
            .basis
            .iter()
            .map(|v| v.iter().map(Scalar::conj).collect())
            .collect();
        Subspace::span(self.ambient, &vs)
    }
}

fn check_ambient(a: &Subspace, b: &Subspace) -> Result<()> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch(a.ambient, b.ambient));
    }
    Ok(())
}

/// Null space of `m`.
pub fn kernel(m: &ExactMatrix) -> Subspace {
    Subspace::span(m.cols(), &kernel_basis(m))
}

/// Column space of `m`.
pub fn image(m: &ExactMatrix) -> Subspace {
    let e = rref(&m.transpose());
    Subspace {
        ambient: m.rows(),
        basis: e.rows,
        pivots: e.pivots,
    }
}

/// Intersection of all `spaces`; the empty list has no defined ambient and
/// is rejected by the caller's type (a slice with at least one element).
pub fn intersect(spaces: &[&Subspace]) -> Result<Subspace> {
    let Some((first, rest)) = spaces.split_first() else {
        panic!("intersect needs at least one subspace");
    };
    let mut acc = (*first).clone();
    for s in rest {
        acc = intersect_pair(&acc, s)?;
    }
    Ok(acc)
}

fn intersect_pair(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_ambient(a, b)?;
    if a.is_zero() || b.is_zero() {
        return Ok(Subspace::zero(a.ambient));
    }
    // (x, y) with A·x = B·y
    let am = a.basis_matrix();
    let bm = b.basis_matrix().scale(&Scalar::from_i64(-1));
    let combos = kernel_basis(&am.hstack(&bm));
    let vs: Vec<Vector> = combos.iter().map(|c| am.mul_vec(&c[..a.dim()])).collect();
    Ok(Subspace::span(a.ambient, &vs))
}

/// `dim(num) − dim(den)`, after checking `den ⊆ num`.
pub fn quotient_dim(num: &Subspace, den: &Subspace) -> Result<usize> {
    check_ambient(num, den)?;
    if !num.contains_subspace(den) {
        return Err(Error::NotContained {
            context: format!(
                "denominator of dim {} not inside numerator of dim {}",
                den.dim(),
                num.dim()
            ),
        });
    }
    Ok(num.dim() - den.dim())
}

/// `{x : m·x ∈ target}`.
pub fn preimage(m: &ExactMatrix, target: &Subspace) -> Subspace {
    assert_eq!(m.rows(), target.ambient_dim(), "target lives in the wrong space");
    let n = m.cols();
    if target.is_zero() {
        return kernel(m);
    }
    // m·x − T·y = 0
    let stacked = m.hstack(&target.basis_matrix().scale(&Scalar::from_i64(-1)));
    let vs: Vec<Vector> = kernel_basis(&stacked).into_iter().map(|v| v[..n].to_vec()).collect();
    Subspace::span(n, &vs)
}

/// Rank shortcut used by callers that do not need a basis.
pub fn image_dim(m: &ExactMatrix) -> usize {
    rank(m)
}
