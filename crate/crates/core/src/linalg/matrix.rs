use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// A dense coordinate vector over ℚ(i).
pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Row-sparse exact matrix. Absent entries are zero and stored entries are
/// never zero.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, Scalar>>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for (r, row) in self.data.iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            write!(f, "  {r}:")?;
            for (c, v) in row {
                write!(f, " ({c}, {v})")?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Scalar::one());
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vector]) -> Self {
        let mut m = ExactMatrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "row {r} has wrong length");
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = ExactMatrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {c} has wrong length");
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    /// Convenience constructor from small integer entries.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::from_i64(v)).collect())
            .collect();
        ExactMatrix::from_rows(cols, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.data[r].get(&c).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        if v.is_zero() {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, v);
        }
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        let entry = self.data[r].entry(c).or_insert_with(Scalar::zero);
        *entry += v;
        if entry.is_zero() {
            self.data[r].remove(&c);
        }
    }

    pub fn row(&self, r: usize) -> &BTreeMap<usize, Scalar> {
        &self.data[r]
    }

    pub fn row_vector(&self, r: usize) -> Vector {
        let mut v = zero_vector(self.cols);
        for (c, x) in &self.data[r] {
            v[*c] = x.clone();
        }
        v
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        let mut out = vec![zero_vector(self.rows); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                out[*c][r] = v.clone();
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row_vector(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        self.data
            .iter()
            .map(|row| row.iter().map(|(c, x)| x * &v[*c]).sum())
            .collect()
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, a) in row {
                for (c, b) in &other.data[*k] {
                    *acc.entry(*c).or_insert_with(Scalar::zero) += a * b;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.data[r] = acc;
        }
        out
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_at(r, c, v);
        }
        out
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        self.add(&other.scale(&Scalar::from_i64(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.rows, self.cols);
        if s.is_zero() {
            return out;
        }
        for (r, row) in self.data.iter().enumerate() {
            out.data[r] = row.iter().map(|(c, v)| (*c, v * s)).collect();
        }
        out
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.cols, self.rows);
        for (r, c, v) in self.entries() {
            out.data[c].insert(r, v.clone());
        }
        out
    }

    pub fn conj(&self) -> ExactMatrix {
        let mut out = self.clone();
        for row in &mut out.data {
            for v in row.values_mut() {
                *v = v.conj();
            }
        }
        out
    }

    pub fn conj_transpose(&self) -> ExactMatrix {
        self.transpose().conj()
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        let mut out = ExactMatrix::zeros(self.rows, self.cols + other.cols);
        for (r, c, v) in self.entries() {
            out.data[r].insert(c, v.clone());
        }
        for (r, c, v) in other.entries() {
            out.data[r].insert(self.cols + c, v.clone());
        }
        out
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut out = self.clone();
        out.rows += other.rows;
        out.data.extend(other.data.iter().cloned());
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn place(&mut self, r0: usize, c0: usize, block: &ExactMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for (r, c, v) in block.entries() {
            self.add_at(r0 + r, c0 + c, v);
        }
    }

    /// `self` placed at row offset `r0` inside a matrix with `rows` rows.
    pub fn embed_rows(&self, rows: usize, r0: usize) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(rows, self.cols);
        out.place(r0, 0, self);
        out
    }

    /// Rows `r0..r1` and columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(r1 - r0, c1 - c0);
        for r in r0..r1 {
            for (c, v) in self.data[r].range(c0..c1) {
                out.data[r - r0].insert(c - c0, v.clone());
            }
        }
        out
    }

    /// New matrix whose column `k` is column `perm[k]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> ExactMatrix {
        assert_eq!(perm.len(), self.cols);
        let mut inverse = vec![0; self.cols];
        for (k, &p) in perm.iter().enumerate() {
            inverse[p] = k;
        }
        let mut out = ExactMatrix::zeros(self.rows, self.cols);
        for (r, c, v) in self.entries() {
            out.data[r].insert(inverse[c], v.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_transposes() {
        let a = ExactMatrix::from_i64(&[&[1, 2], &[0, 3]]);
        let b = ExactMatrix::from_i64(&[&[4, 0], &[1, -1]]);
        assert_eq!(a.mul(&b), ExactMatrix::from_i64(&[&[6, -2], &[3, -3]]));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.sub(&a), ExactMatrix::zeros(2, 2));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.mul_vec(&[Scalar::one(), Scalar::one()]), vec![Scalar::from_i64(3), Scalar::from_i64(3)]);
    }

    #[test]
    fn stacking_and_blocks() {
        let a = ExactMatrix::from_i64(&[&[1, 2], &[0, 3]]);
        let h = a.hstack(&ExactMatrix::identity(2));
        assert_eq!(h.cols(), 4);
        assert_eq!(h.submatrix(0, 2, 2, 4), ExactMatrix::identity(2));
        let v = a.vstack(&a);
        assert_eq!(v.rows(), 4);
        let p = a.permute_columns(&[1, 0]);
        assert_eq!(p, ExactMatrix::from_i64(&[&[2, 1], &[3, 0]]));
    }
}
