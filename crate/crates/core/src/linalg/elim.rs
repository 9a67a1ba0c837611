//! Exact elimination.
//!
//! Pivot rule everywhere: scan columns left to right, take the lowest
//! remaining row index with a nonzero entry in that column. Matrices with
//! fewer than [`DENSE_LIMIT`] columns use dense rows, wider ones use sparse
//! rows; both paths produce identical results.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::matrix::{zero_vector, ExactMatrix, Vector};
use crate::scalar::Scalar;

pub const DENSE_LIMIT: usize = 64;

/// Reduced row echelon form: every pivot is 1 and is the only nonzero entry
/// of its column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub cols: usize,
    pub rows: Vec<Vector>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Rank via fraction-free elimination.
pub fn rank(m: &ExactMatrix) -> usize {
    if m.cols() < DENSE_LIMIT {
        bareiss_rank(m)
    } else {
        sparse_rank(m)
    }
}

/// Rows scaled to Gaussian integers.
fn integral_rows(m: &ExactMatrix) -> Vec<Vector> {
    m.to_dense()
        .into_iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::from(1), |acc, x| num_integer::lcm(acc, x.denom_lcm()));
            let f = BigRational::from_integer(l);
            row.iter().map(|x| x.scale(&f)).collect()
        })
        .collect()
}

/// Bareiss elimination over ℤ[i]; every division is exact.
pub fn bareiss_rank(m: &ExactMatrix) -> usize {
    let mut a = integral_rows(m);
    let (nr, nc) = (m.rows(), m.cols());
    let mut prev = Scalar::one();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a[r..=p].rotate_right(1);
        let pivot = a[r][c].clone();
        for i in r + 1..nr {
            let factor = a[i][c].clone();
            for j in c..nc {
                let num = &(&pivot * &a[i][j]) - &(&factor * &a[r][j]);
                let q = &num / &prev;
                debug_assert!(q.is_gaussian_integer(), "Bareiss division not exact");
                a[i][j] = q;
            }
            for j in 0..c {
                a[i][j] = Scalar::zero();
            }
        }
        prev = pivot;
        r += 1;
    }
    r
}

fn sparse_rank(m: &ExactMatrix) -> usize {
    sparse_echelon(m, false).rank()
}

/// Reduced row echelon form.
pub fn rref(m: &ExactMatrix) -> Echelon {
    if m.cols() < DENSE_LIMIT {
        dense_rref(m)
    } else {
        sparse_echelon(m, true)
    }
}

pub fn dense_rref(m: &ExactMatrix) -> Echelon {
    let mut a = m.to_dense();
    let (nr, nc) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a[r..=p].rotate_right(1);
        let inv = a[r][c].inv().unwrap();
        for j in c..nc {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..nr {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..nc {
                let d = &f * &a[r][j];
                a[i][j] -= &d;
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon {
        cols: nc,
        rows: a,
        pivots,
    }
}

/// Sparse Gauss(-Jordan) elimination. With `reduce = false` only the forward
/// pass runs, which is enough for the rank.
pub fn sparse_echelon(m: &ExactMatrix, reduce: bool) -> Echelon {
    let nc = m.cols();
    let mut pending: Vec<BTreeMap<usize, Scalar>> = (0..m.rows())
        .map(|r| m.row(r).clone())
        .filter(|r| !r.is_empty())
        .collect();
    let mut done: Vec<BTreeMap<usize, Scalar>> = Vec::new();
    let mut pivots = Vec::new();
    for c in 0..nc {
        let Some(p) = pending.iter().position(|row| row.contains_key(&c)) else {
            continue;
        };
        let mut prow = pending.remove(p);
        let inv = prow[&c].inv().unwrap();
        for v in prow.values_mut() {
            *v = &*v * &inv;
        }
        for row in pending.iter_mut() {
            eliminate(row, &prow, c);
        }
        pending.retain(|r| !r.is_empty());
        if reduce {
            for row in done.iter_mut() {
                eliminate(row, &prow, c);
            }
        }
        done.push(prow);
        pivots.push(c);
        if pending.is_empty() {
            break;
        }
    }
    let rows = done
        .into_iter()
        .map(|row| {
            let mut v = zero_vector(nc);
            for (c, x) in row {
                v[c] = x;
            }
            v
        })
        .collect();
    Echelon { cols: nc, rows, pivots }
}

fn eliminate(row: &mut BTreeMap<usize, Scalar>, pivot_row: &BTreeMap<usize, Scalar>, c: usize) {
    let Some(f) = row.get(&c).cloned() else {
        return;
    };
    for (j, v) in pivot_row {
        let d = &f * v;
        let e = row.entry(*j).or_insert_with(Scalar::zero);
        *e -= &d;
        if e.is_zero() {
            row.remove(j);
        }
    }
}

/// Basis of the null space, one vector per free column, in column order.
pub fn kernel_basis(m: &ExactMatrix) -> Vec<Vector> {
    let e = rref(m);
    let nc = m.cols();
    let mut is_pivot = vec![false; nc];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    (0..nc)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = zero_vector(nc);
            v[f] = Scalar::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

/// Particular solution of `m·x = b` with free variables set to zero, or
/// `None` when `b` is outside the column space.
pub fn solve(m: &ExactMatrix, b: &[Scalar]) -> Option<Vector> {
    assert_eq!(b.len(), m.rows(), "right-hand side has wrong length");
    let nc = m.cols();
    let bcol = ExactMatrix::from_columns(m.rows(), &[b.to_vec()]);
    let e = rref(&m.hstack(&bcol));
    if e.pivots.last() == Some(&nc) {
        return None;
    }
    let mut x = zero_vector(nc);
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        x[p] = row[nc].clone();
    }
    Some(x)
}

/// Like [`solve`] but eliminating columns in the order given by `order`;
/// different orders yield different particular solutions.
pub fn solve_with_order(m: &ExactMatrix, b: &[Scalar], order: &[usize]) -> Option<Vector> {
    let permuted = m.permute_columns(order);
    let y = solve(&permuted, b)?;
    let mut x = zero_vector(m.cols());
    for (k, &src) in order.iter().enumerate() {
        x[src] = y[k].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &ExactMatrix) -> Option<ExactMatrix> {
    assert_eq!(m.rows(), m.cols(), "inverse of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Some(ExactMatrix::zeros(0, 0));
    }
    let e = rref(&m.hstack(&ExactMatrix::identity(n)));
    if e.rank() < n || e.pivots[n - 1] != n - 1 {
        return None;
    }
    let rows: Vec<Vector> = e.rows.iter().map(|r| r[n..].to_vec()).collect();
    Some(ExactMatrix::from_rows(n, &rows))
}

/// Determinant of a square matrix by Gaussian elimination.
pub fn determinant(m: &ExactMatrix) -> Scalar {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    let mut a = m.to_dense();
    let mut det = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pivot = a[c][c].clone();
        let inv = pivot.inv().unwrap();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let d = &f * &a[c][j];
                a[i][j] -= &d;
            }
        }
        det = &det * &pivot;
    }
    det
}
