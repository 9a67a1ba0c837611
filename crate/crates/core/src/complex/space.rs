use num_rational::BigRational;
use num_traits::Zero;

use super::form::{mask_indices, Bidegree, Form, Monomial, Weight};
use crate::linalg::{zero_vector, ExactMatrix, Vector};
use crate::scalar::Scalar;

/// How coefficient functions are modelled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoefficientModel {
    /// Left-invariant forms only: constant coefficients in the coframe.
    Invariant,
    /// Fourier modes `e_w`, `w ∈ ℤ^rank`, `|w_a| ≤ truncation`. Real frame
    /// vector `V_i` acts on `e_w` as multiplication by `i·(actions[i]·w)`.
    TorusFourier {
        rank: usize,
        actions: Vec<Vec<BigRational>>,
        truncation: u32,
    },
}

impl CoefficientModel {
    pub fn rank(&self) -> usize {
        match self {
            CoefficientModel::Invariant => 0,
            CoefficientModel::TorusFourier { rank, .. } => *rank,
        }
    }

    pub fn truncation(&self) -> u32 {
        match self {
            CoefficientModel::Invariant => 0,
            CoefficientModel::TorusFourier { truncation, .. } => *truncation,
        }
    }

    pub fn with_truncation(&self, n: u32) -> CoefficientModel {
        match self {
            CoefficientModel::Invariant => CoefficientModel::Invariant,
            CoefficientModel::TorusFourier { rank, actions, .. } => CoefficientModel::TorusFourier {
                rank: *rank,
                actions: actions.clone(),
                truncation: n,
            },
        }
    }

    pub fn weights(&self) -> Vec<Weight> {
        Weight::box_of(self.rank(), self.truncation())
    }

    /// Rows of real frame vectors with a nonzero action.
    pub fn active_vectors(&self) -> Vec<usize> {
        match self {
            CoefficientModel::Invariant => Vec::new(),
            CoefficientModel::TorusFourier { actions, .. } => actions
                .iter()
                .enumerate()
                .filter(|(_, r)| r.iter().any(|x| !x.is_zero()))
                .map(|(i, _)| i)
                .collect(),
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All `k`-subsets of `{0..n}` as masks, lexicographic in their index lists.
pub fn subsets(n: usize, k: usize) -> Vec<u16> {
    fn rec(start: usize, n: usize, k: usize, acc: u16, out: &mut Vec<u16>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for s in start..n {
            if n - s < k {
                break;
            }
            rec(s + 1, n, k - 1, acc | (1 << s), out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, 0, &mut out);
    out
}

/// `(holo, anti)` masks of one weight block, holo major.
pub fn block_basis(n: usize, b: Bidegree) -> Vec<(u16, u16)> {
    let hs = subsets(n, b.p);
    let as_ = subsets(n, b.q);
    hs.iter().flat_map(|&h| as_.iter().map(move |&a| (h, a))).collect()
}

/// Position of `(holo, anti)` in [`block_basis`].
pub fn block_index(n: usize, holo: u16, anti: u16) -> usize {
    let b = Bidegree::new(holo.count_ones() as usize, anti.count_ones() as usize);
    subset_rank(n, holo) * binomial(n, b.q) + subset_rank(n, anti)
}

/// Lexicographic rank of a subset among subsets of the same size.
fn subset_rank(n: usize, mask: u16) -> usize {
    let idx = mask_indices(mask);
    let k = idx.len();
    let mut r = 0;
    let mut prev = 0;
    for (t, &x) in idx.iter().enumerate() {
        for y in prev..x {
            r += binomial(n - y - 1, k - t - 1);
        }
        prev = x + 1;
    }
    r
}

/// The truncated space of forms: one block of size `C(n,p)·C(n,q)` per
/// bidegree and weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpace {
    pub n: usize,
    pub rank: usize,
    pub weights: Vec<Weight>,
}

impl FormSpace {
    pub fn new(n: usize, model: &CoefficientModel) -> Self {
        FormSpace {
            n,
            rank: model.rank(),
            weights: model.weights(),
        }
    }

    pub fn block_dim(&self, b: Bidegree) -> usize {
        binomial(self.n, b.p) * binomial(self.n, b.q)
    }

    pub fn dim(&self, b: Bidegree) -> usize {
        self.block_dim(b) * self.weights.len()
    }

    /// Bidegrees of total degree `r`, `p` ascending.
    pub fn bidegrees_of_degree(&self, r: usize) -> Vec<Bidegree> {
        (0..=self.n)
            .filter(|&p| r >= p && r - p <= self.n)
            .map(|p| Bidegree::new(p, r - p))
            .collect()
    }

    pub fn degree_block_dim(&self, r: usize) -> usize {
        self.bidegrees_of_degree(r).iter().map(|&b| self.block_dim(b)).sum()
    }

    /// Ordered basis of `A^{p,q}`: weight, then holomorphic set, then
    /// antiholomorphic set.
    pub fn enumerate_basis(&self, b: Bidegree) -> Vec<Monomial> {
        let local = block_basis(self.n, b);
        self.weights
            .iter()
            .flat_map(|w| local.iter().map(move |&(h, a)| Monomial::new(w.clone(), h, a)))
            .collect()
    }

    fn normalize(&self, w: &Weight) -> Weight {
        if w.0.is_empty() {
            Weight::zero(self.rank)
        } else {
            w.clone()
        }
    }

    /// Coordinates of the `(b, w)` part of `f` in the block basis.
    pub fn block_vector(&self, f: &Form, b: Bidegree, w: &Weight) -> Vector {
        let mut v = zero_vector(self.block_dim(b));
        for (m, c) in f.terms() {
            if m.bidegree() == b && self.normalize(&m.weight) == *w {
                v[block_index(self.n, m.holo, m.anti)] = c.clone();
            }
        }
        v
    }

    pub fn block_form(&self, v: &[Scalar], b: Bidegree, w: &Weight) -> Form {
        let mut f = Form::zero();
        for (c, (h, a)) in v.iter().zip(block_basis(self.n, b)) {
            f.add_term(Monomial::new(w.clone(), h, a), c);
        }
        f
    }

    /// Coordinates of the `A^r` part at weight `w`, bidegrees `p` ascending.
    pub fn degree_vector(&self, f: &Form, r: usize, w: &Weight) -> Vector {
        self.bidegrees_of_degree(r)
            .into_iter()
            .flat_map(|b| self.block_vector(f, b, w))
            .collect()
    }

    pub fn degree_form(&self, v: &[Scalar], r: usize, w: &Weight) -> Form {
        let mut f = Form::zero();
        let mut off = 0;
        for b in self.bidegrees_of_degree(r) {
            let k = self.block_dim(b);
            f = f.add(&self.block_form(&v[off..off + k], b, w));
            off += k;
        }
        f
    }

    /// Coordinates in the global basis of `A^{p,q}` over all weights.
    pub fn vector(&self, f: &Form, b: Bidegree) -> Vector {
        self.weights.iter().flat_map(|w| self.block_vector(f, b, w)).collect()
    }

    pub fn form(&self, v: &[Scalar], b: Bidegree) -> Form {
        let k = self.block_dim(b);
        self.weights
            .iter()
            .enumerate()
            .fold(Form::zero(), |acc, (i, w)| acc.add(&self.block_form(&v[i * k..(i + 1) * k], b, w)))
    }

    /// Signed permutation `P` with `conj(x) = P·x̄` from block `(b, w)` to
    /// block `(b̄, −w)`.
    pub fn conj_matrix(&self, b: Bidegree) -> ExactMatrix {
        let src = block_basis(self.n, b);
        let mut p = ExactMatrix::zeros(self.block_dim(b.conj()), src.len());
        for (col, &(h, a)) in src.iter().enumerate() {
            let (sign, m) = Monomial::new(Weight::default(), h, a).conj();
            p.set(block_index(self.n, m.holo, m.anti), col, Scalar::from_i64(sign as i64));
        }
        p
    }

    pub fn contains_weight(&self, w: &Weight) -> bool {
        self.weights.binary_search(w).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_dimensions() {
        let inv = FormSpace::new(2, &CoefficientModel::Invariant);
        assert_eq!(inv.enumerate_basis(Bidegree::new(1, 1)).len(), 4);
        assert_eq!(inv.enumerate_basis(Bidegree::new(2, 2)).len(), 1);
        let four = CoefficientModel::TorusFourier {
            rank: 2,
            actions: vec![],
            truncation: 1,
        };
        let sp = FormSpace::new(2, &four);
        assert_eq!(sp.enumerate_basis(Bidegree::new(1, 0)).len(), 18);
        assert_eq!(sp.dim(Bidegree::new(1, 0)), 18);
    }

    #[test]
    fn indices_match_enumeration() {
        for n in 1..5 {
            for b in Bidegree::all(n) {
                for (k, (h, a)) in block_basis(n, b).into_iter().enumerate() {
                    assert_eq!(block_index(n, h, a), k);
                }
            }
        }
    }

    #[test]
    fn enumeration_is_sorted() {
        let sp = FormSpace::new(3, &CoefficientModel::TorusFourier { rank: 1, actions: vec![], truncation: 2 });
        for b in Bidegree::all(3) {
            let basis = sp.enumerate_basis(b);
            let mut sorted = basis.clone();
            sorted.sort();
            assert_eq!(basis, sorted);
        }
    }

    #[test]
    fn conj_matrix_matches_form_conjugation() {
        let sp = FormSpace::new(3, &CoefficientModel::Invariant);
        let w = Weight::zero(0);
        for b in Bidegree::all(3) {
            let p = sp.conj_matrix(b);
            for (k, (h, a)) in block_basis(3, b).into_iter().enumerate() {
                let f = Form::term(Monomial::new(w.clone(), h, a), Scalar::one());
                let expected = sp.block_vector(&f.conjugate(), b.conj(), &w);
                assert_eq!(p.column(k), expected);
            }
        }
    }
}
