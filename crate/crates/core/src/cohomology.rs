//! Cohomology dimensions computed from assembled operator blocks. Every
//! operator preserves weight, so each quantity is computed weight by weight
//! and summed.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::form::{Bidegree, Weight};
use crate::complex::{AlmostComplexModel, Differential, GradedOperator, Operators};
use crate::error::{Error, Result};
use crate::linalg::{image, intersect, kernel, preimage, quotient_dim, ExactMatrix, Subspace};
use crate::metric::{HermitianMetric, Hodge};
use crate::scalar::Scalar;

fn shift_of(op: Differential) -> (i32, i32) {
    op.part().expect("bidegree-homogeneous operator").shift()
}

/// `(target, block)` of `op` on `(src, w)`, or `None` when the target
/// bidegree does not exist.
fn op_block(ops: &Operators, op: Differential, src: Bidegree, w: &Weight) -> Option<(Bidegree, ExactMatrix)> {
    let (dp, dq) = shift_of(op);
    let t = src.shift(dp, dq, ops.n())?;
    Some((t, ops.get(op).block(src, t, w)))
}

fn ker_of(ops: &Operators, op: Differential, b: Bidegree, w: &Weight) -> Subspace {
    match op_block(ops, op, b, w) {
        Some((_, m)) => kernel(&m),
        None => Subspace::full(ops.space.block_dim(b)),
    }
}

/// `op(A^{b − shift}) ⊆ A^b`.
fn image_into(ops: &Operators, op: Differential, b: Bidegree, w: &Weight) -> Subspace {
    let (dp, dq) = shift_of(op);
    match b.shift(-dp, -dq, ops.n()) {
        Some(s) => image(&ops.get(op).block(s, b, w)),
        None => Subspace::zero(ops.space.block_dim(b)),
    }
}

/// `a ∘ b` on the `(src, w)` block, or `None` when a bidegree leaves range.
fn composite_block(ops: &Operators, a: Differential, b: Differential, src: Bidegree, w: &Weight) -> Option<(Bidegree, ExactMatrix)> {
    let (mid, mb) = op_block(ops, b, src, w)?;
    let (t, ma) = op_block(ops, a, mid, w)?;
    Some((t, ma.mul(&mb)))
}

fn ker_composite(ops: &Operators, a: Differential, b: Differential, src: Bidegree, w: &Weight) -> Subspace {
    match composite_block(ops, a, b, src, w) {
        Some((_, m)) => kernel(&m),
        None => Subspace::full(ops.space.block_dim(src)),
    }
}

fn meet(spaces: &[Subspace]) -> Subspace {
    let refs: Vec<&Subspace> = spaces.iter().collect();
    intersect(&refs).expect("blocks share an ambient space")
}

/// `dim H^r_{dR}` at weight `w`.
pub fn de_rham_at(ops: &Operators, r: usize, w: &Weight) -> usize {
    let sp = &ops.space;
    let top = 2 * ops.n();
    let src = sp.bidegrees_of_degree(r);
    let ker = if r < top {
        kernel(&ops.d.multi_block(&src, &sp.bidegrees_of_degree(r + 1), w)).dim()
    } else {
        sp.degree_block_dim(r)
    };
    let im = if r > 0 {
        image(&ops.d.multi_block(&sp.bidegrees_of_degree(r - 1), &src, w)).dim()
    } else {
        0
    };
    ker - im
}

/// `{x ∈ ker μ̄ : ∂̄x ∈ im μ̄}` at `(b, w)`: the cycles of `∂̄` acting on
/// `μ̄`-cohomology.
pub fn dolbeault_cycles(ops: &Operators, b: Bidegree, w: &Weight) -> Subspace {
    let kmubar = ker_of(ops, Differential::MuBar, b, w);
    let lifted = match op_block(ops, Differential::PartialBar, b, w) {
        Some((t, m)) => preimage(&m, &image_into(ops, Differential::MuBar, t, w)),
        None => Subspace::full(ops.space.block_dim(b)),
    };
    meet(&[kmubar, lifted])
}

/// `(im ∂̄ ∩ ker μ̄) + im μ̄` at `(b, w)`. It contains
/// [`dolbeault_induced_boundaries`] and can be strictly larger, when
/// `∂̄y ∈ ker μ̄` for some `y ∉ ker μ̄`; it need not lie inside the cycles.
pub fn dolbeault_literal_denominator(ops: &Operators, b: Bidegree, w: &Weight) -> Subspace {
    meet(&[image_into(ops, Differential::PartialBar, b, w), ker_of(ops, Differential::MuBar, b, w)])
        .sum(&image_into(ops, Differential::MuBar, b, w))
        .expect("same ambient")
}

/// `∂̄(ker μ̄) + im μ̄` at `(b, w)`: the boundaries of `∂̄` acting on
/// `μ̄`-cohomology.
pub fn dolbeault_induced_boundaries(ops: &Operators, b: Bidegree, w: &Weight) -> Subspace {
    let im_mubar = image_into(ops, Differential::MuBar, b, w);
    match b.shift(0, -1, ops.n()) {
        Some(s) => ker_of(ops, Differential::MuBar, s, w)
            .map(&ops.delbar.block(s, b, w))
            .sum(&im_mubar)
            .expect("same ambient"),
        None => im_mubar,
    }
}

/// Numerator and denominator of `H^q(H^{p,•}_μ̄, ∂̄)` at `(b, w)`.
pub fn dolbeault_spaces(ops: &Operators, b: Bidegree, w: &Weight) -> (Subspace, Subspace) {
    (dolbeault_cycles(ops, b, w), dolbeault_induced_boundaries(ops, b, w))
}

pub fn dolbeault_at(ops: &Operators, b: Bidegree, w: &Weight) -> Result<usize> {
    let (num, den) = dolbeault_spaces(ops, b, w);
    quotient_dim(&num, &den).map_err(|e| match e {
        Error::NotContained { context } => Error::NotContained {
            context: format!("Dolbeault {b} at weight {w}: {context}"),
        },
        other => other,
    })
}

/// `ker μ ∩ ker μ̄ ∩ ker ∂̄² ∩ ker μ∂̄` at `(b, w)`.
pub fn a_dol(ops: &Operators, b: Bidegree, w: &Weight) -> Subspace {
    meet(&[
        ker_of(ops, Differential::Mu, b, w),
        ker_of(ops, Differential::MuBar, b, w),
        ker_composite(ops, Differential::PartialBar, Differential::PartialBar, b, w),
        ker_composite(ops, Differential::Mu, Differential::PartialBar, b, w),
    ])
}

/// Numerator `ker ∂̄ ∩ A_Dol^{p,q}` and denominator `∂̄(A_Dol^{p,q−1})`.
pub fn refined_spaces(ops: &Operators, b: Bidegree, w: &Weight) -> (Subspace, Subspace) {
    let num = meet(&[ker_of(ops, Differential::PartialBar, b, w), a_dol(ops, b, w)]);
    let den = match b.shift(0, -1, ops.n()) {
        Some(s) => a_dol(ops, s, w).map(&ops.delbar.block(s, b, w)),
        None => Subspace::zero(ops.space.block_dim(b)),
    };
    (num, den)
}

pub fn refined_dolbeault_at(ops: &Operators, b: Bidegree, w: &Weight) -> Result<usize> {
    let (num, den) = refined_spaces(ops, b, w);
    quotient_dim(&num, &den).map_err(|e| match e {
        Error::NotContained { context } => Error::NotContained {
            context: format!("refined {b} at weight {w}: {context}"),
        },
        other => other,
    })
}

/// Matrix of `(u′, u″) ↦ (∂u′ + μu″, μ̄u′ + ∂̄u″)` from `A^{1,0} ⊕ A^{0,1}`
/// to `A^{2,0} ⊕ A^{0,2}`.
fn pair_map(ops: &Operators, w: &Weight) -> ExactMatrix {
    let b10 = Bidegree::new(1, 0);
    let b01 = Bidegree::new(0, 1);
    let b20 = Bidegree::new(2, 0);
    let b02 = Bidegree::new(0, 2);
    let sp = &ops.space;
    let (a, c) = (sp.block_dim(b10), sp.block_dim(b01));
    let (r1, r2) = (sp.block_dim(b20), sp.block_dim(b02));
    let mut m = ExactMatrix::zeros(r1 + r2, a + c);
    m.place(0, 0, &ops.del.block(b10, b20, w));
    m.place(0, a, &ops.mu.block(b01, b20, w));
    m.place(r1, 0, &ops.mubar.block(b10, b02, w));
    m.place(r1, a, &ops.delbar.block(b01, b02, w));
    m
}

/// Numerator and denominator of `Ĥ^{0,1}` at weight `w`.
pub fn hat_h01_spaces(ops: &Operators, w: &Weight) -> (Subspace, Subspace) {
    let a = ops.space.block_dim(Bidegree::new(1, 0));
    let c = ops.space.block_dim(Bidegree::new(0, 1));
    let num = kernel(&pair_map(ops, w)).project(a..a + c);
    let den = image_into(ops, Differential::PartialBar, Bidegree::new(0, 1), w);
    (num, den)
}

pub fn hat_h01_at(ops: &Operators, w: &Weight) -> Result<usize> {
    let (num, den) = hat_h01_spaces(ops, w);
    quotient_dim(&num, &den)
}

/// Numerator and denominator of `Ĥ¹` at weight `w`. The denominator is
/// `{(∂f, ∂̄g)} ∩ ker Φ`, or `{(∂f, ∂̄f)}` when `diagonal` is set.
pub fn hat_h1_spaces(ops: &Operators, w: &Weight, diagonal: bool) -> (Subspace, Subspace) {
    let b00 = Bidegree::new(0, 0);
    let b10 = Bidegree::new(1, 0);
    let b01 = Bidegree::new(0, 1);
    let sp = &ops.space;
    let (a, c) = (sp.block_dim(b10), sp.block_dim(b01));
    let num = kernel(&pair_map(ops, w));
    let df = ops.del.block(b00, b10, w);
    let dbf = ops.delbar.block(b00, b01, w);
    let den = if diagonal {
        image(&df.vstack(&dbf))
    } else {
        let pot = image(&df).embed(a + c, 0).sum(&image(&dbf).embed(a + c, a)).expect("same ambient");
        meet(&[pot, num.clone()])
    };
    (num, den)
}

pub fn hat_h1_at(ops: &Operators, w: &Weight, diagonal: bool) -> Result<usize> {
    let (num, den) = hat_h1_spaces(ops, w, diagonal);
    quotient_dim(&num, &den)
}

/// The three `(1,1)` quotients at one weight.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Special11 {
    pub de_rham: usize,
    pub bott_chern: usize,
    /// Only defined in real dimension 4, where `∂∂̄` kills `∂̄A^{1,0} + ∂A^{0,1}`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ddc: Option<usize>,
}

impl std::ops::Add for Special11 {
    type Output = Special11;
    fn add(self, o: Special11) -> Special11 {
        Special11 {
            de_rham: self.de_rham + o.de_rham,
            bott_chern: self.bott_chern + o.bott_chern,
            ddc: self.ddc.zip(o.ddc).map(|(a, b)| a + b),
        }
    }
}

/// `A^{1,1}` as a coordinate subspace of `A²`, with its offset.
fn a11_in_a2(ops: &Operators) -> (usize, usize, usize) {
    let sp = &ops.space;
    let bs = sp.bidegrees_of_degree(2);
    let mut off = 0;
    for b in &bs {
        if *b == Bidegree::new(1, 1) {
            break;
        }
        off += sp.block_dim(*b);
    }
    (off, sp.block_dim(Bidegree::new(1, 1)), sp.degree_block_dim(2))
}

/// Part of a subspace of `A²` lying in `A^{1,1}`, in `A^{1,1}` coordinates.
fn restrict_to_11(ops: &Operators, s: &Subspace) -> Subspace {
    let (off, k, total) = a11_in_a2(ops);
    let coords = Subspace::full(k).embed(total, off);
    meet(&[s.clone(), coords]).project(off..off + k)
}

/// Numerator/denominator pairs of the de Rham, Bott–Chern and `dd^c`
/// `(1,1)` quotients at weight `w`.
pub fn special_11_spaces(ops: &Operators, w: &Weight) -> [(Subspace, Subspace); 3] {
    let sp = &ops.space;
    let b11 = Bidegree::new(1, 1);
    let a2 = sp.bidegrees_of_degree(2);
    let a3 = sp.bidegrees_of_degree(3);
    let ker_d = kernel(&ops.d.multi_block(&[b11], &a3, w));
    let im_d = restrict_to_11(ops, &image(&ops.d.multi_block(&sp.bidegrees_of_degree(1), &a2, w)));
    // dd^c f = i·d(∂̄f − ∂f)
    let b00 = Bidegree::new(0, 0);
    let (b10, b01) = (Bidegree::new(1, 0), Bidegree::new(0, 1));
    let del_f = ops.del.block(b00, b10, w);
    let dbar_f = ops.delbar.block(b00, b01, w);
    let dc = dbar_f
        .scale(&Scalar::i())
        .embed_rows(sp.degree_block_dim(1), 0)
        .sub(&del_f.scale(&Scalar::i()).embed_rows(sp.degree_block_dim(1), sp.block_dim(b01)));
    let ddc = ops.d.multi_block(&sp.bidegrees_of_degree(1), &a2, w).mul(&dc);
    let im_ddc = restrict_to_11(ops, &image(&ddc));
    let num_ddc = match composite_block(ops, Differential::Partial, Differential::PartialBar, b11, w) {
        Some((_, m)) => kernel(&m),
        None => Subspace::full(sp.block_dim(b11)),
    };
    let den_ddc = image(
        &ops.delbar
            .block(Bidegree::new(1, 0), b11, w)
            .hstack(&ops.del.block(Bidegree::new(0, 1), b11, w)),
    );
    [(ker_d.clone(), im_d), (ker_d, im_ddc), (num_ddc, den_ddc)]
}

pub fn special_11_at(ops: &Operators, w: &Weight) -> Result<Special11> {
    let [dr, bc, ddc] = special_11_spaces(ops, w);
    Ok(Special11 {
        de_rham: quotient_dim(&dr.0, &dr.1)?,
        bott_chern: quotient_dim(&bc.0, &bc.1)?,
        ddc: if ops.n() == 2 { Some(quotient_dim(&ddc.0, &ddc.1)?) } else { None },
    })
}

/// `[p][q]` table of counts.
pub type Grid = Vec<Vec<usize>>;

/// Every number computed at one truncation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationResult {
    pub truncation: u32,
    pub weights: usize,
    pub betti: Vec<usize>,
    pub dolbeault: Grid,
    pub refined: Grid,
    pub harmonic: Option<Grid>,
    pub hat_h01: usize,
    pub hat_h1: usize,
    pub hat_h1_diagonal: usize,
    pub special_11: Special11,
}

/// Computes the per-weight quantity `f` for every weight and sums.
fn sum_weights<F>(ops: &Operators, f: F) -> Result<usize>
where
    F: Fn(&Weight) -> Result<usize> + Sync,
{
    let parts: Result<Vec<usize>> = ops.weights().par_iter().map(&f).collect();
    Ok(parts?.into_iter().sum())
}

fn grid<F>(n: usize, f: F) -> Result<Grid>
where
    F: Fn(Bidegree) -> Result<usize>,
{
    (0..=n).map(|p| (0..=n).map(|q| f(Bidegree::new(p, q))).collect()).collect()
}

pub fn de_rham(ops: &Operators, r: usize) -> usize {
    sum_weights(ops, |w| Ok(de_rham_at(ops, r, w))).unwrap()
}

pub fn dolbeault(ops: &Operators, b: Bidegree) -> Result<usize> {
    sum_weights(ops, |w| dolbeault_at(ops, b, w))
}

pub fn refined_dolbeault(ops: &Operators, b: Bidegree) -> Result<usize> {
    sum_weights(ops, |w| refined_dolbeault_at(ops, b, w))
}

pub fn hat_h01(ops: &Operators) -> Result<usize> {
    sum_weights(ops, |w| hat_h01_at(ops, w))
}

pub fn hat_h1(ops: &Operators, diagonal: bool) -> Result<usize> {
    sum_weights(ops, |w| hat_h1_at(ops, w, diagonal))
}

pub fn special_11_quotients(ops: &Operators) -> Result<Special11> {
    let parts: Result<Vec<Special11>> = ops.weights().par_iter().map(|w| special_11_at(ops, w)).collect();
    Ok(parts?.into_iter().reduce(|a, b| a + b).unwrap_or_default())
}

/// `ℓ`-type dimension: `⋂_δ ker δ ∩ ker δ*` on `A^{p,q}`.
pub fn harmonic_dim(ops: &Operators, hodge: &Hodge, deltas: &[Differential], b: Bidegree) -> usize {
    let pieces = hodge.harmonic_operators(ops, deltas);
    ops.weights()
        .par_iter()
        .map(|w| hodge.harmonic_space_of(&pieces, b, w).dim())
        .sum()
}

/// All quantities at one truncation of `model`.
pub fn compute_truncation(model: &AlmostComplexModel, metric: Option<&HermitianMetric>) -> Result<TruncationResult> {
    let ops = model.operators();
    let hodge = metric.map(|g| Hodge::new(g.clone(), &ops.space)).transpose()?;
    compute_with(&ops, hodge.as_ref(), model.coefficients.truncation())
}

/// [`compute_truncation`] on already assembled operators.
pub fn compute_with(ops: &Operators, hodge: Option<&Hodge>, truncation: u32) -> Result<TruncationResult> {
    let n = ops.n();
    let betti = (0..=2 * n).map(|r| de_rham(ops, r)).collect();
    let dolbeault = grid(n, |b| dolbeault(ops, b))?;
    let refined = grid(n, |b| refined_dolbeault(ops, b))?;
    let harmonic = match hodge {
        Some(hodge) => {
            let pieces = hodge.harmonic_operators(ops, &[Differential::PartialBar, Differential::Mu]);
            Some(grid(n, |b| {
                Ok(ops
                    .weights()
                    .par_iter()
                    .map(|w| hodge.harmonic_space_of(&pieces, b, w).dim())
                    .sum())
            })?)
        }
        None => None,
    };
    Ok(TruncationResult {
        truncation,
        weights: ops.weights().len(),
        betti,
        dolbeault,
        refined,
        harmonic,
        hat_h01: hat_h01(ops)?,
        hat_h1: hat_h1(ops, false)?,
        hat_h1_diagonal: hat_h1(ops, true)?,
        special_11: special_11_quotients(ops)?,
    })
}

/// Per-truncation results plus the entries that grow strictly across every
/// consecutive truncation (at least three truncations required).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeDiamond {
    pub n: usize,
    pub subcomplex: String,
    pub history: Vec<TruncationResult>,
    pub unbounded: Vec<String>,
}

impl HodgeDiamond {
    pub fn last(&self) -> &TruncationResult {
        self.history.last().expect("at least one truncation")
    }

    /// Value sequence of the entry named `key` (see [`entry_names`]).
    pub fn series(&self, key: &str) -> Vec<usize> {
        self.history.iter().filter_map(|t| entry(t, key)).collect()
    }

    pub fn is_unbounded(&self, key: &str) -> bool {
        self.unbounded.iter().any(|k| k == key)
    }
}

/// Names of every scalar entry of a [`TruncationResult`].
pub fn entry_names(n: usize, with_harmonic: bool) -> Vec<String> {
    let mut v: Vec<String> = (0..=2 * n).map(|r| format!("b{r}")).collect();
    for p in 0..=n {
        for q in 0..=n {
            v.push(format!("h{p}{q}"));
            v.push(format!("h~{p}{q}"));
            if with_harmonic {
                v.push(format!("l{p}{q}"));
            }
        }
    }
    v.extend(
        ["h^01", "h^1", "h^1_diag", "h11_dR", "h11_BC", "h11_ddc"]
            .iter()
            .map(|s| s.to_string()),
    );
    v
}

/// Looks up an entry by name: `b{r}`, `h{p}{q}` (Dolbeault), `h~{p}{q}`
/// (refined), `l{p}{q}`, `h^01`, `h^1`, `h^1_diag`, `h11_dR`, `h11_BC`,
/// `h11_ddc`.
pub fn entry(t: &TruncationResult, key: &str) -> Option<usize> {
    let digits = |s: &str| -> Option<(usize, usize)> {
        let b = s.as_bytes();
        if b.len() != 2 || !b[0].is_ascii_digit() || !b[1].is_ascii_digit() {
            return None;
        }
        Some(((b[0] - b'0') as usize, (b[1] - b'0') as usize))
    };
    match key {
        "h^01" => Some(t.hat_h01),
        "h^1" => Some(t.hat_h1),
        "h^1_diag" => Some(t.hat_h1_diagonal),
        "h11_dR" => Some(t.special_11.de_rham),
        "h11_BC" => Some(t.special_11.bott_chern),
        "h11_ddc" => t.special_11.ddc,
        _ => {
            if let Some(r) = key.strip_prefix('b') {
                return r.parse::<usize>().ok().and_then(|r| t.betti.get(r).copied());
            }
            if let Some(rest) = key.strip_prefix("h~") {
                let (p, q) = digits(rest)?;
                return t.refined.get(p)?.get(q).copied();
            }
            if let Some(rest) = key.strip_prefix('h') {
                let (p, q) = digits(rest)?;
                return t.dolbeault.get(p)?.get(q).copied();
            }
            if let Some(rest) = key.strip_prefix('l') {
                let (p, q) = digits(rest)?;
                return t.harmonic.as_ref()?.get(p)?.get(q).copied();
            }
            None
        }
    }
}

pub fn subcomplex_label(model: &AlmostComplexModel) -> String {
    match model.coefficients.rank() {
        0 => "left-invariant forms".to_string(),
        k => format!("Fourier subcomplex over a rank-{k} torus, |w_a| ≤ N"),
    }
}

/// Computes every truncation in `truncations` (ascending order is not
/// required; results keep the given order).
pub fn diamond(model: &AlmostComplexModel, metric: Option<&HermitianMetric>, truncations: &[u32]) -> Result<HodgeDiamond> {
    let history: Result<Vec<TruncationResult>> = truncations
        .iter()
        .map(|&t| compute_truncation(&model.with_truncation(t), metric))
        .collect();
    let history = history?;
    let n = model.n();
    let mut unbounded = Vec::new();
    if history.len() >= 3 {
        for key in entry_names(n, metric.is_some()) {
            let s: Vec<usize> = history.iter().filter_map(|t| entry(t, &key)).collect();
            if s.len() == history.len() && s.windows(2).all(|w| w[1] > w[0]) {
                unbounded.push(key);
            }
        }
    }
    Ok(HodgeDiamond {
        n,
        subcomplex: subcomplex_label(model),
        history,
        unbounded,
    })
}

/// The same quantities computed on whole (all-weight) matrices instead of
/// weight by weight; used to cross-check the decomposition.
pub mod whole {
    use super::*;

    fn full(ops: &Operators, g: &GradedOperator, s: Bidegree, t: Bidegree) -> ExactMatrix {
        g.full_block(s, t, ops.weights())
    }

    pub fn refined_dolbeault(ops: &Operators, b: Bidegree) -> Result<usize> {
        let n = ops.n();
        let kernel_of = |g: &GradedOperator, s: Bidegree, (dp, dq): (i32, i32)| match s.shift(dp, dq, n) {
            Some(t) => kernel(&full(ops, g, s, t)),
            None => Subspace::full(ops.space.dim(s)),
        };
        let adol = |s: Bidegree| {
            let dd = ops.delbar.compose(&ops.delbar);
            let mdb = ops.mu.compose(&ops.delbar);
            meet(&[
                kernel_of(&ops.mu, s, (2, -1)),
                kernel_of(&ops.mubar, s, (-1, 2)),
                kernel_of(&dd, s, (0, 2)),
                kernel_of(&mdb, s, (2, 0)),
            ])
        };
        let num = meet(&[kernel_of(&ops.delbar, b, (0, 1)), adol(b)]);
        let den = match b.shift(0, -1, n) {
            Some(s) => adol(s).map(&full(ops, &ops.delbar, s, b)),
            None => Subspace::zero(ops.space.dim(b)),
        };
        quotient_dim(&num, &den)
    }

    pub fn de_rham(ops: &Operators, r: usize) -> usize {
        let sp = &ops.space;
        let mat = |a: usize, b: usize| {
            let src = sp.bidegrees_of_degree(a);
            let tgt = sp.bidegrees_of_degree(b);
            let rows: usize = tgt.iter().map(|&t| sp.dim(t)).sum();
            let cols: usize = src.iter().map(|&s| sp.dim(s)).sum();
            let mut m = ExactMatrix::zeros(rows, cols);
            let mut c0 = 0;
            for &s in &src {
                let mut r0 = 0;
                for &t in &tgt {
                    m.place(r0, c0, &full(ops, &ops.d, s, t));
                    r0 += sp.dim(t);
                }
                c0 += sp.dim(s);
            }
            m
        };
        let top = 2 * ops.n();
        let ker = if r < top {
            kernel(&mat(r, r + 1)).dim()
        } else {
            sp.bidegrees_of_degree(r).iter().map(|&b| sp.dim(b)).sum()
        };
        let im = if r > 0 { image(&mat(r - 1, r)).dim() } else { 0 };
        ker - im
    }
}
