use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::form::{Bidegree, Form, Weight};
use super::space::{block_basis, block_index, CoefficientModel, FormSpace};
use crate::acs::{build_frame, AlmostComplexStructure, Check, ComplexFrame, DPart, GeneratorActions, LieAlgebraSpec};
use crate::error::{Error, Result};
use crate::exterior::{self, MaskForm};
use crate::linalg::{ExactMatrix, Vector};
use crate::scalar::Scalar;

/// Source bidegree, target bidegree and (source) weight of an operator block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockKey {
    pub src: Bidegree,
    pub tgt: Bidegree,
    pub weight: Weight,
}

/// A weight-preserving ℂ-linear operator on forms, stored as exact blocks.
/// Absent blocks are zero.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedOperator {
    pub name: String,
    pub n: usize,
    pub blocks: BTreeMap<BlockKey, ExactMatrix>,
}

impl fmt::Debug for GradedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedOperator({}, {} blocks)", self.name, self.blocks.len())
    }
}

fn block_dim(n: usize, b: Bidegree) -> usize {
    super::space::binomial(n, b.p) * super::space::binomial(n, b.q)
}

impl GradedOperator {
    pub fn zero(name: &str, n: usize) -> Self {
        GradedOperator {
            name: name.into(),
            n,
            blocks: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize, weights: &[Weight]) -> Self {
        let mut op = GradedOperator::zero("id", n);
        for w in weights {
            for b in Bidegree::all(n) {
                op.insert(b, b, w.clone(), ExactMatrix::identity(block_dim(n, b)));
            }
        }
        op
    }

    pub fn insert(&mut self, src: Bidegree, tgt: Bidegree, weight: Weight, m: ExactMatrix) {
        if m.is_zero() {
            return;
        }
        let key = BlockKey { src, tgt, weight };
        match self.blocks.get_mut(&key) {
            Some(old) => {
                *old = old.add(&m);
                if old.is_zero() {
                    self.blocks.remove(&key);
                }
            }
            None => {
                self.blocks.insert(key, m);
            }
        }
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = name.into();
        self
    }

    /// The `src → tgt` block at weight `w`, zero-filled if absent.
    pub fn block(&self, src: Bidegree, tgt: Bidegree, w: &Weight) -> ExactMatrix {
        let key = BlockKey {
            src,
            tgt,
            weight: w.clone(),
        };
        self.blocks
            .get(&key)
            .cloned()
            .unwrap_or_else(|| ExactMatrix::zeros(block_dim(self.n, tgt), block_dim(self.n, src)))
    }

    /// Block between sums of bidegrees, rows and columns in the listed order.
    pub fn multi_block(&self, src: &[Bidegree], tgt: &[Bidegree], w: &Weight) -> ExactMatrix {
        let rows: usize = tgt.iter().map(|&b| block_dim(self.n, b)).sum();
        let cols: usize = src.iter().map(|&b| block_dim(self.n, b)).sum();
        let mut m = ExactMatrix::zeros(rows, cols);
        let mut c0 = 0;
        for &s in src {
            let mut r0 = 0;
            for &t in tgt {
                let key = BlockKey {
                    src: s,
                    tgt: t,
                    weight: w.clone(),
                };
                if let Some(b) = self.blocks.get(&key) {
                    m.place(r0, c0, b);
                }
                r0 += block_dim(self.n, t);
            }
            c0 += block_dim(self.n, s);
        }
        m
    }

    /// Block-diagonal matrix over `weights`, matching the global basis order.
    pub fn full_block(&self, src: Bidegree, tgt: Bidegree, weights: &[Weight]) -> ExactMatrix {
        let (r, c) = (block_dim(self.n, tgt), block_dim(self.n, src));
        let mut m = ExactMatrix::zeros(r * weights.len(), c * weights.len());
        for (i, w) in weights.iter().enumerate() {
            m.place(i * r, i * c, &self.block(src, tgt, w));
        }
        m
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedOperator) -> GradedOperator {
        let mut out = GradedOperator::zero(&format!("{}∘{}", self.name, other.name), self.n);
        for (k, b) in &other.blocks {
            for (k2, a) in self.blocks.range(
                BlockKey {
                    src: k.tgt,
                    tgt: Bidegree::new(0, 0),
                    weight: Weight::default(),
                }..,
            ) {
                if k2.src != k.tgt {
                    break;
                }
                if k2.weight != k.weight {
                    continue;
                }
                out.insert(k.src, k2.tgt, k.weight.clone(), a.mul(b));
            }
        }
        out
    }

    pub fn add(&self, other: &GradedOperator) -> GradedOperator {
        let mut out = self.clone();
        out.name = format!("{}+{}", self.name, other.name);
        for (k, m) in &other.blocks {
            out.insert(k.src, k.tgt, k.weight.clone(), m.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> GradedOperator {
        let mut out = GradedOperator::zero(&self.name, self.n);
        for (k, m) in &self.blocks {
            out.insert(k.src, k.tgt, k.weight.clone(), m.scale(s));
        }
        out
    }

    pub fn sub(&self, other: &GradedOperator) -> GradedOperator {
        self.add(&other.scale(&Scalar::from_i64(-1))).named(&format!("{}-{}", self.name, other.name))
    }

    /// `self∘other − other∘self`.
    pub fn commutator(&self, other: &GradedOperator) -> GradedOperator {
        self.compose(other).sub(&other.compose(self))
    }

    /// `self∘other + other∘self`.
    pub fn anticommutator(&self, other: &GradedOperator) -> GradedOperator {
        self.compose(other).add(&other.compose(self))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Applies the operator to a form.
    pub fn apply(&self, f: &Form, space: &FormSpace) -> Form {
        let mut out = Form::zero();
        for (k, m) in &self.blocks {
            let v = space.block_vector(f, k.src, &k.weight);
            if v.iter().all(Scalar::is_zero) {
                continue;
            }
            out = out.add(&space.block_form(&m.mul_vec(&v), k.tgt, &k.weight));
        }
        out
    }

    /// Restriction to the listed weights.
    pub fn restrict_weights(&self, weights: &[Weight]) -> GradedOperator {
        let mut out = GradedOperator::zero(&self.name, self.n);
        for (k, m) in &self.blocks {
            if weights.contains(&k.weight) {
                out.blocks.insert(k.clone(), m.clone());
            }
        }
        out
    }
}

/// The five differential operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Differential {
    Mu,
    Partial,
    PartialBar,
    MuBar,
    D,
}

impl Differential {
    pub const PARTS: [Differential; 4] = [
        Differential::Mu,
        Differential::Partial,
        Differential::PartialBar,
        Differential::MuBar,
    ];

    pub fn part(self) -> Option<DPart> {
        match self {
            Differential::Mu => Some(DPart::Mu),
            Differential::Partial => Some(DPart::Partial),
            Differential::PartialBar => Some(DPart::PartialBar),
            Differential::MuBar => Some(DPart::MuBar),
            Differential::D => None,
        }
    }

    /// The operator `conj ∘ self ∘ conj`.
    pub fn conj(self) -> Differential {
        match self {
            Differential::Mu => Differential::MuBar,
            Differential::Partial => Differential::PartialBar,
            Differential::PartialBar => Differential::Partial,
            Differential::MuBar => Differential::Mu,
            Differential::D => Differential::D,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Differential::D => "d",
            other => other.part().unwrap().symbol(),
        }
    }

    pub fn parse(s: &str) -> Option<Differential> {
        match s {
            "mu" | "μ" => Some(Differential::Mu),
            "del" | "partial" | "∂" => Some(Differential::Partial),
            "delbar" | "partialbar" | "∂̄" => Some(Differential::PartialBar),
            "mubar" | "μ̄" => Some(Differential::MuBar),
            "d" => Some(Differential::D),
            _ => None,
        }
    }
}

/// A real Lie algebra with almost complex structure and coefficient model,
/// with every derived piece of data needed to assemble operators.
#[derive(Clone, Debug)]
pub struct AlmostComplexModel {
    pub algebra: LieAlgebraSpec,
    pub j: AlmostComplexStructure,
    pub frame: ComplexFrame,
    pub actions: GeneratorActions,
    pub coefficients: CoefficientModel,
    /// `eigen[a][c]`: frame vector `a` acts on `e_w` as `Σ_c eigen[a][c]·w_c`.
    eigen: Vec<Vec<Scalar>>,
}

impl AlmostComplexModel {
    pub fn new(algebra: LieAlgebraSpec, j: AlmostComplexStructure, coefficients: CoefficientModel) -> Result<Self> {
        let frame = build_frame(&algebra, &j)?;
        let actions = frame.split_d();
        let m = algebra.real_dim;
        let k = coefficients.rank();
        let mut eigen = vec![vec![Scalar::zero(); k]; m];
        if let CoefficientModel::TorusFourier { rank, actions: rows, .. } = &coefficients {
            if rows.len() != m {
                return Err(Error::InconsistentModel(format!(
                    "{} action rows for {m} frame vectors",
                    rows.len()
                )));
            }
            if let Some(i) = rows.iter().position(|r| r.len() != *rank) {
                return Err(Error::InconsistentModel(format!("action row {} has length ≠ rank {rank}", i + 1)));
            }
            let active = coefficients.active_vectors();
            let basis = ExactMatrix::identity(m);
            for (x, &a) in active.iter().enumerate() {
                for &b in &active[x + 1..] {
                    let br = algebra.bracket(&basis.column(a), &basis.column(b));
                    if br.iter().any(|c| !c.is_zero()) {
                        return Err(Error::InconsistentModel(format!(
                            "frame vectors {} and {} act on coefficients but do not commute",
                            a + 1,
                            b + 1
                        )));
                    }
                }
            }
            let real_d = algebra.real_differentials();
            if let Some(&a) = active.iter().find(|&&a| !real_d[a].is_empty()) {
                return Err(Error::InconsistentModel(format!(
                    "frame vector {} acts on coefficients but its dual coframe element is not closed",
                    a + 1
                )));
            }
            for (a, e) in eigen.iter_mut().enumerate() {
                for (i, row) in rows.iter().enumerate() {
                    let f = frame.frame.get(i, a).mul_i();
                    if f.is_zero() {
                        continue;
                    }
                    for (c, x) in row.iter().enumerate() {
                        e[c] += f.scale(x);
                    }
                }
            }
        }
        Ok(AlmostComplexModel {
            algebra,
            j,
            frame,
            actions,
            coefficients,
            eigen,
        })
    }

    pub fn n(&self) -> usize {
        self.frame.n
    }

    pub fn real_dim(&self) -> usize {
        self.algebra.real_dim
    }

    pub fn with_truncation(&self, t: u32) -> AlmostComplexModel {
        let mut m = self.clone();
        m.coefficients = self.coefficients.with_truncation(t);
        m
    }

    pub fn space(&self) -> FormSpace {
        FormSpace::new(self.n(), &self.coefficients)
    }

    /// Eigenvalue of frame vector `a` (`Z`s first, 0-based) on `e_w`.
    pub fn eigenvalue(&self, a: usize, w: &Weight) -> Scalar {
        self.eigen[a]
            .iter()
            .zip(&w.0)
            .map(|(c, &x)| c * &Scalar::from_i64(x as i64))
            .sum()
    }

    fn images(&self, op: Differential) -> Vec<MaskForm> {
        match op.part() {
            Some(p) => self.actions.mask_images(p),
            None => self.actions.d_mask_images(),
        }
    }

    /// Image of `e_w · θ^mask` (combined mask, holomorphic bits first).
    fn apply_monomial(&self, op: Differential, images: &[MaskForm], w: &Weight, mask: u32) -> MaskForm {
        let n = self.n();
        let mut out = exterior::derive(mask, images);
        let gens: Vec<usize> = match op {
            Differential::Partial => (0..n).collect(),
            Differential::PartialBar => (n..2 * n).collect(),
            Differential::D => (0..2 * n).collect(),
            _ => Vec::new(),
        };
        for g in gens {
            let lam = self.eigenvalue(g, w);
            if lam.is_zero() {
                continue;
            }
            if let Some((neg, m)) = exterior::wedge_masks(1 << g, mask) {
                exterior::add_into(&mut out, m, &if neg { -lam } else { lam });
            }
        }
        out
    }

    fn assemble_weight(&self, op: Differential, images: &[MaskForm], w: &Weight) -> Vec<(Bidegree, Bidegree, ExactMatrix)> {
        let n = self.n();
        let lo = (1u32 << n) - 1;
        let mut out = Vec::new();
        for b in Bidegree::all(n) {
            let basis = block_basis(n, b);
            let mut targets: BTreeMap<Bidegree, ExactMatrix> = BTreeMap::new();
            for (col, &(h, a)) in basis.iter().enumerate() {
                let mask = h as u32 | ((a as u32) << n);
                for (m, c) in self.apply_monomial(op, images, w, mask) {
                    let (th, ta) = ((m & lo) as u16, (m >> n) as u16);
                    let t = Bidegree::new(th.count_ones() as usize, ta.count_ones() as usize);
                    targets
                        .entry(t)
                        .or_insert_with(|| ExactMatrix::zeros(block_dim(n, t), basis.len()))
                        .add_at(block_index(n, th, ta), col, &c);
                }
            }
            out.extend(targets.into_iter().map(|(t, m)| (b, t, m)));
        }
        out
    }

    /// Assembles `op` on every weight block of the truncated space.
    pub fn assemble(&self, op: Differential) -> GradedOperator {
        let images = self.images(op);
        let weights = self.coefficients.weights();
        let parts: Vec<(Weight, Vec<(Bidegree, Bidegree, ExactMatrix)>)> = weights
            .par_iter()
            .map(|w| (w.clone(), self.assemble_weight(op, &images, w)))
            .collect();
        let mut g = GradedOperator::zero(op.symbol(), self.n());
        for (w, blocks) in parts {
            for (s, t, m) in blocks {
                g.insert(s, t, w.clone(), m);
            }
        }
        g
    }

    pub fn operators(&self) -> Operators {
        Operators {
            space: self.space(),
            mu: self.assemble(Differential::Mu),
            del: self.assemble(Differential::Partial),
            delbar: self.assemble(Differential::PartialBar),
            mubar: self.assemble(Differential::MuBar),
            d: self.assemble(Differential::D),
        }
    }
}

/// The five differentials assembled on one truncated space.
#[derive(Clone, Debug)]
pub struct Operators {
    pub space: FormSpace,
    pub mu: GradedOperator,
    pub del: GradedOperator,
    pub delbar: GradedOperator,
    pub mubar: GradedOperator,
    pub d: GradedOperator,
}

impl Operators {
    pub fn get(&self, op: Differential) -> &GradedOperator {
        match op {
            Differential::Mu => &self.mu,
            Differential::Partial => &self.del,
            Differential::PartialBar => &self.delbar,
            Differential::MuBar => &self.mubar,
            Differential::D => &self.d,
        }
    }

    pub fn n(&self) -> usize {
        self.space.n
    }

    pub fn weights(&self) -> &[Weight] {
        &self.space.weights
    }

    /// Restriction of every operator to a single weight.
    pub fn at_weight(&self, w: &Weight) -> Operators {
        let ws = [w.clone()];
        Operators {
            space: FormSpace {
                n: self.space.n,
                rank: self.space.rank,
                weights: ws.to_vec(),
            },
            mu: self.mu.restrict_weights(&ws),
            del: self.del.restrict_weights(&ws),
            delbar: self.delbar.restrict_weights(&ws),
            mubar: self.mubar.restrict_weights(&ws),
            d: self.d.restrict_weights(&ws),
        }
    }

    /// Checks that `conj ∘ op ∘ conj` equals the conjugate operator on every
    /// block.
    pub fn conjugation_symmetric(&self, op: Differential) -> bool {
        let n = self.n();
        let a = self.get(op);
        let b = self.get(op.conj());
        self.weights().iter().all(|w| {
            let wn = w.neg();
            Bidegree::all(n).all(|s| {
                Bidegree::all(n).all(|t| {
                    let lhs = a.block(s, t, w);
                    let rhs = self
                        .space
                        .conj_matrix(t.conj())
                        .mul(&b.block(s.conj(), t.conj(), &wn).conj())
                        .mul(&self.space.conj_matrix(s));
                    lhs == rhs
                })
            })
        })
    }

    /// The seven relations from `d² = 0`, reconstruction of `d`, `d² = 0`
    /// itself, and conjugation symmetry of `μ` and `∂`.
    pub fn identity_suite(&self) -> Vec<Check> {
        let (mu, del, dbar, mubar, d) = (&self.mu, &self.del, &self.delbar, &self.mubar, &self.d);
        let mut out = Vec::new();
        let mut push = |name: &str, op: GradedOperator| {
            let bad: Vec<String> = op
                .blocks
                .keys()
                .map(|k| format!("{}→{} at {}", k.src, k.tgt, k.weight))
                .collect();
            out.push(Check {
                name: name.into(),
                passed: bad.is_empty(),
                detail: bad.into_iter().take(5).collect::<Vec<_>>().join("; "),
            });
        };
        push("μ² = 0", mu.compose(mu));
        push("μ∂ + ∂μ = 0", mu.anticommutator(del));
        push("μ∂̄ + ∂̄μ + ∂² = 0", mu.anticommutator(dbar).add(&del.compose(del)));
        push(
            "μμ̄ + ∂∂̄ + ∂̄∂ + μ̄μ = 0",
            mu.anticommutator(mubar).add(&del.anticommutator(dbar)),
        );
        push("μ̄∂ + ∂μ̄ + ∂̄² = 0", mubar.anticommutator(del).add(&dbar.compose(dbar)));
        push("μ̄∂̄ + ∂̄μ̄ = 0", mubar.anticommutator(dbar));
        push("μ̄² = 0", mubar.compose(mubar));
        push("d = μ + ∂ + ∂̄ + μ̄", mu.add(del).add(dbar).add(mubar).sub(d));
        push("d² = 0", d.compose(d));
        for op in [Differential::Mu, Differential::Partial] {
            let ok = self.conjugation_symmetric(op);
            out.push(Check {
                name: format!("conj∘{}∘conj = {}", op.symbol(), op.conj().symbol()),
                passed: ok,
                detail: String::new(),
            });
        }
        out
    }
}

/// Entrywise conjugate of a block vector followed by the signed
/// permutation, i.e. the coordinates of `conj(x)`.
pub fn conj_vector(space: &FormSpace, b: Bidegree, v: &[Scalar]) -> Vector {
    let bar: Vector = v.iter().map(Scalar::conj).collect();
    space.conj_matrix(b).mul_vec(&bar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{kt4_algebra, kt4_fourier, kt4_j};
    use num_rational::BigRational;

    fn r(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn abelian_invariant_operators_vanish() {
        let m = AlmostComplexModel::new(
            LieAlgebraSpec::abelian(4),
            AlmostComplexStructure::standard(4),
            CoefficientModel::Invariant,
        )
        .unwrap();
        let ops = m.operators();
        for op in Differential::PARTS {
            assert!(ops.get(op).is_zero());
        }
    }

    #[test]
    fn kt4_delbar_on_theta2() {
        let m = AlmostComplexModel::new(kt4_algebra(), kt4_j(), CoefficientModel::Invariant).unwrap();
        let ops = m.operators();
        let th = |k| Form::generator(k, false);
        let thb = |k| Form::generator(k, true);
        let expected = th(1)
            .wedge(&thb(2))
            .add(&th(2).wedge(&thb(1)))
            .scale(&Scalar::ratio(-1, 4))
            .with_weight_rank(0);
        assert_eq!(ops.delbar.apply(&th(2), &ops.space), expected);
    }

    #[test]
    fn kt4_fourier_function_eigenvalue() {
        let m = AlmostComplexModel::new(kt4_algebra(), kt4_j(), kt4_fourier(1)).unwrap();
        // Z̄₁ = ½(V₁ + iV₂) on e_(m,n): ½(i·m + i·i·n) = ½(i m − n)
        for (a, b) in [(1, 0), (0, 1), (1, 1), (-1, 1)] {
            let w = Weight(vec![a, b]);
            let expected = Scalar::new(BigRational::new((-b).into(), 2.into()), BigRational::new(a.into(), 2.into()));
            assert_eq!(m.eigenvalue(2, &w), expected);
            assert_eq!(m.eigenvalue(3, &w), Scalar::zero());
        }
        let ops = m.operators();
        let w = Weight(vec![1, 1]);
        let f = Form::term(super::super::form::Monomial::new(w.clone(), 0, 0), Scalar::one());
        let img = ops.delbar.apply(&f, &ops.space);
        let expected = Form::term(super::super::form::Monomial::new(w, 0, 1), Scalar::new(r(-1) / r(2), r(1) / r(2)));
        assert_eq!(img, expected);
    }

    #[test]
    fn identity_suites_pass() {
        let inv = AlmostComplexModel::new(kt4_algebra(), kt4_j(), CoefficientModel::Invariant).unwrap();
        let four = AlmostComplexModel::new(kt4_algebra(), kt4_j(), kt4_fourier(2)).unwrap();
        let torus = AlmostComplexModel::new(
            LieAlgebraSpec::abelian(4),
            AlmostComplexStructure::standard(4),
            CoefficientModel::Invariant,
        )
        .unwrap();
        for m in [inv, four, torus] {
            for c in m.operators().identity_suite() {
                assert!(c.passed, "{}: {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn inconsistent_models_are_rejected() {
        // V₃ acts but e³ is not closed on KT⁴
        let bad = CoefficientModel::TorusFourier {
            rank: 1,
            actions: vec![vec![r(0)], vec![r(0)], vec![r(0)], vec![r(1)]],
            truncation: 1,
        };
        assert!(matches!(
            AlmostComplexModel::new(kt4_algebra(), kt4_j(), bad),
            Err(Error::InconsistentModel(_))
        ));
        let noncommuting = CoefficientModel::TorusFourier {
            rank: 1,
            actions: vec![vec![r(0)], vec![r(1)], vec![r(1)], vec![r(0)]],
            truncation: 1,
        };
        assert!(matches!(
            AlmostComplexModel::new(kt4_algebra(), kt4_j(), noncommuting),
            Err(Error::InconsistentModel(_))
        ));
    }

    #[test]
    fn whole_matrix_is_block_diagonal_over_weights() {
        let m = AlmostComplexModel::new(kt4_algebra(), kt4_j(), kt4_fourier(1)).unwrap();
        let ops = m.operators();
        let b = Bidegree::new(0, 1);
        let t = Bidegree::new(0, 2);
        let full = ops.delbar.full_block(b, t, ops.weights());
        let space = &ops.space;
        for (col, mono) in space.enumerate_basis(b).into_iter().enumerate() {
            let f = Form::term(mono, Scalar::one());
            let img = ops.delbar.apply(&f, space);
            assert_eq!(full.column(col), space.vector(&img, t));
        }
    }
}
