//! Hermitian metrics on the coframe: fundamental form, Hodge star, formal
//! adjoints, the Lefschetz pair and Laplacians.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::form::{Bidegree, Form, Monomial, Weight};
use crate::complex::space::{binomial, block_basis, block_index, FormSpace};
use crate::complex::{Differential, GradedOperator, Operators};
use crate::error::{Error, Result};
use crate::linalg::{determinant, intersect, inverse, kernel, ExactMatrix, Subspace};
use crate::scalar::Scalar;

/// `g_{kj̄}` with `ω = (i/2) Σ g_{kj̄} θ^k ∧ θ̄^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianMetric {
    pub g: ExactMatrix,
}

impl HermitianMetric {
    /// Checks conjugate symmetry and positivity of all leading principal
    /// minors.
    pub fn new(g: ExactMatrix) -> Result<Self> {
        let n = g.rows();
        if g.cols() != n {
            return Err(Error::NotPositive(format!("metric is {}x{}", n, g.cols())));
        }
        if g.conj_transpose() != g {
            return Err(Error::NotPositive("matrix is not Hermitian".into()));
        }
        for k in 1..=n {
            let det = determinant(&g.submatrix(0, k, 0, k));
            if !det.is_real() || det.re <= num_rational::BigRational::from_integer(0.into()) {
                return Err(Error::NotPositive(format!("leading minor of order {k} is {det}")));
            }
        }
        Ok(HermitianMetric { g })
    }

    pub fn standard(n: usize) -> Self {
        HermitianMetric {
            g: ExactMatrix::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.g.rows()
    }

    pub fn fundamental_form(&self) -> Form {
        let half_i = Scalar::ratio(1, 2).mul_i();
        let mut w = Form::zero();
        for (k, j, c) in self.g.entries() {
            let t = Form::generator(k + 1, false).wedge(&Form::generator(j + 1, true));
            w = w.add(&t.scale(&(&half_i * c)));
        }
        w
    }

    /// `ωⁿ/n!`.
    pub fn volume_form(&self) -> Form {
        let n = self.n();
        let fact: i64 = (1..=n as i64).product();
        self.fundamental_form().wedge_power(n).scale(&Scalar::ratio(1, fact))
    }

    /// `h(θ^a, θ^b)` for 0-based `a`, `b`; the dual of `g(Z_k, Z̄_j) = g_{kj̄}/2`.
    pub fn covector_products(&self) -> ExactMatrix {
        inverse(&self.g).expect("positive definite").transpose().scale(&Scalar::from_i64(2))
    }
}

fn masked(m: &ExactMatrix, rows: u16, cols: u16) -> ExactMatrix {
    let r: Vec<usize> = (0..16).filter(|k| rows & (1 << k) != 0).collect();
    let c: Vec<usize> = (0..16).filter(|k| cols & (1 << k) != 0).collect();
    let mut out = ExactMatrix::zeros(r.len(), c.len());
    for (i, &a) in r.iter().enumerate() {
        for (j, &b) in c.iter().enumerate() {
            out.set(i, j, m.get(a, b));
        }
    }
    out
}

/// Star, Lefschetz operators and inner products for a metric on a
/// truncated form space.
#[derive(Clone, Debug)]
pub struct Hodge {
    pub metric: HermitianMetric,
    pub space: FormSpace,
    /// Gram matrix `h(e_i, e_j)` of each bidegree block.
    pub gram: BTreeMap<Bidegree, ExactMatrix>,
    pub star: GradedOperator,
    pub star_inv: GradedOperator,
    pub lefschetz: GradedOperator,
    pub dual_lefschetz: GradedOperator,
    /// `dV` as a multiple of `θ^1∧…∧θ^n∧θ̄^1∧…∧θ̄^n`.
    pub volume: Scalar,
}

impl Hodge {
    pub fn new(metric: HermitianMetric, space: &FormSpace) -> Result<Self> {
        let n = space.n;
        if metric.n() != n {
            return Err(Error::NotPositive(format!("metric has size {}, expected {n}", metric.n())));
        }
        let k = metric.covector_products();
        let kbar = k.conj();
        let top = Monomial::new(Weight::default(), (1 << n) - 1, (1 << n) - 1);
        let volume = metric.volume_form().coeff(&top);

        let mut gram = BTreeMap::new();
        for b in Bidegree::all(n) {
            let basis = block_basis(n, b);
            let mut g = ExactMatrix::zeros(basis.len(), basis.len());
            for (i, &(h1, a1)) in basis.iter().enumerate() {
                for (j, &(h2, a2)) in basis.iter().enumerate() {
                    let v = &determinant(&masked(&k, h1, h2)) * &determinant(&masked(&kbar, a1, a2));
                    g.set(i, j, v);
                }
            }
            gram.insert(b, g);
        }

        let mut star = GradedOperator::zero("*", n);
        let mut star_inv = GradedOperator::zero("*⁻¹", n);
        for b in Bidegree::all(n) {
            let tgt = Bidegree::new(n - b.q, n - b.p);
            let c = b.conj();
            let cb = block_basis(n, c);
            let tb = block_basis(n, tgt);
            let mut pairing = ExactMatrix::zeros(cb.len(), tb.len());
            for (i, &(h1, a1)) in cb.iter().enumerate() {
                for (j, &(h2, a2)) in tb.iter().enumerate() {
                    let x = Monomial::new(Weight::default(), h1, a1);
                    let y = Monomial::new(Weight::default(), h2, a2);
                    if let Some((sign, _)) = x.wedge(&y) {
                        pairing.set(i, j, Scalar::from_i64(sign as i64));
                    }
                }
            }
            let s = inverse(&pairing)
                .expect("wedge pairing is nondegenerate")
                .mul(&gram[&c])
                .mul(&space.conj_matrix(b))
                .scale(&volume);
            let si = inverse(&s).expect("star is invertible");
            for w in &space.weights {
                star.insert(b, tgt, w.clone(), s.clone());
                star_inv.insert(tgt, b, w.clone(), si.clone());
            }
        }

        let omega = metric.fundamental_form();
        let mut lefschetz = GradedOperator::zero("L", n);
        for b in Bidegree::all(n) {
            let Some(t) = b.shift(1, 1, n) else { continue };
            let basis = block_basis(n, b);
            let mut m = ExactMatrix::zeros(binomial(n, t.p) * binomial(n, t.q), basis.len());
            for (col, &(h, a)) in basis.iter().enumerate() {
                let img = omega.wedge(&Form::term(Monomial::new(Weight::default(), h, a), Scalar::one()));
                for (mono, c) in img.terms() {
                    m.set(block_index(n, mono.holo, mono.anti), col, c.clone());
                }
            }
            for w in &space.weights {
                lefschetz.insert(b, t, w.clone(), m.clone());
            }
        }
        let dual_lefschetz = star_inv.compose(&lefschetz).compose(&star).named("Λ");
        Ok(Hodge {
            metric,
            space: space.clone(),
            gram,
            star,
            star_inv,
            lefschetz,
            dual_lefschetz,
            volume,
        })
    }

    /// `⟨x, y⟩`, linear in `x`; distinct weights are orthogonal.
    pub fn inner_product(&self, x: &Form, y: &Form) -> Scalar {
        let mut total = Scalar::zero();
        for w in &self.space.weights {
            for b in Bidegree::all(self.space.n) {
                let xv = self.space.block_vector(x, b, w);
                let yv = self.space.block_vector(y, b, w);
                let gy = self.gram[&b].mul_vec(&yv.iter().map(Scalar::conj).collect::<Vec<_>>());
                total += xv.iter().zip(&gy).map(|(a, c)| a * c).sum::<Scalar>();
            }
        }
        total
    }

    /// `⟨x, y⟩` as the weight-zero `dV` coefficient of `x ∧ *conj(y)`.
    pub fn inner_product_via_star(&self, x: &Form, y: &Form) -> Scalar {
        let n = self.space.n;
        let sy = self.star.apply(&y.conjugate().with_weight_rank(self.space.rank), &self.space);
        let top = x.with_weight_rank(self.space.rank).wedge(&sy);
        let mono = Monomial::new(Weight::zero(self.space.rank), (1 << n) - 1, (1 << n) - 1);
        let c = top.coeff(&mono);
        &c * &self.volume.inv().unwrap()
    }

    /// `δ* = −*δ̄*`, with `δ̄` the conjugate operator.
    pub fn adjoint(&self, ops: &Operators, op: Differential) -> GradedOperator {
        self.star
            .compose(ops.get(op.conj()))
            .compose(&self.star)
            .scale(&Scalar::from_i64(-1))
            .named(&format!("{}*", op.symbol()))
    }

    /// Adjoint computed from Gram matrices: `A* = conj(G_s⁻¹ Aᵀ G_t)`.
    pub fn adjoint_via_gram(&self, a: &GradedOperator) -> GradedOperator {
        let mut out = GradedOperator::zero(&format!("{}*", a.name), a.n);
        for (k, m) in &a.blocks {
            let gs_inv = inverse(&self.gram[&k.src]).unwrap();
            let adj = gs_inv.mul(&m.transpose()).mul(&self.gram[&k.tgt]).conj();
            out.insert(k.tgt, k.src, k.weight.clone(), adj);
        }
        out
    }

    /// `δδ* + δ*δ`.
    pub fn laplacian(&self, ops: &Operators, op: Differential) -> GradedOperator {
        let a = ops.get(op);
        let s = self.adjoint(ops, op);
        a.anticommutator(&s).named(&format!("Δ{}", op.symbol()))
    }

    /// `δ` and `δ*` for every listed operator.
    pub fn harmonic_operators(&self, ops: &Operators, deltas: &[Differential]) -> Vec<GradedOperator> {
        deltas
            .iter()
            .flat_map(|&op| [ops.get(op).clone(), self.adjoint(ops, op)])
            .collect()
    }

    /// Common kernel of `pieces` on the `(b, w)` block.
    pub fn harmonic_space_of(&self, pieces: &[GradedOperator], b: Bidegree, w: &Weight) -> Subspace {
        let mut spaces = vec![Subspace::full(self.space.block_dim(b))];
        for a in pieces {
            for t in Bidegree::all(self.space.n) {
                let key = crate::complex::BlockKey {
                    src: b,
                    tgt: t,
                    weight: w.clone(),
                };
                if let Some(m) = a.blocks.get(&key) {
                    spaces.push(kernel(m));
                }
            }
        }
        let refs: Vec<&Subspace> = spaces.iter().collect();
        intersect(&refs).expect("same ambient")
    }

    /// `⋂_δ (ker δ ∩ ker δ*)` on the `(b, w)` block.
    pub fn harmonic_space(&self, ops: &Operators, deltas: &[Differential], b: Bidegree, w: &Weight) -> Subspace {
        self.harmonic_space_of(&self.harmonic_operators(ops, deltas), b, w)
    }

    /// Sum over weights of [`Hodge::harmonic_space`] dimensions.
    pub fn harmonic_dim(&self, ops: &Operators, deltas: &[Differential], b: Bidegree) -> usize {
        let pieces = self.harmonic_operators(ops, deltas);
        self.space
            .weights
            .iter()
            .map(|w| self.harmonic_space_of(&pieces, b, w).dim())
            .sum()
    }

    /// `±1` eigenspaces of `*` on 2-forms of weight `w` (bidegrees `p`
    /// ascending, as in [`FormSpace::degree_vector`]).
    pub fn asd_split(&self, w: &Weight) -> Result<(Subspace, Subspace)> {
        if self.space.n != 2 {
            return Err(Error::Not4Manifold(2 * self.space.n));
        }
        let bs = self.space.bidegrees_of_degree(2);
        let s = self.star.multi_block(&bs, &bs, w);
        let id = ExactMatrix::identity(s.rows());
        Ok((kernel(&s.sub(&id)), kernel(&s.add(&id))))
    }

    pub fn kahler_predicates(&self, ops: &Operators) -> KahlerPredicates {
        let omega = self.metric.fundamental_form().with_weight_rank(self.space.rank);
        let d_omega = ops.d.apply(&omega, &self.space);
        let ddbar = ops.del.compose(&ops.delbar).apply(&omega, &self.space);
        KahlerPredicates {
            almost_kahler: d_omega.is_zero(),
            ddc_closed: ddbar.is_zero(),
        }
    }

    /// The sixteen commutator identities between `L`, `Λ` and the four
    /// components of `d` and their adjoints, each as `(name, holds)`.
    pub fn kahler_identities(&self, ops: &Operators) -> Vec<(String, bool)> {
        self.kahler_identity_defects(ops)
            .into_iter()
            .map(|(name, defect)| (name, defect.is_zero()))
            .collect()
    }

    /// `lhs − rhs` for each identity of [`Hodge::kahler_identities`].
    pub fn kahler_identity_defects(&self, ops: &Operators) -> Vec<(String, GradedOperator)> {
        let l = &self.lefschetz;
        let lam = &self.dual_lefschetz;
        let adj = |op| self.adjoint(ops, op);
        let i = Scalar::i();
        let mi = -Scalar::i();
        let zero = || GradedOperator::zero("0", self.space.n);
        use Differential::*;
        let cases: Vec<(&str, GradedOperator, GradedOperator)> = vec![
            ("[L, μ̄] = 0", l.commutator(&ops.mubar), zero()),
            ("[L, μ] = 0", l.commutator(&ops.mu), zero()),
            ("[Λ, μ̄*] = 0", lam.commutator(&adj(MuBar)), zero()),
            ("[Λ, μ*] = 0", lam.commutator(&adj(Mu)), zero()),
            ("[L, ∂̄] = 0", l.commutator(&ops.delbar), zero()),
            ("[L, ∂] = 0", l.commutator(&ops.del), zero()),
            ("[Λ, ∂̄*] = 0", lam.commutator(&adj(PartialBar)), zero()),
            ("[Λ, ∂*] = 0", lam.commutator(&adj(Partial)), zero()),
            ("[L, μ̄*] = iμ", l.commutator(&adj(MuBar)), ops.mu.scale(&i)),
            ("[L, μ*] = −iμ̄", l.commutator(&adj(Mu)), ops.mubar.scale(&mi)),
            ("[Λ, μ̄] = iμ*", lam.commutator(&ops.mubar), adj(Mu).scale(&i)),
            ("[Λ, μ] = −iμ̄*", lam.commutator(&ops.mu), adj(MuBar).scale(&mi)),
            ("[L, ∂̄*] = −i∂", l.commutator(&adj(PartialBar)), ops.del.scale(&mi)),
            ("[L, ∂*] = i∂̄", l.commutator(&adj(Partial)), ops.delbar.scale(&i)),
            ("[Λ, ∂̄] = −i∂*", lam.commutator(&ops.delbar), adj(Partial).scale(&mi)),
            ("[Λ, ∂] = i∂̄*", lam.commutator(&ops.del), adj(PartialBar).scale(&i)),
        ];
        cases
            .into_iter()
            .map(|(name, lhs, rhs)| (name.to_string(), lhs.sub(&rhs)))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KahlerPredicates {
    pub almost_kahler: bool,
    pub ddc_closed: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acs::{AlmostComplexStructure, LieAlgebraSpec};
    use crate::complex::{AlmostComplexModel, CoefficientModel};
    use crate::models::{kt4_algebra, kt4_j};
    use proptest::prelude::*;

    fn th(k: usize) -> Form {
        Form::generator(k, false)
    }
    fn thb(k: usize) -> Form {
        Form::generator(k, true)
    }

    fn kt4() -> (Operators, Hodge) {
        let m = AlmostComplexModel::new(kt4_algebra(), kt4_j(), CoefficientModel::Invariant).unwrap();
        let ops = m.operators();
        let h = Hodge::new(HermitianMetric::standard(2), &ops.space).unwrap();
        (ops, h)
    }

    #[test]
    fn fundamental_form_examples() {
        let w = HermitianMetric::standard(2).fundamental_form();
        let expected = th(1).wedge(&thb(1)).add(&th(2).wedge(&thb(2))).scale(&Scalar::ratio(1, 2).mul_i());
        assert_eq!(w, expected);
        assert!(w.is_real());
        let g = HermitianMetric::new(ExactMatrix::from_i64(&[&[2, 0], &[0, 3]])).unwrap();
        let expected = th(1)
            .wedge(&thb(1))
            .scale(&Scalar::i())
            .add(&th(2).wedge(&thb(2)).scale(&Scalar::ratio(3, 2).mul_i()));
        assert_eq!(g.fundamental_form(), expected);
    }

    #[test]
    fn metric_validation() {
        let non_herm = ExactMatrix::from_rows(2, &[vec![Scalar::one(), Scalar::i()], vec![Scalar::i(), Scalar::one()]]);
        assert!(matches!(HermitianMetric::new(non_herm), Err(Error::NotPositive(_))));
        assert!(matches!(
            HermitianMetric::new(ExactMatrix::from_i64(&[&[1, 2], &[2, 1]])),
            Err(Error::NotPositive(_))
        ));
        let herm = ExactMatrix::from_rows(2, &[vec![Scalar::from_i64(2), Scalar::i()], vec![-Scalar::i(), Scalar::from_i64(2)]]);
        assert!(HermitianMetric::new(herm).is_ok());
    }

    #[test]
    fn star_examples() {
        let (ops, h) = kt4();
        let sp = &ops.space;
        let t12 = th(1).wedge(&th(2)).with_weight_rank(0);
        assert_eq!(h.star.apply(&t12, sp), t12);
        let one = Form::constant(Scalar::one()).with_weight_rank(0);
        assert_eq!(h.star.apply(&one, sp), h.metric.volume_form().with_weight_rank(0));
        // ** = (−1)^k
        let ss = h.star.compose(&h.star);
        for b in Bidegree::all(2) {
            let sign = if b.total() % 2 == 0 { 1 } else { -1 };
            let w = Weight::default();
            assert_eq!(ss.block(b, b, &w), ExactMatrix::identity(sp.block_dim(b)).scale(&Scalar::from_i64(sign)));
        }
    }

    #[test]
    fn lefschetz_examples() {
        let (ops, h) = kt4();
        let sp = &ops.space;
        let one = Form::constant(Scalar::one()).with_weight_rank(0);
        let omega = h.metric.fundamental_form().with_weight_rank(0);
        assert_eq!(h.lefschetz.apply(&one, sp), omega);
        assert_eq!(h.dual_lefschetz.apply(&omega, sp), Form::constant(Scalar::from_i64(2)).with_weight_rank(0));
        // [L, Λ] = (k − n) on k-forms
        let c = h.lefschetz.commutator(&h.dual_lefschetz);
        for b in Bidegree::all(2) {
            let w = Weight::default();
            let k = b.total() as i64 - 2;
            assert_eq!(c.block(b, b, &w), ExactMatrix::identity(sp.block_dim(b)).scale(&Scalar::from_i64(k)));
        }
        let b11 = Bidegree::new(1, 1);
        let prim = kernel(&h.dual_lefschetz.block(b11, Bidegree::new(0, 0), &Weight::default()));
        assert_eq!(prim.dim(), 3);
    }

    #[test]
    fn adjoint_agrees_with_gram_adjoint() {
        let (ops, h) = kt4();
        for op in [Differential::Mu, Differential::Partial, Differential::PartialBar, Differential::MuBar, Differential::D] {
            assert_eq!(h.adjoint(&ops, op).blocks, h.adjoint_via_gram(ops.get(op)).blocks, "{}", op.symbol());
        }
        assert_eq!(h.adjoint_via_gram(&h.lefschetz).blocks, h.dual_lefschetz.blocks);
    }

    #[test]
    fn delbar_adjoint_kills_thetabar1() {
        let (ops, h) = kt4();
        let a = h.adjoint(&ops, Differential::PartialBar);
        assert!(a.apply(&thb(1).with_weight_rank(0), &ops.space).is_zero());
    }

    #[test]
    fn laplacian_kernel_on_10_forms() {
        let (ops, h) = kt4();
        let lap = h.laplacian(&ops, Differential::PartialBar);
        let b = Bidegree::new(1, 0);
        let k = kernel(&lap.block(b, b, &Weight::default()));
        assert_eq!(k, Subspace::span(2, &[vec![Scalar::one(), Scalar::zero()]]));
        for b in Bidegree::all(2) {
            let direct = kernel(&lap.block(b, b, &Weight::default()));
            assert_eq!(direct, h.harmonic_space(&ops, &[Differential::PartialBar], b, &Weight::default()));
        }
    }

    #[test]
    fn asd_split_dimensions() {
        let (ops, h) = kt4();
        let (plus, minus) = h.asd_split(&Weight::default()).unwrap();
        assert_eq!((plus.dim(), minus.dim()), (3, 3));
        let omega = h.metric.fundamental_form().with_weight_rank(0);
        assert!(plus.contains(&ops.space.degree_vector(&omega, 2, &Weight::default())));
        let m6 = AlmostComplexModel::new(
            LieAlgebraSpec::abelian(6),
            AlmostComplexStructure::standard(6),
            CoefficientModel::Invariant,
        )
        .unwrap();
        let h6 = Hodge::new(HermitianMetric::standard(3), &m6.space()).unwrap();
        assert!(matches!(h6.asd_split(&Weight::default()), Err(Error::Not4Manifold(6))));
    }

    #[test]
    fn kt4_is_almost_kahler_and_identities_hold() {
        let (ops, h) = kt4();
        let p = h.kahler_predicates(&ops);
        assert!(p.almost_kahler && p.ddc_closed);
        for (name, ok) in h.kahler_identities(&ops) {
            assert!(ok, "{name}");
        }
    }

    proptest! {
        #[test]
        fn adjointness_on_random_forms(cs in prop::collection::vec((-3i64..4, -3i64..4), 32)) {
            let (ops, h) = kt4();
            let sp = &ops.space;
            let mut k = 0;
            let mut rand_form = |b: Bidegree| {
                let basis = sp.enumerate_basis(b);
                let mut f = Form::zero();
                for m in basis {
                    let (a, c) = cs[k % cs.len()];
                    k += 1;
                    f.add_term(m, &Scalar::gaussian(a, c));
                }
                f
            };
            for op in [Differential::Mu, Differential::Partial, Differential::PartialBar, Differential::MuBar] {
                let adj = h.adjoint(&ops, op);
                for b in Bidegree::all(2) {
                    let a = rand_form(b);
                    let (dp, dq) = op.part().unwrap().shift();
                    let Some(t) = b.shift(dp, dq, 2) else { continue };
                    let y = rand_form(t);
                    let lhs = h.inner_product(&ops.get(op).apply(&a, sp), &y);
                    let rhs = h.inner_product(&a, &adj.apply(&y, sp));
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }

        #[test]
        fn star_pairing_matches_gram(cs in prop::collection::vec((-3i64..4, -3i64..4), 8)) {
            let (ops, h) = kt4();
            let sp = &ops.space;
            for b in Bidegree::all(2) {
                let basis = sp.enumerate_basis(b);
                let mut x = Form::zero();
                let mut y = Form::zero();
                for (k, m) in basis.into_iter().enumerate() {
                    let (a, c) = cs[k % cs.len()];
                    x.add_term(m.clone(), &Scalar::gaussian(a, c));
                    y.add_term(m, &Scalar::gaussian(c, a - 1));
                }
                prop_assert_eq!(h.inner_product(&x, &y), h.inner_product_via_star(&x, &y));
                if !x.is_zero() {
                    let nrm = h.inner_product(&x, &x);
                    prop_assert!(nrm.is_real() && nrm.re > num_rational::BigRational::from_integer(0.into()));
                }
            }
        }
    }
}
