use super::taming::corrected_form;
use super::{forms_witness, vectors_witness, AuditContext, AuditReport, Claim, Witness};
use crate::cohomology::refined_spaces;
use crate::complex::form::{Bidegree, Form, Weight};
use crate::complex::{conj_vector, Differential};
use crate::error::{Error, Result};
use crate::linalg::{image, intersect, kernel, ExactMatrix, Subspace, Vector};
use crate::scalar::Scalar;

use Differential::{Mu, MuBar, Partial, PartialBar};

fn bd(p: usize, q: usize) -> Bidegree {
    Bidegree::new(p, q)
}

fn blk(ctx: &AuditContext, op: Differential, s: Bidegree, t: Bidegree, w: &Weight) -> ExactMatrix {
    ctx.ops.get(op).block(s, t, w)
}

fn meet(a: &Subspace, b: &Subspace) -> Subspace {
    intersect(&[a, b]).expect("same ambient")
}

/// First basis vector of `a` outside `b`, if any.
fn outside(a: &Subspace, b: &Subspace) -> Option<Vector> {
    a.basis().iter().find(|v| !b.contains(v)).cloned()
}

/// Compares two families of per-weight subspaces; the witness is a vector in
/// one but not the other.
fn equal_per_weight<F, G>(ctx: &AuditContext, b: Bidegree, left: F, right: G) -> (bool, Witness)
where
    F: Fn(&Weight) -> Subspace,
    G: Fn(&Weight) -> Subspace,
{
    for w in ctx.ops.weights() {
        let (l, r) = (left(w), right(w));
        if let Some(v) = outside(&l, &r).or_else(|| outside(&r, &l)) {
            return (false, vectors_witness(ctx, &[v], b, w));
        }
    }
    (true, Witness::None)
}

fn need_four(ctx: &AuditContext) -> Result<()> {
    if ctx.n() != 2 {
        return Err(Error::Not4Manifold(2 * ctx.n()));
    }
    Ok(())
}

/// Relation check on integers; failures get the subcomplex note.
fn numeric(ctx: &AuditContext, id: &str, statement: &str, holds: bool, values: &[(&str, usize)]) -> Claim {
    let c = Claim::check(id, statement, holds, Witness::numbers(values));
    if holds {
        c
    } else {
        c.with_note(ctx.subcomplex_note())
    }
}

/// Symmetries of the `(∂̄, μ)`-harmonic numbers on almost-Kähler models and
/// the action of `*` on harmonic forms.
pub fn audit_dualities(ctx: &AuditContext) -> AuditReport {
    let mut r = AuditReport::default();
    let ids = [
        ("harmonic-conjugate-symmetry", "ℓ^{p,q} = ℓ^{q,p}"),
        ("harmonic-serre-symmetry", "ℓ^{p,q} = ℓ^{n−q,n−p}"),
        ("harmonic-hodge-symmetry", "ℓ^{p,q} = ℓ^{n−p,n−q}"),
        ("star-preserves-harmonic", "* maps ℋ^{p,q} into ℋ^{n−q,n−p} for the pair (∂̄, μ)"),
        ("refined-10-equals-harmonic", "h̃^{1,0} = ℓ^{1,0} = ℓ^{0,1}"),
    ];
    let hodge = match (&ctx.hodge, ctx.is_almost_kahler()) {
        (Some(h), true) => h,
        (h, _) => {
            let why = if h.is_none() { "no metric supplied" } else { "dω ≠ 0, the metric is not almost Kähler" };
            for (id, s) in ids {
                r.push(Claim::not_applicable(id, s, why));
            }
            return r;
        }
    };
    let n = ctx.n();
    let l = ctx.numbers.harmonic.as_ref().expect("harmonic numbers computed with a metric");
    let sym = |f: &dyn Fn(usize, usize) -> (usize, usize)| -> Vec<(String, usize)> {
        let mut bad = Vec::new();
        for p in 0..=n {
            for q in 0..=n {
                let (a, b) = f(p, q);
                if l[p][q] != l[a][b] {
                    bad.push((format!("l{p}{q}"), l[p][q]));
                    bad.push((format!("l{a}{b}"), l[a][b]));
                }
            }
        }
        bad
    };
    let maps: [&dyn Fn(usize, usize) -> (usize, usize); 3] =
        [&|p, q| (q, p), &|p, q| (n - q, n - p), &|p, q| (n - p, n - q)];
    for ((id, s), f) in ids.iter().zip(maps) {
        let bad = sym(f);
        r.push(Claim::check(id, s, bad.is_empty(), Witness::Numbers { values: bad }));
    }

    let pieces = hodge.harmonic_operators(&ctx.ops, &[PartialBar, Mu]);
    let mut witness = Witness::None;
    'outer: for w in ctx.ops.weights() {
        for b in Bidegree::all(n) {
            let t = bd(n - b.q, n - b.p);
            let src = hodge.harmonic_space_of(&pieces, b, w);
            if src.is_zero() {
                continue;
            }
            let tgt = hodge.harmonic_space_of(&pieces, t, w);
            let s = hodge.star.block(b, t, w);
            if let Some(v) = src.basis().iter().find(|v| !tgt.contains(&s.mul_vec(v))) {
                witness = vectors_witness(ctx, std::slice::from_ref(v), b, w);
                break 'outer;
            }
        }
    }
    let (id, s) = ids[3];
    r.push(Claim::check(id, s, witness == Witness::None, witness));

    let (id, s) = ids[4];
    if n == 2 {
        let (h10, l10, l01) = (ctx.refined(1, 0), l[1][0], l[0][1]);
        r.push(Claim::check(
            id,
            s,
            h10 == l10 && l10 == l01,
            Witness::numbers(&[("h~10", h10), ("l10", l10), ("l01", l01)]),
        ));
    } else {
        r.push(Claim::not_applicable(id, s, "stated for real dimension 4"));
    }
    r
}

/// Relations valid in every dimension: refined versus Dolbeault numbers
/// in bidegree `(p,0)`, the harmonic `(0,1)` inclusion, the splitting of
/// `ĥ¹`, constancy of `∂̄`- and `∂∂̄`-closed functions, and vanishing under a
/// maximal-rank Nijenhuis tensor.
pub fn audit_general_relations(ctx: &AuditContext) -> AuditReport {
    let mut r = AuditReport::default();
    let n = ctx.n();

    let mut vals = Vec::new();
    let mut ok = true;
    for p in 0..=n {
        let (a, b) = (ctx.refined(p, 0), ctx.dolbeault(p, 0));
        ok &= a == b;
        vals.push((format!("h~{p}0"), a));
        vals.push((format!("h{p}0"), b));
    }
    r.push(Claim::check(
        "refined-equals-dolbeault-p0",
        "h̃^{p,0} = h^{p,0} for all p",
        ok,
        Witness::Numbers { values: vals },
    ));

    let s = "ℋ^{0,1}_{∂̄,μ} injects into H̃^{0,1}";
    match &ctx.hodge {
        None => r.push(Claim::not_applicable("harmonic-01-injects", s, "no metric supplied")),
        Some(h) => {
            let pieces = h.harmonic_operators(&ctx.ops, &[PartialBar, Mu]);
            let b01 = bd(0, 1);
            let mut witness = Witness::None;
            for w in ctx.ops.weights() {
                let harm = h.harmonic_space_of(&pieces, b01, w);
                let (num, den) = refined_spaces(&ctx.ops, b01, w);
                let bad = outside(&harm, &num).or_else(|| meet(&harm, &den).basis().first().cloned());
                if let Some(v) = bad {
                    witness = vectors_witness(ctx, &[v], b01, w);
                    break;
                }
            }
            r.push(Claim::check("harmonic-01-injects", s, witness == Witness::None, witness));
        }
    }
    let (h01t, h01) = (ctx.refined(0, 1), ctx.dolbeault(0, 1));
    r.push(numeric(
        ctx,
        "refined-01-below-dolbeault",
        "h̃^{0,1} ≤ h^{0,1}",
        h01t <= h01,
        &[("h~01", h01t), ("h01", h01)],
    ));

    let (b1, hat1, hat01) = (ctx.b(1), ctx.numbers.hat_h1, ctx.numbers.hat_h01);
    r.push(numeric(ctx, "de-rham-into-hat-h1", "b₁ ≤ ĥ¹", b1 <= hat1, &[("b1", b1), ("h^1", hat1)]));
    r.push(Claim::check(
        "hat-h1-splits",
        "ĥ¹ = ĥ^{0,1} + h̃^{0,1}",
        hat1 == hat01 + h01t,
        Witness::numbers(&[("h^1", hat1), ("h^01", hat01), ("h~01", h01t)]),
    ));

    // Finite-model analogue of the maximum principle.
    let b00 = bd(0, 0);
    let note = "finite-model analogue of the maximum principle: the kernel must consist of constants";
    for (id, s, ker) in [
        ("delbar-closed-functions-constant", "ker ∂̄ ∩ A⁰ = constants", 0),
        ("ddbar-closed-functions-constant", "ker ∂∂̄ ∩ A⁰ = constants", 1),
    ] {
        let mut dim = 0;
        let mut nonconstant = Vec::new();
        for w in ctx.ops.weights() {
            let dbar = blk(ctx, PartialBar, b00, bd(0, 1), w);
            let m = if ker == 0 { dbar } else { blk(ctx, Partial, bd(0, 1), bd(1, 1), w).mul(&dbar) };
            let k = kernel(&m);
            dim += k.dim();
            if !w.is_zero() && !k.is_zero() {
                nonconstant.push(ctx.render(&k.basis()[0], b00, w));
            }
        }
        let ok = dim == 1 && nonconstant.is_empty();
        let witness = if ok { Witness::None } else { Witness::Forms { forms: nonconstant } };
        r.push(Claim::check(id, s, ok, witness).with_note(note));
    }

    let rank = ctx.model.frame.nijenhuis_rank();
    for (id, s, p, q) in [
        ("maximal-nijenhuis-kills-refined-10", "maximal-rank Nijenhuis tensor ⇒ h̃^{1,0} = 0", 1, 0),
        ("maximal-nijenhuis-kills-refined-01", "maximal-rank Nijenhuis tensor everywhere ⇒ h̃^{0,1} = 0", 0, 1),
    ] {
        if n < 3 {
            r.push(Claim::not_applicable(id, s, "requires complex dimension at least 3"));
        } else if rank < n {
            r.push(Claim::not_applicable(
                id,
                s,
                &format!("μ̄ on A^{{1,0}} has rank {rank} < {n}"),
            ));
        } else {
            let h = ctx.refined(p, q);
            let key = format!("h~{p}{q}");
            r.push(Claim::check(id, s, h == 0, Witness::numbers(&[(&key, h), ("nijenhuis_rank", rank)])));
        }
    }
    r
}

/// Four-manifold relations: kernels on `A^{1,0}`, exact `(2,0)` classes,
/// conjugation between `(2,0)` and `(0,2)`, the chains of Hodge numbers and
/// the first Betti number bounds.
pub fn audit_four_manifold(ctx: &AuditContext) -> Result<AuditReport> {
    need_four(ctx)?;
    let mut r = AuditReport::default();
    let sp = ctx.space();
    let (b10, b01, b11, b20, b02) = (bd(1, 0), bd(0, 1), bd(1, 1), bd(2, 0), bd(0, 2));
    let a2 = sp.bidegrees_of_degree(2);

    let ker_dbar_10 = |w: &Weight| kernel(&blk(ctx, PartialBar, b10, b11, w));
    let ker_d_10 = |w: &Weight| kernel(&ctx.ops.d.multi_block(&[b10], &a2, w));
    let (ok, wit) = equal_per_weight(ctx, b10, ker_dbar_10, ker_d_10);
    r.push(Claim::check("ker-delbar-equals-ker-d-10", "ker ∂̄ ∩ A^{1,0} = ker d ∩ A^{1,0}", ok, wit));

    let s = "ℋ^{1,0}_{∂̄,μ} = ℋ^{1,0}_{∂̄} = ker ∂̄ ∩ A^{1,0}";
    match &ctx.hodge {
        None => r.push(Claim::not_applicable("harmonic-10-equals-ker-delbar", s, "no metric supplied")),
        Some(h) => {
            let both = h.harmonic_operators(&ctx.ops, &[PartialBar, Mu]);
            let single = h.harmonic_operators(&ctx.ops, &[PartialBar]);
            let (ok1, w1) = equal_per_weight(ctx, b10, |w| h.harmonic_space_of(&both, b10, w), ker_dbar_10);
            let (ok2, w2) = equal_per_weight(ctx, b10, |w| h.harmonic_space_of(&single, b10, w), ker_dbar_10);
            let wit = if ok1 { w2 } else { w1 };
            r.push(Claim::check("harmonic-10-equals-ker-delbar", s, ok1 && ok2, wit));
        }
    }

    // In real dimension 4, H^{2,0}_Dol = ker ∂̄ ∩ ker μ̄ ∩ A^{2,0} and
    // H^{0,2}_Dol ≅ ker ∂ ∩ ker μ ∩ A^{0,2}.
    let dol20 = |w: &Weight| meet(&kernel(&blk(ctx, PartialBar, b20, bd(2, 1), w)), &kernel(&blk(ctx, MuBar, b20, bd(1, 2), w)));
    let mut witness = Witness::None;
    for w in ctx.ops.weights() {
        let exact = image(&blk(ctx, Partial, b10, b20, w).hstack(&blk(ctx, Mu, b01, b20, w)));
        let both = meet(&dol20(w), &exact);
        if !both.is_zero() {
            witness = vectors_witness(ctx, both.basis(), b20, w);
            break;
        }
    }
    r.push(Claim::check(
        "exact-20-classes-vanish",
        "σ ∈ H^{2,0}_Dol with σ = ∂α + μβ implies σ = 0",
        witness == Witness::None,
        witness,
    ));

    let dol02 = |w: &Weight| meet(&kernel(&blk(ctx, Partial, b02, bd(1, 2), w)), &kernel(&blk(ctx, Mu, b02, bd(2, 1), w)));
    let mut witness = Witness::None;
    for w in ctx.ops.weights() {
        let src = dol20(w);
        let conj = Subspace::span(
            sp.block_dim(b02),
            &src.basis().iter().map(|v| conj_vector(sp, b20, v)).collect::<Vec<_>>(),
        );
        let tgt = dol02(&w.neg());
        if let Some(v) = outside(&conj, &tgt).or_else(|| outside(&tgt, &conj)) {
            witness = vectors_witness(ctx, &[v], b02, &w.neg());
            break;
        }
    }
    let (h20, h02) = (ctx.dolbeault(2, 0), ctx.dolbeault(0, 2));
    let ok = witness == Witness::None && h20 == h02;
    if ok {
        witness = Witness::numbers(&[("h20", h20), ("h02", h02)]);
    }
    r.push(Claim::check(
        "conjugation-20-to-02",
        "conjugation maps H^{2,0}_Dol isomorphically onto H^{0,2}_Dol",
        ok,
        witness,
    ));

    let (h10t, h01t, h10, h01) = (ctx.refined(1, 0), ctx.refined(0, 1), ctx.dolbeault(1, 0), ctx.dolbeault(0, 1));
    let hat01 = ctx.numbers.hat_h01;
    let mut vals = vec![("h10", h10), ("h~10", h10t), ("h~01", h01t), ("h^01", hat01), ("h01", h01)];
    let mut ok = h10 == h10t && h10t <= h01t && h01t <= hat01 && hat01 <= h01;
    if let (Some(l10), Some(l01)) = (ctx.harmonic(1, 0), ctx.harmonic(0, 1)) {
        ok &= l10 == h10 && l01 <= h01t;
        vals.extend([("l10", l10), ("l01", l01)]);
    }
    r.push(numeric(
        ctx,
        "chain-10-01",
        "ℓ^{1,0} = h^{1,0} = h̃^{1,0} ≤ h̃^{0,1} ≤ ĥ^{0,1} ≤ h^{0,1} and ℓ^{0,1} ≤ h̃^{0,1}",
        ok,
        &vals,
    ));

    let (h20t, h02t) = (ctx.refined(2, 0), ctx.refined(0, 2));
    let mut vals = vec![("h20", h20), ("h~20", h20t), ("h02", h02), ("h~02", h02t)];
    let mut ok = h20 == h20t && h20t == h02 && h02 <= h02t;
    if let (Some(l20), Some(l02)) = (ctx.harmonic(2, 0), ctx.harmonic(0, 2)) {
        ok &= l20 == h20 && l02 == h02;
        vals.extend([("l20", l20), ("l02", l02)]);
    }
    r.push(numeric(
        ctx,
        "chain-20-02",
        "ℓ^{2,0} = h^{2,0} = h̃^{2,0} = ℓ^{0,2} = h^{0,2} ≤ h̃^{0,2}",
        ok,
        &vals,
    ));

    let b1 = ctx.b(1);
    r.push(numeric(
        ctx,
        "betti-lower-bound",
        "2h̃^{1,0} = 2h^{1,0} ≤ b₁",
        h10t == h10 && 2 * h10t <= b1,
        &[("h~10", h10t), ("h10", h10), ("b1", b1)],
    ));
    r.push(numeric(
        ctx,
        "betti-upper-bound",
        "b₁ ≤ h̃^{1,0} + ĥ^{0,1} ≤ h̃^{1,0} + h^{0,1}",
        b1 <= h10t + hat01 && hat01 <= h01,
        &[("b1", b1), ("h~10", h10t), ("h^01", hat01), ("h01", h01)],
    ));

    let hat1 = ctx.numbers.hat_h1;
    let implication = |id: &str, s: &str, hyp: bool, concl: bool, vals: &[(&str, usize)]| {
        if hyp {
            numeric(ctx, id, s, concl, vals)
        } else {
            Claim::not_applicable(id, s, "hypothesis does not hold on this model")
        }
    };
    r.push(implication(
        "equal-10-hat01-implies-betti",
        "h̃^{1,0} = ĥ^{0,1} ⇒ b₁ = ĥ¹ = 2h̃^{1,0}",
        h10t == hat01,
        b1 == hat1 && hat1 == 2 * h10t,
        &[("h~10", h10t), ("h^01", hat01), ("b1", b1), ("h^1", hat1)],
    ));
    r.push(implication(
        "betti-equals-hat1-implies-refined-equal",
        "b₁ = ĥ¹ ⇒ h̃^{1,0} = h̃^{0,1}",
        b1 == hat1,
        h10t == h01t,
        &[("b1", b1), ("h^1", hat1), ("h~10", h10t), ("h~01", h01t)],
    ));
    let l10 = ctx.harmonic(1, 0);
    r.push(implication(
        "refined-10-equals-01-collapses",
        "h̃^{1,0} = h^{0,1} ⇒ h^{1,0} = ℓ^{1,0} = ĥ^{0,1} = h̃^{0,1}",
        h10t == h01,
        h10 == hat01 && hat01 == h01t && l10.is_none_or(|l| l == h10),
        &[("h~10", h10t), ("h01", h01), ("h10", h10), ("h^01", hat01), ("h~01", h01t)],
    ));
    r.push(Claim::not_applicable(
        "hat01-equals-second-page",
        "b₁ = h̃^{1,0} + ĥ^{0,1} ⇒ ĥ^{0,1} = dim E₂^{0,1}",
        "requires the second page of the Frölicher spectral sequence, which is not computed",
    ));
    Ok(r)
}

/// Basis, at weight `w`, of the d-exact 2-forms of pure type `(1,1)`, in
/// `(1,1)` block coordinates.
fn exact_pure_11(ctx: &AuditContext, w: &Weight) -> Vec<Vector> {
    let sp = ctx.space();
    let a1 = sp.bidegrees_of_degree(1);
    let a2 = sp.bidegrees_of_degree(2);
    let ex = image(&ctx.ops.d.multi_block(&a1, &a2, w));
    let off = sp.block_dim(bd(0, 2));
    let d11 = sp.block_dim(bd(1, 1));
    let pure = Subspace::full(d11).embed(sp.degree_block_dim(2), off);
    meet(&ex, &pure).project(off..off + d11).basis().to_vec()
}

/// The ∂∂̄-lemma equivalence: every d-exact pure `(1,1)` form is `∂∂̄f`
/// exactly when `h̃^{1,0} = h̃^{0,1}`; also the equivalent `(1,1)`
/// de Rham / Bott–Chern comparison.
pub fn audit_ddbar_lemma(ctx: &AuditContext) -> Result<AuditReport> {
    need_four(ctx)?;
    let mut r = AuditReport::default();
    let b11 = bd(1, 1);
    let mut tested = 0;
    let mut bad: Vec<Form> = Vec::new();
    for w in ctx.ops.weights() {
        let ddbar = blk(ctx, Partial, bd(0, 1), b11, w).mul(&blk(ctx, PartialBar, bd(0, 0), bd(0, 1), w));
        let im = image(&ddbar);
        for v in exact_pure_11(ctx, w) {
            tested += 1;
            if !im.contains(&v) {
                bad.push(ctx.space().block_form(&v, b11, w));
            }
        }
    }
    let (h10, h01) = (ctx.refined(1, 0), ctx.refined(0, 1));
    let left = bad.is_empty();
    let right = h10 == h01;
    let counts = [("tested", tested), ("counterexamples", bad.len()), ("h~10", h10), ("h~01", h01)];
    let s = "every d-exact pure (1,1)-form is ∂∂̄-exact";
    let claim = if right {
        let witness = if left { Witness::numbers(&counts) } else { forms_witness(bad.clone()) };
        Claim::check("ddbar-exact-11-forms", s, left, witness)
    } else {
        Claim::not_applicable("ddbar-exact-11-forms", s, &format!("h̃^{{1,0}} = {h10} ≠ {h01} = h̃^{{0,1}}"))
    };
    r.push(claim);
    r.push(numeric(
        ctx,
        "ddbar-lemma-equivalence",
        "(every d-exact pure (1,1)-form is ∂∂̄-exact) ⇔ h̃^{1,0} = h̃^{0,1}",
        left == right,
        &counts,
    ));
    let s11 = ctx.numbers.special_11;
    r.push(numeric(
        ctx,
        "bott-chern-de-rham-equivalence",
        "H^{1,1}_dR ≅ H^{1,1}_BC ⇔ h̃^{1,0} = h̃^{0,1}",
        (s11.de_rham == s11.bott_chern) == right,
        &[("h11_dR", s11.de_rham), ("h11_BC", s11.bott_chern), ("h~10", h10), ("h~01", h01)],
    ));
    Ok(r)
}

/// Injectivity of the map induced by the taming correction from
/// `H^{1,1}_{dd^c}` into `H²_dR`, checked by comparing ranks.
pub fn audit_descent(ctx: &AuditContext) -> Result<AuditReport> {
    need_four(ctx)?;
    let mut r = AuditReport::default();
    let id = "correction-descends-injectively";
    let s = "the correction ψ ↦ ψ − ∂̄u − ∂ū − μu − μ̄ū induces an injection H^{1,1}_{dd^c} → H²_dR";
    let (h10, h01) = (ctx.refined(1, 0), ctx.refined(0, 1));
    if h10 != h01 {
        r.push(Claim::not_applicable(id, s, &format!("h̃^{{1,0}} = {h10} ≠ {h01} = h̃^{{0,1}}")));
        return Ok(r);
    }
    let sp = ctx.space();
    let b11 = bd(1, 1);
    let half = Scalar::ratio(1, 2);
    let minus_half_i = -Scalar::ratio(1, 2).mul_i();
    let mut real_psis = Vec::new();
    for w in ctx.ops.weights() {
        let ddbar = blk(ctx, Partial, bd(1, 2), bd(2, 2), w).mul(&blk(ctx, PartialBar, b11, bd(1, 2), w));
        for v in kernel(&ddbar).basis() {
            let f = sp.block_form(v, b11, w);
            let fb = f.conjugate();
            real_psis.push(f.add(&fb).scale(&half));
            real_psis.push(f.sub(&fb).scale(&minus_half_i));
        }
    }
    let d2 = sp.degree_block_dim(2);
    let global = |f: &Form| -> Vector { ctx.ops.weights().iter().flat_map(|w| sp.degree_vector(f, 2, w)).collect() };
    let total = d2 * ctx.ops.weights().len();
    let mut exact = Subspace::zero(total);
    let a1 = sp.bidegrees_of_degree(1);
    let a2 = sp.bidegrees_of_degree(2);
    for (k, w) in ctx.ops.weights().iter().enumerate() {
        let im = image(&ctx.ops.d.multi_block(&a1, &a2, w)).embed(total, k * d2);
        exact = exact.sum(&im)?;
    }
    let mut images = Vec::new();
    for psi in real_psis.iter().filter(|p| !p.is_zero()) {
        match corrected_form(ctx, psi, false) {
            Ok((_, omega)) => images.push(global(&omega)),
            Err(Error::NoSolution { obstruction }) => {
                r.push(Claim::check(id, s, false, Witness::Forms { forms: obstruction }).with_note(ctx.subcomplex_note()));
                return Ok(r);
            }
            Err(e) => return Err(e),
        }
    }
    let with = exact.sum(&Subspace::span(total, &images))?;
    let induced = with.dim() - exact.dim();
    let ddc = ctx.numbers.special_11.ddc.expect("defined in dimension 4");
    r.push(numeric(ctx, id, s, induced == ddc, &[("h11_ddc", ddc), ("image_rank", induced)]));
    Ok(r)
}
