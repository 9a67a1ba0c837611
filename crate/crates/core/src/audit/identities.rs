use super::{AuditContext, AuditReport, Claim, Witness};
use crate::complex::form::{Bidegree, Weight};
use crate::complex::{Differential, GradedOperator};
use crate::linalg::ExactMatrix;

const SUITE_IDS: [&str; 11] = [
    "mu-squared",
    "mu-del-anticommute",
    "mu-delbar-plus-del-squared",
    "middle-relation",
    "mubar-del-plus-delbar-squared",
    "mubar-delbar-anticommute",
    "mubar-squared",
    "d-reconstruction",
    "d-squared",
    "conjugation-mu",
    "conjugation-del",
];

fn blocks_witness(op: &GradedOperator) -> Witness {
    Witness::Blocks {
        blocks: op
            .blocks
            .keys()
            .take(5)
            .map(|k| format!("{}→{} at weight {}", k.src, k.tgt, k.weight))
            .collect(),
    }
}

/// Relations from `d² = 0`, the reconstruction `d = μ + ∂ + ∂̄ + μ̄`,
/// conjugation symmetry, and, on almost-Kähler models, the commutator
/// identities of `L` and `Λ`.
pub fn audit_identities(ctx: &AuditContext) -> AuditReport {
    let mut r = AuditReport::default();
    for (id, check) in SUITE_IDS.iter().zip(ctx.ops.identity_suite()) {
        let witness = if check.passed {
            Witness::None
        } else {
            Witness::Blocks {
                blocks: check.detail.split("; ").map(String::from).collect(),
            }
        };
        r.push(Claim::check(id, &check.name, check.passed, witness));
    }
    match &ctx.hodge {
        None => r.push(Claim::not_applicable(
            "kahler-identities",
            "commutator identities of L and Λ",
            "no metric supplied",
        )),
        Some(_) if !ctx.is_almost_kahler() => r.push(Claim::not_applicable(
            "kahler-identities",
            "commutator identities of L and Λ",
            "dω ≠ 0, the metric is not almost Kähler",
        )),
        Some(h) => {
            for (k, (name, defect)) in h.kahler_identity_defects(&ctx.ops).into_iter().enumerate() {
                let ok = defect.is_zero();
                let witness = if ok { Witness::None } else { blocks_witness(&defect) };
                r.push(Claim::check(&format!("kahler-identity-{:02}", k + 1), &name, ok, witness));
            }
        }
    }
    r
}

fn blk(ctx: &AuditContext, op: Differential, s: (usize, usize), t: (usize, usize), w: &Weight) -> ExactMatrix {
    ctx.ops.get(op).block(Bidegree::new(s.0, s.1), Bidegree::new(t.0, t.1), w)
}

/// `∂∂̄(∂u + ∂̄v) = 0` on `A^{0,1} ⊕ A^{1,0}` and `∂∂̄∂∂̄f = 0` on functions,
/// block by block (four-manifolds only).
pub fn audit_ddbar_annihilation(ctx: &AuditContext) -> AuditReport {
    use Differential::{Partial, PartialBar};
    let mut r = AuditReport::default();
    let s1 = "∂∂̄(∂u + ∂̄v) = 0 for u ∈ A^{0,1}, v ∈ A^{1,0}";
    let s2 = "∂∂̄∂∂̄f = 0 for functions f";
    if ctx.n() != 2 {
        let why = "stated for real dimension 4";
        r.push(Claim::not_applicable("ddbar-kills-del-plus-delbar", s1, why));
        r.push(Claim::not_applicable("ddbar-squared-on-functions", s2, why));
        return r;
    }
    let mut bad1 = Vec::new();
    let mut bad2 = Vec::new();
    for w in ctx.ops.weights() {
        let ddbar = blk(ctx, Partial, (1, 2), (2, 2), w).mul(&blk(ctx, PartialBar, (1, 1), (1, 2), w));
        let on_u = ddbar.mul(&blk(ctx, Partial, (0, 1), (1, 1), w));
        let on_v = ddbar.mul(&blk(ctx, PartialBar, (1, 0), (1, 1), w));
        if !on_u.is_zero() || !on_v.is_zero() {
            bad1.push(format!("weight {w}"));
        }
        let on_f = ddbar
            .mul(&blk(ctx, Partial, (0, 1), (1, 1), w))
            .mul(&blk(ctx, PartialBar, (0, 0), (0, 1), w));
        if !on_f.is_zero() {
            bad2.push(format!("weight {w}"));
        }
    }
    let wit = |b: Vec<String>| {
        if b.is_empty() {
            Witness::None
        } else {
            Witness::Blocks { blocks: b }
        }
    };
    r.push(Claim::check("ddbar-kills-del-plus-delbar", s1, bad1.is_empty(), wit(bad1)));
    r.push(Claim::check("ddbar-squared-on-functions", s2, bad2.is_empty(), wit(bad2)));
    r
}
