use super::*;
use crate::acs::{AlmostComplexStructure, LieAlgebraSpec};
use crate::complex::form::Monomial;
use crate::complex::CoefficientModel;
use crate::error::Error;
use crate::linalg::ExactMatrix;
use crate::models::{kt4_algebra, kt4_fourier, kt4_j};
use crate::scalar::Scalar;

fn kt4(coefficients: CoefficientModel, metric: Option<HermitianMetric>) -> AuditContext {
    let m = AlmostComplexModel::new(kt4_algebra(), kt4_j(), coefficients).unwrap();
    AuditContext::new(&m, metric.as_ref()).unwrap()
}

fn standard(n: usize) -> Option<HermitianMetric> {
    Some(HermitianMetric::standard(n))
}

fn statuses(r: &AuditReport) -> Vec<(String, Status)> {
    r.claims.iter().map(|c| (c.id.clone(), c.status)).collect()
}

#[test]
fn kt4_invariant_audits_pass() {
    let ctx = kt4(CoefficientModel::Invariant, standard(2));
    let r = audit_all(&ctx).unwrap();
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    assert_eq!(r.count(Status::Pass) + r.count(Status::NotApplicable), r.claims.len());
    for k in 1..=16 {
        assert!(r.get(&format!("kahler-identity-{k:02}")).unwrap().passed());
    }
    assert!(r.get("ker-delbar-equals-ker-d-10").unwrap().passed());
}

#[test]
fn kernel_of_delbar_on_10_forms_is_theta1() {
    let ctx = kt4(CoefficientModel::Invariant, None);
    let sp = ctx.space();
    let th1 = Form::generator(1, false);
    let th2 = Form::generator(2, false);
    assert!(ctx.ops.delbar.apply(&th1, sp).is_zero());
    assert!(ctx.ops.d.apply(&th1, sp).is_zero());
    assert!(!ctx.ops.delbar.apply(&th2, sp).is_zero());
    assert_eq!(ctx.refined(1, 0), 1);
}

#[test]
fn flat_torus_passes_everything() {
    let m = AlmostComplexModel::new(
        LieAlgebraSpec::abelian(4),
        AlmostComplexStructure::standard(4),
        CoefficientModel::Invariant,
    )
    .unwrap();
    let ctx = AuditContext::new(&m, standard(2).as_ref()).unwrap();
    let r = audit_all(&ctx).unwrap();
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    assert_eq!(ctx.b(1), 4);
}

#[test]
fn non_closed_metric_skips_kahler_identities() {
    let g = HermitianMetric::new(ExactMatrix::from_i64(&[&[2, 1], &[1, 2]])).unwrap();
    let ctx = kt4(CoefficientModel::Invariant, Some(g));
    assert!(!ctx.is_almost_kahler());
    let r = audit_identities(&ctx);
    assert_eq!(r.get("kahler-identities").unwrap().status, Status::NotApplicable);
    assert!(r.get("kahler-identity-01").is_none());
    let r = audit_dualities(&ctx);
    assert!(r.claims.iter().all(|c| c.status == Status::NotApplicable));
}

#[test]
fn no_metric_skips_kahler_identities() {
    let ctx = kt4(CoefficientModel::Invariant, None);
    let r = audit_identities(&ctx);
    assert_eq!(r.get("kahler-identities").unwrap().status, Status::NotApplicable);
    assert!(r.get("mu-squared").unwrap().passed());
}

#[test]
fn fourier_model_audits_pass() {
    let ctx = kt4(kt4_fourier(1), standard(2));
    let r = audit_all(&ctx).unwrap();
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    let lemma = r.get("ddbar-exact-11-forms").unwrap();
    assert_eq!(lemma.status, Status::Pass, "{lemma:?}");
    let descent = r.get("correction-descends-injectively").unwrap();
    assert_eq!(descent.status, Status::Pass, "{descent:?}");
    assert!(statuses(&r).iter().any(|(id, s)| id == "conjugation-20-to-02" && *s == Status::Pass));
}

#[test]
fn four_manifold_audit_rejects_other_dimensions() {
    let m = AlmostComplexModel::new(
        LieAlgebraSpec::abelian(6),
        AlmostComplexStructure::standard(6),
        CoefficientModel::Invariant,
    )
    .unwrap();
    let ctx = AuditContext::new(&m, None).unwrap();
    assert!(matches!(audit_four_manifold(&ctx), Err(Error::Not4Manifold(6))));
    assert!(matches!(
        solve_taming(&ctx, &Form::zero()),
        Err(Error::Not4Manifold(6))
    ));
    let r = audit_ddbar_annihilation(&ctx);
    assert_eq!(r.count(Status::NotApplicable), 2);
}

#[test]
fn taming_with_fundamental_form_is_trivial() {
    let ctx = kt4(kt4_fourier(1), standard(2));
    let omega = HermitianMetric::standard(2).fundamental_form();
    let cert = solve_taming(&ctx, &omega).unwrap();
    assert!(cert.u.is_zero());
    assert_eq!(cert.omega_prime, omega.with_weight_rank(2));
    assert!(cert.closed && cert.real && cert.residual_zero && cert.well_defined);
    assert!(cert.hypothesis_holds);
    assert!(cert.nondegeneracy.positive_11_part);
}

#[test]
fn taming_with_perturbed_form_gives_closed_form() {
    let ctx = kt4(kt4_fourier(1), standard(2));
    let psi = perturbed_fundamental_form(&ctx).unwrap();
    let sp = ctx.space();
    assert!(!ctx.ops.d.apply(&psi, sp).is_zero());
    let cert = solve_taming(&ctx, &psi).unwrap();
    assert!(!cert.u.is_zero());
    assert!(cert.closed && cert.real && cert.residual_zero && cert.well_defined);
    assert_eq!(cert.omega_prime.component(Bidegree::new(1, 1)), cert.psi);
    assert_eq!(cert.omega_prime.component(Bidegree::new(2, 0)), cert.sigma);
    assert_eq!(cert.omega_prime.component(Bidegree::new(0, 2)), cert.sigma.conjugate());
    assert!(cert.nondegeneracy.samples.iter().all(|s| !s.top.is_zero()));
}

#[test]
fn taming_rejects_bad_input() {
    let ctx = kt4(kt4_fourier(1), standard(2));
    let half_i = Scalar::ratio(1, 2).mul_i();
    // Re(e_{(1,0)}) (i/2) θ²∧θ̄² is real of type (1,1) but not ∂∂̄-closed.
    let mut psi = Form::zero();
    for w in [vec![1, 0], vec![-1, 0]] {
        psi.add_term(Monomial::new(Weight(w), 0b10, 0b10), &(&half_i * &Scalar::ratio(1, 2)));
    }
    assert!(psi.is_real());
    assert!(matches!(solve_taming(&ctx, &psi), Err(Error::NotDdcClosed)));

    let not_real = Form::generator(1, false).wedge(&Form::generator(1, true));
    assert!(matches!(solve_taming(&ctx, &not_real), Err(Error::InvalidForm(_))));

    let wrong_type = Form::generator(1, false).wedge(&Form::generator(2, false));
    let wrong_type = wrong_type.add(&wrong_type.conjugate());
    assert!(matches!(solve_taming(&ctx, &wrong_type), Err(Error::InvalidForm(_))));

    let mut far = Form::zero();
    for w in [vec![5, 0], vec![-5, 0]] {
        far.add_term(Monomial::new(Weight(w), 0b01, 0b01), &half_i);
    }
    assert!(matches!(solve_taming(&ctx, &far), Err(Error::InvalidForm(_))));
}

#[test]
fn zero_form_is_degenerate() {
    let ctx = kt4(CoefficientModel::Invariant, standard(2));
    assert!(matches!(
        check_nondegenerate(&ctx, &Form::zero()),
        Err(Error::DegenerateAtSample(_))
    ));
    let omega = HermitianMetric::standard(2).fundamental_form();
    let nd = check_nondegenerate(&ctx, &omega).unwrap();
    assert_eq!(nd.samples.len(), 1);
    assert!(nd.positive_11_part);
}

#[test]
fn fourier_form_is_sampled_on_grid() {
    let ctx = kt4(kt4_fourier(1), None);
    // (i/2)(1 + cos t₁) θ¹∧θ̄¹ + (i/2) θ²∧θ̄² vanishes where cos t₁ = −1.
    let quarter_i = Scalar::ratio(1, 4).mul_i();
    let mut f = HermitianMetric::standard(2).fundamental_form().with_weight_rank(2);
    for w in [vec![1, 0], vec![-1, 0]] {
        f.add_term(Monomial::new(Weight(w), 0b01, 0b01), &quarter_i);
    }
    match check_nondegenerate(&ctx, &f) {
        Err(Error::DegenerateAtSample(p)) => assert_eq!(p, vec!["t1=1/2".to_string(), "t2=0".to_string()]),
        other => panic!("{other:?}"),
    }
}

