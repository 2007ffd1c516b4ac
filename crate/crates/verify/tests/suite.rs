use big_complex::{build_f, Label};
use exact_arith::IntPoly;
use generic_data::GenericData;
use verify::*;

fn failures(reports: &[CheckReport]) -> Vec<String> {
    reports.iter().filter(|r| !r.passed()).map(|r| format!("{}: {:?} {:?}", r.id, r.witness, r.detail)).collect()
}

#[test]
fn identity_suite_rank_two() {
    let ctx = Context::new(2, 0).unwrap();
    let reports = check_identity_suite(&ctx, 1_000_003, 0);
    assert!(failures(&reports).is_empty(), "{:?}", failures(&reports));
}

#[test]
fn identity_suite_rank_three() {
    let ctx = Context::new(3, 1).unwrap();
    let reports = check_identity_suite(&ctx, 1_000_003, 0);
    assert!(failures(&reports).is_empty(), "{:?}", failures(&reports));
    assert!(reports.iter().any(|r| r.id == "chainmaps.kernel-psi"));
    assert!(reports.iter().all(|r| r.status != Status::Inconclusive));
}

#[test]
fn isomorphisms_rank_three() {
    let ctx = Context::new(3, 1).unwrap();
    let reports = iso_checks(&ctx, 5, 1_000_003, 0);
    assert_eq!(reports.len(), 4);
    assert!(failures(&reports).is_empty(), "{:?}", failures(&reports));
}

#[test]
fn certificate_ranks() {
    let ctx = Context::new(2, 0).unwrap();
    let cert = certify_exactness(ctx.m(), 2, 1_000_003, 0, 5);
    assert!(cert.valid);
    assert_eq!(cert.ranks.iter().map(|r| r.1).filter(|&k| k > 0).collect::<Vec<_>>(), vec![1, 3, 3, 1]);
    let ctx = Context::new(3, 1).unwrap();
    let cert = certify_exactness(ctx.m(), 3, 1_000_003, 0, 5);
    assert!(cert.valid);
    assert_eq!(cert.ranks.iter().map(|r| r.1).filter(|&k| k > 0).collect::<Vec<_>>(), vec![1, 14, 21, 21, 14, 1]);
    assert_eq!(cert.report("x").status, Status::Pass);
}

#[test]
fn mutated_m3_fails_certificate() {
    let ctx = Context::new(3, 1).unwrap();
    let m3 = ctx.m().diff(3);
    let (row, col, _) = m3.first_nonzero().unwrap();
    let mutated = Mutation { degree: 3, row, col, kind: MutationKind::Zero }.apply(ctx.m());
    let cert = certify_exactness(&mutated, 3, 1_000_003, 0, 5);
    assert!(!cert.valid);
    assert_eq!(cert.report("x").status, Status::Inconclusive);
}

#[test]
fn flipped_family_two_sign_is_caught() {
    let d = GenericData::build_generic(3, 1).unwrap();
    let f = build_f(&d);
    let r = 2;
    let m = f.diff(r);
    let (row, col, _) = m
        .entries()
        .find(|(i, _, _)| matches!(f.module_ref(r - 1).unwrap().label(*i), Label::F(b) if b.family == 2))
        .unwrap();
    let bad = Mutation { degree: r, row, col, kind: MutationKind::Negate }.apply(&f);
    let report = check_d_squared("d2.F", &bad);
    assert_eq!(report.status, Status::Fail);
    let w = report.witness.unwrap();
    assert!(w.degree == r || w.degree == r + 1);
    assert!(!w.value.is_empty());
    assert!(check_d_squared("d2.F", &f).passed());
}

#[test]
fn trivial_span_comparisons() {
    let g = exact_arith::GradingProfile::new(3, 1).unwrap();
    let a: Vec<IntPoly> = ["x11*x22 - x12*x21", "u1", "x13"].iter().map(|s| IntPoly::parse_int(s).unwrap()).collect();
    let mut b = a.clone();
    b.push(IntPoly::zero());
    assert!(compare_spans("s", &a, &b, &g).passed());
    assert!(compare_spans("s", &a, &a[..2], &g).status == Status::Fail);
    let sum = vec![a[0].add(&a[2].mul(&IntPoly::parse_int("x21").unwrap())), a[1].clone(), a[2].clone()];
    let c = vec![a[0].clone(), a[1].clone(), a[2].clone(), IntPoly::parse_int("x13*x21").unwrap()];
    assert!(compare_spans("s", &sum, &a, &g).status == Status::Fail);
    assert!(!compare_spans("s", &sum, &c, &g).passed());
}

#[test]
fn report_json_is_sorted_and_stable() {
    let reports = vec![CheckReport::pass("b"), CheckReport::fail_with("a", "bad")];
    let one = reports_to_json(&reports);
    assert_eq!(one, reports_to_json(&reports));
    let v: serde_json::Value = serde_json::from_str(&one.to_string()).unwrap();
    assert_eq!(v[0]["id"], "a");
    assert_eq!(v[0]["status"], "fail");
    assert!(v[0]["witness"].is_object());
    assert!(v[1].get("witness").is_none());
}

#[test]
fn identity_suite_rank_four() {
    let ctx = Context::new(4, 1).unwrap();
    let reports = check_identity_suite(&ctx, 1_000_003, 0);
    assert!(failures(&reports).is_empty(), "{:?}", failures(&reports));
    let cert = certify_exactness(ctx.m(), 4, 1_000_003, 0, 5);
    assert!(cert.valid);
}
