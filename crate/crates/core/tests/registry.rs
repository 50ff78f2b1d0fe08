use qverify::arith::Rat;
use qverify::cfractions::{cf_root, cf_series, CfName};
use qverify::verify::{lookup, Mode};
use qverify::{
    parse, registry, suite_passed, to_json, verify, verify_all, Expected, Profile, QSeries, Status, SuiteOptions,
    VerifyOptions,
};

fn no_timing() -> VerifyOptions {
    VerifyOptions {
        timing: false,
        ..VerifyOptions::default()
    }
}

#[test]
fn census_matches_manifest() {
    let manifest: Vec<&str> = include_str!("registry_manifest.txt").lines().collect();
    let ids: Vec<String> = registry().into_iter().map(|s| s.id).collect();
    assert_eq!(ids, manifest);
    assert!(ids.len() >= 30);
}

#[test]
fn every_group_is_represented() {
    let ids: Vec<String> = registry().into_iter().map(|s| s.id).collect();
    for prefix in ["jtp-", "eq-", "lemma2-f1", "lemma2-f4", "thm3-", "cf-display-", "num-A", "num-Es"] {
        assert!(ids.iter().any(|i| i.starts_with(prefix)), "{prefix}");
    }
    assert_eq!(ids.iter().filter(|i| i.starts_with("lemma2-")).count(), 28);
}

#[test]
fn theorem_entries_and_variants() {
    let specs = registry();
    let printed: Vec<_> = specs
        .iter()
        .filter(|s| s.id.starts_with("thm3-") && !s.id.contains("-var-"))
        .collect();
    assert_eq!(printed.len(), 10);
    assert!(printed.iter().all(|s| s.expected == Expected::Pass && s.default_order == Rat::from(10)));
    for v in ["thm3-O1-O9-var-unsquared", "thm3-7O7+3O3-var-plus", "thm3-O99-O11-var-s1"] {
        assert_eq!(lookup(v).unwrap().expected, Expected::Document, "{v}");
    }
}

#[test]
fn prodk_passes_over_the_field() {
    let r = verify("eq-prodK", &no_timing()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.mode, Mode::Exact);
}

#[test]
fn json_is_deterministic() {
    let opts = SuiteOptions {
        profile: Profile::Quick,
        jobs: Some(4),
        base: no_timing(),
        ..SuiteOptions::default()
    };
    let a = to_json(&verify_all(&opts).unwrap());
    let b = to_json(&verify_all(&SuiteOptions { jobs: Some(1), ..opts }).unwrap());
    assert_eq!(a, b);
}

#[test]
fn exit_contract_ignores_documented_failures() {
    let opts = no_timing();
    let variant = verify("thm3-O99-O11-var-s1", &opts).unwrap();
    assert_eq!(variant.status, Status::Fail);
    assert!(suite_passed(&[variant]));
    let pass = verify("eq-pentagonal", &opts).unwrap();
    assert!(suite_passed(&[pass.clone()]));
    let zero = verify("thm3-zero", &VerifyOptions { order: Some(Rat::from(2)), ..opts }).unwrap();
    assert!(!suite_passed(&[pass, zero]));
}

#[test]
fn failing_theorem_reports_mismatch() {
    let r = verify("thm3-zero", &VerifyOptions { order: Some(Rat::from(8)), ..no_timing() }).unwrap();
    assert_eq!(r.status, Status::Fail);
    let m = r.first_mismatch.expect("exact failures carry a mismatch");
    assert_eq!(m.exponent, Rat::zero());
}

#[test]
fn expand_examples() {
    let order = Rat::from(12);
    let t1: QSeries<Rat> = parse("f(-3,-17) / f(-7,-13) * q^1").unwrap().eval(&order).unwrap();
    assert_eq!(t1, cf_series(CfName::T1, &Rat::one(), &order).unwrap());

    let r8: QSeries<Rat> = parse("root(R(1), 8)").unwrap().eval(&order).unwrap();
    assert_eq!(r8, cf_root(CfName::R, 8, &Rat::one(), &order).unwrap());
    assert_eq!(r8.valuation(), Rat::frac(1, 40));

    let k: QSeries<Rat> = parse("eta(20)^1 / eta(2)^1").unwrap().eval(&order).unwrap();
    assert_eq!(k.valuation(), Rat::frac(3, 4));
}

#[test]
fn numeric_entries_list_samples() {
    let r = verify("num-Es1", &no_timing()).unwrap();
    assert_eq!(r.status, Status::Pass);
    let text = serde_json::to_string(&r).unwrap();
    assert!(text.contains(r#""samples":["q=0.1 z=0.7","q=0.05 z=1.1","q=0.2 z=0.3"]"#), "{text}");
}
