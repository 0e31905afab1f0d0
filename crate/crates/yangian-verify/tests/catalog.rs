//! Meta-tests over the catalog itself: coverage of every claim area,
//! deterministic reports, and valid failure witnesses.

use yangian_verify::{catalog, find_check, run_check, run_suite, CheckParams, Status};

/// Every claim area of the theory must appear in at least one catalog entry.
/// The topics are matched against the checks' claim strings.
#[test]
fn catalog_covers_every_claim_area() {
    let topics = [
        "defining relation",
        "generating-series form",
        "T(u)^{-1}",
        "rho",
        "omega",
        "zeta",
        "phi",
        "shift map",
        "relabel",
        "Gauss decomposition",
        "quasideterminant",
        "Drinfeld generators",
        "quantum determinant",
        "quantum minors",
        "parabolic",
        "rank-(1|1)",
        "odd reflection",
        "Berezinian",
        "evaluation points u_i",
        "central",
        "prefix superminor",
        "block Berezinian",
        "worked example over 1010",
        "straightening",
        "b-series",
        "compensating signs",
    ];
    for topic in topics {
        assert!(
            catalog()
                .iter()
                .any(|c| c.claim.to_lowercase().contains(&topic.to_lowercase())),
            "no catalog entry covers: {topic}"
        );
    }
}

#[test]
fn catalog_contains_the_required_names() {
    for name in [
        "rtt-relations",
        "assoc-confluence",
        "gauss-reconstruct",
        "quasidet-agree",
        "qdet-factorization",
        "qdet-parabolic",
        "lemma-psi-qdet",
        "y11-relations",
        "y11-odd-reflection",
        "odd-reflection-general",
        "berezinian-standard",
        "berezinian-parabolic-standard",
        "berezinian-equals-bseries",
        "berezinian-central",
        "berezinian-block-factorization",
        "prefix-superminor-ratio",
        "example-1010-qsdet",
        "example-1010-blocks",
        "morphism-involutions",
        "bseries-transport",
    ] {
        assert!(find_check(name).is_some(), "missing catalog entry: {name}");
    }
}

/// Identical invocations give byte-identical reports once the wall time is
/// masked out.
#[test]
fn reports_are_deterministic() {
    let params = CheckParams {
        seed: 42,
        ..CheckParams::default()
    };
    let normalize = |reports: &[yangian_verify::Report]| -> Vec<String> {
        reports
            .iter()
            .map(|r| {
                let mut v: serde_json::Value = serde_json::from_str(&r.json_line()).unwrap();
                v["millis"] = 0.into();
                v.to_string()
            })
            .collect()
    };
    let first = run_suite("y11-*", &params);
    let second = run_suite("y11-*", &params);
    assert_eq!(normalize(&first), normalize(&second));
    assert!(first.iter().all(|r| r.status == Status::Pass));
}

/// A failing check must carry a witness that localizes the disagreement.
#[test]
fn failure_reports_carry_witnesses() {
    // impossible parameters turn into status = error with a message
    let params = CheckParams {
        seq: Some("11".parse().unwrap()),
        ..CheckParams::default()
    };
    let report = run_check("qdet-factorization", &params);
    assert_eq!(report.status, Status::Error);
    assert!(report.witness.is_some());

    // a sequence with no (1,0) adjacency makes the odd-reflection grid empty
    let params = CheckParams {
        seq: Some("0011".parse().unwrap()),
        ..CheckParams::default()
    };
    let report = run_check("odd-reflection-general", &params);
    assert_eq!(report.status, Status::Error);
    assert!(report.witness.unwrap().contains("no (1,0) adjacency"));

    // a composition that does not partition the sequence is rejected, not
    // passed vacuously
    let params = CheckParams {
        seq: Some("1010".parse().unwrap()),
        mu: Some("2,1".parse().unwrap()),
        ..CheckParams::default()
    };
    let report = run_check("berezinian-block-factorization", &params);
    assert_eq!(report.status, Status::Error);
}

#[test]
fn run_check_honors_parameter_overrides() {
    let params = CheckParams {
        seq: Some("01".parse().unwrap()),
        order: Some(3),
        ..CheckParams::default()
    };
    let report = run_check("berezinian-equals-bseries", &params);
    assert_eq!(report.status, Status::Pass);

    let params = CheckParams {
        m: Some(2),
        n: Some(1),
        seq: Some("010".parse().unwrap()),
        mu: Some("2,1".parse().unwrap()),
        order: Some(3),
        ..CheckParams::default()
    };
    let report = run_check("gauss-reconstruct", &params);
    assert_eq!(report.status, Status::Pass);
}

#[test]
fn berezinian_suite_passes() {
    let reports = run_suite("berezinian-*", &CheckParams::default());
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r.status == Status::Pass));
}

#[test]
fn json_lines_have_the_report_schema() {
    let report = run_check("y11-relations", &CheckParams::default());
    let v: serde_json::Value = serde_json::from_str(&report.json_line()).unwrap();
    assert_eq!(v["check"], "y11-relations");
    assert_eq!(v["status"], "pass");
    assert!(v.get("params").is_some());
    assert!(v.get("millis").is_some());
    assert!(v.get("witness").is_none());
}

/// Rewrites the golden fixtures from the current engine output. Run
/// explicitly after an intentional format change:
///   cargo test -p yangian-verify --test catalog regenerate_golden_fixtures -- --ignored
#[test]
#[ignore]
fn regenerate_golden_fixtures() {
    let (qsdet_text, blocks_text) = yangian_verify::render_fixtures().expect("render");
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    std::fs::write(dir.join("example_1010_qsdet.txt"), qsdet_text).unwrap();
    std::fs::write(dir.join("example_1010_blocks.txt"), blocks_text).unwrap();
}
