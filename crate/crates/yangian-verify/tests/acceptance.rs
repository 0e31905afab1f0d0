//! Acceptance suite: one test per criterion, each driving the catalog at its
//! pinned parameters and printing a pass/fail line. Everything is exact
//! symbolic equality at the stated truncation order; there are no tolerances.

use std::time::Instant;

use yangian_verify::{run_check, CheckParams, Report, Status};

fn params() -> CheckParams {
    CheckParams::default()
}

fn gate(criterion: &str, reports: &[Report]) {
    let failed: Vec<&Report> = reports
        .iter()
        .filter(|r| r.status != Status::Pass)
        .collect();
    let millis: u128 = reports.iter().map(|r| r.millis).sum();
    if failed.is_empty() {
        println!("[acceptance] {criterion}: PASS ({millis} ms)");
    } else {
        println!("[acceptance] {criterion}: FAIL ({millis} ms)");
        let r = failed[0];
        panic!(
            "{criterion}: check {} {:?} failed: {}",
            r.check,
            r.params,
            r.witness.as_deref().unwrap_or("no witness")
        );
    }
}

#[test]
fn criterion_01_rtt_fidelity() {
    // Y_{2|2}(0011) and Y_{2|2}(1010), all quadruples, levels r,s <= 3
    gate(
        "criterion 1: RTT fidelity",
        &[run_check("rtt-relations", &params())],
    );
}

#[test]
fn criterion_02_confluence() {
    // 500 random associativity triples per context, M+N <= 4, levels <= 3
    let p = CheckParams {
        samples: Some(500),
        ..params()
    };
    gate(
        "criterion 2: confluence",
        &[run_check("assoc-confluence", &p)],
    );
}

#[test]
fn criterion_03_gauss_and_quasideterminants() {
    // F.D.E = T and schur = D-block for every sequence and composition, M+N <= 4
    gate(
        "criterion 3: Gauss reconstruction and quasideterminant agreement",
        &[
            run_check("gauss-reconstruct", &params()),
            run_check("quasidet-agree", &params()),
        ],
    );
}

#[test]
fn criterion_04_even_yangian_factorizations() {
    // qdet through Drinfeld generators for N = 2, 3 at order 4; the parabolic
    // factorization for N = 3 over all 4 compositions at order 4; the shift
    // map lemma on quantum minors instantiated into rank 3
    let order4 = CheckParams {
        order: Some(4),
        ..params()
    };
    gate(
        "criterion 4: even Yangian factorizations",
        &[
            run_check("qdet-factorization", &order4),
            run_check("qdet-parabolic", &order4),
            run_check("lemma-psi-qdet", &params()),
        ],
    );
}

#[test]
fn criterion_05_y11_relations() {
    let p = CheckParams {
        order: Some(4),
        ..params()
    };
    gate(
        "criterion 5: rank-(1|1) relations at order 4",
        &[run_check("y11-relations", &p)],
    );
}

#[test]
fn criterion_06_berezinian_theorem() {
    // b^s(u) = qsdet T^s(u) for every 01-sequence with M+N <= 4, including
    // the standard-sequence display form
    gate(
        "criterion 6: Berezinian theorem",
        &[
            run_check("berezinian-equals-bseries", &params()),
            run_check("berezinian-standard", &params()),
        ],
    );
}

#[test]
fn criterion_07_centrality() {
    gate(
        "criterion 7: centrality of Berezinian coefficients",
        &[run_check("berezinian-central", &params())],
    );
}

#[test]
fn criterion_08_golden_examples() {
    gate(
        "criterion 8: golden 1010 fixtures, byte-identical",
        &[
            run_check("example-1010-qsdet", &params()),
            run_check("example-1010-blocks", &params()),
        ],
    );
}

#[test]
fn criterion_09_block_factorization() {
    // all length-4 sequences, the six pinned compositions, order 3
    let started = Instant::now();
    let mut reports = Vec::new();
    for mu in ["2,2", "1,3", "3,1", "1,1,2", "2,1,1", "1,2,1"] {
        for seq in yangian::SignSequence::enumerate(4) {
            let p = CheckParams {
                seq: Some(seq),
                mu: Some(mu.parse().unwrap()),
                ..params()
            };
            reports.push(run_check("berezinian-block-factorization", &p));
        }
    }
    println!(
        "[acceptance]   ({} pinned grid points in {} ms)",
        reports.len(),
        started.elapsed().as_millis()
    );
    gate("criterion 9: block-factorization theorem", &reports);
}

#[test]
fn criterion_10_prefix_superminors() {
    let p = CheckParams {
        seq: Some("0101".parse().unwrap()),
        ..params()
    };
    gate(
        "criterion 10: prefix-superminor ratios in Y_{2|2}(0101)",
        &[run_check("prefix-superminor-ratio", &p)],
    );
}

#[test]
fn criterion_11_morphism_suite() {
    // involutions, homomorphism fidelity, psi agreement, the odd-reflection
    // diagonal identity with the statement-form verdict, straightening
    // transport of qsdet, and b-series transport, all exact at order 3
    let reports = [
        run_check("morphism-involutions", &params()),
        run_check("morphism-homomorphism", &params()),
        run_check("psi-agreement", &params()),
        run_check("odd-reflection-general", &params()),
        run_check("y11-odd-reflection", &params()),
        run_check("sigma-s-transport", &params()),
        run_check("sigma-s-factorization", &params()),
        run_check("bseries-transport", &params()),
    ];
    if reports[3].status == Status::Pass {
        println!(
            "[acceptance]   odd-reflection verdict: sigma_i(d_i^-1 d_i+1) = \
             d_i(u-1) d_i+1(u-1)^-1 holds on the full grid; the swapped-inverse \
             orientation does not"
        );
    }
    gate("criterion 11: morphism suite", &reports);
}
