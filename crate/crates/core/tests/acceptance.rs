//! End-to-end acceptance checks. Each test prints one pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`) and asserts
//! both the exact values and the stated time budget.

use autfilt::autgrp::{
    conjecture_probe, gr_rank, psigma_gr2_basis_rank, verify_relations, GroupSpec, Method,
    SizeGuard, Suite,
};
use autfilt::cohom;
use autfilt::hall::{bc_to_tensor, bc_to_word, hall_basis, witt_rank};
use autfilt::liealg::{presented_lie_ranks, LiePresentation};
use autfilt::series::lie_class;
use num_bigint::BigInt;
use std::time::{Duration, Instant};

fn conclude(number: u32, label: &str, start: Instant, limit: Duration, failures: Vec<String>) {
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    let ok = failures.is_empty() && in_time;
    println!(
        "acceptance {number:02} ({label}): {} ({elapsed:.2?})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(
        in_time,
        "acceptance {number:02} exceeded its {limit:?} budget: {elapsed:?}"
    );
    assert!(failures.is_empty(), "acceptance {number:02}:\n{}", failures.join("\n"));
}

/// Duval's algorithm: number of Lyndon words of length exactly `k` over an
/// `n`-letter alphabet. Independent oracle for the Witt rank.
fn lyndon_count(n: usize, k: usize) -> u64 {
    let mut count = 0u64;
    let mut w: Vec<usize> = vec![0];
    loop {
        if w.len() == k {
            count += 1;
        }
        let m = w.len();
        while w.len() < k {
            w.push(w[w.len() - m]);
        }
        while let Some(&last) = w.last() {
            if last == n - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => return count,
        }
    }
}

#[test]
fn a01_hall_basis_reproduction() {
    let start = Instant::now();
    let mut failures = Vec::new();

    let w2: Vec<String> = hall_basis(3, 2).iter().map(|c| c.to_string()).collect();
    if w2 != ["(x2,x1)", "(x3,x1)", "(x3,x2)"] {
        failures.push(format!("weight 2 basis mismatch: {w2:?}"));
    }
    let w3: Vec<String> = hall_basis(3, 3).iter().map(|c| c.to_string()).collect();
    let expected = [
        "((x2,x1),x1)",
        "((x2,x1),x2)",
        "((x2,x1),x3)",
        "((x3,x1),x1)",
        "((x3,x1),x2)",
        "((x3,x1),x3)",
        "((x3,x2),x2)",
        "((x3,x2),x3)",
    ];
    if w3 != expected {
        failures.push(format!("weight 3 basis mismatch: {w3:?}"));
    }
    if w3.iter().any(|s| s == "((x3,x2),x1)") {
        failures.push("((x3,x2),x1) must not be basic".into());
    }
    conclude(1, "hall basis reproduction", start, Duration::from_secs(1), failures);
}

#[test]
fn a02_witt_cross_check() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=4usize {
        for k in 1..=6usize {
            let count = hall_basis(n, k).len() as u64;
            let witt = witt_rank(n, k);
            let lyndon = lyndon_count(n, k);
            if count != witt || witt != lyndon {
                failures.push(format!(
                    "n={n} k={k}: hall={count} witt={witt} lyndon={lyndon}"
                ));
            }
        }
    }
    conclude(2, "witt cross-check", start, Duration::from_secs(10), failures);
}

#[test]
fn a03_magnus_consistency() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=3usize {
        for k in 1..=5usize {
            for bc in hall_basis(n, k) {
                let via_word = lie_class(&bc_to_word(&bc), n, k).unwrap();
                if via_word != bc_to_tensor(&bc, n) {
                    failures.push(format!("n={n} k={k}: {bc}"));
                }
            }
        }
    }
    conclude(3, "magnus consistency", start, Duration::from_secs(30), failures);
}

#[test]
fn a04_relation_suites() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let guard = SizeGuard::suites();
    let runs: [(Suite, usize); 5] = [
        (Suite::Mccool, 5),
        (Suite::ConjFormulas, 4),
        (Suite::InPresentation, 5),
        (Suite::UpperPresentation, 5),
        (Suite::EmbeddingRemark, 5),
    ];
    for (suite, n_max) in runs {
        for n in 2..=n_max {
            let report = verify_relations(suite, n, &guard).unwrap();
            for f in &report.failures {
                failures.push(format!("{suite} n={n}: {f}"));
            }
        }
    }
    conclude(4, "relation suites", start, Duration::from_secs(30), failures);
}

#[test]
fn a05_abelianization_ranks() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let guard = SizeGuard::custom(5, 4);
    for (n, expected) in [(2usize, 2usize), (3, 5), (4, 9), (5, 14)] {
        let got = gr_rank(&GroupSpec::partial_inner(n), 1, Method::Johnson, &guard).unwrap();
        if got != expected {
            failures.push(format!("n={n}: got {got}, expected {expected}"));
        }
        if got != (n * n + n - 2) / 2 {
            failures.push(format!("n={n}: closed form mismatch"));
        }
    }
    conclude(5, "abelianization ranks", start, Duration::from_secs(10), failures);
}

#[test]
fn a06_partial_inner_graded_ranks() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let guard = SizeGuard::ranks();
    for n in 2..=4usize {
        for k in 1..=4usize {
            let expected: u64 = (2..=n).map(|m| witt_rank(m, k)).sum();
            let johnson = gr_rank(&GroupSpec::partial_inner(n), k, Method::Johnson, &guard).unwrap();
            let derivation =
                gr_rank(&GroupSpec::partial_inner(n), k, Method::Derivation, &guard).unwrap();
            if johnson as u64 != expected || derivation as u64 != expected {
                failures.push(format!(
                    "n={n} k={k}: johnson={johnson} derivation={derivation} expected={expected}"
                ));
            }
        }
    }
    // spot values
    for (n, k, expected) in [(3usize, 2usize, 4usize), (3, 3, 10), (4, 2, 10)] {
        let got = gr_rank(&GroupSpec::partial_inner(n), k, Method::Johnson, &guard).unwrap();
        if got != expected {
            failures.push(format!("spot n={n} k={k}: got {got}, expected {expected}"));
        }
    }
    conclude(6, "partial inner graded ranks", start, Duration::from_secs(300), failures);
}

#[test]
fn a07_presented_lie_ring() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 2..=4usize {
        let p = LiePresentation::partial_inner(n).unwrap();
        let reports = presented_lie_ranks(&p, 4).unwrap();
        for r in &reports {
            let expected: u64 = (2..=n).map(|m| witt_rank(m, r.k)).sum();
            if r.rank != expected {
                failures.push(format!("n={n} k={}: rank {} != {expected}", r.k, r.rank));
            }
            if !r.divisors.iter().all(|d| d == &BigInt::from(1)) {
                failures.push(format!("n={n} k={}: nontrivial divisors", r.k));
            }
        }
    }
    conclude(7, "presented lie ring", start, Duration::from_secs(300), failures);
}

#[test]
fn a08_mccool_ranks() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let guard = SizeGuard::custom(4, 5);
    for k in 1..=5usize {
        let got = gr_rank(&GroupSpec::mccool(2), k, Method::Johnson, &guard).unwrap();
        if got as u64 != witt_rank(2, k) {
            failures.push(format!("rank-2 family k={k}: got {got}"));
        }
    }
    for k in 1..=4usize {
        let got = gr_rank(&GroupSpec::mccool(3), k, Method::Johnson, &guard).unwrap();
        if got as u64 != 2 * witt_rank(3, k) {
            failures.push(format!("rank-3 family k={k}: got {got}"));
        }
    }
    let got = gr_rank(&GroupSpec::mccool(4), 2, Method::Johnson, &guard).unwrap();
    if got != 18 {
        failures.push(format!("rank-4 family k=2: got {got}, expected 18"));
    }
    let basis = psigma_gr2_basis_rank(4).unwrap();
    if basis != 18 {
        failures.push(format!("weight-2 basis rank: got {basis}, expected 18"));
    }
    conclude(8, "mccool graded ranks", start, Duration::from_secs(300), failures);
}

#[test]
fn a09_cohomology() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 2..=5usize {
        for spec in [GroupSpec::partial_inner(n), GroupSpec::upper_mccool(n)] {
            let report = cohom::poincare_check(&spec).unwrap();
            if !report.betti_matches_product {
                failures.push(format!(
                    "{spec:?}: betti {:?} != product {:?}",
                    report.betti, report.product
                ));
            }
            if !report.b1_matches {
                failures.push(format!("{spec:?}: b1 mismatch"));
            }
            for (label, in_span) in &report.two_term_in_span {
                if !in_span {
                    failures.push(format!("{spec:?}: listed relation not in span: {label}"));
                }
            }
        }
    }
    conclude(9, "cohomology", start, Duration::from_secs(30), failures);
}

#[test]
fn a10_conjecture_probe() {
    let start = Instant::now();
    let mut failures = Vec::new();
    // must complete within the default rank guard; reports only
    let report = conjecture_probe(4, 3, &SizeGuard::ranks()).unwrap();
    println!(
        "    probe n=4 k=3: computed rank {} vs conjectured {}",
        report.computed_rank, report.conjectured
    );
    if report.conjectured != 60 {
        failures.push(format!("conjectured value {} != 60", report.conjectured));
    }
    if report.computed_rank == 0 {
        failures.push("probe produced no rank".into());
    }
    conclude(10, "conjecture probe", start, Duration::from_secs(300), failures);
}
