//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test -p jsharp --test acceptance -- --nocapture` to see the lines
//! of a passing run.

use std::time::Instant;

use jsharp::cache::SetCache;
use jsharp::classify::{is_element_of_kind, ring_class_report, Kind};
use jsharp::dsl::{build_ring, parse_catalog, parse_ring_expr};
use jsharp::harness::{load_subjects, run_suite, SuiteOptions, SuiteReport, Status, DEFAULT_CATALOG};
use jsharp::{compute_structural_sets, Error, FiniteRing};

struct Line {
    n: usize,
    ok: bool,
    text: String,
}

fn catalog_exprs() -> Vec<String> {
    parse_catalog(DEFAULT_CATALOG).unwrap().iter().map(|e| e.ast.to_string()).collect()
}

/// Results of `checks` restricted to `subjects`: (all passed, failures, runs, ms).
fn tally(report: &SuiteReport, checks: &[&str], subjects: &[String]) -> (bool, Vec<String>, usize, f64) {
    let mut bad = Vec::new();
    let mut runs = 0;
    let mut ms = 0.0;
    for r in &report.results {
        if checks.contains(&r.check_id.as_str()) && subjects.contains(&r.subject) {
            runs += 1;
            ms += r.elapsed_ms;
            if r.status == Status::Fail {
                bad.push(format!("{} on {}", r.check_id, r.subject));
            }
        }
    }
    (bad.is_empty(), bad, runs, ms)
}

fn status(report: &SuiteReport, check: &str, subject: &str) -> Option<Status> {
    report.results.iter().find(|r| r.check_id == check && r.subject == subject).map(|r| r.status)
}

#[test]
fn acceptance() {
    let exprs = catalog_exprs();
    let (subjects, build_failures) = load_subjects(DEFAULT_CATALOG, false).unwrap();
    let rings: Vec<FiniteRing> = subjects.iter().map(|s| s.ring().clone()).collect();
    let suite_start = Instant::now();
    let report = run_suite(DEFAULT_CATALOG, &SuiteOptions::new()).unwrap();
    let suite_secs = suite_start.elapsed().as_secs_f64();
    let mut lines = Vec::new();

    // 1
    let start = Instant::now();
    let disagree: Vec<&str> = rings
        .iter()
        .filter(|r| {
            let rep = ring_class_report(r);
            rep.strongly_jsharp_clean != rep.strongly_j_clean
        })
        .map(|r| r.label())
        .collect();
    let secs = start.elapsed().as_secs_f64();
    lines.push(Line {
        n: 1,
        ok: disagree.is_empty() && rings.len() == 24 && secs < 120.0,
        text: format!(
            "strongly J#-clean = strongly J-clean on {}/{} catalog rings ({secs:.2}s){}",
            rings.len() - disagree.len(),
            rings.len(),
            if disagree.is_empty() { String::new() } else { format!("; disagree: {disagree:?}") }
        ),
    });

    // 2
    let positives = ["Z2", "Z4", "Z8", "prod(Z2,Z4)", "T2(Z4)", "GR(Z2,C2)", "GR(Z4,C2)", "GR(Z2,C2xC2)"];
    let negatives = ["Z3", "Z6", "M2(Z2)", "GR(Z2,C3)", "GR(Z4,C3)", "GR(Z2,S3)"];
    let mut wrong = Vec::new();
    for e in positives {
        if !ring_class_report(&build_ring(e).unwrap()).strongly_jsharp_clean {
            wrong.push(e.to_string());
        }
    }
    for e in negatives {
        let rep = ring_class_report(&build_ring(e).unwrap());
        let replayed = rep.witnesses.get("strongly_jsharp_clean").and_then(|w| w.first()).is_some_and(|&a| {
            // replay on a freshly built ring
            let fresh = build_ring(e).unwrap();
            !is_element_of_kind(&fresh, a, Kind::StronglyJsharpClean)
        });
        if rep.strongly_jsharp_clean || !replayed {
            wrong.push(e.to_string());
        }
    }
    lines.push(Line {
        n: 2,
        ok: wrong.is_empty(),
        text: format!(
            "classification fixtures: {}/{} exact, negatives carry replayable witnesses{}",
            positives.len() + negatives.len() - wrong.len(),
            positives.len() + negatives.len(),
            if wrong.is_empty() { String::new() } else { format!("; wrong: {wrong:?}") }
        ),
    });

    // 3
    let sjc: Vec<String> = rings
        .iter()
        .zip(&exprs)
        .filter(|(r, _)| ring_class_report(r).strongly_jsharp_clean)
        .map(|(_, e)| e.clone())
        .collect();
    let consequences = ["CHK-two-in-J", "CHK-U-eq-1-plus-Jsharp", "CHK-boolean-quotient", "CHK-strongly-clean"];
    let (ok, bad, runs, _) = tally(&report, &consequences, &sjc);
    let all_ran = sjc.iter().all(|s| consequences.iter().all(|c| status(&report, c, s) == Some(Status::Pass)));
    lines.push(Line {
        n: 3,
        ok: ok && all_ran,
        text: format!("2 ∈ J, U = 1+J#, R/J Boolean, strongly clean on {} strongly J#-clean rings ({runs} runs){}", sjc.len(), fmt_bad(&bad)),
    });

    // 4
    let ks: Vec<String> = ["K(Z4,2)", "K(Z4,0)", "K(Z2,1)", "K(Z8,2)"].iter().map(|s| s.to_string()).collect();
    let (ok, bad, _, ms) = tally(&report, &["CHK-locstr"], &ks);
    let passed = ks.iter().all(|s| status(&report, "CHK-locstr", s) == Some(Status::Pass));
    lines.push(Line {
        n: 4,
        ok: ok && passed && ms < 300_000.0,
        text: format!("locstr three-case classification on {} K_s rings ({ms:.1} ms of check time){}", ks.len(), fmt_bad(&bad)),
    });

    // 5
    let (ok, bad, _, _) = tally(&report, &["CHK-Ks-radical"], &ks);
    let passed = ks.iter().all(|s| status(&report, "CHK-Ks-radical", s) == Some(Status::Pass));
    lines.push(Line {
        n: 5,
        ok: ok && passed,
        text: format!("J(K_s(R)) block formula and unit criterion on {} K_s rings{}", ks.len(), fmt_bad(&bad)),
    });

    // 6
    let small: Vec<String> = rings.iter().zip(&exprs).filter(|(r, _)| r.order() <= 64).map(|(_, e)| e.clone()).collect();
    let (ok, bad, runs, _) = tally(&report, &["CHK-reverse"], &small);
    lines.push(Line {
        n: 6,
        ok: ok && runs == small.len(),
        text: format!("reverse symmetry over all pairs on {runs} catalog rings of order ≤ 64{}", fmt_bad(&bad)),
    });

    // 7
    let (ok, bad, runs, _) = tally(&report, &["CHK-main-equiv", "CHK-deltanu", "CHK-UU-quotient"], &exprs);
    lines.push(Line {
        n: 7,
        ok,
        text: format!("strongly J/QN/ΔN-clean coincide; ΔNU and UU-quotient where applicable ({runs} runs){}", fmt_bad(&bad)),
    });

    // 8
    let (ok, bad, runs, _) = tally(&report, &["CHK-J-oracle", "CHK-chain"], &exprs);
    lines.push(Line {
        n: 8,
        ok: ok && runs == 2 * exprs.len(),
        text: format!("J(R) oracles agree and J ⊆ QN ⊆ ΔN on all {} catalog rings{}", exprs.len(), fmt_bad(&bad)),
    });

    // 9
    let all_valid = build_failures.is_empty() && rings.iter().all(|r| r.validate().is_ok());
    let z4 = build_ring("Z4").unwrap();
    let (add, mut mul) = z4.tables();
    mul[2][2] = 1;
    let mutant = FiniteRing::from_tables_unchecked(&add, &mul, 0, 1, "Z4*").unwrap();
    let caught = match mutant.validate() {
        Err(Error::AxiomViolation { kind, witness }) => {
            let verdict = format!("{kind:?} at {witness:?}");
            let rejected = jsharp::make_ring(&add, &mul, 0, 1, "Z4*").is_err();
            rejected.then_some(verdict)
        }
        _ => None,
    };
    lines.push(Line {
        n: 9,
        ok: all_valid && caught.is_some(),
        text: format!(
            "{} builders validate; Z4 with mul[2][2] = 1 rejected: {}",
            rings.len(),
            caught.unwrap_or_else(|| "NOT DETECTED".into())
        ),
    });

    // 10
    let round_trip = exprs.iter().all(|e| parse_ring_expr(e).unwrap().to_string() == *e);
    let dir = tempfile::tempdir().unwrap();
    let cache = SetCache::new(dir.path());
    let cache_identical = exprs.iter().all(|e| {
        let fresh = compute_structural_sets(&build_ring(e).unwrap()).unwrap();
        cache.load_or_compute(&build_ring(e).unwrap()).unwrap();
        let (cached, _) = cache.load_or_compute(&build_ring(e).unwrap()).unwrap();
        serde_json::to_vec(&fresh).unwrap() == serde_json::to_vec(&cached).unwrap()
    });
    let fails: Vec<String> = report.failures().map(|f| format!("{} on {}", f.check_id, f.subject)).collect();
    lines.push(Line {
        n: 10,
        ok: round_trip && cache_identical && report.all_pass(),
        text: format!(
            "DSL round trip: {round_trip}; cache byte-identical: {cache_identical}; verify: {} pass, {} fail, {} skipped ({suite_secs:.1}s){}",
            report.summary.totals.pass,
            report.summary.totals.fail,
            report.summary.totals.skipped,
            fmt_bad(&fails)
        ),
    });

    for l in &lines {
        println!("[{}] criterion {:>2}: {}", if l.ok { "PASS" } else { "FAIL" }, l.n, l.text);
    }
    let failed: Vec<usize> = lines.iter().filter(|l| !l.ok).map(|l| l.n).collect();
    assert!(failed.is_empty(), "acceptance criteria failing: {failed:?}");
}

fn fmt_bad(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("; failing: {}", bad.join(", "))
    }
}
