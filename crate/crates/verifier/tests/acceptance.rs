use std::time::{Duration, Instant};

use verifier::{
    verify_axioms, verify_combinatorial, verify_depth_graded, verify_duality, verify_embeddings,
    verify_filtration, verify_golden, verify_hopf, verify_oracles, verify_threshold,
    verify_translation, VerificationReport,
};

const SEED: u64 = 42;

fn line(n: usize, desc: &str, pass: bool, detail: &str) -> bool {
    let verdict = if pass { "pass" } else { "fail" };
    if detail.is_empty() {
        println!("criterion {n} ({desc}): {verdict}");
    } else {
        println!("criterion {n} ({desc}): {verdict} [{detail}]");
    }
    pass
}

fn clean(r: &VerificationReport) -> bool {
    r.failures.is_empty()
}

fn describe(r: &VerificationReport) -> String {
    format!(
        "{} {} -> {} ({} checks, {} failures)",
        r.suite, r.params, r.status, r.count, r.failures.len()
    )
}

#[test]
fn acceptance() {
    let mut all_ok = true;

    let t = Instant::now();
    let golden = verify_golden();
    let within = t.elapsed() < Duration::from_secs(10);
    all_ok &= line(
        1,
        "golden examples, under 10 s",
        clean(&golden) && within,
        &format!("{} checks in {:?}", golden.count, t.elapsed()),
    );
    for f in &golden.failures {
        println!("    {} expected {} got {}", f.params, f.expected, f.actual);
    }

    let t = Instant::now();
    let mut reports = Vec::new();
    for (s, w) in [("ihara", 7), ("ari", 7), ("uri", 6)] {
        reports.push(verify_hopf(s, w));
        reports.push(verify_duality(s, w));
    }
    let within = t.elapsed() < Duration::from_secs(300);
    let pass = reports.iter().all(clean);
    all_ok &= line(
        2,
        "hopf and duality suites, under 5 min",
        pass && within,
        &format!("{:?}", t.elapsed()),
    );
    for r in &reports {
        println!("    {}", describe(r));
    }

    let ihara = verify_axioms("ihara", 7);
    let ari = verify_axioms("ari", 7);
    let uri = verify_axioms("uri", 7);
    all_ok &= line(
        3,
        "post-Lie axioms, weight 7, corrected structure non-blocking",
        clean(&ihara) && clean(&ari),
        &format!("uri status: {}", uri.status),
    );
    for r in [&ihara, &ari, &uri] {
        println!("    {}", describe(r));
    }

    let oracles = verify_oracles(SEED);
    all_ok &= line(4, "closed forms match independent oracles", clean(&oracles), "");
    println!("    {}", describe(&oracles));

    let graded = verify_depth_graded(7);
    all_ok &= line(5, "depth-graded correspondence, weight 7", clean(&graded), "");
    println!("    {}", describe(&graded));

    let t = Instant::now();
    let combi = verify_combinatorial();
    let within = t.elapsed() < Duration::from_secs(120);
    all_ok &= line(
        6,
        "combinatorial identities, under 2 min",
        clean(&combi) && within,
        &format!("{} checks in {:?}", combi.count, t.elapsed()),
    );
    for f in &combi.failures {
        println!("    {} expected {} got {}", f.params, f.expected, f.actual);
    }

    let t = Instant::now();
    let threshold = verify_threshold(8);
    let within = t.elapsed() < Duration::from_secs(600);
    let (control, families): (Vec<_>, Vec<_>) = threshold
        .iter()
        .partition(|r| r.params["role"] == "negative control");
    let pass = families.iter().all(|r| clean(r)) && control.iter().all(|r| r.passed());
    all_ok &= line(
        7,
        "threshold shuffle families plus negative control, under 10 min",
        pass && within,
        &format!("{:?}", t.elapsed()),
    );
    for r in &threshold {
        println!("    {}", describe(r));
    }

    let translation = verify_translation();
    let embeddings = verify_embeddings(7);
    let blocking_ok = translation
        .iter()
        .filter(|r| !r.is_conjecture())
        .all(clean)
        && clean(&embeddings);
    all_ok &= line(
        8,
        "polynomial translation identity, exact subalgebra relations",
        blocking_ok,
        "corrected map reported instance-wise",
    );
    for r in translation.iter().chain(std::iter::once(&embeddings)) {
        println!("    {}", describe(r));
    }

    let filtration = verify_filtration(SEED);
    let blocking_ok = filtration.iter().filter(|r| !r.is_conjecture()).all(clean);
    all_ok &= line(
        9,
        "index filtration on random instances, level scan non-blocking",
        blocking_ok,
        "",
    );
    for r in &filtration {
        println!("    {}", describe(r));
    }

    assert!(all_ok, "at least one blocking acceptance criterion failed");
}
