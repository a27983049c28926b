use combinat::{compositions_all, family_b1, family_bt, family_const1, threshold_identity_i, threshold_identity_ii, MuFamily};
use freealg::{q, qr, Scalar};
use num_traits::Zero;
use serde_json::json;

use crate::report::{check_all, Failure, Suite, VerificationReport};

const CONTROL_BOUND: i64 = 5;

/// All composition pairs (either side possibly empty) with total size at
/// most `bound`, with every threshold split keeping the remaining
/// threshold positive; splits with a nonpositive remainder vanish
/// termwise on both sides.
fn pair_instances(bound: i64) -> Vec<(i64, i64, Vec<i64>, Vec<i64>)> {
    let mut out = Vec::new();
    for total in 0..=bound {
        for s1 in 0..=total {
            for sigma in compositions_all(s1) {
                for theta in compositions_all(total - s1) {
                    for d1 in 0..total {
                        for d2 in 0..(total - d1) {
                            out.push((d1, d2, sigma.clone(), theta.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

fn triple_instances(bound: i64) -> Vec<(i64, i64, Vec<i64>, Vec<i64>, Vec<i64>)> {
    let mut out = Vec::new();
    for total in 0..=bound {
        for s1 in 0..=total {
            for s2 in 0..=(total - s1) {
                for sigma in compositions_all(s1) {
                    for tau in compositions_all(s2) {
                        for theta in compositions_all(total - s1 - s2) {
                            for d1 in 0..total {
                                for d2 in 0..(total - d1) {
                                    out.push((d1, d2, sigma.clone(), tau.clone(), theta.clone()));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn named_families() -> Vec<(String, MuFamily)> {
    vec![
        ("b1".into(), family_b1()),
        ("bt(2)".into(), family_bt(q(2))),
        ("bt(-1)".into(), family_bt(q(-1))),
        ("bt(1/3)".into(), family_bt(qr(1, 3))),
    ]
}

fn check_family(name: &str, family: &MuFamily, bound: i64, stop_early: bool) -> (usize, Vec<Failure>) {
    let pairs = pair_instances(bound);
    let (mut count, mut failures) = check_all(&pairs, |(d1, d2, sigma, theta)| {
        let (lhs, rhs) = threshold_identity_i(family, *d1, *d2, sigma, theta);
        if lhs == rhs {
            None
        } else {
            Some(Failure {
                params: json!({ "identity": "product", "family": name, "d1": d1, "d2": d2, "sigma": sigma, "theta": theta }),
                expected: rhs.to_string(),
                actual: lhs.to_string(),
            })
        }
    });
    if stop_early && !failures.is_empty() {
        return (count, failures);
    }
    let triples = triple_instances(bound);
    let (c2, f2) = check_all(&triples, |(d1, d2, sigma, tau, theta)| {
        let sum = threshold_identity_ii(family, *d1, *d2, sigma, tau, theta);
        if sum.is_zero() {
            None
        } else {
            Some(Failure {
                params: json!({ "identity": "vanishing", "family": name, "d1": d1, "d2": d2, "sigma": sigma, "tau": tau, "theta": theta }),
                expected: Scalar::zero().to_string(),
                actual: sum.to_string(),
            })
        }
    });
    count += c2;
    failures.extend(f2);
    (count, failures)
}

/// The two threshold-shuffle identities over every admissible split, for
/// each weight family, plus a negative control: the constant family must
/// violate them, confirming the checks can fail.
pub fn verify_threshold(bound: i64) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    for (name, family) in named_families() {
        let mut suite = Suite::new(
            "threshold",
            json!({ "family": name, "bound": bound }),
            true,
        );
        let (count, failures) = check_family(&name, &family, bound, false);
        suite.record(count, failures);
        reports.push(suite.finish());
    }

    let mut control = Suite::new(
        "threshold",
        json!({ "family": "const1", "bound": CONTROL_BOUND, "role": "negative control" }),
        false,
    );
    let family = family_const1();
    let (count, failures) = check_family("const1", &family, CONTROL_BOUND, true);
    // the control passes exactly when a violation was found
    control.instance(if failures.is_empty() {
        Some(Failure {
            params: json!({ "check": "control violation", "family": "const1" }),
            expected: "at least one violated identity".into(),
            actual: format!("all {count} instances satisfied"),
        })
    } else {
        None
    });
    reports.push(control.finish());
    reports
}
