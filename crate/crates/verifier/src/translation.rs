use bimould::{arit, expand_c, rho_cbi, rho_dbi, urit, v_to_c, BiLetter, BiPoly, CTree};
use postlie::Triangle;
use serde_json::json;

use crate::report::{check_all, expect_eq, Failure, Suite, VerificationReport};

const GRADED_WEIGHT: u64 = 8;
const CORRECTED_WEIGHT: u64 = 7;

fn letters(max_weight: u64) -> Vec<BiLetter> {
    let mut out = Vec::new();
    for t in 1..=max_weight as u32 {
        for k in 1..=t {
            out.push(BiLetter::new(k, t - k));
        }
    }
    out
}

/// Right-nested bracket shapes of the given depth over the composite
/// letters, up to the weight bound.
fn shapes(depth: usize, max_weight: u64) -> Vec<CTree> {
    if depth == 1 {
        return letters(max_weight).into_iter().map(CTree::leaf).collect();
    }
    let mut out = Vec::new();
    for c in letters(max_weight.saturating_sub(depth as u64 - 1)) {
        for t in shapes(depth - 1, max_weight - c.weight()) {
            out.push(CTree::node(CTree::leaf(c), t));
        }
    }
    out
}

fn shape_pairs(depths: &[(usize, usize)], max_weight: u64) -> Vec<(BiPoly, BiPoly)> {
    let mut out = Vec::new();
    for &(df, dg) in depths {
        for f in shapes(df, max_weight.saturating_sub(dg as u64)) {
            let fp = f.to_bipoly();
            let fw = fp.weight();
            for g in shapes(dg, max_weight - fw) {
                out.push((fp.clone(), g.to_bipoly()));
            }
        }
    }
    out
}

fn action_via_engine(tri: &Triangle, f: &BiPoly, g: &BiPoly) -> Result<BiPoly, String> {
    v_to_c(&tri.tr(&expand_c(f), &expand_c(g)))
}

/// The monomial map intertwines the triangle actions with the mould
/// derivations: exactly for the variable-substitution derivation on the
/// multiplicity structure, and instance-wise for the corrected
/// derivation, whose matching is only conjectural beyond depth one.
pub fn verify_translation() -> Vec<VerificationReport> {
    let mut reports = Vec::new();

    let mut graded = Suite::new(
        "bimould-iso",
        json!({ "max_weight": GRADED_WEIGHT, "max_depth": 3 }),
        false,
    );
    let ari = Triangle::ari();
    let pairs = shape_pairs(&[(1, 1), (1, 2), (2, 1)], GRADED_WEIGHT);
    let (count, failures) = check_all(&pairs, |(f, g)| -> Option<Failure> {
        let direct = match action_via_engine(&ari, f, g) {
            Ok(p) => rho_cbi(&p),
            Err(e) => {
                return Some(Failure {
                    params: json!({ "check": "substitution derivation", "f": f.to_string(), "g": g.to_string() }),
                    expected: "action inside the composite span".into(),
                    actual: e,
                })
            }
        };
        expect_eq(
            json!({ "check": "substitution derivation", "f": f.to_string(), "g": g.to_string() }),
            &arit(&rho_cbi(f), &rho_cbi(g)),
            &direct,
        )
    });
    graded.record(count, failures);
    reports.push(graded.finish());

    let mut corrected = Suite::new(
        "bimould-iso",
        json!({ "max_weight": CORRECTED_WEIGHT, "max_depth": 4, "map": "corrected" }),
        true,
    );
    let uri = Triangle::uri();
    let pairs = shape_pairs(&[(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2)], CORRECTED_WEIGHT);
    let (count, failures) = check_all(&pairs, |(f, g)| -> Option<Failure> {
        let params = json!({ "check": "corrected derivation", "f": f.to_string(), "g": g.to_string() });
        let direct = match action_via_engine(&uri, f, g) {
            Ok(p) => rho_dbi(&p),
            Err(e) => {
                return Some(Failure {
                    params,
                    expected: "action inside the composite span".into(),
                    actual: e,
                })
            }
        };
        let derived = match urit(&rho_dbi(f), &rho_dbi(g)) {
            Ok(b) => b,
            Err(e) => {
                return Some(Failure {
                    params,
                    expected: "divisible correction kernel".into(),
                    actual: e,
                })
            }
        };
        expect_eq(params, &derived, &direct)
    });
    corrected.record(count, failures);
    reports.push(corrected.finish());

    reports
}
