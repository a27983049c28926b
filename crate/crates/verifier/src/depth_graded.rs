use freealg::{basis_words, weight_of_letter, Letter, Word};
use postlie::Triangle;
use serde_json::json;

use crate::report::{check_all, expect_eq, Failure, Suite, VerificationReport};

/// The depth-corrected action refines the multiplicity action: on a word
/// of depth `d` acting on one letter, the result lives in depths
/// `>= d + 1` and its depth-`(d + 1)` part is exactly the multiplicity
/// action.
pub fn verify_depth_graded(max_weight: u64) -> VerificationReport {
    let mut suite = Suite::new("depth-graded", json!({ "max_weight": max_weight }), false);
    let ari = Triangle::ari();
    let uri = Triangle::uri();

    let mut instances: Vec<(Word, Letter)> = Vec::new();
    for m in 0..=max_weight {
        for a in basis_words(m) {
            for y in 0..=(max_weight - m) as Letter {
                if m + weight_of_letter(y) <= max_weight {
                    instances.push((a.clone(), y));
                }
            }
        }
    }
    let (count, failures) = check_all(&instances, |(a, y)| -> Option<Failure> {
        let corrected = uri.tr_word_letter(a, *y);
        let graded = ari.tr_word_letter(a, *y);
        let top = a.depth() + 1;
        let f = expect_eq(
            json!({ "check": "graded part", "a": a.to_string(), "y": y }),
            &graded,
            &corrected.depth_component(top),
        );
        if f.is_some() {
            return f;
        }
        let min = corrected.min_depth().unwrap_or(top);
        expect_eq(
            json!({ "check": "no lower depth terms", "a": a.to_string(), "y": y }),
            &true,
            &(min >= top),
        )
    });
    suite.record(count, failures);
    suite.finish()
}
