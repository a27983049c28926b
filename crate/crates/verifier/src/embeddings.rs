use std::collections::BTreeSet;

use combinat::binomial;
use freealg::{Poly, Scalar, Word};
use glhopf::glp_word;
use postlie::Triangle;
use serde_json::json;

use crate::report::{check_all, expect_eq, Failure, Suite, VerificationReport};
use crate::sample::{binary_words, lie_span_binary};

const CORRECTED_WEIGHT: u64 = 6;

fn binary_word_pairs(total: u64) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for t in 0..=total {
        for m in 0..=t {
            for a in binary_words(m) {
                for b in binary_words(t - m) {
                    out.push((a.clone(), b));
                }
            }
        }
    }
    out
}

/// Closed formula for the multiplicity bracket of two single letters.
fn two_letter_bracket(k1: u32, k2: u32) -> Poly {
    let v = |k: u32| Poly::letter(k);
    let mut out = v(k1).bracket(&v(k2));
    for l1 in 1..=k1 {
        let sign = if (k1 + l1) % 2 == 0 { 1 } else { -1 };
        let c = Scalar::from(binomial(k1 as i64 - 1, l1 as i64 - 1)) * Scalar::from(num_bigint::BigInt::from(sign));
        out = out.add(&v(k2 + k1 - l1).bracket(&v(l1)).scale(&c));
    }
    for l2 in 1..=k2 {
        let sign = if (k2 + l2) % 2 == 0 { -1 } else { 1 };
        let c = Scalar::from(binomial(k2 as i64 - 1, l2 as i64 - 1)) * Scalar::from(num_bigint::BigInt::from(sign));
        out = out.add(&v(k1 + k2 - l2).bracket(&v(l2)).scale(&c));
    }
    out
}

/// On the two-letter subalgebra all three structures induce the same
/// product; plus exact identities of the multiplicity structure: letters
/// orthogonal to `v1`, the weight-12 relation between the two depth-2
/// brackets, and the closed formula for a bracket of single letters.
pub fn verify_embeddings(max_weight: u64) -> VerificationReport {
    let mut suite = Suite::new("embeddings", json!({ "max_weight": max_weight }), false);
    let ihara = Triangle::ihara(BTreeSet::from([0]));
    let ari = Triangle::ari();
    let uri = Triangle::uri();

    // induced products agree on words in v0, v1
    let pairs = binary_word_pairs(max_weight);
    let (count, failures) = check_all(&pairs, |(a, b)| -> Option<Failure> {
        let base = glp_word(&ihara, a, b);
        let f = expect_eq(
            json!({ "check": "two-letter product", "structure": "ari", "a": a.to_string(), "b": b.to_string() }),
            &base,
            &glp_word(&ari, a, b),
        );
        if f.is_some() {
            return f;
        }
        if a.weight() + b.weight() <= CORRECTED_WEIGHT {
            return expect_eq(
                json!({ "check": "two-letter product", "structure": "uri", "a": a.to_string(), "b": b.to_string() }),
                &base,
                &glp_word(&uri, a, b),
            );
        }
        None
    });
    suite.record(count, failures);

    // odd letters kill v1, even letters do not
    let letters: Vec<u32> = (2..=9).collect();
    let (count, failures) = check_all(&letters, |&k| -> Option<Failure> {
        let acted = ari.tr(&Poly::letter(k), &Poly::letter(1));
        expect_eq(
            json!({ "check": "action on v1", "k": k }),
            &(k % 2 == 1),
            &acted.is_zero(),
        )
    });
    suite.record(count, failures);

    // odd letters are bracket-orthogonal to the two-letter subalgebra
    let mut ortho: Vec<(u32, Poly)> = Vec::new();
    for k in [3u32, 5, 7, 9] {
        for w in 1..=4 {
            for b in lie_span_binary(w) {
                ortho.push((k, b));
            }
        }
    }
    let (count, failures) = check_all(&ortho, |(k, b)| -> Option<Failure> {
        expect_eq(
            json!({ "check": "orthogonality", "k": k, "b": b.to_string() }),
            &Poly::zero(),
            &ari.post_lie_bracket(&Poly::letter(*k), b),
        )
    });
    suite.record(count, failures);

    // {v5, v7} = (1/3) {v3, v9} in weight 12
    let rel = ari
        .post_lie_bracket(&Poly::letter(5), &Poly::letter(7))
        .sub(&ari.post_lie_bracket(&Poly::letter(3), &Poly::letter(9)).scale(&freealg::qr(1, 3)));
    suite.instance(expect_eq(
        json!({ "check": "depth-2 relation" }),
        &Poly::zero(),
        &rel,
    ));

    // closed formula for a bracket of single letters
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for k1 in 1..=6 {
        for k2 in 1..=6 {
            pairs.push((k1, k2));
        }
    }
    let (count, failures) = check_all(&pairs, |&(k1, k2)| -> Option<Failure> {
        expect_eq(
            json!({ "check": "two-letter bracket formula", "k1": k1, "k2": k2 }),
            &two_letter_bracket(k1, k2),
            &ari.post_lie_bracket(&Poly::letter(k1), &Poly::letter(k2)),
        )
    });
    suite.record(count, failures);

    suite.finish()
}
