use freealg::{Poly, Word};
use glhopf::{coprod_ari, glp_word, FiltrationMode};
use postlie::Triangle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::{check_all, Failure, Suite, VerificationReport};
use crate::sample::random_word_exact;

const MAX_WEIGHT: u64 = 8;
const PAIR_SAMPLES: usize = 250;
const WORD_SAMPLES: usize = 250;
const LEVEL_SAMPLES: usize = 500;

fn right_factor_poly(w: &Word) -> Poly {
    let mut out = Poly::zero();
    for ((_, w2), c) in coprod_ari(w).terms() {
        out = out.add(&Poly::word(w2.clone()).scale(c));
    }
    out
}

fn offending(words: &[Word]) -> String {
    words
        .iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// The letter-index filtration is respected by the multiplicity
/// structure: products against a word only produce words whose largest
/// letter is at least the word's, and right coproduct factors only reach
/// letters up to the original's. A third, instance-wise scan checks the
/// finer level count of right factors.
pub fn verify_filtration(seed: u64) -> Vec<VerificationReport> {
    let ari = Triangle::ari();
    let mut reports = Vec::new();

    let mut suite = Suite::new("filtration", json!({ "max_weight": MAX_WEIGHT }), false).with_seed(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(Word, Word)> = Vec::new();
    for _ in 0..PAIR_SAMPLES {
        let total = rng.gen_range(2..=MAX_WEIGHT);
        let split = rng.gen_range(1..total);
        pairs.push((
            random_word_exact(&mut rng, split),
            random_word_exact(&mut rng, total - split),
        ));
    }
    let (count, failures) = check_all(&pairs, |(a, w)| -> Option<Failure> {
        let prod = glp_word(&ari, a, w);
        let bad = glhopf::filtration_check(w, &prod, FiltrationMode::IndMaxLower);
        if bad.is_empty() {
            None
        } else {
            Some(Failure {
                params: json!({ "check": "product raises index floor", "a": a.to_string(), "w": w.to_string() }),
                expected: "no words below the index floor".into(),
                actual: offending(&bad),
            })
        }
    });
    suite.record(count, failures);

    let mut words: Vec<Word> = Vec::new();
    for _ in 0..WORD_SAMPLES {
        let n = rng.gen_range(1..=MAX_WEIGHT);
        words.push(random_word_exact(&mut rng, n));
    }
    let (count, failures) = check_all(&words, |w| -> Option<Failure> {
        let rights = right_factor_poly(w);
        let bad = glhopf::filtration_check(w, &rights, FiltrationMode::IndMaxUpper);
        if bad.is_empty() {
            None
        } else {
            Some(Failure {
                params: json!({ "check": "right factors keep index ceiling", "w": w.to_string() }),
                expected: "no words above the index ceiling".into(),
                actual: offending(&bad),
            })
        }
    });
    suite.record(count, failures);
    reports.push(suite.finish());

    // level counts of right coproduct factors, checked instance-wise
    let mut scan = Suite::new(
        "filtration",
        json!({ "max_weight": MAX_WEIGHT, "check": "level scan" }),
        true,
    )
    .with_seed(seed);
    let mut words: Vec<Word> = Vec::new();
    for _ in 0..LEVEL_SAMPLES {
        let n = rng.gen_range(1..=MAX_WEIGHT);
        words.push(random_word_exact(&mut rng, n));
    }
    let (count, failures) = check_all(&words, |w| -> Option<Failure> {
        let rights = right_factor_poly(w);
        for k in 0..=w.ind_max() {
            let bad = glhopf::filtration_check(w, &rights, FiltrationMode::KLevel(k));
            if !bad.is_empty() {
                return Some(Failure {
                    params: json!({ "check": "right factor level", "w": w.to_string(), "k": k }),
                    expected: "no words above the level of w".into(),
                    actual: offending(&bad),
                });
            }
        }
        None
    });
    scan.record(count, failures);
    reports.push(scan.finish());

    reports
}
