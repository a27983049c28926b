use std::collections::BTreeSet;

use freealg::{basis_words, weight_of_letter, Letter, Word};
use glhopf::{
    coprod_ari, coprod_dual_weight, coprod_ihara, coprod_ihara_gon, glp_ari_fast, glp_ihara_fast,
    glp_word,
};
use postlie::{tr_letter_ari, tr_letter_ihara, Triangle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::{check_all, expect_eq, Failure, Suite, VerificationReport};
use crate::sample::random_word_exact;

const EXHAUSTIVE_WEIGHT: u64 = 6;
const RANDOM_WEIGHT: u64 = 7;
const RANDOM_COUNT: usize = 200;

fn word_letter_pairs(total: u64) -> Vec<(Word, Letter)> {
    let mut out = Vec::new();
    for m in 0..=total {
        for a in basis_words(m) {
            for y in 0..=(total - m) as Letter {
                if m + weight_of_letter(y) <= total {
                    out.push((a.clone(), y));
                }
            }
        }
    }
    out
}

fn word_pairs(total: u64) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for t in 0..=total {
        for m in 0..=t {
            for a in basis_words(m) {
                for b in basis_words(t - m) {
                    out.push((a.clone(), b));
                }
            }
        }
    }
    out
}

/// Closed formulas against the generic recursion and the dualization
/// route: exhaustive through a fixed weight, then random instances one
/// weight higher.
pub fn verify_oracles(seed: u64) -> VerificationReport {
    let mut suite = Suite::new("oracles", json!({ "exhaustive_weight": EXHAUSTIVE_WEIGHT, "random_weight": RANDOM_WEIGHT, "random_count": RANDOM_COUNT }), false).with_seed(seed);
    let v0 = BTreeSet::from([0]);
    let ihara = Triangle::ihara_default();
    let ari = Triangle::ari();

    // word-on-letter closed forms
    let mut instances = word_letter_pairs(EXHAUSTIVE_WEIGHT);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_COUNT {
        let y = rng.gen_range(0..4u32);
        let a = random_word_exact(&mut rng, RANDOM_WEIGHT - weight_of_letter(y));
        instances.push((a, y));
    }
    let (count, failures) = check_all(&instances, |(a, y)| {
        let f1 = expect_eq(
            json!({ "check": "closed action", "structure": "ihara", "a": a.to_string(), "y": y }),
            &ihara.tr_word_letter(a, *y),
            &tr_letter_ihara(&v0, a, *y),
        );
        if f1.is_some() {
            return f1;
        }
        expect_eq(
            json!({ "check": "closed action", "structure": "ari", "a": a.to_string(), "y": y }),
            &ari.tr_word_letter(a, *y),
            &tr_letter_ari(a, *y),
        )
    });
    suite.record(count, failures);

    // induced-product closed forms
    let mut instances = word_pairs(EXHAUSTIVE_WEIGHT);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    for _ in 0..RANDOM_COUNT {
        let split = rng.gen_range(0..=RANDOM_WEIGHT);
        let a = random_word_exact(&mut rng, split);
        let b = random_word_exact(&mut rng, RANDOM_WEIGHT - split);
        instances.push((a, b));
    }
    let (count, failures) = check_all(&instances, |(a, b)| {
        let f1 = expect_eq(
            json!({ "check": "closed product", "structure": "ihara", "a": a.to_string(), "b": b.to_string() }),
            &glp_word(&ihara, a, b),
            &glp_ihara_fast(&v0, a, b),
        );
        if f1.is_some() {
            return f1;
        }
        expect_eq(
            json!({ "check": "closed product", "structure": "ari", "a": a.to_string(), "b": b.to_string() }),
            &glp_word(&ari, a, b),
            &glp_ari_fast(a, b),
        )
    });
    suite.record(count, failures);

    // closed coproducts against dualization, batched per weight
    for n in 0..=EXHAUSTIVE_WEIGHT {
        let dual_ihara = coprod_dual_weight(&ihara, n);
        let dual_ari = coprod_dual_weight(&ari, n);
        let words: Vec<Word> = basis_words(n);
        let (count, failures) = check_all(&words, |w| {
            check_coprods(&v0, w, &dual_ihara[w], &dual_ari[w])
        });
        suite.record(count, failures);
    }
    // random words one weight higher, against the batch dual table
    let dual_ihara = coprod_dual_weight(&ihara, RANDOM_WEIGHT);
    let dual_ari = coprod_dual_weight(&ari, RANDOM_WEIGHT);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51a7b2c93d4e5f60);
    let words: Vec<Word> = (0..RANDOM_COUNT)
        .map(|_| random_word_exact(&mut rng, RANDOM_WEIGHT))
        .collect();
    let (count, failures) = check_all(&words, |w| {
        check_coprods(&v0, w, &dual_ihara[w], &dual_ari[w])
    });
    suite.record(count, failures);

    suite.finish()
}

fn check_coprods(
    v0: &BTreeSet<Letter>,
    w: &Word,
    dual_ihara: &freealg::Tensor2,
    dual_ari: &freealg::Tensor2,
) -> Option<Failure> {
    let f = expect_eq(
        json!({ "check": "closed coproduct", "structure": "ihara", "word": w.to_string() }),
        dual_ihara,
        &coprod_ihara(v0, w),
    );
    if f.is_some() {
        return f;
    }
    let f = expect_eq(
        json!({ "check": "segment coproduct", "structure": "ihara", "word": w.to_string() }),
        dual_ihara,
        &coprod_ihara_gon(v0, w),
    );
    if f.is_some() {
        return f;
    }
    expect_eq(
        json!({ "check": "closed coproduct", "structure": "ari", "word": w.to_string() }),
        dual_ari,
        &coprod_ari(w),
    )
}
