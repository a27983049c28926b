use std::collections::BTreeSet;

use freealg::{parse_poly, parse_tensor2, Poly, Tensor2, Word};
use glhopf::{
    coprod_ari, coprod_dual, coprod_ihara, coprod_ihara_gon, cotr_irr_ari, cotr_irr_dual,
    cotr_irr_ihara, drop_boundary, free_coprod2, glp, glp_ari_fast, glp_ihara_fast, glp_word,
};
use postlie::Triangle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn w(letters: &[u32]) -> Word {
    Word::from_letters(letters)
}

fn random_word(rng: &mut ChaCha8Rng, max_weight: u64) -> Word {
    let mut letters = Vec::new();
    let mut rem = max_weight;
    while rem > 0 && rng.gen_bool(0.75) {
        let i = rng.gen_range(0..=rem.min(4)) as u32;
        if freealg::weight_of_letter(i) > rem {
            break;
        }
        letters.push(i);
        rem -= freealg::weight_of_letter(i);
    }
    Word(letters)
}

#[test]
fn letter_level_product() {
    // a * b = ab + a <| b
    for tri in [Triangle::ihara_default(), Triangle::ari(), Triangle::uri()] {
        for x in 0..4u32 {
            for y in 0..4u32 {
                let (a, b) = (Poly::letter(x), Poly::letter(y));
                let expected = a.conc(&b).add(&tri.tr(&a, &b));
                assert_eq!(glp(&tri, &a, &b), expected, "v{x} * v{y}");
            }
        }
    }
}

#[test]
fn induced_product_golden_eight_terms() {
    // checked by hand from the definitions and confirmed below by duality
    // against the closed coproduct
    let expected = parse_poly(
        "3*v1.v2.v3.v0 - 2*v2.v3.v1.v0 + 2*v3.v1.v2.v0 - 3*v1.v3.v2.v0 \
         + v3.v2.v1.v0 - v4.v1.v1.v0 + 2*v1.v4.v1.v0 - v1.v1.v4.v0",
    )
    .unwrap();
    assert_eq!(expected.num_terms(), 8);
    let tri = Triangle::ari();
    assert_eq!(glp_word(&tri, &w(&[2, 3]), &w(&[1, 0])), expected);
    assert_eq!(glp_ari_fast(&w(&[2, 3]), &w(&[1, 0])), expected);
    for (word, coeff) in expected.terms() {
        let delta = coprod_ari(word);
        let paired = delta.pair(&Poly::word(w(&[2, 3])), &Poly::word(w(&[1, 0])));
        assert_eq!(&paired, coeff, "{word}");
    }
}

#[test]
fn fast_products_match_generic() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    let ihara = Triangle::ihara_default();
    let ari = Triangle::ari();
    let v0 = BTreeSet::from([0]);
    for _ in 0..15 {
        let a = random_word(&mut rng, 4);
        let b = random_word(&mut rng, 3);
        assert_eq!(
            glp_ihara_fast(&v0, &a, &b),
            glp_word(&ihara, &a, &b),
            "{a} * {b}"
        );
        assert_eq!(glp_ari_fast(&a, &b), glp_word(&ari, &a, &b), "{a} * {b}");
    }
}

#[test]
fn product_is_associative_spot_check() {
    for tri in [Triangle::ihara_default(), Triangle::ari()] {
        let a = Poly::word(w(&[1]));
        let b = Poly::word(w(&[2]));
        let c = Poly::word(w(&[0, 1]));
        assert_eq!(
            glp(&tri, &glp(&tri, &a, &b), &c),
            glp(&tri, &a, &glp(&tri, &b, &c))
        );
    }
}

#[test]
fn reduced_cotriangle_closed_vs_dual() {
    let mut rng = ChaCha8Rng::seed_from_u64(73);
    let ihara = Triangle::ihara_default();
    let ari = Triangle::ari();
    let v0 = BTreeSet::from([0]);
    for _ in 0..12 {
        let a = random_word(&mut rng, 5);
        assert_eq!(cotr_irr_ihara(&v0, &a), cotr_irr_dual(&ihara, &a), "{a}");
        assert_eq!(cotr_irr_ari(&a), cotr_irr_dual(&ari, &a), "{a}");
    }
}

#[test]
fn bracket_flattening_coproduct_golden() {
    let expected = parse_tensor2(
        "1 (x) v1.v2.v3.v0 + v0 (x) v1.v2.v3 + v3 (x) v1.v2.v0 + v3.v0 (x) v1.v2 \
         + v2.v3 (x) v1.v0 + v1.v2.v3 (x) v0 + v2.v3.v0 (x) v1 + v1.v2.v3.v0 (x) 1",
    )
    .unwrap();
    let v0 = BTreeSet::from([0]);
    let word = w(&[1, 2, 3, 0]);
    assert_eq!(coprod_ihara(&v0, &word), expected);
    assert_eq!(coprod_ihara_gon(&v0, &word), expected);
    assert_eq!(free_coprod2(|b| cotr_irr_ihara(&v0, b), &word), expected);
    assert_eq!(coprod_dual(&Triangle::ihara_default(), &word), expected);
}

#[test]
fn bracket_flattening_coproduct_degenerate_words() {
    let v0 = BTreeSet::from([0]);
    // all letters absorbing: plain deconcatenation
    let word = w(&[0, 0, 0]);
    let expected = Poly::word(word.clone()).deconcat();
    assert_eq!(coprod_ihara(&v0, &word), expected);
    // no letter absorbing: deconcatenation with the factors swapped
    let word = w(&[1, 2, 1]);
    let expected = Poly::word(word.clone()).deconcat().flip();
    assert_eq!(coprod_ihara(&v0, &word), expected);
}

#[test]
fn multiplicity_coproduct_golden() {
    let interior = parse_tensor2(
        "-v1.v3 (x) v2.v2 - v2.v1.v3 (x) v2 + v2.v2 (x) v2.v2 + v2.v2.v2 (x) v2 \
         - v2.v2 (x) v1.v3 + 2*v1.v3 (x) v1.v3 + v2 (x) v2.v2.v2 - v2 (x) v2.v1.v3",
    )
    .unwrap();
    let word = w(&[2, 2, 1, 3]);
    let got = coprod_ari(&word);
    assert_eq!(drop_boundary(&got), interior);
    // the full coproduct keeps both boundary terms
    let mut expected = interior.clone();
    expected.add_term(Word::one(), word.clone(), freealg::q(1));
    expected.add_term(word.clone(), Word::one(), freealg::q(1));
    assert_eq!(got, expected);
}

#[test]
fn multiplicity_coproduct_routes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(79);
    let ari = Triangle::ari();
    for _ in 0..8 {
        let word = random_word(&mut rng, 5);
        let closed = coprod_ari(&word);
        assert_eq!(closed, coprod_dual(&ari, &word), "{word}");
        assert_eq!(closed, free_coprod2(cotr_irr_ari, &word), "{word}");
    }
}

#[test]
fn coproduct_is_dual_to_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(83);
    for tri in [Triangle::ihara_default(), Triangle::ari(), Triangle::uri()] {
        for _ in 0..6 {
            let c = random_word(&mut rng, 4);
            let delta = coprod_dual(&tri, &c);
            let w1 = random_word(&mut rng, 3);
            let w2 = random_word(&mut rng, 3);
            let lhs = glp_word(&tri, &w1, &w2).coeff(&c);
            let rhs = delta.pair(&Poly::word(w1.clone()), &Poly::word(w2.clone()));
            assert_eq!(lhs, rhs, "({w1} * {w2} | {c})");
        }
    }
}

#[test]
fn empty_factors() {
    let tri = Triangle::ari();
    let a = Poly::word(w(&[2, 1]));
    assert_eq!(glp(&tri, &Poly::one(), &a), a);
    assert_eq!(glp(&tri, &a, &Poly::one()), a);
    assert_eq!(coprod_ari(&Word::one()), Tensor2::of(&Poly::one(), &Poly::one()));
}
