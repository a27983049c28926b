use std::collections::BTreeSet;

use combinat::{ari_mult, weak_compositions, Scalar};
use freealg::{basis_words, weight_of_letter, Letter, Poly, Tensor2, Word};
use num_traits::Zero;
use postlie::Triangle;

/// Reduced cotriangle by dualization: the word-on-letter part of the
/// action read backwards, `sum_{w, a} (w <| v_a | A) w (x) v_a` over basis
/// words `w` and letters `a` of complementary weight.
pub fn cotr_irr_dual(tri: &Triangle, a: &Word) -> Tensor2 {
    let n = a.weight();
    let mut out = Tensor2::zero();
    for letter in 0..=(n as Letter) {
        let lw = weight_of_letter(letter);
        if lw > n {
            continue;
        }
        for w in basis_words(n - lw) {
            let c = tri.tr_word_letter(&w, letter).coeff(a);
            if !c.is_zero() {
                out.add_term(w.clone(), Word::letter(letter), c);
            }
        }
    }
    out
}

/// Closed reduced cotriangle for the bracket-flattening structure: each
/// position contributes the antipoded prefix shuffled with the suffix,
/// gated by the absorbing condition on the extracted letter.
pub fn cotr_irr_ihara(v0: &BTreeSet<Letter>, a: &Word) -> Tensor2 {
    let mut out = Tensor2::zero();
    let letters = a.letters();
    for j in 0..letters.len() {
        let prefix = Poly::word(Word::from_letters(&letters[..j])).antipode();
        let suffix = Poly::word(Word::from_letters(&letters[j + 1..]));
        let mut left = prefix.shuffle(&suffix);
        if v0.contains(&letters[j]) {
            left = Poly::monomial(Word::one(), left.constant_term());
        }
        for (w, c) in left.terms() {
            out.add_term(w.clone(), Word::letter(letters[j]), c.clone());
        }
    }
    out
}

/// Closed reduced cotriangle for the multiplicity-weighted structure:
/// extract one position, raise the remaining indices by a vector `l` with
/// `|l| <= k_i - 1`, antipode the raised prefix, shuffle with the raised
/// suffix and lower the extracted letter by `|l|`. A single letter always
/// yields `1 (x) v`; in higher depth an extracted `v0` contributes
/// nothing.
pub fn cotr_irr_ari(a: &Word) -> Tensor2 {
    let mut out = Tensor2::zero();
    let k: Vec<i64> = a.letters().iter().map(|&i| i as i64).collect();
    let d = k.len();
    for i in 0..d {
        if d == 1 {
            out.add_term(
                Word::one(),
                Word::letter(k[0] as Letter),
                Scalar::from_integer(1.into()),
            );
            continue;
        }
        if k[i] == 0 {
            continue;
        }
        let others: Vec<i64> = k
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != i)
            .map(|(_, &v)| v)
            .collect();
        for total in 0..=(k[i] - 1) {
            for l in weak_compositions(total, d - 1) {
                let raised: Vec<i64> = others.iter().zip(&l).map(|(o, li)| o + li).collect();
                let m = ari_mult(&raised, &others);
                if m.is_zero() {
                    continue;
                }
                let prefix_raised: Vec<Letter> =
                    raised[..i].iter().map(|&x| x as Letter).collect();
                let suffix_raised: Vec<Letter> =
                    raised[i..].iter().map(|&x| x as Letter).collect();
                let left = Poly::word(Word(prefix_raised))
                    .antipode()
                    .shuffle(&Poly::word(Word(suffix_raised)));
                for (w, c) in left.terms() {
                    out.add_term(
                        w.clone(),
                        Word::letter((k[i] - total) as Letter),
                        c * &m,
                    );
                }
            }
        }
    }
    out
}
