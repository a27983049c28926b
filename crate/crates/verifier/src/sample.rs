use freealg::{basis_words, weight_of_letter, Letter, Poly, Word};
use num_traits::Signed;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Uniformly pick letters until the weight budget is consumed exactly;
/// `v0` and `v1` both carry weight 1, `v_i` carries weight `i`.
pub fn random_word_exact(rng: &mut ChaCha8Rng, weight: u64) -> Word {
    let mut letters = Vec::new();
    let mut rem = weight;
    while rem > 0 {
        // candidates: v0 plus v1..v_rem
        let pick = rng.gen_range(0..=rem as Letter);
        letters.push(pick);
        rem -= weight_of_letter(pick);
    }
    Word(letters)
}

/// Right-nested bracket of the letters of a word,
/// `[l_1, [l_2, ..., [l_{d-1}, l_d]...]]`; a single letter is itself.
pub fn right_nested(w: &Word) -> Poly {
    let letters = w.letters();
    let mut acc = match letters.last() {
        Some(&l) => Poly::letter(l),
        None => return Poly::zero(),
    };
    for &l in letters[..letters.len() - 1].iter().rev() {
        acc = Poly::letter(l).bracket(&acc);
    }
    acc
}

/// Spanning set of the homogeneous Lie component in a weight: the
/// right-nested bracketings of all basis words, deduplicated up to sign.
pub fn lie_span(weight: u64) -> Vec<Poly> {
    let mut seen: Vec<Poly> = Vec::new();
    for w in basis_words(weight) {
        let p = right_nested(&w);
        if p.is_zero() {
            continue;
        }
        let flip = matches!(p.terms().next(), Some((_, c)) if c.is_negative());
        let normalized = if flip { p.neg() } else { p };
        if !seen.contains(&normalized) {
            seen.push(normalized);
        }
    }
    seen
}

/// Spanning Lie elements over the subalphabet `{v0, v1}` in a weight.
pub fn lie_span_binary(weight: u64) -> Vec<Poly> {
    let mut seen: Vec<Poly> = Vec::new();
    for w in binary_words(weight) {
        let p = right_nested(&w);
        if p.is_zero() {
            continue;
        }
        let flip = matches!(p.terms().next(), Some((_, c)) if c.is_negative());
        let normalized = if flip { p.neg() } else { p };
        if !seen.contains(&normalized) {
            seen.push(normalized);
        }
    }
    seen
}

/// All words over `{v0, v1}` of the given weight (each letter weighs 1).
pub fn binary_words(weight: u64) -> Vec<Word> {
    let n = weight as usize;
    (0..(1usize << n))
        .map(|mask| Word((0..n).map(|i| ((mask >> i) & 1) as Letter).collect()))
        .collect()
}
