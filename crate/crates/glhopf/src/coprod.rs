use std::collections::{BTreeMap, BTreeSet};

use combinat::{ari_mult, weak_compositions, Scalar};
use freealg::{basis_words, Letter, Poly, Tensor2, Word};
use num_traits::Zero;
use postlie::Triangle;

use crate::glp::glp_word;

/// Coproduct dual to the induced product, by brute-force dualization:
/// `sum (W1 * W2 | C) W1 (x) W2` over basis words of complementary weight.
pub fn coprod_dual(tri: &Triangle, c: &Word) -> Tensor2 {
    let n = c.weight();
    let mut out = Tensor2::zero();
    for m in 0..=n {
        for w1 in basis_words(m) {
            for w2 in basis_words(n - m) {
                let coeff = glp_word(tri, &w1, &w2).coeff(c);
                if !coeff.is_zero() {
                    out.add_term(w1.clone(), w2.clone(), coeff);
                }
            }
        }
    }
    out
}

/// Dualization for a whole weight at once; each induced product is
/// computed once and scattered over all target words.
pub fn coprod_dual_weight(tri: &Triangle, n: u64) -> BTreeMap<Word, Tensor2> {
    let mut out: BTreeMap<Word, Tensor2> = basis_words(n)
        .into_iter()
        .map(|w| (w, Tensor2::zero()))
        .collect();
    for m in 0..=n {
        for w1 in basis_words(m) {
            for w2 in basis_words(n - m) {
                let product = glp_word(tri, &w1, &w2);
                for (c, coeff) in product.terms() {
                    if let Some(t) = out.get_mut(c) {
                        t.add_term(w1.clone(), w2.clone(), coeff.clone());
                    }
                }
            }
        }
    }
    out
}

/// Rebuild the dual coproduct of a word from a reduced cotriangle: sum
/// over cut positions of the prefix tensored against the unit, multiplied
/// blockwise under the shuffle-concatenation product.
pub fn free_coprod2<F>(cotr: F, a: &Word) -> Tensor2
where
    F: Fn(&Word) -> Tensor2,
{
    let n = a.depth();
    let mut out = Tensor2::zero();
    // cut sets: i_1 < ... < i_k < n, prefix a[..i_1], blocks in between
    for mask in 0u64..(1u64 << n) {
        let cuts: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let prefix_end = cuts.first().copied().unwrap_or(n);
        let mut t = Tensor2::of(
            &Poly::word(Word::from_letters(&a.letters()[..prefix_end])),
            &Poly::one(),
        );
        for (s, &start) in cuts.iter().enumerate() {
            let end = cuts.get(s + 1).copied().unwrap_or(n);
            let block = Word::from_letters(&a.letters()[start..end]);
            t = t.shuffle_bullet(&cotr(&block));
            if t.is_zero() {
                break;
            }
        }
        out = out.add(&t);
    }
    out
}

/// Iterate all assignments where slot `s` takes a value in
/// `ranges[s].0 ..= ranges[s].1`.
fn range_assignments(ranges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &(lo, hi) in ranges {
        let mut next = Vec::new();
        for prefix in &out {
            for v in lo..=hi {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn subsets_sorted(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u64..(1u64 << n) {
        out.push((0..n).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect());
    }
    out
}

/// Cut ranges for extracted positions `js` (1-based): the cut before the
/// `s`-th extraction lies in `[j_{s-1}, j_s - 1]`.
fn cut_ranges(js: &[usize]) -> Vec<(usize, usize)> {
    let mut prev = 0usize;
    let mut out = Vec::with_capacity(js.len());
    for &j in js {
        out.push((prev, j - 1));
        prev = j;
    }
    out
}

/// Closed coproduct for the bracket-flattening structure: extract letters
/// at positions `j_1 < ... < j_k` to the right factor; the left factor
/// shuffles the initial segment with one block per extraction, each block
/// antipoding the part before the extracted letter, gated by the
/// absorbing condition.
pub fn coprod_ihara(v0: &BTreeSet<Letter>, a: &Word) -> Tensor2 {
    let n = a.depth();
    let letters = a.letters();
    let mut out = Tensor2::zero();
    for js in subsets_sorted(n) {
        for cuts in range_assignments(&cut_ranges(&js)) {
            let prefix_end = cuts.first().copied().unwrap_or(n);
            let mut left = Poly::word(Word::from_letters(&letters[..prefix_end]));
            for s in 0..js.len() {
                let j = js[s];
                let i = cuts[s];
                let next_i = cuts.get(s + 1).copied().unwrap_or(n);
                let s_part = Poly::word(Word::from_letters(&letters[i..j - 1])).antipode();
                let plain = Poly::word(Word::from_letters(&letters[j..next_i]));
                let mut block = s_part.shuffle(&plain);
                if v0.contains(&letters[j - 1]) {
                    block = Poly::monomial(Word::one(), block.constant_term());
                }
                left = left.shuffle(&block);
                if left.is_zero() {
                    break;
                }
            }
            if left.is_zero() {
                continue;
            }
            let right = Word(js.iter().map(|&j| letters[j - 1]).collect());
            for (w, c) in left.terms() {
                out.add_term(w.clone(), right.clone(), c.clone());
            }
        }
    }
    out
}

/// The same coproduct in segment form: between consecutive extracted
/// letters the segment passes plainly, antipoded, or only through its
/// constant term, depending on whether its two bounding letters are
/// absorbing. The virtual letter before the word counts as non-absorbing
/// and the one after it as absorbing.
pub fn coprod_ihara_gon(v0: &BTreeSet<Letter>, a: &Word) -> Tensor2 {
    let n = a.depth();
    let letters = a.letters();
    let is_abs = |pos: usize| -> bool {
        // positions are 1-based; 0 and n+1 are the virtual boundary letters
        if pos == 0 {
            false
        } else if pos == n + 1 {
            true
        } else {
            v0.contains(&letters[pos - 1])
        }
    };
    let mut out = Tensor2::zero();
    for js in subsets_sorted(n) {
        let mut bounds = vec![0usize];
        bounds.extend(&js);
        bounds.push(n + 1);
        let mut left = Poly::one();
        for p in 0..bounds.len() - 1 {
            let (lo, hi) = (bounds[p], bounds[p + 1]);
            let seg = Poly::word(Word::from_letters(&letters[lo..hi - 1]));
            let piece = match (is_abs(lo), is_abs(hi)) {
                (false, true) => seg,
                (true, false) => seg.antipode(),
                _ => Poly::monomial(Word::one(), seg.constant_term()),
            };
            left = left.shuffle(&piece);
            if left.is_zero() {
                break;
            }
        }
        if left.is_zero() {
            continue;
        }
        let right = Word(js.iter().map(|&j| letters[j - 1]).collect());
        for (w, c) in left.terms() {
            out.add_term(w.clone(), right.clone(), c.clone());
        }
    }
    out
}

/// Closed coproduct for the multiplicity-weighted structure: extract
/// positions to the right factor with their indices lowered by the total
/// raise `|l|` distributed over the rest of their block, whose raised
/// letters pass antipoded before the extraction and plainly after it.
pub fn coprod_ari(a: &Word) -> Tensor2 {
    let k: Vec<i64> = a.letters().iter().map(|&i| i as i64).collect();
    let d = k.len();
    let mut out = Tensor2::zero();
    for js in subsets_sorted(d) {
        for cuts in range_assignments(&cut_ranges(&js)) {
            let prefix_end = cuts.first().copied().unwrap_or(d);
            let base_left = Poly::word(Word::from_letters(&a.letters()[..prefix_end]));
            blocks_rec(
                &k,
                &js,
                &cuts,
                0,
                base_left,
                Vec::new(),
                Scalar::from_integer(1.into()),
                &mut out,
            );
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn blocks_rec(
    k: &[i64],
    js: &[usize],
    cuts: &[usize],
    s: usize,
    left: Poly,
    right: Vec<Letter>,
    coeff: Scalar,
    out: &mut Tensor2,
) {
    let d = k.len();
    if s == js.len() {
        for (w, c) in left.terms() {
            out.add_term(w.clone(), Word(right.clone()), c * &coeff);
        }
        return;
    }
    let j = js[s];
    let i = cuts[s];
    let next_i = cuts.get(s + 1).copied().unwrap_or(d);
    // block positions i+1 ..= next_i (1-based), extraction at j
    let others: Vec<usize> = (i + 1..=next_i).filter(|&p| p != j).collect();
    if others.is_empty() {
        // singleton block: no raise, the letter passes unlowered
        let mut right2 = right.clone();
        right2.push(k[j - 1] as Letter);
        blocks_rec(k, js, cuts, s + 1, left, right2, coeff, out);
        return;
    }
    if k[j - 1] == 0 {
        return;
    }
    for total in 0..=(k[j - 1] - 1) {
        for l in weak_compositions(total, others.len()) {
            let raised: Vec<i64> = others
                .iter()
                .zip(&l)
                .map(|(&p, li)| k[p - 1] + li)
                .collect();
            let base: Vec<i64> = others.iter().map(|&p| k[p - 1]).collect();
            let m = ari_mult(&raised, &base);
            if m.is_zero() {
                continue;
            }
            let before: Vec<Letter> = others
                .iter()
                .zip(&raised)
                .filter(|(&p, _)| p < j)
                .map(|(_, &r)| r as Letter)
                .collect();
            let after: Vec<Letter> = others
                .iter()
                .zip(&raised)
                .filter(|(&p, _)| p > j)
                .map(|(_, &r)| r as Letter)
                .collect();
            let block = Poly::word(Word(before))
                .antipode()
                .shuffle(&Poly::word(Word(after)));
            let new_left = left.shuffle(&block);
            if new_left.is_zero() {
                continue;
            }
            let mut right2 = right.clone();
            right2.push((k[j - 1] - total) as Letter);
            blocks_rec(
                k,
                js,
                cuts,
                s + 1,
                new_left,
                right2,
                coeff.clone() * &m,
                out,
            );
        }
    }
}

/// Remove the terms with an empty word on either side, for comparison
/// against references that omit them.
pub fn drop_boundary(t: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::zero();
    for ((l, r), c) in t.terms() {
        if !l.is_empty() && !r.is_empty() {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
    }
    out
}
