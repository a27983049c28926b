use std::collections::BTreeSet;

use combinat::ari_mult;
use freealg::{Letter, Poly, Word};
use num_traits::Zero;
use postlie::Triangle;

/// The induced product `A * B = A_(1) (A_(2) <| B)`.
pub fn glp(tri: &Triangle, a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            out = out.add(&glp_word(tri, wa, wb).scale(&(ca * cb)));
        }
    }
    out
}

/// Word-level induced product.
pub fn glp_word(tri: &Triangle, a: &Word, b: &Word) -> Poly {
    let mut out = Poly::zero();
    for ((a1, a2), c) in Poly::word(a.clone()).coproduct_sh().terms() {
        let acted = tri.tr_word_word(a2, b);
        if acted.is_zero() {
            continue;
        }
        out = out.add(&Poly::word(a1.clone()).conc(&acted).scale(c));
    }
    out
}

/// Split a word at its non-absorbing letters: returns the absorbing runs
/// `w_1, ..., w_{d+1}` and the marker letters `i_1, ..., i_d`.
fn segment(v0: &BTreeSet<Letter>, w: &Word) -> (Vec<Vec<Letter>>, Vec<Letter>) {
    let mut runs = vec![Vec::new()];
    let mut markers = Vec::new();
    for &c in w.letters() {
        if v0.contains(&c) {
            runs.last_mut().unwrap().push(c);
        } else {
            markers.push(c);
            runs.push(Vec::new());
        }
    }
    (runs, markers)
}

/// Closed form for the induced product of the bracket-flattening
/// structure against a grouplike-factored word: with
/// `w = w_1 v_{i_1} w_2 ... w_d v_{i_d} w_{d+1}` (absorbing runs `w_j`),
/// `A * w` spreads `A` over `2d + 1` coproduct slots, alternating plain
/// and antipoded slots around the marker letters.
pub fn glp_ihara_fast(v0: &BTreeSet<Letter>, a: &Word, w: &Word) -> Poly {
    let (runs, markers) = segment(v0, w);
    let d = markers.len();
    let mut out = Poly::zero();
    for (slots, c) in Poly::word(a.clone()).iterated_coproduct(2 * d + 1).terms() {
        let mut letters: Vec<Letter> = Vec::new();
        let mut sign_flips = 0usize;
        letters.extend(slots[0].letters());
        letters.extend(&runs[0]);
        for (p, &marker) in markers.iter().enumerate() {
            let s_slot = &slots[2 * p + 1];
            sign_flips += s_slot.depth();
            letters.extend(s_slot.letters().iter().rev());
            letters.push(marker);
            letters.extend(slots[2 * p + 2].letters());
            letters.extend(&runs[p + 1]);
        }
        let coeff = if sign_flips % 2 == 0 {
            c.clone()
        } else {
            -c.clone()
        };
        out.add_term(Word(letters), coeff);
    }
    out
}

/// Closed form for the induced product of the multiplicity-weighted
/// structure against a word factored over `v0` runs: the same slot layout
/// as the bracket-flattening case, with every slot beyond the first
/// lowered entrywise and the marker letters shifted by the dropped
/// weight of their two adjacent slots.
pub fn glp_ari_fast(a: &Word, w: &Word) -> Poly {
    let v0 = BTreeSet::from([0]);
    let (runs, markers) = segment(&v0, w);
    let d = markers.len();
    let mut out = Poly::zero();
    for (slots, c) in Poly::word(a.clone()).iterated_coproduct(2 * d + 1).terms() {
        // lower each slot beyond the first independently
        let ks: Vec<Vec<i64>> = slots
            .iter()
            .map(|s| s.letters().iter().map(|&i| i as i64).collect())
            .collect();
        let choices: Vec<Vec<Vec<i64>>> = (1..slots.len())
            .map(|j| lowered_indices(&ks[j]))
            .collect();
        let mut assignment = vec![0usize; choices.len()];
        loop {
            let mut coeff = c.clone();
            for (j, &pick) in assignment.iter().enumerate() {
                coeff *= ari_mult(&ks[j + 1], &choices[j][pick]);
            }
            if !coeff.is_zero() {
                let mut letters: Vec<Letter> = Vec::new();
                let mut sign_flips = 0usize;
                letters.extend(slots[0].letters());
                letters.extend(&runs[0]);
                for (p, &marker) in markers.iter().enumerate() {
                    let l_left = &choices[2 * p][assignment[2 * p]];
                    let l_right = &choices[2 * p + 1][assignment[2 * p + 1]];
                    sign_flips += l_left.len();
                    letters.extend(l_left.iter().rev().map(|&x| x as Letter));
                    let drop: i64 = ks[2 * p + 1].iter().sum::<i64>()
                        + ks[2 * p + 2].iter().sum::<i64>()
                        - l_left.iter().sum::<i64>()
                        - l_right.iter().sum::<i64>();
                    letters.push((marker as i64 + drop) as Letter);
                    letters.extend(l_right.iter().map(|&x| x as Letter));
                    letters.extend(&runs[p + 1]);
                }
                if sign_flips % 2 != 0 {
                    coeff = -coeff;
                }
                out.add_term(Word(letters), coeff);
            }
            // advance the mixed-radix assignment
            let mut j = 0;
            loop {
                if j == assignment.len() {
                    break;
                }
                assignment[j] += 1;
                if assignment[j] < choices[j].len() {
                    break;
                }
                assignment[j] = 0;
                j += 1;
            }
            if j == assignment.len() {
                break;
            }
        }
    }
    out
}

/// Entrywise lowerings with nonvanishing multiplicity, matching the
/// convention of the action: `l_i = 0` for `k_i = 0`, else `1 <= l_i <= k_i`.
fn lowered_indices(k: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &ki in k {
        let range: Vec<i64> = if ki == 0 { vec![0] } else { (1..=ki).collect() };
        let mut next = Vec::with_capacity(out.len() * range.len());
        for prefix in &out {
            for &li in &range {
                let mut v = prefix.clone();
                v.push(li);
                next.push(v);
            }
        }
        out = next;
    }
    out
}
