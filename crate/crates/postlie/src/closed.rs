use std::collections::BTreeSet;

use combinat::ari_mult;
use freealg::{sandwich, Letter, Poly, Word};

/// Closed form for the bracket-flattening action of a word on a letter:
/// zero when the letter is absorbing (unless the word is empty), else the
/// fully nested left bracket `[...[[v, a1], a2], ..., an]`, realized as
/// `S(A_(1)) v A_(2)`.
pub fn tr_letter_ihara(v0: &BTreeSet<Letter>, a: &Word, y: Letter) -> Poly {
    if v0.contains(&y) {
        return if a.is_empty() {
            Poly::letter(y)
        } else {
            Poly::zero()
        };
    }
    sandwich(&Poly::word(a.clone()), &Poly::letter(y))
}

/// Closed form for the multiplicity-weighted action of a word on a letter:
/// for `y = v0` it is `(A | 1) v0`; otherwise a sum over entrywise lowered
/// letter indices `l <= k` of `m_{k,l}` times the nested bracket of
/// `v_{s + |k - l|}` against the lowered word.
pub fn tr_letter_ari(a: &Word, y: Letter) -> Poly {
    if y == 0 {
        return if a.is_empty() {
            Poly::letter(0)
        } else {
            Poly::zero()
        };
    }
    let k: Vec<i64> = a.letters().iter().map(|&i| i as i64).collect();
    let s = y as i64;
    let mut out = Poly::zero();
    for l in lowered_indices(&k) {
        let m = ari_mult(&k, &l);
        let drop: i64 = k.iter().zip(&l).map(|(ki, li)| ki - li).sum();
        let lowered = Word::from_letters(
            &l.iter().map(|&li| li as Letter).collect::<Vec<_>>(),
        );
        let nested = sandwich(
            &Poly::word(lowered),
            &Poly::letter((s + drop) as Letter),
        );
        out = out.add(&nested.scale(&m));
    }
    out
}

/// All entrywise lowerings with nonvanishing multiplicity: `l_i = 0` when
/// `k_i = 0` and `1 <= l_i <= k_i` otherwise.
pub(crate) fn lowered_indices(k: &[i64]) -> Vec<Vec<i64>> {
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
