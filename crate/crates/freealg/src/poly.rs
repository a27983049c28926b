use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::{q, Scalar};
use crate::tensor::{Tensor2, TensorN};
use crate::word::{weight_of_letter, Letter, Word};

/// A finite formal rational linear combination of words.
///
/// Zero coefficients are never stored, so equality is map equality and
/// iteration order (graded, then by depth, then lexicographic) is canonical.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Word, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::monomial(Word::one(), q(1))
    }

    pub fn letter(i: Letter) -> Self {
        Poly::monomial(Word::letter(i), q(1))
    }

    pub fn word(w: Word) -> Self {
        Poly::monomial(w, q(1))
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(iter: I) -> Self {
        let mut p = Poly::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Word::one())
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            // look up again to remove; clone of the key is avoided by retain
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        self.scale(&q(-1))
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * s))
                .collect(),
        }
    }

    /// Concatenation product; bilinear, unit is the empty word.
    pub fn conc(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// Commutator with respect to concatenation.
    pub fn bracket(&self, other: &Poly) -> Poly {
        self.conc(other).sub(&other.conc(self))
    }

    /// Shuffle product; bilinear, commutative and associative.
    pub fn shuffle(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let c = c1 * c2;
                shuffle_words(w1.letters(), w2.letters(), &mut Vec::new(), &c, &mut out);
            }
        }
        out
    }

    /// The multiplicative coproduct with all letters primitive.
    ///
    /// On a word it sums over all subsets of positions, sending the chosen
    /// subword to the left factor and its complement to the right factor.
    pub fn coproduct_sh(&self) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (w, c) in &self.terms {
            let n = w.depth();
            for mask in 0u64..(1u64 << n) {
                let mut left = Vec::new();
                let mut right = Vec::new();
                for (i, &a) in w.letters().iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        left.push(a);
                    } else {
                        right.push(a);
                    }
                }
                out.add_term(Word(left), Word(right), c.clone());
            }
        }
        out
    }

    /// Deconcatenation: a word maps to the sum over all of its splits.
    pub fn deconcat(&self) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (w, c) in &self.terms {
            for i in 0..=w.depth() {
                out.add_term(
                    Word(w.letters()[..i].to_vec()),
                    Word(w.letters()[i..].to_vec()),
                    c.clone(),
                );
            }
        }
        out
    }

    /// Antipode: the anti-morphism with `S(v) = -v` on letters, so a word
    /// maps to its reversal with sign `(-1)^depth`.
    pub fn antipode(&self) -> Poly {
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            let sign = if w.depth() % 2 == 0 { q(1) } else { q(-1) };
            out.add_term(w.reversed(), c * sign);
        }
        out
    }

    /// Coefficient pairing, `(w | w') = delta_{w,w'}` on words.
    pub fn pairing(&self, other: &Poly) -> Scalar {
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Scalar::zero();
        for (w, c) in &small.terms {
            if let Some(d) = large.terms.get(w) {
                acc += c * d;
            }
        }
        acc
    }

    /// Iterated coproduct with `n >= 1` output slots (`n = 2` is the plain
    /// coproduct, `n = 1` the identity). On a word it sums over all
    /// assignments of positions to slots.
    pub fn iterated_coproduct(&self, n: usize) -> TensorN {
        assert!(n >= 1);
        let mut out = TensorN::zero(n);
        for (w, c) in &self.terms {
            let mut slots: Vec<Vec<Letter>> = vec![Vec::new(); n];
            assign_slots(w.letters(), 0, &mut slots, c, &mut out);
        }
        out
    }

    /// Projection onto the homogeneous component of the given weight.
    pub fn weight_component(&self, weight: u64) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.weight() == weight)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Smallest depth with a nonzero term; `None` for the zero polynomial.
    pub fn min_depth(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.depth()).min()
    }

    /// Projection onto the homogeneous component of the given depth.
    pub fn depth_component(&self, depth: usize) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.depth() == depth)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_weight(&self) -> u64 {
        self.terms.keys().map(|w| w.weight()).max().unwrap_or(0)
    }

    /// True iff the element is primitive for the shuffle coproduct, which
    /// characterizes Lie elements.
    pub fn is_lie_element(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        if !self.constant_term().is_zero() {
            return false;
        }
        let mut expected = Tensor2::zero();
        for (w, c) in &self.terms {
            expected.add_term(w.clone(), Word::one(), c.clone());
            expected.add_term(Word::one(), w.clone(), c.clone());
        }
        self.coproduct_sh() == expected
    }
}

/// The nested left bracket `[...[[v, a1], a2], ..., an]` computed through
/// the antipode identity: with `A = a1 ... an` it equals `S(A_(1)) v A_(2)`.
pub fn nested_bracket(v: Letter, elems: &[Poly]) -> Poly {
    let mut a = Poly::one();
    for e in elems {
        a = a.conc(e);
    }
    sandwich(&a, &Poly::letter(v))
}

/// `S(A_(1)) m A_(2)` for the shuffle coproduct of `A`.
pub fn sandwich(a: &Poly, middle: &Poly) -> Poly {
    let mut out = Poly::zero();
    for ((w1, w2), c) in a.coproduct_sh().terms() {
        let left = Poly::word(w1.clone()).antipode();
        let term = left.conc(middle).conc(&Poly::word(w2.clone()));
        out = out.add(&term.scale(c));
    }
    out
}

/// Direct expansion of the nested bracket, used as an oracle.
pub fn nested_bracket_direct(v: Letter, elems: &[Poly]) -> Poly {
    let mut acc = Poly::letter(v);
    for e in elems {
        acc = acc.bracket(e);
    }
    acc
}

/// All words of the given total weight, in canonical order.
pub fn basis_words(weight: u64) -> Vec<Word> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_words(weight, &mut prefix, &mut out);
    out.sort();
    out
}

fn gen_words(rem: u64, prefix: &mut Vec<Letter>, out: &mut Vec<Word>) {
    if rem == 0 {
        out.push(Word(prefix.clone()));
        return;
    }
    // letters of weight 1 are v0 and v1; weight k >= 2 is v_k alone
    for i in 0..=rem {
        let letter = i as Letter;
        let w = weight_of_letter(letter);
        if w <= rem {
            prefix.push(letter);
            gen_words(rem - w, prefix, out);
            prefix.pop();
        }
    }
}

fn shuffle_words(
    a: &[Letter],
    b: &[Letter],
    acc: &mut Vec<Letter>,
    coeff: &Scalar,
    out: &mut Poly,
) {
    if a.is_empty() {
        let mut w = acc.clone();
        w.extend_from_slice(b);
        out.add_term(Word(w), coeff.clone());
        return;
    }
    if b.is_empty() {
        let mut w = acc.clone();
        w.extend_from_slice(a);
        out.add_term(Word(w), coeff.clone());
        return;
    }
    acc.push(a[0]);
    shuffle_words(&a[1..], b, acc, coeff, out);
    acc.pop();
    acc.push(b[0]);
    shuffle_words(a, &b[1..], acc, coeff, out);
    acc.pop();
}

fn assign_slots(
    letters: &[Letter],
    pos: usize,
    slots: &mut Vec<Vec<Letter>>,
    coeff: &Scalar,
    out: &mut TensorN,
) {
    if pos == letters.len() {
        let words: Vec<Word> = slots.iter().map(|s| Word(s.clone())).collect();
        out.add_term(words, coeff.clone());
        return;
    }
    for i in 0..slots.len() {
        slots[i].push(letters[pos]);
        assign_slots(letters, pos + 1, slots, coeff, out);
        slots[i].pop();
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let neg = c < &Scalar::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{abs}*{w}")?;
            }
        }
        Ok(())
    }
}
