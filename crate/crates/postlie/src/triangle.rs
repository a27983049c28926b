use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use combinat::{ari_mult, compositions_all, uri_mult, Scalar};
use freealg::{Letter, Poly, Word};
use num_traits::Zero;

use crate::tree::Tree;

/// Which triangle structure acts, together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureKind {
    /// Bracket-flattening action; letters in `v0` absorb the action.
    Ihara { v0: BTreeSet<Letter> },
    /// Multiplicity-weighted action.
    Ari,
    /// Depth-corrected refinement of the multiplicity-weighted action.
    Uri,
}

/// A triangle structure with a memo table for the word-on-letter action.
///
/// The structure is defined on Lie elements, given here by its value on a
/// bracketing acting on a letter. Words act through the extension rules:
/// a product of Lie factors obeys
/// `(t T) <| y = t <| (T <| y) - (t <| T) <| y`,
/// where `t <|` is a derivation both on products and on brackets, and
/// `A <| b1...bm = (A_(1) <| b1) ... (A_(m) <| bm)` splits the left
/// argument over the iterated coproduct. The recursion terminates because
/// each step removes one factor from the product.
pub struct Triangle {
    kind: StructureKind,
    memo: Mutex<HashMap<(Word, Letter), Poly>>,
}

impl Triangle {
    pub fn new(kind: StructureKind) -> Self {
        Triangle {
            kind,
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// Bracket-flattening structure with the default absorbing set `{v0}`.
    pub fn ihara_default() -> Self {
        Triangle::new(StructureKind::Ihara {
            v0: BTreeSet::from([0]),
        })
    }

    pub fn ihara(v0: BTreeSet<Letter>) -> Self {
        Triangle::new(StructureKind::Ihara { v0 })
    }

    pub fn ari() -> Self {
        Triangle::new(StructureKind::Ari)
    }

    pub fn uri() -> Self {
        Triangle::new(StructureKind::Uri)
    }

    pub fn kind(&self) -> &StructureKind {
        &self.kind
    }

    /// The defining Lie-level value `t <| v_y` as a combination of
    /// bracketings.
    pub fn lie_tree_letter(&self, t: &Tree, y: Letter) -> Vec<(Scalar, Tree)> {
        match &self.kind {
            StructureKind::Ihara { v0 } => {
                if v0.contains(&y) {
                    Vec::new()
                } else {
                    vec![(
                        Scalar::from_integer(1.into()),
                        Tree::node(Tree::leaf(y), t.clone()),
                    )]
                }
            }
            StructureKind::Ari => {
                if y == 0 {
                    return Vec::new();
                }
                let k: Vec<i64> = t.leaf_indices().iter().map(|&i| i as i64).collect();
                let mut out = Vec::new();
                for l in crate::closed::lowered_indices(&k) {
                    let m = ari_mult(&k, &l);
                    let drop: i64 = k.iter().zip(&l).map(|(ki, li)| ki - li).sum();
                    let letters: Vec<Letter> = l.iter().map(|&li| li as Letter).collect();
                    out.push((
                        m,
                        Tree::node(
                            Tree::leaf((y as i64 + drop) as Letter),
                            t.substitute(&letters),
                        ),
                    ));
                }
                out
            }
            StructureKind::Uri => {
                if y == 0 {
                    return Vec::new();
                }
                let k: Vec<i64> = t.leaf_indices().iter().map(|&i| i as i64).collect();
                let mut out = Vec::new();
                for l in crate::closed::lowered_indices(&k) {
                    let m = ari_mult(&k, &l);
                    let drop: i64 = k.iter().zip(&l).map(|(ki, li)| ki - li).sum();
                    let letters: Vec<Letter> = l.iter().map(|&li| li as Letter).collect();
                    let lowered = t.substitute(&letters);
                    for alpha in compositions_all(y as i64 + drop) {
                        let c = uri_mult(y as i64, &alpha);
                        if c.is_zero() {
                            continue;
                        }
                        let mut acc = lowered.clone();
                        for &part in alpha.iter().rev() {
                            acc = Tree::node(Tree::leaf(part as Letter), acc);
                        }
                        out.push((m.clone() * c, acc));
                    }
                }
                out
            }
        }
    }

    /// The defining value on a pair of letters, `v_x <| v_y`.
    pub fn base(&self, x: Letter, y: Letter) -> Poly {
        let mut out = Poly::zero();
        for (c, t) in self.lie_tree_letter(&Tree::leaf(x), y) {
            out = out.add(&t.to_poly().scale(&c));
        }
        out
    }

    /// `t <| target` for bracketings: a derivation over the leaves of the
    /// target.
    fn lie_tree_tree(&self, t: &Tree, target: &Tree) -> Vec<(Scalar, Tree)> {
        let leaves = target.leaf_indices();
        let mut out = Vec::new();
        for (pos, &c) in leaves.iter().enumerate() {
            for (s, sub) in self.lie_tree_letter(t, c) {
                out.push((s, target.with_leaf_replaced(pos, &sub)));
            }
        }
        out
    }

    /// `t <|` acting on one word as a derivation over its letters.
    fn lie_deriv_word(&self, t: &Tree, w: &Word) -> Poly {
        let mut out = Poly::zero();
        for i in 0..w.depth() {
            let mut hit = Poly::zero();
            for (c, sub) in self.lie_tree_letter(t, w.letters()[i]) {
                hit = hit.add(&sub.to_poly().scale(&c));
            }
            if hit.is_zero() {
                continue;
            }
            let prefix = Poly::word(Word::from_letters(&w.letters()[..i]));
            let suffix = Poly::word(Word::from_letters(&w.letters()[i + 1..]));
            out = out.add(&prefix.conc(&hit).conc(&suffix));
        }
        out
    }

    /// `(t1 ... tn) <| v_y` for a product of bracketings.
    fn tr_trees_letter(&self, factors: &[Tree], y: Letter) -> Poly {
        match factors.len() {
            0 => Poly::letter(y),
            1 => {
                let mut out = Poly::zero();
                for (c, t) in self.lie_tree_letter(&factors[0], y) {
                    out = out.add(&t.to_poly().scale(&c));
                }
                out
            }
            _ => {
                let t1 = &factors[0];
                let rest = &factors[1..];
                let inner = self.tr_trees_letter(rest, y);
                let mut term1 = Poly::zero();
                for (w, c) in inner.terms() {
                    term1 = term1.add(&self.lie_deriv_word(t1, w).scale(c));
                }
                let mut term2 = Poly::zero();
                for i in 0..rest.len() {
                    for (c, replaced) in self.lie_tree_tree(t1, &rest[i]) {
                        let mut swapped: Vec<Tree> = rest.to_vec();
                        swapped[i] = replaced;
                        term2 = term2.add(&self.tr_trees_letter(&swapped, y).scale(&c));
                    }
                }
                term1.sub(&term2)
            }
        }
    }

    /// `A <| v_y` for a word `A`, memoized.
    pub fn tr_word_letter(&self, a: &Word, y: Letter) -> Poly {
        if a.depth() <= 1 {
            return if a.is_empty() {
                Poly::letter(y)
            } else {
                self.base(a.letters()[0], y)
            };
        }
        if let Some(hit) = self.memo.lock().unwrap().get(&(a.clone(), y)) {
            return hit.clone();
        }
        let factors: Vec<Tree> = a.letters().iter().map(|&i| Tree::leaf(i)).collect();
        let result = self.tr_trees_letter(&factors, y);
        self.memo
            .lock()
            .unwrap()
            .insert((a.clone(), y), result.clone());
        result
    }

    /// `A <| B` for words, splitting `A` over the iterated coproduct with
    /// one slot per letter of `B`.
    pub fn tr_word_word(&self, a: &Word, b: &Word) -> Poly {
        let m = b.depth();
        if m == 0 {
            // A <| 1 = (A | 1)
            return if a.is_empty() { Poly::one() } else { Poly::zero() };
        }
        if m == 1 {
            return self.tr_word_letter(a, b.letters()[0]);
        }
        let mut out = Poly::zero();
        for (slots, c) in Poly::word(a.clone()).iterated_coproduct(m).terms() {
            let mut prod = Poly::one();
            for (slot, &bi) in slots.iter().zip(b.letters()) {
                prod = prod.conc(&self.tr_word_letter(slot, bi));
                if prod.is_zero() {
                    break;
                }
            }
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// Bilinear extension of the action.
    pub fn tr(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                out = out.add(&self.tr_word_word(wa, wb).scale(&(ca * cb)));
            }
        }
        out
    }

    /// The post-Lie bracket `{a, b} = a <| b - b <| a + [a, b]`.
    pub fn post_lie_bracket(&self, a: &Poly, b: &Poly) -> Poly {
        self.tr(a, b).sub(&self.tr(b, a)).add(&a.bracket(b))
    }
}
