use combinat::{ari_mult, compositions_all, uri_mult, Scalar};
use freealg::{Letter, Poly};
use num_traits::Zero;

use crate::closed::lowered_indices;

/// A bracketing of letters: either a single letter or the bracket of two
/// subtrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tree {
    Leaf(Letter),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn leaf(i: Letter) -> Tree {
        Tree::Leaf(i)
    }

    pub fn node(left: Tree, right: Tree) -> Tree {
        Tree::Node(Box::new(left), Box::new(right))
    }

    /// Leaf letters in left-to-right order.
    pub fn leaf_indices(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Letter>) {
        match self {
            Tree::Leaf(i) => out.push(*i),
            Tree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// Same bracketing with the leaf letters replaced in order.
    pub fn substitute(&self, letters: &[Letter]) -> Tree {
        let mut iter = letters.iter().copied();
        let t = self.substitute_rec(&mut iter);
        assert!(iter.next().is_none(), "substitution length mismatch");
        t
    }

    fn substitute_rec(&self, iter: &mut impl Iterator<Item = Letter>) -> Tree {
        match self {
            Tree::Leaf(_) => Tree::Leaf(iter.next().expect("substitution length mismatch")),
            Tree::Node(l, r) => Tree::node(l.substitute_rec(iter), r.substitute_rec(iter)),
        }
    }

    /// Same bracketing with the leaf at the given left-to-right position
    /// replaced by a subtree.
    pub fn with_leaf_replaced(&self, pos: usize, sub: &Tree) -> Tree {
        let mut counter = pos as isize;
        self.replace_rec(&mut counter, sub)
    }

    fn replace_rec(&self, counter: &mut isize, sub: &Tree) -> Tree {
        match self {
            Tree::Leaf(_) => {
                let hit = *counter == 0;
                *counter -= 1;
                if hit {
                    sub.clone()
                } else {
                    self.clone()
                }
            }
            Tree::Node(l, r) => {
                let nl = l.replace_rec(counter, sub);
                let nr = r.replace_rec(counter, sub);
                Tree::node(nl, nr)
            }
        }
    }

    /// Expansion into the free algebra, brackets becoming commutators.
    pub fn to_poly(&self) -> Poly {
        match self {
            Tree::Leaf(i) => Poly::letter(*i),
            Tree::Node(l, r) => l.to_poly().bracket(&r.to_poly()),
        }
    }
}

/// Left-nested chain `[v_{m1}, [v_{m2}, ..., [v_{mk}, base]...]]`.
fn chain(letters: &[i64], base: Poly) -> Poly {
    let mut acc = base;
    for &m in letters.iter().rev() {
        acc = Poly::letter(m as Letter).bracket(&acc);
    }
    acc
}

/// Multiplicity-weighted action of a bracketing on a letter:
/// `t(k) <| v_s = sum_l m_{k,l} [v_{s + |k - l|}, t(l)]`, zero on `v0`.
pub fn ari_tree_letter(t: &Tree, s: Letter) -> Poly {
    if s == 0 {
        return Poly::zero();
    }
    let k: Vec<i64> = t.leaf_indices().iter().map(|&i| i as i64).collect();
    let mut out = Poly::zero();
    for l in lowered_indices(&k) {
        let m = ari_mult(&k, &l);
        let drop: i64 = k.iter().zip(&l).map(|(ki, li)| ki - li).sum();
        let letters: Vec<Letter> = l.iter().map(|&li| li as Letter).collect();
        let term = Poly::letter((s as i64 + drop) as Letter).bracket(&t.substitute(&letters).to_poly());
        out = out.add(&term.scale(&m));
    }
    out
}

/// Same action on a product of bracketings:
/// `(t1 ... tn) <| v_s` lowers every factor and brackets the shifted
/// letter against each lowered factor in turn, left to right.
pub fn ari_trees_letter(trees: &[Tree], s: Letter) -> Poly {
    if s == 0 {
        return Poly::zero();
    }
    let ks: Vec<Vec<i64>> = trees
        .iter()
        .map(|t| t.leaf_indices().iter().map(|&i| i as i64).collect())
        .collect();
    let mut out = Poly::zero();
    let mut stack: Vec<(usize, Vec<Vec<i64>>, Scalar, i64)> =
        vec![(0, Vec::new(), Scalar::from_integer(1.into()), 0)];
    while let Some((i, ls, coeff, drop)) = stack.pop() {
        if i == trees.len() {
            let mut acc = Poly::letter((s as i64 + drop) as Letter);
            for (t, l) in trees.iter().zip(&ls) {
                let letters: Vec<Letter> = l.iter().map(|&li| li as Letter).collect();
                acc = acc.bracket(&t.substitute(&letters).to_poly());
            }
            out = out.add(&acc.scale(&coeff));
            continue;
        }
        for l in lowered_indices(&ks[i]) {
            let m = ari_mult(&ks[i], &l);
            if m.is_zero() {
                continue;
            }
            let d: i64 = ks[i].iter().zip(&l).map(|(ki, li)| ki - li).sum();
            let mut ls2 = ls.clone();
            ls2.push(l);
            stack.push((i + 1, ls2, coeff.clone() * m, drop + d));
        }
    }
    out
}

/// Depth-corrected action of a bracketing on a letter: lower the leaf
/// indices, split the shifted weight into a composition and bracket its
/// letters as a chain onto the lowered tree, weighted by the threshold
/// family.
pub fn uri_tree_letter(t: &Tree, a: Letter) -> Poly {
    if a == 0 {
        return Poly::zero();
    }
    let k: Vec<i64> = t.leaf_indices().iter().map(|&i| i as i64).collect();
    let mut out = Poly::zero();
    for l in lowered_indices(&k) {
        let m = ari_mult(&k, &l);
        let drop: i64 = k.iter().zip(&l).map(|(ki, li)| ki - li).sum();
        let letters: Vec<Letter> = l.iter().map(|&li| li as Letter).collect();
        let lowered = t.substitute(&letters).to_poly();
        for alpha in compositions_all(a as i64 + drop) {
            let c = uri_mult(a as i64, &alpha);
            if c.is_zero() {
                continue;
            }
            out = out.add(&chain(&alpha, lowered.clone()).scale(&(m.clone() * c)));
        }
    }
    out
}

/// Depth-corrected action on a product of two bracketings: the second
/// factor receives the chain for the full shifted weight, and the first
/// factor replaces one chain letter `v_{alpha_i}` through its own action
/// on that letter.
pub fn uri_two_factor(t1: &Tree, t2: &Tree, a: Letter) -> Poly {
    if a == 0 {
        return Poly::zero();
    }
    let k2: Vec<i64> = t2.leaf_indices().iter().map(|&i| i as i64).collect();
    let mut out = Poly::zero();
    for l2 in lowered_indices(&k2) {
        let m2 = ari_mult(&k2, &l2);
        let drop2: i64 = k2.iter().zip(&l2).map(|(ki, li)| ki - li).sum();
        let letters2: Vec<Letter> = l2.iter().map(|&li| li as Letter).collect();
        let lowered2 = t2.substitute(&letters2).to_poly();
        for alpha in compositions_all(a as i64 + drop2) {
            let c = uri_mult(a as i64, &alpha);
            if c.is_zero() {
                continue;
            }
            for i in 0..alpha.len() {
                let inserted = uri_tree_letter(t1, alpha[i] as Letter);
                if inserted.is_zero() {
                    continue;
                }
                let tail = chain(&alpha[i + 1..], lowered2.clone());
                let term = chain(&alpha[..i], inserted.bracket(&tail));
                out = out.add(&term.scale(&(m2.clone() * c.clone())));
            }
        }
    }
    out
}

/// A bracketing whose chain-inserted leaves are tracked, so that later
/// factors know where they may attach.
#[derive(Clone)]
enum MTree {
    Leaf { letter: i64, marked: bool },
    Node(Box<MTree>, Box<MTree>),
}

impl MTree {
    fn to_poly(&self) -> Poly {
        match self {
            MTree::Leaf { letter, .. } => Poly::letter(*letter as Letter),
            MTree::Node(l, r) => l.to_poly().bracket(&r.to_poly()),
        }
    }

    fn marked_count(&self) -> usize {
        match self {
            MTree::Leaf { marked, .. } => usize::from(*marked),
            MTree::Node(l, r) => l.marked_count() + r.marked_count(),
        }
    }

    fn marked_letter(&self, pos: usize) -> i64 {
        self.marked_nth(pos).0
    }

    fn marked_nth(&self, pos: usize) -> (i64, usize) {
        match self {
            MTree::Leaf { letter, marked } => {
                if *marked && pos == 0 {
                    (*letter, usize::MAX)
                } else {
                    (0, pos - usize::from(*marked))
                }
            }
            MTree::Node(l, r) => {
                let (v, rem) = l.marked_nth(pos);
                if rem == usize::MAX {
                    (v, usize::MAX)
                } else {
                    r.marked_nth(rem)
                }
            }
        }
    }

    /// Replace the `pos`-th marked leaf (left-to-right) by a subtree.
    fn graft(&self, pos: usize, sub: &MTree) -> MTree {
        self.graft_rec(&mut (pos as isize), sub)
    }

    fn graft_rec(&self, pos: &mut isize, sub: &MTree) -> MTree {
        match self {
            MTree::Leaf { marked, .. } => {
                if *marked {
                    if *pos == 0 {
                        *pos -= 1;
                        return sub.clone();
                    }
                    *pos -= 1;
                }
                self.clone()
            }
            MTree::Node(l, r) => {
                let nl = l.graft_rec(pos, sub);
                let nr = r.graft_rec(pos, sub);
                MTree::Node(Box::new(nl), Box::new(nr))
            }
        }
    }
}

/// One depth-corrected step on a single bracketing, keeping the chain
/// letters marked: returns the terms of `t <| v_a` as marked trees.
fn uri_step(t: &Tree, a: i64) -> Vec<(Scalar, MTree)> {
    let mut out = Vec::new();
    if a == 0 {
        return out;
    }
    let k: Vec<i64> = t.leaf_indices().iter().map(|&i| i as i64).collect();
    for l in lowered_indices(&k) {
        let m = ari_mult(&k, &l);
        let drop: i64 = k.iter().zip(&l).map(|(ki, li)| ki - li).sum();
        let letters: Vec<Letter> = l.iter().map(|&li| li as Letter).collect();
        let lowered = mtree_of(&t.substitute(&letters));
        for alpha in compositions_all(a + drop) {
            let c = uri_mult(a, &alpha);
            if c.is_zero() {
                continue;
            }
            let mut acc = lowered.clone();
            for &part in alpha.iter().rev() {
                acc = MTree::Node(
                    Box::new(MTree::Leaf {
                        letter: part,
                        marked: true,
                    }),
                    Box::new(acc),
                );
            }
            out.push((m.clone() * c, acc));
        }
    }
    out
}

fn mtree_of(t: &Tree) -> MTree {
    match t {
        Tree::Leaf(i) => MTree::Leaf {
            letter: *i as i64,
            marked: false,
        },
        Tree::Node(l, r) => MTree::Node(Box::new(mtree_of(l)), Box::new(mtree_of(r))),
    }
}

/// Conjectural closed form for the depth-corrected action of a product of
/// bracketings on a letter. Factors are absorbed right to left, each one
/// replacing a single marked chain leaf from any earlier step by its own
/// action on that leaf's letter. This generalizes the proven two-factor
/// formula and is exposed opt-in only; the recursive extension engine
/// remains the ground truth.
pub fn uri_multi_factor(trees: &[Tree], a: Letter) -> Poly {
    assert!(!trees.is_empty());
    if a == 0 {
        return Poly::zero();
    }
    let last = trees.len() - 1;
    let mut state = uri_step(&trees[last], a as i64);
    for t in trees[..last].iter().rev() {
        let mut next: Vec<(Scalar, MTree)> = Vec::new();
        for (c, mt) in &state {
            for pos in 0..mt.marked_count() {
                let letter = mt.marked_letter(pos);
                for (c2, sub) in uri_step(t, letter) {
                    next.push((c.clone() * c2, mt.graft(pos, &sub)));
                }
            }
        }
        state = next;
    }
    let mut out = Poly::zero();
    for (c, mt) in state {
        out = out.add(&mt.to_poly().scale(&c));
    }
    out
}
