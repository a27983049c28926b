use combinat::{ari_mult, compositions_all, multinomial, uri_mult, weak_compositions};
use freealg::Scalar;
use num_traits::Zero;

use crate::cword::{BiLetter, BiPoly};

/// Which triangle structure the composite-letter formula computes. The
/// first variant is the bracket-flattening action with absorbing set
/// `{v0}`, which is the only case where the composite alphabet is stable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LazardStructure {
    Ihara,
    Ari,
    Uri,
}

/// Bracketing over composite letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CTree {
    Leaf(BiLetter),
    Node(Box<CTree>, Box<CTree>),
}

impl CTree {
    pub fn leaf(c: BiLetter) -> CTree {
        CTree::Leaf(c)
    }

    pub fn node(left: CTree, right: CTree) -> CTree {
        CTree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> Vec<BiLetter> {
        match self {
            CTree::Leaf(c) => vec![*c],
            CTree::Node(l, r) => {
                let mut out = l.leaves();
                out.extend(r.leaves());
                out
            }
        }
    }

    /// Replace the leaves, left to right, with the given letters.
    pub fn substitute(&self, letters: &[BiLetter]) -> CTree {
        fn rec(t: &CTree, letters: &[BiLetter], pos: &mut usize) -> CTree {
            match t {
                CTree::Leaf(_) => {
                    let out = CTree::leaf(letters[*pos]);
                    *pos += 1;
                    out
                }
                CTree::Node(l, r) => {
                    let left = rec(l, letters, pos);
                    let right = rec(r, letters, pos);
                    CTree::node(left, right)
                }
            }
        }
        let mut pos = 0;
        let out = rec(self, letters, &mut pos);
        assert_eq!(pos, letters.len());
        out
    }

    /// Flatten the bracketing into the word algebra.
    pub fn to_bipoly(&self) -> BiPoly {
        match self {
            CTree::Leaf(c) => BiPoly::letter(*c),
            CTree::Node(l, r) => l.to_bipoly().bracket(&r.to_bipoly()),
        }
    }
}

/// Convenience constructor for the right-nested chain
/// `[c_1, [c_2, ..., [c_r, t]...]]`.
pub fn chain(prefix: &[BiLetter], t: CTree) -> CTree {
    let mut acc = t;
    for &c in prefix.iter().rev() {
        acc = CTree::node(CTree::leaf(c), acc);
    }
    acc
}

/// The triangle action of a bracketing on a composite letter, expressed
/// entirely in composite letters. For a bracketing `t` with letter
/// indices `(k, m)` acting on `C_{s,n}`, the adjoint exponent `n`
/// distributes multinomially over all produced letters; the
/// multiplicity-weighted structures additionally lower `k` entrywise
/// with the usual binomial weights, and the depth-corrected one inserts
/// a threshold-weighted chain in place of the single produced letter.
pub fn lazard_tr(structure: LazardStructure, t: &CTree, c: BiLetter) -> BiPoly {
    let leaves = t.leaves();
    let d = leaves.len();
    let (s, n) = (c.k as i64, c.m as i64);
    let mut out = BiPoly::zero();
    let lowerings: Vec<Vec<i64>> = match structure {
        LazardStructure::Ihara => vec![leaves.iter().map(|l| l.k as i64).collect()],
        _ => lower_all(&leaves.iter().map(|l| l.k as i64).collect::<Vec<_>>()),
    };
    for l in lowerings {
        let mult = match structure {
            LazardStructure::Ihara => Scalar::from_integer(1.into()),
            _ => ari_mult(&leaves.iter().map(|x| x.k as i64).collect::<Vec<_>>(), &l),
        };
        if mult.is_zero() {
            continue;
        }
        let drop: i64 = leaves.iter().zip(&l).map(|(x, li)| x.k as i64 - li).sum();
        for total in 0..=n {
            for nv in weak_compositions(total, d) {
                let subs: Vec<BiLetter> = leaves
                    .iter()
                    .zip(&l)
                    .zip(&nv)
                    .map(|((x, &li), &ni)| BiLetter::new(li as u32, x.m + ni as u32))
                    .collect();
                let lowered = t.substitute(&subs);
                match structure {
                    LazardStructure::Ihara | LazardStructure::Ari => {
                        let mut parts = vec![n - total];
                        parts.extend(&nv);
                        let coeff =
                            mult.clone() * Scalar::from_integer(multinomial(n, &parts));
                        if coeff.is_zero() {
                            continue;
                        }
                        let head = BiLetter::new((s + drop) as u32, (n - total) as u32);
                        let tree = CTree::node(CTree::leaf(head), lowered);
                        out = out.add(&tree.to_bipoly().scale(&coeff));
                    }
                    LazardStructure::Uri => {
                        for alpha in compositions_all(s + drop) {
                            let mu = uri_mult(s, &alpha);
                            if mu.is_zero() {
                                continue;
                            }
                            for eta in weak_compositions(n - total, alpha.len()) {
                                let mut parts = nv.clone();
                                parts.extend(&eta);
                                let coeff = mult.clone()
                                    * mu.clone()
                                    * Scalar::from_integer(multinomial(n, &parts));
                                if coeff.is_zero() {
                                    continue;
                                }
                                let prefix: Vec<BiLetter> = alpha
                                    .iter()
                                    .zip(&eta)
                                    .map(|(&a, &e)| BiLetter::new(a as u32, e as u32))
                                    .collect();
                                let tree = chain(&prefix, lowered.clone());
                                out = out.add(&tree.to_bipoly().scale(&coeff));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// All entrywise lowerings `1 <= l_i <= k_i`; composite letters always
/// have `k_i >= 1`.
fn lower_all(k: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &ki in k {
        let mut next = Vec::with_capacity(out.len() * ki as usize);
        for prefix in &out {
            for li in 1..=ki {
                let mut v = prefix.clone();
                v.push(li);
                next.push(v);
            }
        }
        out = next;
    }
    out
}
