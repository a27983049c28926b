use std::collections::{BTreeMap, HashMap};

use freealg::{basis_words, Poly, Tensor2, Word};
use glhopf::glp_word;
use postlie::Triangle;
use rayon::prelude::*;

/// Precomputed values of a bilinear word-pair operation for all basis
/// word pairs up to a total weight. Both the action `A <| B` and the
/// induced product `A * B` preserve total weight, so nested evaluations
/// stay inside the table.
pub struct PairTable {
    tri: Triangle,
    max_weight: u64,
    map: HashMap<(Word, Word), Poly>,
}

fn pairs_up_to(max_weight: u64) -> Vec<(Word, Word)> {
    let mut pairs = Vec::new();
    for total in 0..=max_weight {
        for m in 0..=total {
            for a in basis_words(m) {
                for b in basis_words(total - m) {
                    pairs.push((a.clone(), b));
                }
            }
        }
    }
    pairs
}

impl PairTable {
    fn build<F>(tri: Triangle, max_weight: u64, op: F) -> Self
    where
        F: Fn(&Triangle, &Word, &Word) -> Poly + Sync,
    {
        let pairs = pairs_up_to(max_weight);
        let map: HashMap<(Word, Word), Poly> = pairs
            .into_par_iter()
            .map(|(a, b)| {
                let v = op(&tri, &a, &b);
                ((a, b), v)
            })
            .collect();
        PairTable {
            tri,
            max_weight,
            map,
        }
    }

    /// Table of the triangle action `A <| B`.
    pub fn action(tri: Triangle, max_weight: u64) -> Self {
        PairTable::build(tri, max_weight, |t, a, b| t.tr_word_word(a, b))
    }

    /// Table of the induced product `A * B`.
    pub fn product(tri: Triangle, max_weight: u64) -> Self {
        PairTable::build(tri, max_weight, |t, a, b| glp_word(t, a, b))
    }

    pub fn max_weight(&self) -> u64 {
        self.max_weight
    }

    pub fn triangle(&self) -> &Triangle {
        &self.tri
    }

    pub fn word(&self, a: &Word, b: &Word) -> &Poly {
        self.map
            .get(&(a.clone(), b.clone()))
            .unwrap_or_else(|| panic!("pair ({a}, {b}) outside the precomputed range"))
    }

    /// Bilinear extension over table lookups.
    pub fn apply(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                out = out.add(&self.word(wa, wb).scale(&(ca * cb)));
            }
        }
        out
    }

    /// `{a, b} = a <| b - b <| a + [a, b]` over an action table.
    pub fn post_lie_bracket(&self, a: &Poly, b: &Poly) -> Poly {
        self.apply(a, b).sub(&self.apply(b, a)).add(&a.bracket(b))
    }
}

/// Dual coproduct of every basis word per weight, rebuilt by scattering a
/// product table: `Delta(c) = sum (W1 * W2 | c) W1 (x) W2`.
pub fn dual_tables(products: &PairTable) -> Vec<BTreeMap<Word, Tensor2>> {
    let mut out: Vec<BTreeMap<Word, Tensor2>> = (0..=products.max_weight())
        .map(|n| {
            basis_words(n)
                .into_iter()
                .map(|w| (w, Tensor2::zero()))
                .collect()
        })
        .collect();
    for ((a, b), product) in &products.map {
        let total = (a.weight() + b.weight()) as usize;
        for (c, coeff) in product.terms() {
            if let Some(t) = out[total].get_mut(c) {
                t.add_term(a.clone(), b.clone(), coeff.clone());
            }
        }
    }
    out
}
