use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::word::Word;

/// An element of the two-fold tensor square, as a linear combination of
/// pairs of words. Zero coefficients are purged.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Tensor2 {
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl Tensor2 {
    pub fn zero() -> Self {
        Tensor2 {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, left: &Word, right: &Word) -> Scalar {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((left, right))
            .or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Tensor2 {
        if s.is_zero() {
            return Tensor2::zero();
        }
        Tensor2 {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * s))
                .collect(),
        }
    }

    /// Tensor product of two polynomials.
    pub fn of(left: &Poly, right: &Poly) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (w1, c1) in left.terms() {
            for (w2, c2) in right.terms() {
                out.add_term(w1.clone(), w2.clone(), c1 * c2);
            }
        }
        out
    }

    pub fn flip(&self) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }

    /// The mixed product that shuffles left factors and concatenates right
    /// factors: `(A1 (x) A2) * (B1 (x) B2) = (A1 sh B1) (x) A2 B2`.
    pub fn shuffle_bullet(&self, other: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                let left = Poly::word(l1.clone()).shuffle(&Poly::word(l2.clone()));
                let right = r1.concat(r2);
                for (w, c) in left.terms() {
                    out.add_term(w.clone(), right.clone(), c * c1 * c2);
                }
            }
        }
        out
    }

    /// Apply linear maps to the two factors and multiply the results out.
    pub fn contract<F, G>(&self, f: F, g: G) -> Tensor2
    where
        F: Fn(&Word) -> Poly,
        G: Fn(&Word) -> Poly,
    {
        let mut out = Tensor2::zero();
        for ((l, r), c) in &self.terms {
            for (w1, c1) in f(l).terms() {
                for (w2, c2) in g(r).terms() {
                    out.add_term(w1.clone(), w2.clone(), c * c1 * c2);
                }
            }
        }
        out
    }

    /// Pairing against a pure tensor: sum of `c * (l | a)(r | b)`.
    pub fn pair(&self, a: &Poly, b: &Poly) -> Scalar {
        let mut acc = Scalar::zero();
        for ((l, r), c) in &self.terms {
            acc += c * a.coeff(l) * b.coeff(r);
        }
        acc
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((l, r), c) in &self.terms {
            write_signed_coeff(f, c, &mut first)?;
            write!(f, "{l} (x) {r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An element of an `n`-fold tensor power with a fixed number of slots.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorN {
    slots: usize,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl TensorN {
    pub fn zero(slots: usize) -> Self {
        TensorN {
            slots,
            terms: BTreeMap::new(),
        }
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, words: Vec<Word>, c: Scalar) {
        assert_eq!(words.len(), self.slots);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(words).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }
}

impl fmt::Display for TensorN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (ws, c) in &self.terms {
            write_signed_coeff(f, c, &mut first)?;
            let parts: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
            write!(f, "{}", parts.join(" (x) "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn write_signed_coeff(
    f: &mut fmt::Formatter<'_>,
    c: &Scalar,
    first: &mut bool,
) -> fmt::Result {
    let neg = c < &Scalar::zero();
    let abs = if neg { -c.clone() } else { c.clone() };
    if *first {
        if neg {
            write!(f, "-")?;
        }
        *first = false;
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if !abs.is_one() {
        write!(f, "{abs}*")?;
    }
    Ok(())
}
