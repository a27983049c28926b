use std::collections::BTreeMap;
use std::fmt;

use combinat::{compositions, factorial, weak_compositions};
use freealg::{Letter, Poly, Scalar, Word};
use num_traits::{One, Zero};

use crate::bimu::Bimould;
use crate::mpoly::MPoly;

/// Composite letter `C_{k,m} = ad(v0)^m(v_k)`, `k >= 1`, `m >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiLetter {
    pub k: u32,
    pub m: u32,
}

impl BiLetter {
    pub fn new(k: u32, m: u32) -> Self {
        assert!(k >= 1, "composite letters need a positive first index");
        BiLetter { k, m }
    }

    pub fn weight(&self) -> u64 {
        self.k as u64 + self.m as u64
    }

    /// Expansion in the base alphabet, `ad(v0)^m(v_k)`.
    pub fn expand(&self) -> Poly {
        let mut p = Poly::letter(self.k as Letter);
        for _ in 0..self.m {
            p = Poly::letter(0).bracket(&p);
        }
        p
    }
}

impl fmt::Display for BiLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({},{})", self.k, self.m)
    }
}

/// Word over the composite alphabet; depth is the number of letters.
pub type BiWord = Vec<BiLetter>;

/// Polynomial over the composite alphabet with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<BiWord, Scalar>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        BiPoly::monomial(Vec::new(), Scalar::one())
    }

    pub fn letter(c: BiLetter) -> Self {
        BiPoly::monomial(vec![c], Scalar::one())
    }

    pub fn word(w: BiWord) -> Self {
        BiPoly::monomial(w, Scalar::one())
    }

    pub fn monomial(w: BiWord, c: Scalar) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BiWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &BiWord) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, w: BiWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> BiPoly {
        if s.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        }
    }

    pub fn conc(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    pub fn bracket(&self, other: &BiPoly) -> BiPoly {
        self.conc(other).sub(&other.conc(self))
    }

    pub fn depth_component(&self, d: usize) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_depth(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn weight(&self) -> u64 {
        self.terms
            .keys()
            .map(|w| w.iter().map(BiLetter::weight).sum())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let negative = c < &Scalar::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if !mag.is_one() || w.is_empty() {
                write!(f, "{mag}")?;
                if !w.is_empty() {
                    write!(f, "*")?;
                }
            }
            for (i, l) in w.iter().enumerate() {
                if i > 0 {
                    write!(f, ".")?;
                }
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

/// Expand every composite letter into the base alphabet and concatenate.
pub fn expand_c(p: &BiPoly) -> Poly {
    let mut out = Poly::zero();
    for (w, c) in p.terms() {
        let mut prod = Poly::one();
        for l in w {
            prod = prod.conc(&l.expand());
        }
        out = out.add(&prod.scale(c));
    }
    out
}

/// Parse a base word as `v_{k1} v0^{m1} ... v_{kd} v0^{md}`; words
/// starting with `v0` have no such form.
fn parse_cword(w: &Word) -> Option<BiWord> {
    let letters = w.letters();
    if letters.first() == Some(&0) {
        return None;
    }
    let mut out = Vec::new();
    for &l in letters {
        if l == 0 {
            out.last_mut().map(|c: &mut BiLetter| c.m += 1)?;
        } else {
            out.push(BiLetter::new(l, 0));
        }
    }
    Some(out)
}

fn mvec_sum(w: &BiWord) -> u32 {
    w.iter().map(|c| c.m).sum()
}

/// Rewrite a base-alphabet polynomial in the composite alphabet. The
/// expansion of a composite word contains its signature word
/// `v_{k1} v0^{m1} ...` with sign `(-1)^{|m|}`, and all its other
/// non-`v0`-initial terms are strictly smaller in the basis order, so a
/// greedy elimination from the top is exact. Errors when the input is not
/// in the span of composite-word expansions.
pub fn v_to_c(p: &Poly) -> Result<BiPoly, String> {
    let mut rest = p.clone();
    let mut out = BiPoly::zero();
    loop {
        let target = rest
            .terms()
            .filter_map(|(w, c)| parse_cword(w).map(|cw| (w.clone(), cw, c.clone())))
            .max_by(|a, b| a.0.cmp(&b.0));
        let Some((_, cword, coeff)) = target else {
            break;
        };
        let sign = if mvec_sum(&cword) % 2 == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        let c = coeff * sign;
        rest = rest.sub(&expand_c(&BiPoly::word(cword.clone())).scale(&c));
        out.add_term(cword, c);
    }
    if rest.is_zero() {
        Ok(out)
    } else {
        Err(format!("not in the composite-letter span, residual {rest}"))
    }
}

/// The algebra morphism sending each generator to its alternating
/// composition series,
/// `C_{k,m} -> sum ((-1)^{d+1}/d) (1/(n1!...nd!)) C_{l1,n1}...C_{ld,nd}`
/// over compositions `l` of `k` and weak compositions `n` of `m`.
pub fn log_star(p: &BiPoly) -> BiPoly {
    let mut out = BiPoly::zero();
    for (w, c) in p.terms() {
        let mut prod = BiPoly::one();
        for letter in w {
            prod = prod.conc(&log_star_letter(*letter));
            if prod.is_zero() {
                break;
            }
        }
        out = out.add(&prod.scale(c));
    }
    out
}

fn log_star_letter(c: BiLetter) -> BiPoly {
    let mut out = BiPoly::zero();
    for d in 1..=(c.k as usize) {
        let outer = Scalar::new(
            if d % 2 == 1 { 1.into() } else { (-1).into() },
            (d as i64).into(),
        );
        for l in compositions(c.k as i64, d) {
            for n in weak_compositions(c.m as i64, d) {
                let mut denom = Scalar::one();
                for &nj in &n {
                    denom *= Scalar::from_integer(factorial(nj));
                }
                let word: BiWord = l
                    .iter()
                    .zip(&n)
                    .map(|(&lj, &nj)| BiLetter::new(lj as u32, nj as u32))
                    .collect();
                out.add_term(word, outer.clone() / denom);
            }
        }
    }
    out
}

/// Depth-preserving monomial map into bimoulds:
/// `C_{k1,m1}...C_{kd,md} -> X1^{k1-1} Y1^{m1} ... Xd^{kd-1} Yd^{md}`.
pub fn rho_cbi(p: &BiPoly) -> Bimould {
    let mut out = Bimould::zero();
    for (w, c) in p.terms() {
        let d = w.len();
        let mut e = vec![0u32; 2 * d];
        for (j, l) in w.iter().enumerate() {
            e[2 * j] = l.k - 1;
            e[2 * j + 1] = l.m;
        }
        let mut comp = out.comp(d);
        comp.add_term(e, c.clone());
        out.set_comp(d, comp);
    }
    out
}

/// Inverse of the monomial map, defined on every bimould.
pub fn rho_cbi_inverse(b: &Bimould) -> BiPoly {
    let mut out = BiPoly::zero();
    for d in 0..=b.max_depth() {
        for (e, c) in b.comp(d).terms() {
            let mut w = Vec::with_capacity(d);
            for j in 0..d {
                let k = e.get(2 * j).copied().unwrap_or(0) + 1;
                let m = e.get(2 * j + 1).copied().unwrap_or(0);
                w.push(BiLetter::new(k, m));
            }
            out.add_term(w, c.clone());
        }
    }
    out
}

/// The composed homomorphism: composition series first, then the
/// monomial map.
pub fn rho_dbi(p: &BiPoly) -> Bimould {
    rho_cbi(&log_star(p))
}

/// Shuffle-primitivity of the monomial preimage up to `max_depth`: the
/// reduced shuffle coproduct of the truncation vanishes.
pub fn is_alternal(b: &Bimould, max_depth: usize) -> bool {
    let p = rho_cbi_inverse(&b.truncate_depth(max_depth));
    let mut reduced: BTreeMap<(BiWord, BiWord), Scalar> = BTreeMap::new();
    for (w, c) in p.terms() {
        let n = w.len();
        for mask in 1u64..((1u64 << n) - 1).max(1) {
            if n < 2 {
                break;
            }
            let left: BiWord = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| w[i]).collect();
            let right: BiWord = (0..n).filter(|i| mask & (1 << i) == 0).map(|i| w[i]).collect();
            let entry = reduced.entry((left, right)).or_insert_with(Scalar::zero);
            *entry += c.clone();
        }
    }
    reduced.values().all(Scalar::is_zero)
}

/// Pretty form as an `MPoly` family is already provided by `Bimould`;
/// this helper names a single generator image `p_{k,m}`.
pub fn p_gen(k: u32, m: u32) -> Bimould {
    let mut out = Bimould::zero();
    out.set_comp(
        1,
        MPoly::xvar(1).pow(k - 1).mul(&MPoly::yvar(1).pow(m)),
    );
    out
}
