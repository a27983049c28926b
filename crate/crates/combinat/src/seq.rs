use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::Scalar;

/// An integer index sequence.
pub type Seq = Vec<i64>;

/// A formal rational linear combination of index sequences.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SeqSum {
    terms: BTreeMap<Seq, Scalar>,
}

impl SeqSum {
    pub fn zero() -> Self {
        SeqSum {
            terms: BTreeMap::new(),
        }
    }

    pub fn of(seq: Seq) -> Self {
        let mut s = SeqSum::zero();
        s.add_term(seq, Scalar::one());
        s
    }

    pub fn add_term(&mut self, seq: Seq, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(seq).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Seq, &Scalar)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &SeqSum) -> SeqSum {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> SeqSum {
        let mut out = SeqSum::zero();
        for (seq, c) in &self.terms {
            out.add_term(seq.clone(), c * s);
        }
        out
    }

    /// Bilinear concatenation.
    pub fn concat(&self, other: &SeqSum) -> SeqSum {
        let mut out = SeqSum::zero();
        for (s1, c1) in &self.terms {
            for (s2, c2) in &other.terms {
                let mut s = s1.clone();
                s.extend_from_slice(s2);
                out.add_term(s, c1 * c2);
            }
        }
        out
    }

    /// Bilinear shuffle with multiplicities.
    pub fn shuffle(&self, other: &SeqSum) -> SeqSum {
        let mut out = SeqSum::zero();
        for (s1, c1) in &self.terms {
            for (s2, c2) in &other.terms {
                let c = c1 * c2;
                shuffle_into(s1, s2, &mut Vec::new(), &c, &mut out);
            }
        }
        out
    }
}

fn shuffle_into(a: &[i64], b: &[i64], acc: &mut Vec<i64>, coeff: &Scalar, out: &mut SeqSum) {
    if a.is_empty() || b.is_empty() {
        let mut s = acc.clone();
        s.extend_from_slice(a);
        s.extend_from_slice(b);
        out.add_term(s, coeff.clone());
        return;
    }
    acc.push(a[0]);
    shuffle_into(&a[1..], b, acc, coeff, out);
    acc.pop();
    acc.push(b[0]);
    shuffle_into(a, &b[1..], acc, coeff, out);
    acc.pop();
}

/// Shuffle of two plain sequences, e.g. `(3,2) sh (2) = 2(3,2,2) + (2,3,2)`.
pub fn index_shuffle(a: &[i64], b: &[i64]) -> SeqSum {
    SeqSum::of(a.to_vec()).shuffle(&SeqSum::of(b.to_vec()))
}

/// Signed reversal: `(k_1, ..., k_d)` maps to `(-1)^d (k_d, ..., k_1)`.
pub fn reverse_signed(a: &[i64]) -> SeqSum {
    let mut rev = a.to_vec();
    rev.reverse();
    let sign = if a.len() % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    };
    let mut out = SeqSum::zero();
    out.add_term(rev, sign);
    out
}

/// Compositions of `n` into exactly `len` parts, each at least `1`.
pub fn compositions(n: i64, len: usize) -> Vec<Seq> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    comp_rec(n, len, 1, &mut prefix, &mut out);
    out
}

/// Compositions of `n` into exactly `len` parts, each at least `0`.
pub fn weak_compositions(n: i64, len: usize) -> Vec<Seq> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    comp_rec(n, len, 0, &mut prefix, &mut out);
    out
}

fn comp_rec(rem: i64, slots: usize, min: i64, prefix: &mut Vec<i64>, out: &mut Vec<Seq>) {
    if slots == 0 {
        if rem == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    let reserve = min * (slots as i64 - 1);
    let mut part = min;
    while part <= rem - reserve {
        prefix.push(part);
        comp_rec(rem - part, slots - 1, min, prefix, out);
        prefix.pop();
        part += 1;
    }
}

/// Compositions of `n` of every positive length (entries at least `1`).
pub fn compositions_all(n: i64) -> Vec<Seq> {
    let mut out = Vec::new();
    for len in 1..=n.max(0) as usize {
        out.extend(compositions(n, len));
    }
    out
}

/// All vectors `l` with `0 <= l <= k` entrywise.
pub fn vectors_upto(k: &[i64]) -> Vec<Seq> {
    let mut out = vec![Vec::new()];
    for &ki in k {
        let mut next = Vec::with_capacity(out.len() * (ki as usize + 1));
        for prefix in &out {
            for li in 0..=ki {
                let mut v = prefix.clone();
                v.push(li);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial;
    use num_bigint::BigInt;

    fn q(n: i64) -> Scalar {
        Scalar::from_integer(BigInt::from(n))
    }

    #[test]
    fn shuffle_with_multiplicities() {
        let got = index_shuffle(&[3, 2], &[2]);
        let mut expected = SeqSum::zero();
        expected.add_term(vec![3, 2, 2], q(2));
        expected.add_term(vec![2, 3, 2], q(1));
        assert_eq!(got, expected);
    }

    #[test]
    fn signed_reversal() {
        let mut expected = SeqSum::zero();
        expected.add_term(vec![2, 1], q(1));
        assert_eq!(reverse_signed(&[1, 2]), expected);
        let mut expected = SeqSum::zero();
        expected.add_term(vec![3, 2, 1], q(-1));
        assert_eq!(reverse_signed(&[1, 2, 3]), expected);
    }

    #[test]
    fn composition_counts() {
        // #C^s(n) = binom(n-1, s-1)
        for n in 1..=9i64 {
            for s in 1..=n as usize {
                assert_eq!(
                    BigInt::from(compositions(n, s).len()),
                    binomial(n - 1, s as i64 - 1)
                );
            }
        }
        assert_eq!(compositions_all(4).len(), 8);
        assert_eq!(weak_compositions(2, 3).len(), 6);
        assert_eq!(compositions(3, 5), Vec::<Seq>::new());
    }

    #[test]
    fn boxed_vectors() {
        assert_eq!(vectors_upto(&[1, 2]).len(), 6);
        assert_eq!(vectors_upto(&[]), vec![Vec::<i64>::new()]);
    }
}
