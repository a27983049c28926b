use std::collections::BTreeMap;
use std::fmt;

use freealg::Scalar;
use num_traits::{One, Zero};

/// Exponent vector over the interleaved variables `X1, Y1, X2, Y2, ...`;
/// entry `2i` is the exponent of `X_{i+1}` and entry `2i + 1` of
/// `Y_{i+1}`. Trailing zeros are trimmed.
pub type Exp = Vec<u32>;

fn trim(e: &mut Exp) {
    while e.last() == Some(&0) {
        e.pop();
    }
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Exp, Scalar>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        MPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = MPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn monomial(mut e: Exp, c: Scalar) -> Self {
        trim(&mut e);
        let mut p = MPoly::zero();
        p.add_term(e, c);
        p
    }

    /// The variable with interleaved index `idx`.
    pub fn var(idx: usize) -> Self {
        let mut e = vec![0u32; idx + 1];
        e[idx] = 1;
        MPoly::monomial(e, Scalar::one())
    }

    /// `X_i`, 1-based.
    pub fn xvar(i: usize) -> Self {
        MPoly::var(2 * (i - 1))
    }

    /// `Y_i`, 1-based.
    pub fn yvar(i: usize) -> Self {
        MPoly::var(2 * i - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> Scalar {
        let mut key = e.to_vec();
        trim(&mut key);
        self.terms.get(&key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, mut e: Exp, c: Scalar) {
        if c.is_zero() {
            return;
        }
        trim(&mut e);
        let entry = self.terms.entry(e.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> MPoly {
        if s.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = vec![0u32; e1.len().max(e2.len())];
                for (i, v) in e1.iter().enumerate() {
                    e[i] += v;
                }
                for (i, v) in e2.iter().enumerate() {
                    e[i] += v;
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut out = MPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Reindex every variable pair up by `by`, so a polynomial in
    /// `X1..Xj, Y1..Yj` becomes one in `X_{by+1}..X_{by+j}, ...`.
    pub fn shift_pairs(&self, by: usize) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut shifted = vec![0u32; 2 * by];
                    shifted.extend(e);
                    (shifted, c.clone())
                })
                .collect(),
        }
    }

    /// Substitute `X_i -> xs[i-1]` and `Y_i -> ys[i-1]`.
    pub fn eval_pairs(&self, xs: &[MPoly], ys: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let mut prod = MPoly::constant(c.clone());
            for (idx, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let base = if idx % 2 == 0 { &xs[idx / 2] } else { &ys[idx / 2] };
                prod = prod.mul(&base.pow(exp));
            }
            out = out.add(&prod);
        }
        out
    }

    /// Exact division by the linear binomial `var(num) - var(den)`.
    /// Errors when the remainder is nonzero.
    pub fn divide_exact(&self, num: usize, den: usize) -> Result<MPoly, String> {
        let divisor = MPoly::var(num).sub(&MPoly::var(den));
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        loop {
            let lead = rem
                .terms
                .iter()
                .find(|(e, _)| e.len() > num && e[num] > 0)
                .map(|(e, c)| (e.clone(), c.clone()));
            let Some((e, c)) = lead else { break };
            let mut qe = e.clone();
            qe[num] -= 1;
            let qmono = MPoly::monomial(qe, c);
            quot = quot.add(&qmono);
            rem = rem.sub(&qmono.mul(&divisor));
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(format!("nonzero remainder {rem} after dividing by linear factor"))
        }
    }
}

fn write_mono(f: &mut fmt::Formatter<'_>, e: &[u32]) -> fmt::Result {
    let mut first = true;
    for (idx, &exp) in e.iter().enumerate() {
        if exp == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        let (name, i) = if idx % 2 == 0 { ("X", idx / 2 + 1) } else { ("Y", idx / 2 + 1) };
        write!(f, "{name}{i}")?;
        if exp > 1 {
            write!(f, "^{exp}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
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
            if e.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_mono(f, e)?;
            }
        }
        Ok(())
    }
}
