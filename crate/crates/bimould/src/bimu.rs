use std::fmt;

use freealg::Scalar;
use serde_json::{json, Value};

use crate::mpoly::MPoly;

/// A sequence of polynomial components indexed by depth; the component in
/// depth `d` lives in the variables `X1, Y1, ..., Xd, Yd`. Only finitely
/// many components are nonzero and trailing zero components are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Bimould {
    comps: Vec<MPoly>,
}

impl Bimould {
    pub fn zero() -> Self {
        Bimould { comps: Vec::new() }
    }

    /// Neutral element for `mu`: the constant 1 in depth 0.
    pub fn unit() -> Self {
        Bimould::from_components(vec![MPoly::one()])
    }

    pub fn from_components(mut comps: Vec<MPoly>) -> Self {
        while comps.last().is_some_and(MPoly::is_zero) {
            comps.pop();
        }
        Bimould { comps }
    }

    pub fn comp(&self, d: usize) -> MPoly {
        self.comps.get(d).cloned().unwrap_or_else(MPoly::zero)
    }

    pub fn set_comp(&mut self, d: usize, p: MPoly) {
        if d >= self.comps.len() {
            if p.is_zero() {
                return;
            }
            self.comps.resize(d + 1, MPoly::zero());
        }
        self.comps[d] = p;
        while self.comps.last().is_some_and(MPoly::is_zero) {
            self.comps.pop();
        }
    }

    /// Largest depth with a nonzero component; zero for the zero bimould.
    pub fn max_depth(&self) -> usize {
        self.comps.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn add(&self, other: &Bimould) -> Bimould {
        let n = self.comps.len().max(other.comps.len());
        Bimould::from_components((0..n).map(|d| self.comp(d).add(&other.comp(d))).collect())
    }

    pub fn sub(&self, other: &Bimould) -> Bimould {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Bimould {
        Bimould {
            comps: self.comps.iter().map(MPoly::neg).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Bimould {
        Bimould::from_components(self.comps.iter().map(|p| p.scale(s)).collect())
    }

    /// Keep only the component in depth `d`.
    pub fn depth_component(&self, d: usize) -> Bimould {
        let mut out = Bimould::zero();
        out.set_comp(d, self.comp(d));
        out
    }

    /// Truncate away all components beyond depth `d`.
    pub fn truncate_depth(&self, d: usize) -> Bimould {
        Bimould::from_components(self.comps.iter().take(d + 1).cloned().collect())
    }
}

/// The convolution product: depth `d` of `mu(A, B)` splits the variable
/// pairs, `sum_i A_i(X1..Xi; Y1..Yi) B_{d-i}(X_{i+1}..X_d; Y_{i+1}..Y_d)`.
pub fn mu(a: &Bimould, b: &Bimould) -> Bimould {
    if a.is_zero() || b.is_zero() {
        return Bimould::zero();
    }
    let n = a.max_depth() + b.max_depth();
    let mut comps = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let mut acc = MPoly::zero();
        for i in 0..=d {
            let left = a.comp(i);
            let right = b.comp(d - i);
            if left.is_zero() || right.is_zero() {
                continue;
            }
            acc = acc.add(&left.mul(&right.shift_pairs(i)));
        }
        comps.push(acc);
    }
    Bimould::from_components(comps)
}

/// Commutator bracket for `mu`.
pub fn bracket_mu(a: &Bimould, b: &Bimould) -> Bimould {
    mu(a, b).sub(&mu(b, a))
}

impl Bimould {
    /// JSON form: a list of `{depth, terms: [{xexp, yexp, coeff}]}`
    /// entries, one per nonzero component.
    pub fn to_json(&self) -> Value {
        let mut comps = Vec::new();
        for (d, p) in self.comps.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let mut terms = Vec::new();
            for (e, c) in p.terms() {
                let mut xexp = vec![0u32; d];
                let mut yexp = vec![0u32; d];
                for (idx, &exp) in e.iter().enumerate() {
                    if idx % 2 == 0 {
                        xexp[idx / 2] = exp;
                    } else {
                        yexp[idx / 2] = exp;
                    }
                }
                terms.push(json!({"xexp": xexp, "yexp": yexp, "coeff": c.to_string()}));
            }
            comps.push(json!({"depth": d, "terms": terms}));
        }
        Value::Array(comps)
    }

    pub fn from_json(v: &Value) -> Result<Bimould, String> {
        let arr = v.as_array().ok_or("expected a JSON array of components")?;
        let mut out = Bimould::zero();
        for entry in arr {
            let d = entry["depth"].as_u64().ok_or("missing depth")? as usize;
            let terms = entry["terms"].as_array().ok_or("missing terms")?;
            let mut p = out.comp(d);
            for t in terms {
                let xexp = exp_list(&t["xexp"], d)?;
                let yexp = exp_list(&t["yexp"], d)?;
                let coeff: Scalar = t["coeff"]
                    .as_str()
                    .ok_or("coeff must be a string")?
                    .parse()
                    .map_err(|e| format!("bad coefficient: {e}"))?;
                let mut e = vec![0u32; 2 * d];
                for i in 0..d {
                    e[2 * i] = xexp[i];
                    e[2 * i + 1] = yexp[i];
                }
                p.add_term(e, coeff);
            }
            out.set_comp(d, p);
        }
        Ok(out)
    }
}

fn exp_list(v: &Value, d: usize) -> Result<Vec<u32>, String> {
    let arr = v.as_array().ok_or("exponents must be an array")?;
    if arr.len() != d {
        return Err(format!("expected {d} exponents, got {}", arr.len()));
    }
    arr.iter()
        .map(|x| x.as_u64().map(|n| n as u32).ok_or_else(|| "bad exponent".to_string()))
        .collect()
}

impl fmt::Display for Bimould {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (d, p) in self.comps.iter().enumerate() {
            if d > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ", 0, ...)")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use freealg::q;

    #[test]
    fn unit_is_neutral() {
        let mut a = Bimould::zero();
        a.set_comp(2, MPoly::xvar(1).mul(&MPoly::yvar(2)).add(&MPoly::one()));
        assert_eq!(mu(&Bimould::unit(), &a), a);
        assert_eq!(mu(&a, &Bimould::unit()), a);
    }

    #[test]
    fn mu_splits_variables() {
        // depth-1 times depth-1: X1 * Y1 placed as X1 Y2
        let mut a = Bimould::zero();
        a.set_comp(1, MPoly::xvar(1));
        let mut b = Bimould::zero();
        b.set_comp(1, MPoly::yvar(1));
        let prod = mu(&a, &b);
        assert_eq!(prod.comp(2), MPoly::xvar(1).mul(&MPoly::yvar(2)));
        assert!(prod.comp(1).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let mut a = Bimould::zero();
        a.set_comp(1, MPoly::xvar(1).pow(2).scale(&q(3)));
        a.set_comp(2, MPoly::xvar(1).add(&MPoly::yvar(2)).scale(&(-q(1) / q(2))));
        let back = Bimould::from_json(&a.to_json()).unwrap();
        assert_eq!(a, back);
    }
}
