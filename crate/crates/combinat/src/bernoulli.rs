use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::binom::{binomial, factorial};
use crate::Scalar;

static BERNOULLI_CACHE: Lazy<Mutex<Vec<Scalar>>> =
    Lazy::new(|| Mutex::new(vec![Scalar::one()]));

/// Bernoulli number `B_n` in the convention with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Scalar {
    let mut cache = BERNOULLI_CACHE.lock().unwrap();
    while cache.len() <= n {
        let m = cache.len();
        // B_m = -1/(m+1) * sum_{k<m} binom(m+1, k) B_k
        let mut acc = Scalar::zero();
        for (k, b) in cache.iter().enumerate() {
            acc += Scalar::from_integer(binomial(m as i64 + 1, k as i64)) * b;
        }
        let value = -acc / Scalar::from_integer(BigInt::from(m as i64 + 1));
        cache.push(value);
    }
    cache[n].clone()
}

/// The two-parameter weight `(1/m!) sum_{k=0}^{n-1} binom(m, k) B_k`,
/// defined for `m >= 1` and `n >= 1`; in particular the value at
/// `(1, 1)` is `1`, at `(r, 1)` it is `1/r!` and at `(r, r)` it vanishes
/// for `r >= 2`.
pub fn b1(m: usize, n: usize) -> Scalar {
    assert!(m >= 1 && n >= 1, "weight family defined for m, n >= 1");
    let mut acc = Scalar::zero();
    for k in 0..n {
        acc += Scalar::from_integer(binomial(m as i64, k as i64)) * bernoulli(k);
    }
    acc / Scalar::from_integer(factorial(m as i64))
}

/// The rescaled family `t^{m-1} b1(m, n)`, the unique homogeneous
/// deformation with value `1` at `(1, 1)`.
pub fn b_t(t: &Scalar, m: usize, n: usize) -> Scalar {
    let mut power = Scalar::one();
    for _ in 1..m {
        power *= t;
    }
    power * b1(m, n)
}

/// A weight family maps `(length, threshold index)` to a scalar.
pub type MuFamily = Box<dyn Fn(usize, usize) -> Scalar + Sync + Send>;

pub fn family_b1() -> MuFamily {
    Box::new(|m, n| b1(m, n))
}

pub fn family_bt(t: Scalar) -> MuFamily {
    Box::new(move |m, n| b_t(&t, m, n))
}

/// Constant family; satisfies the normalization at `(1, 1)` but not the
/// threshold identities, so it serves as a negative control.
pub fn family_const1() -> MuFamily {
    Box::new(|_, _| Scalar::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qr(n: i64, d: i64) -> Scalar {
        Scalar::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), qr(1, 1));
        assert_eq!(bernoulli(1), qr(-1, 2));
        assert_eq!(bernoulli(2), qr(1, 6));
        assert_eq!(bernoulli(3), qr(0, 1));
        assert_eq!(bernoulli(4), qr(-1, 30));
        assert_eq!(bernoulli(12), qr(-691, 2730));
    }

    #[test]
    fn b1_edge_values() {
        assert_eq!(b1(1, 1), qr(1, 1));
        for r in 1..=8usize {
            assert_eq!(b1(r, 1), qr(1, 1) / Scalar::from_integer(factorial(r as i64)));
            if r >= 2 {
                assert!(b1(r, r).is_zero());
            }
        }
    }

    #[test]
    fn b1_alternative_form() {
        // for m >= 2: b1(m, n) = -sum_{k=n}^{m-1} B_k / (k! (m-k)!)
        for m in 2..=9usize {
            for n in 1..=m {
                let mut acc = Scalar::zero();
                for k in n..m {
                    acc += bernoulli(k)
                        / Scalar::from_integer(factorial(k as i64) * factorial((m - k) as i64));
                }
                assert_eq!(b1(m, n), -acc, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn bt_specializes_to_b1() {
        let one = Scalar::one();
        for m in 1..=6usize {
            for n in 1..=m {
                assert_eq!(b_t(&one, m, n), b1(m, n));
            }
        }
        let t = qr(3, 2);
        assert_eq!(b_t(&t, 4, 2), t.clone() * &t * &t * b1(4, 2));
    }
}
