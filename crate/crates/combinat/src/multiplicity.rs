use num_bigint::BigInt;

use crate::binom::binomial;
use crate::Scalar;

/// The signed multi-index multiplicity
/// `m_{k,l} = (-1)^{|k|+|l|} prod_i c(k_i, l_i)` for equal-length
/// multi-indices over the nonnegative integers, where `c(k, l)` is
/// `binom(k-1, l-1)` with the conventions `c(0, 0) = 1` and `c(k, l) = 0`
/// when exactly one of the entries vanishes. In particular the value is
/// nonzero only when `l <= k` entrywise, and `m_{(),()} = 1`.
pub fn ari_mult(k: &[i64], l: &[i64]) -> Scalar {
    assert_eq!(k.len(), l.len(), "multi-index length mismatch");
    let mut acc = BigInt::from(1);
    for (&ki, &li) in k.iter().zip(l) {
        debug_assert!(ki >= 0 && li >= 0);
        let factor = if ki == 0 && li == 0 {
            BigInt::from(1)
        } else if ki == 0 || li == 0 {
            BigInt::from(0)
        } else {
            binomial(ki - 1, li - 1)
        };
        if factor == BigInt::from(0) {
            return Scalar::from_integer(BigInt::from(0));
        }
        acc *= factor;
    }
    let total: i64 = k.iter().sum::<i64>() + l.iter().sum::<i64>();
    if total % 2 != 0 {
        acc = -acc;
    }
    Scalar::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_integer(BigInt::from(n))
    }

    #[test]
    fn base_cases() {
        assert_eq!(ari_mult(&[], &[]), q(1));
        assert_eq!(ari_mult(&[0], &[0]), q(1));
        assert_eq!(ari_mult(&[3], &[0]), q(0));
        assert_eq!(ari_mult(&[0], &[2]), q(0));
        assert_eq!(ari_mult(&[1], &[1]), q(1));
        assert_eq!(ari_mult(&[3], &[2]), q(-2));
        assert_eq!(ari_mult(&[2], &[3]), q(0));
    }

    #[test]
    fn multiplicative_over_splits() {
        let k = [3, 0, 2, 5];
        let l = [1, 0, 2, 4];
        let whole = ari_mult(&k, &l);
        let split = ari_mult(&k[..2], &l[..2]) * ari_mult(&k[2..], &l[2..]);
        assert_eq!(whole, split);
        // invariant under a common permutation of positions
        let kp = [5, 2, 0, 3];
        let lp = [4, 2, 0, 1];
        assert_eq!(whole, ari_mult(&kp, &lp));
    }
}
