use num_traits::Zero;

use crate::bernoulli::{b1, MuFamily};
use crate::seq::{reverse_signed, SeqSum};
use crate::Scalar;

/// Threshold index: the smallest `j` (1-based) with
/// `alpha_1 + ... + alpha_j >= a`, or `0` when no prefix reaches `a`.
pub fn ind_threshold(a: i64, alpha: &[i64]) -> usize {
    let mut acc = 0i64;
    for (j, &x) in alpha.iter().enumerate() {
        acc += x;
        if acc >= a {
            return j + 1;
        }
    }
    0
}

/// Threshold weight of a family: `family(len(alpha), ind_a(alpha))`.
///
/// The value is zero when `alpha` is empty, when `a < 1`, when some entry
/// is below `1`, or when the threshold index is `0`; whenever an inserted
/// entry would make the companion factor vanish this convention makes the
/// whole product vanish consistently.
pub fn mu(family: &MuFamily, a: i64, alpha: &[i64]) -> Scalar {
    if alpha.is_empty() || a < 1 || alpha.iter().any(|&x| x < 1) {
        return Scalar::zero();
    }
    let ind = ind_threshold(a, alpha);
    if ind == 0 {
        return Scalar::zero();
    }
    family(alpha.len(), ind)
}

/// Linear extension of `mu` in the sequence argument.
pub fn mu_linear(family: &MuFamily, a: i64, sum: &SeqSum) -> Scalar {
    let mut acc = Scalar::zero();
    for (seq, c) in sum.terms() {
        let v = mu(family, a, seq);
        if !v.is_zero() {
            acc += c * v;
        }
    }
    acc
}

/// The default threshold weight built on the Bernoulli-derived family.
pub fn uri_mult(a: i64, alpha: &[i64]) -> Scalar {
    if alpha.is_empty() || a < 1 || alpha.iter().any(|&x| x < 1) {
        return Scalar::zero();
    }
    let ind = ind_threshold(a, alpha);
    if ind == 0 {
        return Scalar::zero();
    }
    b1(alpha.len(), ind)
}

fn seq_sum(seq: &[i64]) -> i64 {
    seq.iter().sum()
}

fn deconcats(seq: &[i64]) -> Vec<(Vec<i64>, Vec<i64>)> {
    (0..=seq.len())
        .map(|i| (seq[..i].to_vec(), seq[i..].to_vec()))
        .collect()
}

/// Two-sequence threshold identity. Returns `(lhs, rhs)`, which agree for
/// every family satisfying the threshold relations:
/// `lhs = mu_{t, sigma sh theta}` with `t = |sigma| + |theta| - d1 - d2`,
/// and `rhs` sums over deconcatenations `sigma = s1 s2`, `theta = t1 t2`
/// the two insertion terms built from the middle entries `|s2| - d1` and
/// `|t2| - d2`.
pub fn threshold_identity_i(
    family: &MuFamily,
    d1: i64,
    d2: i64,
    sigma: &[i64],
    theta: &[i64],
) -> (Scalar, Scalar) {
    let t = seq_sum(sigma) + seq_sum(theta) - d1 - d2;
    let lhs = mu_linear(
        family,
        t,
        &SeqSum::of(sigma.to_vec()).shuffle(&SeqSum::of(theta.to_vec())),
    );
    let mut rhs = Scalar::zero();
    for (s1, s2) in deconcats(sigma) {
        for (t1, t2) in deconcats(theta) {
            let prefix = SeqSum::of(s1.clone()).shuffle(&SeqSum::of(t1.clone()));

            let a1 = seq_sum(&s2) - d1;
            let f1 = mu(family, a1, &s2);
            if !f1.is_zero() {
                let arg = prefix
                    .concat(&SeqSum::of(vec![a1]))
                    .concat(&SeqSum::of(t2.clone()));
                rhs += f1 * mu_linear(family, t, &arg);
            }

            let a2 = seq_sum(&t2) - d2;
            let f2 = mu(family, a2, &t2);
            if !f2.is_zero() {
                let arg = prefix
                    .concat(&SeqSum::of(vec![a2]))
                    .concat(&SeqSum::of(s2.clone()));
                rhs += f2 * mu_linear(family, t, &arg);
            }
        }
    }
    (lhs, rhs)
}

/// Three-sequence threshold identity; the returned value vanishes for
/// every family satisfying the threshold relations. The sum runs over
/// deconcatenations of all three sequences, with the signed reversals of
/// `tau_1`, `theta_1` and `theta_2` entering through shuffles.
pub fn threshold_identity_ii(
    family: &MuFamily,
    d1: i64,
    d2: i64,
    sigma: &[i64],
    tau: &[i64],
    theta: &[i64],
) -> Scalar {
    let t = seq_sum(sigma) + seq_sum(tau) + seq_sum(theta) - d1 - d2;
    let mut total = Scalar::zero();
    for (s1, s2) in deconcats(sigma) {
        for (t1, t2) in deconcats(tau) {
            for (h1, h2) in deconcats(theta) {
                let prefix = SeqSum::of(s1.clone()).shuffle(&reverse_signed(&h2));
                let left_mid = SeqSum::of(s2.clone()).shuffle(&reverse_signed(&t1));
                let right_mid = SeqSum::of(t2.clone()).shuffle(&reverse_signed(&h1));

                let a1 = seq_sum(&s2) + seq_sum(&t1) - d1;
                let f1 = mu_linear(family, a1, &left_mid);
                if !f1.is_zero() {
                    let arg = prefix.concat(&SeqSum::of(vec![a1])).concat(&right_mid);
                    total += f1 * mu_linear(family, t, &arg);
                }

                let a2 = seq_sum(&t2) + seq_sum(&h1) - d2;
                let f2 = mu_linear(family, a2, &right_mid);
                if !f2.is_zero() {
                    let arg = prefix.concat(&SeqSum::of(vec![a2])).concat(&left_mid);
                    total += f2 * mu_linear(family, t, &arg);
                }
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::{family_b1, family_bt, family_const1};
    use num_bigint::BigInt;

    fn q(n: i64) -> Scalar {
        Scalar::from_integer(BigInt::from(n))
    }

    #[test]
    fn threshold_index_values() {
        assert_eq!(ind_threshold(4, &[1, 2, 4, 3]), 3);
        assert_eq!(ind_threshold(4, &[4, 1, 2, 3]), 1);
        assert_eq!(ind_threshold(5, &[1, 2]), 0);
        assert_eq!(ind_threshold(3, &[]), 0);
    }

    #[test]
    fn mu_conventions() {
        let fam = family_b1();
        assert!(mu(&fam, 0, &[1, 2]).is_zero());
        assert!(mu(&fam, 2, &[]).is_zero());
        assert!(mu(&fam, 2, &[1, 0, 3]).is_zero());
        assert!(mu(&fam, 9, &[1, 2]).is_zero());
        assert_eq!(mu(&fam, 1, &[1]), q(1));
        assert_eq!(uri_mult(4, &[1, 4, 2, 3]), b1(4, 2));
    }

    #[test]
    fn two_sequence_identity_worked_example() {
        // lhs expands to B(4,3) + 2 B(4,2) + 3 B(4,1)
        let fam = family_b1();
        let (lhs, rhs) = threshold_identity_i(&fam, 2, 4, &[1, 2], &[4, 3]);
        let expected = b1(4, 3) + q(2) * b1(4, 2) + q(3) * b1(4, 1);
        assert_eq!(lhs, expected);
        assert_eq!(lhs, rhs);
        // and the matching product form (2 B(3,1) + 3 B(3,2) + B(3,3)) B(2,1)
        let product = (q(2) * b1(3, 1) + q(3) * b1(3, 2) + b1(3, 3)) * b1(2, 1);
        assert_eq!(rhs, product);
    }

    #[test]
    fn three_sequence_identity_worked_example() {
        // the expansion collapses to
        // 6 B(4,4) B(3,2) + 9 B(3,3) B(4,3) + 21 B(4,4) B(3,3) - 15 B(6,6)
        let ones = family_const1();
        let got = threshold_identity_ii(&ones, 1, 2, &[2, 1], &[4, 3], &[5, 6]);
        assert_eq!(got, q(6 + 9 + 21 - 15));
        let fam = family_b1();
        let got = threshold_identity_ii(&fam, 1, 2, &[2, 1], &[4, 3], &[5, 6]);
        assert!(got.is_zero());
    }

    #[test]
    fn rescaled_family_satisfies_identities() {
        let fam = family_bt(Scalar::new(BigInt::from(-3), BigInt::from(2)));
        let (lhs, rhs) = threshold_identity_i(&fam, 1, 2, &[2, 1], &[3]);
        assert_eq!(lhs, rhs);
        assert!(threshold_identity_ii(&fam, 1, 1, &[2], &[3], &[1, 2]).is_zero());
    }
}
