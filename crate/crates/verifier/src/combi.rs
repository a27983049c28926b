use combinat::{
    ari_mult, b1, binomial, compositions, ind_threshold, mu, uri_mult, vectors_upto, Scalar,
};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;

use crate::report::{check_all, expect_eq, Suite, VerificationReport};

/// The signed multiplicity with the zero extension to arbitrary integer
/// entries; identities below produce shifted indices that may go
/// negative, where every factor vanishes.
fn m_ext(k: &[i64], l: &[i64]) -> Scalar {
    if k.iter().chain(l).any(|&x| x < 0) {
        return Scalar::zero();
    }
    ari_mult(k, l)
}

fn m_scalar(a: i64, b: i64) -> Scalar {
    m_ext(&[a], &[b])
}

fn vectors(max_entry: i64, len: usize) -> Vec<Vec<i64>> {
    vectors_upto(&vec![max_entry; len])
}

fn binom_vec(d: &[i64], r: &[i64]) -> BigInt {
    d.iter().zip(r).map(|(&di, &ri)| binomial(di, ri)).product()
}

/// Exhaustive checks of the multiplicity and threshold identities within
/// fixed entry and length bounds.
pub fn verify_combinatorial() -> VerificationReport {
    let mut suite = Suite::new("combinatorial", json!({}), false);

    // nonvanishing pattern: a product entry survives iff both indices
    // vanish or both are positive with l <= k
    let mut instances: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    for len in 1..=3usize {
        for k in vectors(5, len) {
            for l in vectors(5, len) {
                instances.push((k.clone(), l.clone()));
            }
        }
    }
    let (count, failures) = check_all(&instances, |(k, l)| {
        let nonzero = !ari_mult(k, l).is_zero();
        let predicted = k
            .iter()
            .zip(l)
            .all(|(&ki, &li)| (ki == 0 && li == 0) || (ki >= 1 && 1 <= li && li <= ki));
        expect_eq(
            json!({ "identity": "nonvanishing", "k": k, "l": l }),
            &predicted,
            &nonzero,
        )
    });
    suite.record(count, failures);

    // multiplicativity over splits
    let mut instances: Vec<(Vec<i64>, Vec<i64>, Vec<i64>, Vec<i64>)> = Vec::new();
    for k1 in vectors(3, 2) {
        for l1 in vectors(3, 2) {
            for k2 in vectors(3, 1) {
                for l2 in vectors(3, 1) {
                    instances.push((k1.clone(), l1.clone(), k2.clone(), l2.clone()));
                }
            }
        }
    }
    let (count, failures) = check_all(&instances, |(k1, l1, k2, l2)| {
        let mut k = k1.clone();
        k.extend(k2);
        let mut l = l1.clone();
        l.extend(l2);
        expect_eq(
            json!({ "identity": "multiplicativity", "k": k, "l": l }),
            &(ari_mult(k1, l1) * ari_mult(k2, l2)),
            &ari_mult(&k, &l),
        )
    });
    suite.record(count, failures);

    // m_{k,r} m_{r,l} = (-1)^{|k|+|r|} m_{k,l} m_{k-l+1, r-l+1}
    for len in 1..=3usize {
        let vs = vectors(4, len);
        let mut instances: Vec<(Vec<i64>, Vec<i64>, Vec<i64>)> = Vec::new();
        for k in &vs {
            for r in &vs {
                for l in &vs {
                    instances.push((k.clone(), r.clone(), l.clone()));
                }
            }
        }
        let (count, failures) = check_all(&instances, |(k, r, l)| {
            let lhs = ari_mult(k, r) * ari_mult(r, l);
            let shift = |a: &[i64], b: &[i64]| -> Vec<i64> {
                a.iter().zip(b).map(|(&x, &y)| x - y + 1).collect()
            };
            let sign: i64 = k.iter().sum::<i64>() + r.iter().sum::<i64>();
            let mut rhs = ari_mult(k, l) * m_ext(&shift(k, l), &shift(r, l));
            if sign % 2 != 0 {
                rhs = -rhs;
            }
            expect_eq(
                json!({ "identity": "composed multiplicities", "k": k, "r": r, "l": l }),
                &rhs,
                &lhs,
            )
        });
        suite.record(count, failures);
    }

    // sum_r (-1)^{|k|+|r|} m_{k+1, r+1} m_{a+|k-r|, b} = m_{a, b-|k|}
    // at a = 0 the degenerate multiplicity conventions break the
    // identity (k = (1), a = b = 0 gives 1 vs 0), so a stays positive
    let mut instances: Vec<(i64, i64, Vec<i64>)> = Vec::new();
    for len in 1..=3usize {
        for k in vectors(6, len) {
            if k.iter().sum::<i64>() > 6 {
                continue;
            }
            for a in 1..=6i64 {
                for b in 0..=6i64 {
                    instances.push((a, b, k.clone()));
                }
            }
        }
    }
    let (count, failures) = check_all(&instances, |(a, b, k)| {
        let ksum: i64 = k.iter().sum();
        let mut lhs = Scalar::zero();
        // m_{k+1, r+1} vanishes unless r <= k entrywise
        for r in vectors_upto(k) {
            let rsum: i64 = r.iter().sum();
            let kp: Vec<i64> = k.iter().map(|&x| x + 1).collect();
            let rp: Vec<i64> = r.iter().map(|&x| x + 1).collect();
            let mut term = ari_mult(&kp, &rp) * m_scalar(a + ksum - rsum, *b);
            if (ksum + rsum) % 2 != 0 {
                term = -term;
            }
            lhs += term;
        }
        expect_eq(
            json!({ "identity": "telescoping sum", "a": a, "b": b, "k": k }),
            &m_scalar(*a, b - ksum),
            &lhs,
        )
    });
    suite.record(count, failures);

    // sum_r (-1)^r binom(d, r) binom(n+d-r-1, b-1) = binom(n-1, b-d-1)
    let mut instances: Vec<(i64, i64, i64)> = Vec::new();
    for d in 0..=10i64 {
        for b in 1..=10i64 {
            for n in 1..=10i64 {
                instances.push((d, b, n));
            }
        }
    }
    let (count, failures) = check_all(&instances, |&(d, b, n)| {
        let mut lhs = BigInt::from(0);
        for r in 0..=d {
            let term = binomial(d, r) * binomial(n + d - r - 1, b - 1);
            if r % 2 == 0 {
                lhs += term;
            } else {
                lhs -= term;
            }
        }
        expect_eq(
            json!({ "identity": "alternating binomial sum", "d": d, "b": b, "n": n }),
            &binomial(n - 1, b - d - 1),
            &lhs,
        )
    });
    suite.record(count, failures);

    // threshold-restricted composition sum collapses to one binomial
    let mut instances: Vec<(Vec<i64>, Vec<i64>, i64, usize)> = Vec::new();
    for l in 1..=2usize {
        for d in vectors(4, l) {
            for s in 1..=3usize {
                for b in vectors(4, s).into_iter().filter(|b| b.iter().all(|&x| x >= 1)) {
                    for n in 1..=4i64 {
                        for j in 1..=s {
                            instances.push((d.clone(), b.clone(), n, j));
                        }
                    }
                }
            }
        }
    }
    let (count, failures) = check_all(&instances, |(d, b, n, j)| {
        let dsum: i64 = d.iter().sum();
        let bsum: i64 = b.iter().sum();
        let s = b.len();
        let mut lhs = BigInt::from(0);
        for r in vectors_upto(d) {
            let rsum: i64 = r.iter().sum();
            let mut coeff = binom_vec(d, &r);
            if (dsum - rsum) % 2 != 0 {
                coeff = -coeff;
            }
            let mut inner = BigInt::from(0);
            for a in compositions(n + rsum, s) {
                if ind_threshold(*n, &a) != *j {
                    continue;
                }
                let prod: BigInt = a
                    .iter()
                    .zip(b)
                    .map(|(&ai, &bi)| binomial(ai - 1, bi - 1))
                    .product();
                inner += prod;
            }
            lhs += coeff * inner;
        }
        let rhs = if *j == ind_threshold(bsum - dsum, b) {
            binomial(n - 1, bsum - dsum - 1)
        } else {
            BigInt::from(0)
        };
        expect_eq(
            json!({ "identity": "threshold composition sum", "d": d, "b": b, "n": n, "j": j }),
            &rhs,
            &lhs,
        )
    });
    suite.record(count, failures);

    // descent identity tying the two multiplicity families together
    let mut instances: Vec<(Vec<i64>, Vec<i64>, i64)> = Vec::new();
    for l in 1..=2usize {
        for d in vectors(3, l).into_iter().filter(|d| d.iter().all(|&x| x >= 1)) {
            for s in 1..=3usize {
                for b in vectors(3, s).into_iter().filter(|b| b.iter().all(|&x| x >= 1)) {
                    for a in 1..=4i64 {
                        instances.push((d.clone(), b.clone(), a));
                    }
                }
            }
        }
    }
    let (count, failures) = check_all(&instances, |(d, b, a)| {
        let dsum: i64 = d.iter().sum();
        let bsum: i64 = b.iter().sum();
        let s = b.len();
        let mut lhs = Scalar::zero();
        for r in vectors_upto(d) {
            let rsum: i64 = r.iter().sum();
            let dp: Vec<i64> = d.iter().map(|&x| x + 1).collect();
            let rp: Vec<i64> = r.iter().map(|&x| x + 1).collect();
            let outer = ari_mult(&dp, &rp);
            if outer.is_zero() {
                continue;
            }
            let mut inner = Scalar::zero();
            for alpha in compositions(a + dsum - rsum, s) {
                let weight = uri_mult(*a, &alpha);
                if weight.is_zero() {
                    continue;
                }
                inner += ari_mult(&alpha, b) * weight;
            }
            if (dsum + rsum) % 2 != 0 {
                inner = -inner;
            }
            lhs += outer * inner;
        }
        let t = bsum - dsum;
        let rhs = if t >= 1 {
            m_scalar(*a, t) * uri_mult(t, b)
        } else {
            Scalar::zero()
        };
        expect_eq(
            json!({ "identity": "descent identity", "d": d, "b": b, "a": a }),
            &rhs,
            &lhs,
        )
    });
    suite.record(count, failures);

    // composition counting by threshold index
    let mut instances: Vec<(i64, i64, usize, usize)> = Vec::new();
    for n in 1..=6i64 {
        for r in 0..=6i64 {
            for s in 1..=5usize {
                for j in 1..=s {
                    instances.push((n, r, s, j));
                }
            }
        }
    }
    let (count, failures) = check_all(&instances, |&(n, r, s, j)| {
        let observed = compositions(n + r, s)
            .into_iter()
            .filter(|a| ind_threshold(n, a) == j)
            .count();
        let predicted = binomial(n - 1, j as i64 - 1) * binomial(r, s as i64 - j as i64);
        expect_eq(
            json!({ "identity": "composition count", "n": n, "r": r, "s": s, "j": j }),
            &predicted,
            &BigInt::from(observed),
        )
    });
    suite.record(count, failures);

    // weight family endpoint facts
    let mut instances: Vec<(usize, usize)> = Vec::new();
    for m in 1..=12usize {
        for n in 1..=m {
            instances.push((m, n));
        }
    }
    let (count, failures) = check_all(&instances, |&(m, n)| {
        let value = b1(m, n);
        if n == 1 {
            let expected = Scalar::from_integer(BigInt::from(1))
                / Scalar::from_integer(combinat::factorial(m as i64));
            return expect_eq(json!({ "identity": "first column", "m": m }), &expected, &value);
        }
        if n == m && m >= 2 {
            return expect_eq(
                json!({ "identity": "vanishing diagonal", "m": m }),
                &Scalar::zero(),
                &value,
            );
        }
        None
    });
    suite.record(count, failures);

    // the mu conventions on degenerate arguments
    let fam = combinat::family_b1();
    let conventions: Vec<(i64, Vec<i64>, Scalar)> = vec![
        (0, vec![1, 2], Scalar::zero()),
        (2, vec![], Scalar::zero()),
        (2, vec![1, 0, 3], Scalar::zero()),
        (9, vec![1, 2], Scalar::zero()),
        (1, vec![1], Scalar::from_integer(BigInt::from(1))),
    ];
    for (a, alpha, expected) in conventions {
        suite.instance(expect_eq(
            json!({ "identity": "mu conventions", "a": a, "alpha": alpha }),
            &expected,
            &mu(&fam, a, &alpha),
        ));
    }

    suite.finish()
}
