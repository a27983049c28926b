use combinat::{b1, binomial, compositions, ind_threshold, Scalar};
use num_bigint::BigInt;

fn qr(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn weight_family_table_up_to_ten() {
    let table: Vec<Vec<Scalar>> = vec![
        vec![qr(1, 1)],
        vec![qr(1, 2), qr(0, 1)],
        vec![qr(1, 6), qr(-1, 12), qr(0, 1)],
        vec![qr(1, 24), qr(-1, 24), qr(0, 1), qr(0, 1)],
        vec![qr(1, 120), qr(-1, 80), qr(1, 720), qr(1, 720), qr(0, 1)],
        vec![
            qr(1, 720),
            qr(-1, 360),
            qr(1, 1440),
            qr(1, 1440),
            qr(0, 1),
            qr(0, 1),
        ],
        vec![
            qr(1, 5040),
            qr(-1, 2016),
            qr(1, 5040),
            qr(1, 5040),
            qr(-1, 30240),
            qr(-1, 30240),
            qr(0, 1),
        ],
        vec![
            qr(1, 40320),
            qr(-1, 13440),
            qr(1, 24192),
            qr(1, 24192),
            qr(-1, 60480),
            qr(-1, 60480),
            qr(0, 1),
            qr(0, 1),
        ],
        vec![
            qr(1, 362880),
            qr(-1, 103680),
            qr(1, 145152),
            qr(1, 145152),
            qr(-17, 3628800),
            qr(-17, 3628800),
            qr(1, 1209600),
            qr(1, 1209600),
            qr(0, 1),
        ],
        vec![
            qr(1, 3628800),
            qr(-1, 907200),
            qr(1, 1036800),
            qr(1, 1036800),
            qr(-1, 1036800),
            qr(-1, 1036800),
            qr(1, 2419200),
            qr(1, 2419200),
            qr(0, 1),
            qr(0, 1),
        ],
    ];
    for (m, row) in table.iter().enumerate() {
        for (n, value) in row.iter().enumerate() {
            assert_eq!(&b1(m + 1, n + 1), value, "m={} n={}", m + 1, n + 1);
        }
    }
}

#[test]
fn threshold_count_of_compositions() {
    // #{a in C^s(n+r) with ind_n(a) = j} = binom(n-1, j-1) binom(r, s-j)
    for n in 1..=6i64 {
        for r in 0..=4i64 {
            for s in 1..=(n + r) as usize {
                for j in 1..=s as i64 {
                    let count = compositions(n + r, s)
                        .into_iter()
                        .filter(|a| ind_threshold(n, a) == j as usize)
                        .count();
                    let expected = binomial(n - 1, j - 1) * binomial(r, s as i64 - j);
                    assert_eq!(BigInt::from(count), expected, "n={n} r={r} s={s} j={j}");
                }
            }
        }
    }
}
