use num_bigint::BigInt;

/// `n!` as a big integer; panics for negative input.
pub fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of negative {n}");
    let mut acc = BigInt::from(1);
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient with the zero convention: `0` whenever `k < 0`,
/// `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

/// Extended multinomial `n` over `parts`: zero unless every part is
/// nonnegative and they sum to `n`.
pub fn multinomial(n: i64, parts: &[i64]) -> BigInt {
    if n < 0 || parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    let mut rem = n;
    for &p in parts {
        acc *= binomial(rem, p);
        rem -= p;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(4, 7), BigInt::from(0));
        assert_eq!(binomial(-1, 0), BigInt::from(0));
        assert_eq!(binomial(3, -1), BigInt::from(0));
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(4, &[2, 1, 1]), BigInt::from(12));
        assert_eq!(multinomial(4, &[2, 1]), BigInt::from(0));
        assert_eq!(multinomial(3, &[3, 0]), BigInt::from(1));
        assert_eq!(multinomial(3, &[4, -1]), BigInt::from(0));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
