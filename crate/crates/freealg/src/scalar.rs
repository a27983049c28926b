use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar; `BigRational` keeps values in lowest terms.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn q(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational scalar `n/d`.
pub fn qr(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
