//! Exact combinatorial kernels shared by the triangle actions: binomial
//! and multinomial coefficients, the signed multi-index multiplicity, the
//! Bernoulli-derived weight family for depth corrections, compositions,
//! threshold indices and formal index-sequence sums with their shuffle.

mod bernoulli;
mod binom;
mod multiplicity;
mod seq;
mod threshold;

pub use bernoulli::{b1, b_t, bernoulli, family_b1, family_bt, family_const1, MuFamily};
pub use binom::{binomial, factorial, multinomial};
pub use multiplicity::ari_mult;
pub use seq::{
    compositions, compositions_all, index_shuffle, reverse_signed, vectors_upto,
    weak_compositions, Seq, SeqSum,
};
pub use threshold::{
    ind_threshold, mu, mu_linear, threshold_identity_i, threshold_identity_ii, uri_mult,
};

/// Exact rational scalar; identical to the coefficient type of the
/// algebra crates.
pub type Scalar = num_rational::BigRational;
