//! The free noncommutative algebra over the alphabet `v0, v1, v2, ...`
//! with exact rational coefficients.
//!
//! Two Hopf structures live on the same space: (concatenation, shuffle
//! coproduct) and its graded dual (shuffle, deconcatenation). The module
//! also provides the antipode, the coefficient pairing, iterated
//! coproducts, nested Lie brackets and basis enumeration by weight.

mod poly;
mod scalar;
mod tensor;
mod text;
mod word;

pub use poly::{basis_words, nested_bracket, nested_bracket_direct, sandwich, Poly};
pub use scalar::{q, qr, Scalar};
pub use tensor::{Tensor2, TensorN};
pub use text::{
    parse_poly, parse_tensor2, parse_word, poly_from_json, poly_to_json, tensor2_from_json,
    tensor2_to_json, ParseError,
};
pub use word::{weight_of_letter, Letter, Word};
