use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::tensor::Tensor2;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
}

impl ParseError {
    fn new(msg: impl Into<String>) -> Self {
        ParseError {
            message: msg.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error: {}", self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parse a word: `1` for the empty word, otherwise letters `v<digits>`
/// joined by dots, as in `v1.v2.v0`.
pub fn parse_word(s: &str) -> Result<Word, ParseError> {
    let s = s.trim();
    if s == "1" {
        return Ok(Word::one());
    }
    let mut letters = Vec::new();
    for part in s.split('.') {
        let part = part.trim();
        let digits = part
            .strip_prefix('v')
            .ok_or_else(|| ParseError::new(format!("expected letter, got {part:?}")))?;
        let i: Letter = digits
            .parse()
            .map_err(|_| ParseError::new(format!("bad letter index in {part:?}")))?;
        letters.push(i);
    }
    Ok(Word(letters))
}

/// Parse a linear combination of words, e.g. `3/2*v1.v2 - v0 + 1`.
pub fn parse_poly(s: &str) -> Result<Poly, ParseError> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(Poly::zero());
    }
    let mut out = Poly::zero();
    for (sign, chunk) in split_signed_terms(s)? {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            return Err(ParseError::new("empty term"));
        }
        let (coeff_str, word_str) = match chunk.split_once('*') {
            Some((c, w)) => (Some(c.trim()), w.trim()),
            None => (None, chunk),
        };
        // a bare rational like "3/2" or "7" is a multiple of the empty word
        let (coeff, word) = match coeff_str {
            Some(c) => (parse_rational(c)?, parse_word(word_str)?),
            None => {
                if word_str.starts_with('v') {
                    (Scalar::one(), parse_word(word_str)?)
                } else {
                    (parse_rational(word_str)?, Word::one())
                }
            }
        };
        out.add_term(word, coeff * sign);
    }
    Ok(out)
}

/// Parse a two-fold tensor written as `w1 (x) w2` terms.
pub fn parse_tensor2(s: &str) -> Result<Tensor2, ParseError> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(Tensor2::zero());
    }
    let mut out = Tensor2::zero();
    for (sign, chunk) in split_signed_terms(s)? {
        let chunk = chunk.trim();
        let (coeff, rest) = match chunk.split_once('*') {
            Some((c, w)) => (parse_rational(c.trim())?, w.trim()),
            None => (Scalar::one(), chunk),
        };
        let (l, r) = rest
            .split_once("(x)")
            .ok_or_else(|| ParseError::new(format!("expected tensor term, got {chunk:?}")))?;
        out.add_term(parse_word(l)?, parse_word(r)?, coeff * &sign);
    }
    Ok(out)
}

fn parse_rational(s: &str) -> Result<Scalar, ParseError> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim())
                .map_err(|_| ParseError::new(format!("bad numerator {s:?}")))?;
            let d = BigInt::from_str(d.trim())
                .map_err(|_| ParseError::new(format!("bad denominator {s:?}")))?;
            if d == BigInt::from(0) {
                return Err(ParseError::new("zero denominator"));
            }
            Ok(Scalar::new(n, d))
        }
        None => {
            let n = BigInt::from_str(s.trim())
                .map_err(|_| ParseError::new(format!("bad rational {s:?}")))?;
            Ok(Scalar::from_integer(n))
        }
    }
}

/// Split an expression at top-level `+`/`-`, returning (sign, chunk) pairs.
fn split_signed_terms(s: &str) -> Result<Vec<(Scalar, String)>, ParseError> {
    let mut out = Vec::new();
    let mut sign = Scalar::one();
    let mut cur = String::new();
    let mut prev_significant: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '+' | '-' if prev_significant != Some('/') && prev_significant != Some('*') => {
                if !cur.trim().is_empty() {
                    out.push((sign.clone(), std::mem::take(&mut cur)));
                } else {
                    cur.clear();
                }
                sign = if ch == '-' { -Scalar::one() } else { Scalar::one() };
            }
            _ => {
                cur.push(ch);
                if !ch.is_whitespace() {
                    prev_significant = Some(ch);
                }
            }
        }
    }
    if cur.trim().is_empty() {
        return Err(ParseError::new("trailing operator"));
    }
    out.push((sign, cur));
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: Vec<Letter>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

/// Serialize as `{"terms":[{"word":[1,2],"coeff":"3/2"}]}` in canonical
/// term order.
pub fn poly_to_json(p: &Poly) -> serde_json::Value {
    let terms = p
        .terms()
        .map(|(w, c)| TermJson {
            word: w.letters().to_vec(),
            coeff: c.to_string(),
        })
        .collect();
    serde_json::to_value(PolyJson { terms }).expect("poly serialization")
}

pub fn poly_from_json(v: &serde_json::Value) -> Result<Poly, ParseError> {
    let parsed: PolyJson = serde_json::from_value(v.clone())
        .map_err(|e| ParseError::new(format!("bad poly json: {e}")))?;
    let mut out = Poly::zero();
    for t in parsed.terms {
        out.add_term(Word(t.word), parse_rational(&t.coeff)?);
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct Tensor2TermJson {
    left: Vec<Letter>,
    right: Vec<Letter>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct Tensor2Json {
    terms: Vec<Tensor2TermJson>,
}

pub fn tensor2_to_json(t: &Tensor2) -> serde_json::Value {
    let terms = t
        .terms()
        .map(|((l, r), c)| Tensor2TermJson {
            left: l.letters().to_vec(),
            right: r.letters().to_vec(),
            coeff: c.to_string(),
        })
        .collect();
    serde_json::to_value(Tensor2Json { terms }).expect("tensor serialization")
}

pub fn tensor2_from_json(v: &serde_json::Value) -> Result<Tensor2, ParseError> {
    let parsed: Tensor2Json = serde_json::from_value(v.clone())
        .map_err(|e| ParseError::new(format!("bad tensor json: {e}")))?;
    let mut out = Tensor2::zero();
    for t in parsed.terms {
        out.add_term(Word(t.left), Word(t.right), parse_rational(&t.coeff)?);
    }
    Ok(out)
}
