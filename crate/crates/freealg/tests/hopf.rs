use freealg::{
    basis_words, nested_bracket, nested_bracket_direct, parse_poly, parse_word, poly_from_json,
    poly_to_json, q, qr, sandwich, Poly, Tensor2, Word,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn w(letters: &[u32]) -> Word {
    Word::from_letters(letters)
}

fn pw(letters: &[u32]) -> Poly {
    Poly::word(w(letters))
}

fn random_word(rng: &mut ChaCha8Rng, max_weight: u64) -> Word {
    let mut letters = Vec::new();
    let mut rem = max_weight;
    while rem > 0 && rng.gen_bool(0.8) {
        let i = rng.gen_range(0..=rem.min(4)) as u32;
        let wt = freealg::weight_of_letter(i);
        if wt > rem {
            break;
        }
        letters.push(i);
        rem -= wt;
    }
    Word(letters)
}

#[test]
fn basis_counts_by_weight() {
    let expected = [1usize, 2, 5, 13, 34, 89, 233, 610];
    for (n, &count) in expected.iter().enumerate() {
        let words = basis_words(n as u64);
        assert_eq!(words.len(), count, "weight {n}");
        // canonical order is strictly increasing
        for pair in words.windows(2) {
            assert!(pair[0] < pair[1]);
        }
        for word in &words {
            assert_eq!(word.weight(), n as u64);
        }
    }
}

#[test]
fn shuffle_small_cases() {
    let got = pw(&[1]).shuffle(&pw(&[2]));
    let expected = parse_poly("v1.v2 + v2.v1").unwrap();
    assert_eq!(got, expected);

    let got = pw(&[1, 2]).shuffle(&pw(&[3]));
    let expected = parse_poly("v3.v1.v2 + v1.v3.v2 + v1.v2.v3").unwrap();
    assert_eq!(got, expected);

    // repeated letters produce multiplicities
    let got = pw(&[1]).shuffle(&pw(&[1]));
    let expected = parse_poly("2*v1.v1").unwrap();
    assert_eq!(got, expected);
}

#[test]
fn shuffle_commutative_and_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let a = Poly::word(random_word(&mut rng, 3));
        let b = Poly::word(random_word(&mut rng, 3));
        let c = Poly::word(random_word(&mut rng, 3));
        assert_eq!(a.shuffle(&b), b.shuffle(&a));
        assert_eq!(a.shuffle(&b).shuffle(&c), a.shuffle(&b.shuffle(&c)));
    }
}

#[test]
fn antipode_is_signed_reversal() {
    let got = pw(&[1, 2, 0]).antipode();
    assert_eq!(got, parse_poly("-v0.v2.v1").unwrap());
    assert_eq!(Poly::one().antipode(), Poly::one());
}

#[test]
fn antipode_axiom_kills_nonconstant_words() {
    // sum over the coproduct of S(first) * second is the counit
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let word = random_word(&mut rng, 6);
        let a = Poly::word(word.clone());
        let mut acc = Poly::zero();
        for ((l, r), c) in a.coproduct_sh().terms() {
            let term = Poly::word(l.clone())
                .antipode()
                .conc(&Poly::word(r.clone()));
            acc = acc.add(&term.scale(c));
        }
        let expected = Poly::monomial(Word::one(), a.constant_term());
        assert_eq!(acc, expected, "word {word}");
    }
}

#[test]
fn coproduct_is_coassociative_and_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..15 {
        let word = random_word(&mut rng, 5);
        let a = Poly::word(word.clone());
        // both orders of iteration agree with the three-slot coproduct
        let three = a.iterated_coproduct(3);
        let mut left_first = freealg::TensorN::zero(3);
        let mut right_first = freealg::TensorN::zero(3);
        for ((l, r), c) in a.coproduct_sh().terms() {
            for ((l1, l2), d) in Poly::word(l.clone()).coproduct_sh().terms() {
                left_first.add_term(vec![l1.clone(), l2.clone(), r.clone()], c * d);
            }
            for ((r1, r2), d) in Poly::word(r.clone()).coproduct_sh().terms() {
                right_first.add_term(vec![l.clone(), r1.clone(), r2.clone()], c * d);
            }
        }
        assert_eq!(three, left_first);
        assert_eq!(three, right_first);
    }
    // coproduct is an algebra morphism for concatenation
    let u = pw(&[1, 0]);
    let v = pw(&[2]);
    let lhs = u.conc(&v).coproduct_sh();
    let mut rhs = Tensor2::zero();
    for ((a1, a2), c) in u.coproduct_sh().terms() {
        for ((b1, b2), d) in v.coproduct_sh().terms() {
            rhs.add_term(a1.concat(b1), a2.concat(b2), c * d);
        }
    }
    assert_eq!(lhs, rhs);
}

#[test]
fn shuffle_deconcat_duality() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..40 {
        let u = Poly::word(random_word(&mut rng, 3));
        let v = Poly::word(random_word(&mut rng, 3));
        let t = Poly::word(random_word(&mut rng, 6));
        // (u sh v | t) = (u (x) v | deconcat t)
        let lhs = u.shuffle(&v).pairing(&t);
        let rhs = t.deconcat().pair(&u, &v);
        assert_eq!(lhs, rhs);
        // (u v | t) = (u (x) v | coproduct_sh t)
        let lhs = u.conc(&v).pairing(&t);
        let rhs = t.coproduct_sh().pair(&u, &v);
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn nested_bracket_matches_direct_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..25 {
        let n = rng.gen_range(0..4);
        let elems: Vec<Poly> = (0..n)
            .map(|_| Poly::letter(rng.gen_range(0..4)))
            .collect();
        let v = rng.gen_range(0..4);
        assert_eq!(
            nested_bracket(v, &elems),
            nested_bracket_direct(v, &elems),
            "v{v} against {elems:?}"
        );
    }
    // [[v1, v1], v0] = 0 and [v0, v1] expands as expected
    assert_eq!(
        nested_bracket(0, &[Poly::letter(1)]),
        parse_poly("v0.v1 - v1.v0").unwrap()
    );
}

#[test]
fn sandwich_of_sum_is_linear() {
    let a = parse_poly("v1.v2 - 2*v0").unwrap();
    let m = Poly::letter(3);
    let direct = sandwich(&a, &m);
    let split = sandwich(&pw(&[1, 2]), &m).sub(&sandwich(&pw(&[0]), &m).scale(&q(2)));
    assert_eq!(direct, split);
}

#[test]
fn lie_elements_are_primitive() {
    let bracket = nested_bracket_direct(1, &[Poly::letter(1), Poly::letter(0)]);
    assert!(bracket.is_lie_element());
    assert!(!pw(&[1, 0]).is_lie_element());
    assert!(!Poly::one().is_lie_element());
    assert!(Poly::letter(4).is_lie_element());
}

#[test]
fn text_round_trip() {
    let cases = [
        "v1.v2.v0",
        "3/2*v1.v2 - v0",
        "-v3 + 1",
        "0",
        "-5/7*v0.v0 + 2*v4",
    ];
    for case in cases {
        let p = parse_poly(case).unwrap();
        let printed = p.to_string();
        assert_eq!(parse_poly(&printed).unwrap(), p, "case {case:?}");
    }
    assert_eq!(parse_word("1").unwrap(), Word::one());
    assert_eq!(parse_word("v10.v0").unwrap(), w(&[10, 0]));
    assert!(parse_poly("x1").is_err());
    assert!(parse_poly("v1 +").is_err());
    assert!(parse_poly("1/0*v1").is_err());
}

#[test]
fn json_round_trip() {
    let p = parse_poly("3/2*v1.v2 - v0").unwrap();
    let v = poly_to_json(&p);
    let expected: serde_json::Value =
        r#"{"terms":[{"word":[0],"coeff":"-1"},{"word":[1,2],"coeff":"3/2"}]}"#
            .parse()
            .unwrap();
    assert_eq!(v, expected);
    assert_eq!(poly_from_json(&v).unwrap(), p);
}

#[test]
fn zero_purging_and_scalars() {
    let p = pw(&[1]).sub(&pw(&[1]));
    assert!(p.is_zero());
    assert_eq!(p.to_string(), "0");
    assert!(qr(2, 4) == qr(1, 2));
    let mut acc = Poly::zero();
    acc.add_term(w(&[2]), qr(1, 3));
    acc.add_term(w(&[2]), qr(-1, 3));
    assert!(acc.coeff(&w(&[2])).is_zero());
    assert_eq!(acc.num_terms(), 0);
}
