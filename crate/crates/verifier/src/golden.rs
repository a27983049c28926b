use std::collections::BTreeSet;

use bimould::{lazard_tr, rho_dbi, urit, BiLetter, BiPoly, Bimould, CTree, LazardStructure, MPoly};
use combinat::{
    b1, bernoulli, factorial, family_b1, family_const1, threshold_identity_i,
    threshold_identity_ii, Scalar,
};
use freealg::{parse_poly, parse_tensor2, q, qr, Poly, Word};
use glhopf::{coprod_ari, coprod_ihara, glp_word};
use num_traits::Zero;
use postlie::{tr_letter_ari, tr_letter_ihara, Triangle};
use serde_json::json;

use crate::report::{expect_eq, Suite, VerificationReport};

fn check<T: PartialEq + std::fmt::Display>(suite: &mut Suite, name: &str, expected: T, actual: T) {
    suite.instance(expect_eq(json!({ "golden": name }), &expected, &actual));
}

/// Frozen reference values: hand-checked expansions, coefficient tables
/// and worked examples, each compared against the engine.
pub fn verify_golden() -> VerificationReport {
    let mut suite = Suite::new("golden", json!({}), false);

    let ari = Triangle::ari();
    let nineteen = parse_poly(
        "-v6.v1.v1 - v1.v1.v6 + v5.v2.v1 + 2*v2.v1.v5 - v3.v1.v4 + v3.v4.v1 \
         - v4.v1.v3 + 2*v5.v1.v2 + v1.v2.v5 + v1.v4.v3 - 2*v4.v2.v2 - 2*v2.v2.v4 \
         - v3.v3.v2 + 2*v3.v2.v3 - v2.v3.v3 + 2*v1.v6.v1 - 3*v2.v5.v1 \
         - 3*v1.v5.v2 + 4*v2.v4.v2",
    )
    .unwrap();
    check(
        &mut suite,
        "multiplicity action v2.v3 <| v3, nineteen terms",
        nineteen.clone(),
        ari.tr_word_letter(&Word(vec![2, 3]), 3),
    );
    check(
        &mut suite,
        "closed form of the same action",
        nineteen,
        tr_letter_ari(&Word(vec![2, 3]), 3),
    );

    let eight = parse_poly(
        "3*v1.v2.v3.v0 - 2*v2.v3.v1.v0 + 2*v3.v1.v2.v0 - 3*v1.v3.v2.v0 \
         + v3.v2.v1.v0 - v4.v1.v1.v0 + 2*v1.v4.v1.v0 - v1.v1.v4.v0",
    )
    .unwrap();
    check(
        &mut suite,
        "induced product v2.v3 * v1.v0, eight terms",
        eight,
        glp_word(&ari, &Word(vec![2, 3]), &Word(vec![1, 0])),
    );

    let v0set = BTreeSet::from([0]);
    let delta_i = parse_tensor2(
        "1 (x) v1.v2.v3.v0 + v0 (x) v1.v2.v3 + v3 (x) v1.v2.v0 + v3.v0 (x) v1.v2 \
         + v2.v3 (x) v1.v0 + v1.v2.v3 (x) v0 + v2.v3.v0 (x) v1 + v1.v2.v3.v0 (x) 1",
    )
    .unwrap();
    check(
        &mut suite,
        "bracket-flattening coproduct of v1.v2.v3.v0, eight terms",
        delta_i,
        coprod_ihara(&v0set, &Word(vec![1, 2, 3, 0])),
    );

    // interior part of the multiplicity coproduct; the engine keeps the
    // two boundary terms, so they are added to the reference
    let mut delta_a = parse_tensor2(
        "-v1.v3 (x) v2.v2 - v2.v1.v3 (x) v2 + v2.v2 (x) v2.v2 + v2.v2.v2 (x) v2 \
         - v2.v2 (x) v1.v3 + 2*v1.v3 (x) v1.v3 + v2 (x) v2.v2.v2 - v2 (x) v2.v1.v3",
    )
    .unwrap();
    let word = Word(vec![2, 2, 1, 3]);
    delta_a.add_term(Word::one(), word.clone(), q(1));
    delta_a.add_term(word.clone(), Word::one(), q(1));
    check(
        &mut suite,
        "multiplicity coproduct of v2.v2.v1.v3, eight interior terms",
        delta_a,
        coprod_ari(&word),
    );

    let nested = Poly::letter(1)
        .bracket(&Poly::letter(1).bracket(&Poly::letter(0)))
        .neg();
    check(
        &mut suite,
        "bracket-flattening action v0.v1 <| v1",
        nested,
        tr_letter_ihara(&v0set, &Word(vec![0, 1]), 1),
    );

    // weight family against the independent partial-sum form
    // -sum_{k=n}^{m-1} B_k / (k! (m-k)!)
    let mut table_ok = true;
    let mut witness = String::new();
    for m in 2..=10usize {
        for n in 1..=m {
            let mut acc = Scalar::zero();
            for k in n..m {
                acc += bernoulli(k)
                    / Scalar::from_integer(factorial(k as i64) * factorial((m - k) as i64));
            }
            let alt = -acc;
            if b1(m, n) != alt {
                table_ok = false;
                witness = format!("b1({m}, {n}) = {} vs {}", b1(m, n), alt);
            }
        }
    }
    check(
        &mut suite,
        "weight table m, n <= 10 vs alternate partial sum",
        "agree".to_string(),
        if table_ok { "agree".to_string() } else { witness },
    );
    check(&mut suite, "b1(3, 1)", qr(1, 6), b1(3, 1));
    check(&mut suite, "b1(3, 2)", qr(-1, 12), b1(3, 2));
    check(&mut suite, "b1(5, 3)", qr(1, 720), b1(5, 3));
    check(&mut suite, "b1(9, 5)", qr(-17, 3628800), b1(9, 5));

    // bimould images of the two smallest interesting composite letters
    let xp = MPoly::xvar;
    let yp = MPoly::yvar;
    let mut c30 = Bimould::zero();
    c30.set_comp(1, xp(1).pow(2));
    c30.set_comp(2, xp(1).add(&xp(2)).scale(&(-qr(1, 2))));
    c30.set_comp(3, MPoly::constant(qr(1, 3)));
    check(
        &mut suite,
        "depth components of the weight-3 letter",
        c30.clone(),
        rho_dbi(&BiPoly::letter(BiLetter::new(3, 0))),
    );
    let mut c21 = Bimould::zero();
    c21.set_comp(1, xp(1).mul(&yp(1)));
    c21.set_comp(2, yp(1).add(&yp(2)).scale(&(-qr(1, 2))));
    check(
        &mut suite,
        "depth components of the mixed weight-3 letter",
        c21.clone(),
        rho_dbi(&BiPoly::letter(BiLetter::new(2, 1))),
    );

    // the depth-corrected derivation on those images, through depth 4
    let ys = |d: usize| {
        let mut acc = MPoly::zero();
        for i in 1..=d {
            acc = acc.add(&yp(i));
        }
        acc
    };
    let mut corrected = Bimould::zero();
    corrected.set_comp(2, xp(1).sub(&xp(2)).pow(3).mul(&ys(2)));
    let d3 = xp(1)
        .pow(2)
        .sub(&xp(3).pow(2))
        .sub(&xp(1).mul(&xp(2)).scale(&qr(1, 2)))
        .sub(&xp(1).mul(&xp(3)).scale(&q(3)))
        .add(&xp(2).mul(&xp(3)).scale(&qr(7, 2)));
    corrected.set_comp(3, d3.mul(&ys(3)));
    let d4 = xp(1)
        .scale(&qr(13, 12))
        .sub(&xp(2).scale(&qr(3, 4)))
        .sub(&xp(3).scale(&qr(3, 4)))
        .add(&xp(4).scale(&qr(5, 12)));
    corrected.set_comp(4, d4.mul(&ys(4)));
    match urit(&c30, &c21) {
        Ok(got) => check(
            &mut suite,
            "corrected derivation worked example through depth 4",
            corrected,
            got,
        ),
        Err(e) => check(
            &mut suite,
            "corrected derivation worked example through depth 4",
            corrected.to_string(),
            format!("error: {e}"),
        ),
    }

    // eleven-bracket expansion of the depth-corrected letter action
    let leaf = |k, m| CTree::leaf(BiLetter::new(k, m));
    let br = CTree::node;
    let terms: Vec<(i64, i64, CTree)> = vec![
        (3, 1, br(leaf(2, 1), leaf(3, 0))),
        (3, 1, br(leaf(2, 0), leaf(3, 1))),
        (1, 1, br(leaf(4, 1), leaf(1, 0))),
        (1, 1, br(leaf(4, 0), leaf(1, 1))),
        (3, 2, br(leaf(2, 1), br(leaf(2, 0), leaf(1, 0)))),
        (3, 2, br(leaf(2, 0), br(leaf(2, 1), leaf(1, 0)))),
        (3, 2, br(leaf(2, 0), br(leaf(2, 0), leaf(1, 1)))),
        (-1, 4, br(leaf(1, 1), br(leaf(1, 0), br(leaf(2, 0), leaf(1, 0))))),
        (-1, 4, br(leaf(1, 0), br(leaf(1, 1), br(leaf(2, 0), leaf(1, 0))))),
        (-1, 4, br(leaf(1, 0), br(leaf(1, 0), br(leaf(2, 1), leaf(1, 0))))),
        (-1, 4, br(leaf(1, 0), br(leaf(1, 0), br(leaf(2, 0), leaf(1, 1))))),
    ];
    let mut eleven = BiPoly::zero();
    for (num, den, t) in terms {
        eleven = eleven.add(&t.to_bipoly().scale(&(q(num) / q(den))));
    }
    check(
        &mut suite,
        "eleven-bracket expansion of the corrected letter action",
        eleven,
        lazard_tr(LazardStructure::Uri, &leaf(3, 0), BiLetter::new(2, 1)),
    );

    // the two appendix threshold relations
    let fam = family_b1();
    let (lhs, rhs) = threshold_identity_i(&fam, 2, 4, &[1, 2], &[4, 3]);
    let expansion = b1(4, 3) + q(2) * b1(4, 2) + q(3) * b1(4, 1);
    let product = (q(2) * b1(3, 1) + q(3) * b1(3, 2) + b1(3, 3)) * b1(2, 1);
    check(&mut suite, "two-sequence relation, left expansion", expansion, lhs.clone());
    check(&mut suite, "two-sequence relation, right product", product, rhs.clone());
    check(&mut suite, "two-sequence relation, both sides", lhs, rhs);
    let ones = family_const1();
    check(
        &mut suite,
        "three-sequence relation, constant-family value",
        q(6 + 9 + 21 - 15),
        threshold_identity_ii(&ones, 1, 2, &[2, 1], &[4, 3], &[5, 6]),
    );
    check(
        &mut suite,
        "three-sequence relation vanishes for the weight family",
        Scalar::zero(),
        threshold_identity_ii(&fam, 1, 2, &[2, 1], &[4, 3], &[5, 6]),
    );

    suite.finish()
}
