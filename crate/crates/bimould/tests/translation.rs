use bimould::{
    arit, bracket_mu, expand_c, is_alternal, lazard_tr, log_star, mu, p_gen, rho_cbi,
    rho_cbi_inverse, rho_dbi, urit, v_to_c, BiLetter, BiPoly, Bimould, CTree, LazardStructure,
    MPoly,
};
use freealg::{q, qr, Poly};
use postlie::Triangle;

fn c(k: u32, m: u32) -> BiLetter {
    BiLetter::new(k, m)
}

fn leaf(k: u32, m: u32) -> CTree {
    CTree::leaf(c(k, m))
}

fn br(l: CTree, r: CTree) -> CTree {
    CTree::node(l, r)
}

fn xp(i: usize) -> MPoly {
    MPoly::xvar(i)
}

fn yp(i: usize) -> MPoly {
    MPoly::yvar(i)
}

#[test]
fn composite_letter_expansion() {
    assert_eq!(c(1, 0).expand(), Poly::letter(1));
    let v0 = Poly::letter(0);
    let v1 = Poly::letter(1);
    assert_eq!(c(1, 1).expand(), v0.conc(&v1).sub(&v1.conc(&v0)));
    let v2 = Poly::letter(2);
    assert_eq!(c(2, 2).expand(), v0.bracket(&v0.bracket(&v2)));
}

#[test]
fn base_conversion_round_trip() {
    let words: Vec<Vec<BiLetter>> = vec![
        vec![],
        vec![c(1, 0)],
        vec![c(2, 3)],
        vec![c(1, 1), c(2, 0)],
        vec![c(3, 1), c(1, 2), c(2, 0)],
        vec![c(1, 1), c(1, 1)],
    ];
    let mut p = BiPoly::zero();
    for (i, w) in words.into_iter().enumerate() {
        p.add_term(w, q(i as i64 + 1) / q(3));
    }
    assert_eq!(v_to_c(&expand_c(&p)).unwrap(), p);
    // nothing outside the span converts
    assert!(v_to_c(&Poly::letter(0)).is_err());
    assert!(v_to_c(&Poly::word(freealg::parse_word("v0.v1").unwrap())).is_err());
}

#[test]
fn monomial_map_is_a_homomorphism() {
    let f = BiPoly::word(vec![c(2, 1), c(1, 0)]).add(&BiPoly::letter(c(3, 2)).scale(&q(2)));
    let g = BiPoly::letter(c(1, 1)).sub(&BiPoly::word(vec![c(1, 0), c(1, 0)]));
    assert_eq!(rho_cbi(&f.conc(&g)), mu(&rho_cbi(&f), &rho_cbi(&g)));
    assert_eq!(
        rho_cbi(&f.bracket(&g)),
        bracket_mu(&rho_cbi(&f), &rho_cbi(&g))
    );
    // monomial round trip
    assert_eq!(rho_cbi_inverse(&rho_cbi(&f)), f);
}

#[test]
fn composition_series_goldens() {
    assert_eq!(log_star(&BiPoly::letter(c(1, 0))), BiPoly::letter(c(1, 0)));
    let expected = BiPoly::letter(c(2, 0))
        .sub(&BiPoly::word(vec![c(1, 0), c(1, 0)]).scale(&qr(1, 2)));
    assert_eq!(log_star(&BiPoly::letter(c(2, 0))), expected);

    let got = rho_dbi(&BiPoly::letter(c(3, 0)));
    let mut expected = Bimould::zero();
    expected.set_comp(1, xp(1).pow(2));
    expected.set_comp(2, xp(1).add(&xp(2)).scale(&(-qr(1, 2))));
    expected.set_comp(3, MPoly::constant(qr(1, 3)));
    assert_eq!(got, expected);

    let got = rho_dbi(&BiPoly::letter(c(2, 1)));
    let mut expected = Bimould::zero();
    expected.set_comp(1, xp(1).mul(&yp(1)));
    expected.set_comp(2, yp(1).add(&yp(2)).scale(&(-qr(1, 2))));
    assert_eq!(got, expected);
}

/// The action computed on the base alphabet, then rewritten over the
/// composite alphabet.
fn action_via_engine(tri: &Triangle, f: &BiPoly, g: &BiPoly) -> BiPoly {
    v_to_c(&tri.tr(&expand_c(f), &expand_c(g))).unwrap()
}

#[test]
fn closed_letter_action_matches_engine() {
    let cases: Vec<(CTree, BiLetter)> = vec![
        (leaf(2, 0), c(1, 0)),
        (leaf(1, 1), c(2, 1)),
        (leaf(3, 0), c(2, 1)),
        (br(leaf(1, 0), leaf(2, 0)), c(2, 0)),
        (br(leaf(1, 1), leaf(1, 0)), c(1, 1)),
        (br(leaf(2, 0), br(leaf(1, 0), leaf(1, 1))), c(1, 0)),
    ];
    for (structure, tri) in [
        (LazardStructure::Ihara, Triangle::ihara_default()),
        (LazardStructure::Ari, Triangle::ari()),
        (LazardStructure::Uri, Triangle::uri()),
    ] {
        for (t, letter) in &cases {
            let closed = lazard_tr(structure, t, *letter);
            let oracle = action_via_engine(&tri, &t.to_bipoly(), &BiPoly::letter(*letter));
            assert_eq!(closed, oracle, "{structure:?}: {} <| {letter}", t.to_bipoly());
        }
    }
}

#[test]
fn substitution_derivation_matches_action() {
    let tri = Triangle::ari();
    let elems: Vec<BiPoly> = vec![
        BiPoly::letter(c(1, 0)),
        BiPoly::letter(c(2, 0)),
        BiPoly::letter(c(1, 1)),
        BiPoly::letter(c(2, 1)),
        BiPoly::letter(c(3, 0)),
        br(leaf(1, 0), leaf(2, 0)).to_bipoly(),
        br(leaf(1, 1), leaf(1, 0)).to_bipoly(),
        br(leaf(1, 0), br(leaf(1, 0), leaf(2, 0))).to_bipoly(),
    ];
    for f in &elems {
        for g in &elems {
            let direct = rho_cbi(&action_via_engine(&tri, f, g));
            let derived = arit(&rho_cbi(f), &rho_cbi(g));
            assert_eq!(direct, derived, "{f} acting on {g}");
        }
    }
}

#[test]
fn depth_corrected_eleven_bracket_golden() {
    let got = lazard_tr(LazardStructure::Uri, &leaf(3, 0), c(2, 1));
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
    let mut expected = BiPoly::zero();
    for (num, den, t) in terms {
        expected = expected.add(&t.to_bipoly().scale(&(q(num) / q(den))));
    }
    assert_eq!(got, expected);
}

#[test]
fn corrected_derivation_golden() {
    let b = rho_dbi(&BiPoly::letter(c(3, 0)));
    let a = rho_dbi(&BiPoly::letter(c(2, 1)));
    let got = urit(&b, &a).unwrap();

    let mut expected = Bimould::zero();
    let ys = |d: usize| {
        let mut acc = MPoly::zero();
        for i in 1..=d {
            acc = acc.add(&yp(i));
        }
        acc
    };
    expected.set_comp(2, xp(1).sub(&xp(2)).pow(3).mul(&ys(2)));
    let d3 = xp(1)
        .pow(2)
        .sub(&xp(3).pow(2))
        .sub(&xp(1).mul(&xp(2)).scale(&qr(1, 2)))
        .sub(&xp(1).mul(&xp(3)).scale(&q(3)))
        .add(&xp(2).mul(&xp(3)).scale(&qr(7, 2)));
    expected.set_comp(3, d3.mul(&ys(3)));
    let d4 = xp(1)
        .scale(&qr(13, 12))
        .sub(&xp(2).scale(&qr(3, 4)))
        .sub(&xp(3).scale(&qr(3, 4)))
        .add(&xp(4).scale(&qr(5, 12)));
    expected.set_comp(4, d4.mul(&ys(4)));
    assert_eq!(got, expected);

    // the same value through the composite-letter action
    let action = lazard_tr(LazardStructure::Uri, &leaf(3, 0), c(2, 1));
    assert_eq!(rho_dbi(&action), expected);
}

#[test]
fn corrected_derivation_depth_graded_part_is_the_substitution_derivation() {
    // pure-depth inputs: the top-depth component survives uncorrected
    let pairs: Vec<(BiPoly, BiPoly)> = vec![
        (
            br(leaf(1, 0), leaf(2, 0)).to_bipoly(),
            BiPoly::letter(c(2, 1)),
        ),
        (
            BiPoly::letter(c(3, 0)),
            br(leaf(1, 1), leaf(1, 0)).to_bipoly(),
        ),
    ];
    for (f, g) in pairs {
        let bf = rho_cbi(&f);
        let ba = rho_cbi(&g);
        let top = bf.max_depth() + ba.max_depth();
        let corrected = urit(&bf, &ba).unwrap();
        assert_eq!(corrected.depth_component(top), arit(&bf, &ba));
    }
}

#[test]
fn alternality_predicate() {
    let lie = br(leaf(1, 0), br(leaf(2, 0), leaf(1, 1))).to_bipoly();
    assert!(is_alternal(&rho_cbi(&lie), 4));
    assert!(is_alternal(&p_gen(4, 2), 4));
    let word = rho_cbi(&BiPoly::word(vec![c(1, 0), c(2, 0)]));
    assert!(!is_alternal(&word, 4));
}
