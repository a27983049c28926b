use freealg::Poly;
use postlie::Triangle;
use serde_json::json;

use crate::report::{check_all, expect_eq, Failure, Suite, VerificationReport};
use crate::sample::lie_span;
use crate::tables::PairTable;

/// Which triangle structure a suite runs against.
pub fn triangle_by_name(name: &str) -> Option<Triangle> {
    match name {
        "ihara" => Some(Triangle::ihara_default()),
        "ari" => Some(Triangle::ari()),
        "uri" => Some(Triangle::uri()),
        _ => None,
    }
}

/// Whether the structure's post-Lie property is proved (blocking) or
/// only checked instance-wise.
pub fn is_conjectural(name: &str) -> bool {
    name == "uri"
}

/// Both post-Lie axioms on spanning Lie triples per weight:
/// `x <| [y, z] = [x <| y, z] + [y, x <| z]` and
/// `[x, y] <| z = x <| (y <| z) - (x <| y) <| z - y <| (x <| z) + (y <| x) <| z`.
pub fn verify_axioms(structure: &str, max_weight: u64) -> VerificationReport {
    let mut suite = Suite::new(
        "axioms",
        json!({ "structure": structure, "max_weight": max_weight }),
        is_conjectural(structure),
    );
    let tri = triangle_by_name(structure).expect("known structure");
    let table = PairTable::action(tri, max_weight);

    // elements tagged with their weight, in a fixed enumeration order
    let mut elements: Vec<(u64, Poly)> = Vec::new();
    for w in 1..=max_weight.saturating_sub(2) {
        for e in lie_span(w) {
            elements.push((w, e));
        }
    }

    let mut triples: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..elements.len() {
        for j in 0..elements.len() {
            for k in 0..elements.len() {
                if elements[i].0 + elements[j].0 + elements[k].0 <= max_weight {
                    triples.push((i, j, k));
                }
            }
        }
    }

    let (count, failures) = check_all(&triples, |&(i, j, k)| -> Option<Failure> {
        let (x, y, z) = (&elements[i].1, &elements[j].1, &elements[k].1);
        // both axioms are antisymmetric under swapping the bracketed
        // pair, so each is checked on ordered index pairs only
        if j <= k {
            let lhs = table.apply(x, &y.bracket(z));
            let rhs = table
                .apply(x, y)
                .bracket(z)
                .add(&y.bracket(&table.apply(x, z)));
            let f = expect_eq(
                json!({ "axiom": "derivation", "x": x.to_string(), "y": y.to_string(), "z": z.to_string() }),
                &rhs,
                &lhs,
            );
            if f.is_some() {
                return f;
            }
        }
        if i <= j {
            let lhs = table.apply(&x.bracket(y), z);
            let rhs = table
                .apply(x, &table.apply(y, z))
                .sub(&table.apply(&table.apply(x, y), z))
                .sub(&table.apply(y, &table.apply(x, z)))
                .add(&table.apply(&table.apply(y, x), z));
            let f = expect_eq(
                json!({ "axiom": "associator", "x": x.to_string(), "y": y.to_string(), "z": z.to_string() }),
                &rhs,
                &lhs,
            );
            if f.is_some() {
                return f;
            }
        }
        None
    });
    suite.record(count, failures);
    suite.finish()
}
