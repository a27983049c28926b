use crate::bimu::Bimould;
use crate::mpoly::MPoly;

fn xv(i: usize) -> MPoly {
    MPoly::xvar(i)
}

fn yv(i: usize) -> MPoly {
    MPoly::yvar(i)
}

fn ysum(lo: usize, hi: usize) -> MPoly {
    let mut acc = MPoly::zero();
    for i in lo..=hi {
        acc = acc.add(&yv(i));
    }
    acc
}

/// The substitution derivation induced on bimoulds by the
/// multiplicity-weighted triangle: a block of `j` consecutive variable
/// pairs is consumed by `B`, relative to the pair just after or just
/// before the block, while `A` keeps the rest with the block's `Y`
/// variables summed onto the neighbour.
pub fn arit(b: &Bimould, a: &Bimould) -> Bimould {
    let max = a.max_depth() + b.max_depth();
    let mut out = Bimould::zero();
    for d in 1..=max {
        let mut acc = MPoly::zero();
        for j in 1..d {
            let bj = b.comp(j);
            if bj.is_zero() {
                continue;
            }
            let ad = a.comp(d - j);
            if ad.is_zero() {
                continue;
            }
            for i in 1..=(d - j) {
                // block occupies pairs i..i+j-1, collapsed onto pair i+j
                let mut xs: Vec<MPoly> = (1..i).map(xv).collect();
                xs.extend((i + j..=d).map(xv));
                let mut ys: Vec<MPoly> = (1..i).map(yv).collect();
                ys.push(ysum(i, i + j));
                ys.extend((i + j + 1..=d).map(yv));
                let bx: Vec<MPoly> = (i..i + j).map(|t| xv(t).sub(&xv(i + j))).collect();
                let by: Vec<MPoly> = (i..i + j).map(yv).collect();
                acc = acc.sub(&ad.eval_pairs(&xs, &ys).mul(&bj.eval_pairs(&bx, &by)));

                // block occupies pairs i+1..i+j, collapsed onto pair i
                let mut xs: Vec<MPoly> = (1..=i).map(xv).collect();
                xs.extend((i + j + 1..=d).map(xv));
                let bx: Vec<MPoly> = (i + 1..=i + j).map(|t| xv(t).sub(&xv(i))).collect();
                let by: Vec<MPoly> = (i + 1..=i + j).map(yv).collect();
                acc = acc.add(&ad.eval_pairs(&xs, &ys).mul(&bj.eval_pairs(&bx, &by)));
            }
        }
        out.set_comp(d, acc);
    }
    out
}

/// The depth-corrected refinement: the substitution derivation plus, for
/// every block of length at least two, correction families whose
/// rational kernels in the block's `X` variables must cancel. The
/// cancellation is established by clearing the common denominator and
/// dividing out each linear factor exactly; a nonzero remainder is an
/// error.
pub fn urit(b: &Bimould, a: &Bimould) -> Result<Bimould, String> {
    let mut out = arit(b, a);
    let max = a.max_depth() + b.max_depth();
    for d in 1..=max {
        let mut acc = out.comp(d);
        for l in 2..d {
            for i in 1..=(d - l) {
                let correction = kernel_sum(b, l, i)?;
                if correction.is_zero() {
                    continue;
                }
                let ad = a.comp(d - l);
                if ad.is_zero() {
                    continue;
                }
                let mut xs: Vec<MPoly> = (1..i).map(xv).collect();
                xs.extend((i + l..=d).map(xv));
                let mut ys: Vec<MPoly> = (1..i).map(yv).collect();
                ys.push(ysum(i, i + l));
                ys.extend((i + l + 1..=d).map(yv));
                acc = acc.add(&ad.eval_pairs(&xs, &ys).mul(&correction));
            }
        }
        out.set_comp(d, acc);
    }
    Ok(out)
}

/// The corrective kernel for a block of `l + 1` pairs starting at pair
/// `i`: both families summed over the split point `r` and the reference
/// index `s`, brought over the common denominator
/// `prod_{0 <= a < b <= l} (X_{i+a} - X_{i+b})` and divided out exactly.
fn kernel_sum(b: &Bimould, l: usize, i: usize) -> Result<MPoly, String> {
    let factor_pairs: Vec<(usize, usize)> = (0..=l)
        .flat_map(|a| (a + 1..=l).map(move |c| (a, c)))
        .collect();
    // the block is traversed from its far end: index t counts pairs from
    // position i + l downwards
    let diff = |t: usize, s: usize| xv(i + l - t).sub(&xv(i + l - s));

    let mut numerator = MPoly::zero();
    for r in 1..l {
        let br = b.comp(l - r);
        if br.is_zero() {
            continue;
        }
        // first family: reference s in 0..=r, kernel over t in 0..=r
        for s in 0..=r {
            let denom: Vec<(usize, usize)> = (0..=r).filter(|&t| t != s).map(|t| (t, s)).collect();
            let bx: Vec<MPoly> = (r + 1..=l).map(|t| diff(t, s)).collect();
            let by: Vec<MPoly> = (r + 1..=l).map(|t| yv(i + l - t)).collect();
            numerator = numerator.sub(&clear_denominator(
                &br.eval_pairs(&bx, &by),
                &denom,
                &factor_pairs,
                &diff,
            ));
        }
        // second family: reference s in {0..r-1, l}, opposite sign
        let refs: Vec<usize> = (0..r).chain([l]).collect();
        for &s in &refs {
            let denom: Vec<(usize, usize)> =
                refs.iter().filter(|&&t| t != s).map(|&t| (t, s)).collect();
            let bx: Vec<MPoly> = (r..l).map(|t| diff(t, s)).collect();
            let by: Vec<MPoly> = (r..l).map(|t| yv(i + l - t)).collect();
            numerator = numerator.add(&clear_denominator(
                &br.eval_pairs(&bx, &by),
                &denom,
                &factor_pairs,
                &diff,
            ));
        }
    }
    if numerator.is_zero() {
        return Ok(MPoly::zero());
    }
    // divide the combined numerator by every factor of the common
    // denominator; the kernels only cancel in the sum
    let mut quotient = numerator;
    for &(a, c) in &factor_pairs {
        quotient = quotient
            .divide_exact(2 * (i + l - a - 1), 2 * (i + l - c - 1))
            .map_err(|e| format!("corrective kernel does not cancel: {e}"))?;
    }
    Ok(quotient)
}

/// Multiply a term by the common-denominator factors its own denominator
/// does not contain, with the sign from orienting each denominator
/// factor as `smaller index minus larger index`.
fn clear_denominator(
    term: &MPoly,
    denom: &[(usize, usize)],
    factor_pairs: &[(usize, usize)],
    diff: &impl Fn(usize, usize) -> MPoly,
) -> MPoly {
    let mut sign_flips = 0usize;
    let mut used: Vec<(usize, usize)> = Vec::with_capacity(denom.len());
    for &(t, s) in denom {
        if t < s {
            used.push((t, s));
        } else {
            used.push((s, t));
            sign_flips += 1;
        }
    }
    let mut out = if sign_flips % 2 == 0 {
        term.clone()
    } else {
        term.neg()
    };
    for &(a, c) in factor_pairs {
        if !used.contains(&(a, c)) {
            out = out.mul(&diff(a, c));
        }
    }
    out
}
