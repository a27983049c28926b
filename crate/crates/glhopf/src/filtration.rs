use freealg::{Letter, Poly, Word};

/// Which filtration property to test against a reference word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiltrationMode {
    /// Every word of the result has `ind_max` at least that of the
    /// reference word (the decreasing filtration is preserved by the
    /// induced product).
    IndMaxLower,
    /// Every word of the result has `ind_max` at most that of the
    /// reference word (right coproduct factors stay in the increasing
    /// filtration step of the reference).
    IndMaxUpper,
    /// For the given `k`, the k-level of every word of the result is at
    /// most the k-level of the reference word.
    KLevel(Letter),
}

/// Collect the words of `result` violating the filtration property
/// relative to `reference`; an empty list means the property holds.
pub fn filtration_check(reference: &Word, result: &Poly, mode: FiltrationMode) -> Vec<Word> {
    let mut violations = Vec::new();
    for (w, _) in result.terms() {
        let bad = match mode {
            FiltrationMode::IndMaxLower => w.ind_max() < reference.ind_max(),
            FiltrationMode::IndMaxUpper => w.ind_max() > reference.ind_max(),
            FiltrationMode::KLevel(k) => w.k_level(k) > reference.k_level(k),
        };
        if bad {
            violations.push(w.clone());
        }
    }
    violations
}
