use std::cmp::Ordering;
use std::fmt;

/// Letter index: the letter `v_i` is represented by `i`.
pub type Letter = u32;

/// Weight grading: `wt(v0) = 1` and `wt(v_i) = i` for `i >= 1`.
pub fn weight_of_letter(i: Letter) -> u64 {
    if i == 0 {
        1
    } else {
        i as u64
    }
}

/// A word over the alphabet; the empty word is the unit.
///
/// The ordering is graded: first by weight, then by depth (letter count),
/// then lexicographically on letter indices. Map iteration over words is
/// therefore canonical, which makes all serialized output deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: Letter) -> Self {
        Word(vec![i])
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Depth: number of letters.
    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&i| weight_of_letter(i)).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    /// Largest letter index occurring in the word; 0 for the empty word.
    pub fn ind_max(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `k`-level: depth minus the number of letters of index `k`.
    pub fn k_level(&self, k: Letter) -> usize {
        self.depth() - self.0.iter().filter(|&&i| i == k).count()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.depth().cmp(&other.depth()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("v{i}")).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
