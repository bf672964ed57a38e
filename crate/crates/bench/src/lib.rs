//! Workloads shared by the criterion benches.

use schubert_core::{WeylElement, WeylGroup};

/// Longest elements and a few mid-length elements, by type.
pub const CASES: &[(&str, &[usize])] = &[
    ("B3", &[1, 2, 1, 3, 2, 1]),
    ("C4", &[2, 3, 4, 3, 2, 1, 2, 3]),
    ("D5", &[3, 2, 4, 3, 5, 3, 1, 2, 3, 4]),
    ("F4", &[1, 2, 3, 2, 1, 4, 3, 2, 3, 4]),
];

pub fn load(descriptor: &str, word: &[usize]) -> (WeylGroup, WeylElement) {
    let g = WeylGroup::parse(descriptor).expect("bench types parse");
    let w = g.from_word(word).expect("bench words are valid");
    (g, w)
}
