//! The free Lie ring over the integers on a finite ordered alphabet, in the
//! Lyndon basis.

mod assoc;
mod bracket;
mod element;
mod monomial;
pub(crate) mod terms;
mod word;

pub use assoc::AssocPoly;
pub(crate) use bracket::apply_derivation;
pub use bracket::BracketTable;
pub use element::LieElement;
pub use monomial::{standard_bracketing, standard_bracketing_of, LieMonomial};
pub use terms::Terms;
pub(crate) use word::standard_split;
pub use word::{is_lyndon, lyndon_words, lyndon_words_of_degree, Alphabet, Letter, LyndonWord, Word};

use std::collections::HashMap;

/// Coordinates of the degree-`q` Lyndon basis over `k` letters, in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct DegreeIndex {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl DegreeIndex {
    pub fn new(k: usize, q: usize) -> Self {
        let words = lyndon_words_of_degree(k, q);
        let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        DegreeIndex { words, index }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }
}
