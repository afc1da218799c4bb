//! Alphabets, words and Lyndon words.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Index of a symbol inside its [`Alphabet`]. The numeric order is the
/// lexicographic order used for Lyndon words.
pub type Letter = u8;

/// A finite, totally ordered set of degree-one generators.
#[derive(Debug, Clone)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    /// Declaration order is the letter order.
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.len() > Letter::MAX as usize {
            return Err(Error::InvalidParameter(format!(
                "alphabet of {} symbols is too large",
                symbols.len()
            )));
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if index.insert(s.clone(), i as Letter).is_some() {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet { symbols, index })
    }

    pub fn shared<I, S>(symbols: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::new(symbols).map(Arc::new)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, letter: Letter) -> Result<&str> {
        self.symbols
            .get(letter as usize)
            .map(String::as_str)
            .ok_or(Error::LetterOutOfRange {
                index: letter as usize,
                size: self.len(),
            })
    }

    pub fn letter(&self, symbol: &str) -> Result<Letter> {
        self.index
            .get(symbol)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.symbols.len()).map(|i| i as Letter)
    }

    pub(crate) fn check_letter(&self, letter: Letter) -> Result<()> {
        if (letter as usize) < self.len() {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange {
                index: letter as usize,
                size: self.len(),
            })
        }
    }

    /// Concatenated symbol names, e.g. `A[1,3]A[2,3]`.
    pub fn spell(&self, letters: &[Letter]) -> String {
        letters.iter().map(|&l| self.symbols[l as usize].as_str()).collect()
    }

    /// Split concatenated symbol text back into letters by greedy longest match.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut rest = text.trim();
        let mut letters = Vec::new();
        while !rest.is_empty() {
            let best = self
                .symbols
                .iter()
                .enumerate()
                .filter(|(_, s)| rest.starts_with(s.as_str()))
                .max_by_key(|(_, s)| s.len());
            match best {
                Some((i, s)) => {
                    letters.push(i as Letter);
                    rest = &rest[s.len()..];
                }
                None => return Err(Error::UnknownSymbol(rest.to_string())),
            }
        }
        Ok(Word::new(letters))
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

pub(crate) fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A word in the free monoid, ordered by length first and lexicographically
/// within one length.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.0.contains(&l)
    }

    pub fn count(&self, l: Letter) -> usize {
        self.0.iter().filter(|&&x| x == l).count()
    }

    pub fn is_lyndon(&self) -> bool {
        is_lyndon(&self.0)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

/// A word that is strictly smaller than each of its proper rotations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LyndonWord(Word);

impl LyndonWord {
    pub fn new(word: Word) -> Result<Self> {
        if word.is_lyndon() {
            Ok(LyndonWord(word))
        } else {
            Err(Error::NotLyndon(format!("{:?}", word.letters())))
        }
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn letters(&self) -> &[Letter] {
        self.0.letters()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Right standard factorization `(u, v)` with `v` the longest proper
    /// Lyndon suffix. `None` for single letters.
    pub fn standard_factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        let split = standard_split(self.letters())?;
        let (u, v) = self.letters().split_at(split);
        Some((LyndonWord(Word(u.to_vec())), LyndonWord(Word(v.to_vec()))))
    }
}

/// Duval-style linear test: a nonempty word is Lyndon iff its Lyndon
/// factorization has a single factor.
pub fn is_lyndon(w: &[Letter]) -> bool {
    let n = w.len();
    if n == 0 {
        return false;
    }
    let (mut i, mut j) = (0usize, 1usize);
    while j < n {
        match w[i].cmp(&w[j]) {
            Ordering::Less => {
                i = 0;
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
            Ordering::Greater => return false,
        }
    }
    i == 0
}

/// Position splitting a Lyndon word into its right standard factorization.
pub(crate) fn standard_split(w: &[Letter]) -> Option<usize> {
    if w.len() < 2 {
        return None;
    }
    (1..w.len()).find(|&i| is_lyndon(&w[i..]))
}

/// All Lyndon words of length at most `deg_max`, ordered by length and then
/// lexicographically.
pub fn lyndon_words(alphabet: &Alphabet, deg_max: usize) -> Result<Vec<LyndonWord>> {
    if alphabet.is_empty() {
        return Err(Error::EmptyAlphabet);
    }
    if deg_max == 0 {
        return Err(Error::InvalidParameter("deg_max must be at least 1".into()));
    }
    let mut out = Vec::new();
    for_each_lyndon(alphabet.len(), deg_max, |w| out.push(LyndonWord(Word(w.to_vec()))));
    out.sort();
    Ok(out)
}

/// Lyndon words of exactly length `q` over `k` letters, lexicographic.
pub fn lyndon_words_of_degree(k: usize, q: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if k == 0 || q == 0 {
        return out;
    }
    for_each_lyndon(k, q, |w| {
        if w.len() == q {
            out.push(Word(w.to_vec()))
        }
    });
    out
}

// Fredricksen–Kessler–Maiorana successor enumeration, lexicographic order.
fn for_each_lyndon(k: usize, max_len: usize, mut f: impl FnMut(&[Letter])) {
    let top = (k - 1) as Letter;
    let mut w: Vec<Letter> = vec![0];
    loop {
        f(&w);
        let m = w.len();
        while w.len() < max_len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_lyndon(w: &[Letter]) -> bool {
        !w.is_empty()
            && (1..w.len()).all(|i| {
                let rot: Vec<Letter> = w[i..].iter().chain(&w[..i]).copied().collect();
                w < rot.as_slice()
            })
    }

    fn all_words(k: usize, len: usize) -> Vec<Vec<Letter>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..k as Letter).map(move |l| {
                        let mut w = w.clone();
                        w.push(l);
                        w
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn two_letters_up_to_three() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let got: Vec<String> = lyndon_words(&ab, 3)
            .unwrap()
            .iter()
            .map(|w| ab.spell(w.letters()))
            .collect();
        assert_eq!(got, ["a", "b", "ab", "aab", "abb"]);
    }

    #[test]
    fn linear_test_matches_rotation_definition() {
        for k in 1..=3 {
            for len in 1..=7 {
                for w in all_words(k, len) {
                    assert_eq!(is_lyndon(&w), brute_lyndon(&w), "{w:?}");
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for k in 1..=3usize {
            let alpha = Alphabet::new((0..k).map(|i| format!("x{i}"))).unwrap();
            let mut expected: Vec<Word> = (1..=6)
                .flat_map(|len| all_words(k, len))
                .filter(|w| brute_lyndon(w))
                .map(Word)
                .collect();
            expected.sort();
            let got: Vec<Word> = lyndon_words(&alpha, 6)
                .unwrap()
                .into_iter()
                .map(LyndonWord::into_word)
                .collect();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn single_letter_alphabet() {
        let a = Alphabet::new(["a"]).unwrap();
        assert_eq!(lyndon_words(&a, 5).unwrap().len(), 1);
    }

    #[test]
    fn counts_by_length_over_two_letters() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let words = lyndon_words(&ab, 5).unwrap();
        let counts: Vec<usize> = (1..=5).map(|q| words.iter().filter(|w| w.len() == q).count()).collect();
        assert_eq!(counts, [2, 1, 2, 3, 6]);
    }

    #[test]
    fn empty_alphabet_is_rejected() {
        let e = Alphabet::new(Vec::<String>::new()).unwrap();
        assert_eq!(lyndon_words(&e, 3), Err(Error::EmptyAlphabet));
    }

    #[test]
    fn duplicate_symbols_rejected() {
        assert!(matches!(Alphabet::new(["a", "a"]), Err(Error::DuplicateSymbol(_))));
    }

    #[test]
    fn standard_factorizations() {
        let f = |w: Vec<Letter>| {
            let (u, v) = LyndonWord::new(Word(w)).unwrap().standard_factorization().unwrap();
            (u.letters().to_vec(), v.letters().to_vec())
        };
        assert_eq!(f(vec![0, 1]), (vec![0], vec![1]));
        assert_eq!(f(vec![0, 0, 1]), (vec![0], vec![0, 1]));
        assert_eq!(f(vec![0, 1, 1]), (vec![0, 1], vec![1]));
        assert_eq!(f(vec![0, 0, 1, 0, 1]), (vec![0, 0, 1], vec![0, 1]));
    }

    #[test]
    fn parse_word_round_trip() {
        let a = Alphabet::new(["A[1,3]", "A[2,3]"]).unwrap();
        let w = a.parse_word("A[1,3]A[2,3]A[2,3]").unwrap();
        assert_eq!(w.letters(), &[0, 1, 1]);
        assert_eq!(a.spell(w.letters()), "A[1,3]A[2,3]A[2,3]");
        assert!(a.parse_word("A[9,9]").is_err());
    }
}
