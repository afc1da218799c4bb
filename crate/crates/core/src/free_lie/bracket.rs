//! Lie bracket in the Lyndon basis over the integers.
//!
//! Basis elements are identified with their Lyndon words. For Lyndon words
//! `u < v` the bracket `[u, v]` is the basis element `uv` exactly when `u` is
//! a letter or the right standard factor of `u` is `>= v`. Otherwise, with
//! `u = (u1, u2)`, Jacobi gives
//! `[u, v] = [u1, [u2, v]] - [u2, [u1, v]]`,
//! and the recursion terminates on strictly smaller rewriting problems.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::terms::{add_scaled, add_term, negate, single, Terms};
use super::word::{standard_split, Letter, Word};

/// Memo table for basis brackets. Holding one across many brackets over the
/// same alphabet avoids recomputing the Jacobi rewriting.
#[derive(Default, Debug)]
pub struct BracketTable {
    memo: HashMap<(Word, Word), Terms>,
}

impl BracketTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// `[P_u, P_v]` for Lyndon words `u`, `v`.
    pub fn words(&mut self, u: &Word, v: &Word) -> Terms {
        use std::cmp::Ordering::*;
        match u.letters().cmp(v.letters()) {
            Equal => Terms::new(),
            Greater => negate(&self.ordered(v, u)),
            Less => self.ordered(u, v),
        }
    }

    fn ordered(&mut self, u: &Word, v: &Word) -> Terms {
        let key = (u.clone(), v.clone());
        if let Some(t) = self.memo.get(&key) {
            return t.clone();
        }
        let result = match standard_split(u.letters()) {
            None => single(u.concat(v), BigInt::one()),
            Some(split) if u.letters()[split..] >= *v.letters() => single(u.concat(v), BigInt::one()),
            Some(split) => {
                let u1 = Word::new(u.letters()[..split].to_vec());
                let u2 = Word::new(u.letters()[split..].to_vec());
                let inner2 = self.words(&u2, v);
                let mut acc = self.word_with_terms(&u1, &inner2);
                let inner1 = self.words(&u1, v);
                let sub = self.word_with_terms(&u2, &inner1);
                add_scaled(&mut acc, &sub, &-BigInt::one());
                acc
            }
        };
        self.memo.insert(key, result.clone());
        result
    }

    /// `[P_w, x]` for a basis word `w` and a combination `x`.
    pub fn word_with_terms(&mut self, w: &Word, x: &Terms) -> Terms {
        let mut acc = Terms::new();
        for (v, c) in x {
            let t = self.words(w, v);
            add_scaled(&mut acc, &t, c);
        }
        acc
    }

    /// Bilinear extension to arbitrary combinations.
    pub fn terms(&mut self, x: &Terms, y: &Terms) -> Terms {
        let mut acc = Terms::new();
        for (u, a) in x {
            for (v, b) in y {
                let t = self.words(u, v);
                add_scaled(&mut acc, &t, &(a * b));
            }
        }
        acc
    }
}

/// Apply the derivation with the given generator images to a combination.
/// Derivations satisfy `D[u, v] = [Du, v] + [u, Dv]`.
pub(crate) fn apply_derivation(table: &mut BracketTable, on_letter: &dyn Fn(Letter) -> Terms, x: &Terms) -> Terms {
    let mut memo: HashMap<Word, Terms> = HashMap::new();
    let mut acc = Terms::new();
    for (w, c) in x {
        let t = derive_word(table, on_letter, w, &mut memo);
        add_scaled(&mut acc, &t, c);
    }
    acc
}

fn derive_word(
    table: &mut BracketTable,
    on_letter: &dyn Fn(Letter) -> Terms,
    w: &Word,
    memo: &mut HashMap<Word, Terms>,
) -> Terms {
    if let Some(t) = memo.get(w) {
        return t.clone();
    }
    let out = match standard_split(w.letters()) {
        None => on_letter(w.letters()[0]),
        Some(split) => {
            let u = Word::new(w.letters()[..split].to_vec());
            let v = Word::new(w.letters()[split..].to_vec());
            let du = derive_word(table, on_letter, &u, memo);
            let dv = derive_word(table, on_letter, &v, memo);
            // [Du, v] + [u, Dv]
            let mut acc = negate(&table.word_with_terms(&v, &du));
            let right = table.word_with_terms(&u, &dv);
            for (k, c) in right {
                add_term(&mut acc, k, c);
            }
            acc
        }
    };
    memo.insert(w.clone(), out.clone());
    out
}
