//! Noncommutative integer polynomials; the target of the commutator embedding.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::terms::{add_scaled, add_term, format_coefficient, Terms};
use super::word::{same_alphabet, Alphabet, Word};

#[derive(Clone)]
pub struct AssocPoly {
    alphabet: Arc<Alphabet>,
    terms: Terms,
}

impl AssocPoly {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        AssocPoly {
            alphabet: alphabet.clone(),
            terms: Terms::new(),
        }
    }

    pub fn monomial(alphabet: &Arc<Alphabet>, w: Word, c: impl Into<BigInt>) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, w, c.into());
        AssocPoly {
            alphabet: alphabet.clone(),
            terms,
        }
    }

    pub(crate) fn from_terms_unchecked(alphabet: Arc<Alphabet>, terms: Terms) -> Self {
        AssocPoly { alphabet, terms }
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn assert_same(&self, other: &AssocPoly) {
        assert!(
            same_alphabet(&self.alphabet, &other.alphabet),
            "polynomials over different alphabets"
        );
    }
}

pub(crate) fn multiply(x: &Terms, y: &Terms) -> Terms {
    let mut acc = Terms::new();
    for (u, a) in x {
        for (v, b) in y {
            add_term(&mut acc, u.concat(v), a * b);
        }
    }
    acc
}

impl PartialEq for AssocPoly {
    fn eq(&self, other: &Self) -> bool {
        same_alphabet(&self.alphabet, &other.alphabet) && self.terms == other.terms
    }
}

impl Eq for AssocPoly {}

impl Add for &AssocPoly {
    type Output = AssocPoly;
    fn add(self, rhs: &AssocPoly) -> AssocPoly {
        self.assert_same(rhs);
        let mut t = self.terms.clone();
        add_scaled(&mut t, &rhs.terms, &BigInt::one());
        AssocPoly::from_terms_unchecked(self.alphabet.clone(), t)
    }
}

impl Sub for &AssocPoly {
    type Output = AssocPoly;
    fn sub(self, rhs: &AssocPoly) -> AssocPoly {
        self.assert_same(rhs);
        let mut t = self.terms.clone();
        add_scaled(&mut t, &rhs.terms, &-BigInt::one());
        AssocPoly::from_terms_unchecked(self.alphabet.clone(), t)
    }
}

impl Mul for &AssocPoly {
    type Output = AssocPoly;
    fn mul(self, rhs: &AssocPoly) -> AssocPoly {
        self.assert_same(rhs);
        AssocPoly::from_terms_unchecked(self.alphabet.clone(), multiply(&self.terms, &rhs.terms))
    }
}

impl fmt::Display for AssocPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            format_coefficient(c, i == 0, &mut s);
            s.push('(');
            s.push_str(&self.alphabet.spell(w.letters()));
            s.push(')');
        }
        f.write_str(&s)
    }
}

impl fmt::Debug for AssocPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AssocPoly({self})")
    }
}
