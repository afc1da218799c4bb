//! Sparse integer combinations of words, shared by Lie and associative elements.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::word::Word;

pub type Terms = BTreeMap<Word, BigInt>;

pub(crate) fn add_term(acc: &mut Terms, w: Word, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match acc.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// `acc += scale * other`
pub(crate) fn add_scaled(acc: &mut Terms, other: &Terms, scale: &BigInt) {
    if scale.is_zero() {
        return;
    }
    if scale.is_one() {
        for (w, c) in other {
            add_term(acc, w.clone(), c.clone());
        }
    } else {
        for (w, c) in other {
            add_term(acc, w.clone(), c * scale);
        }
    }
}

pub(crate) fn negate(t: &Terms) -> Terms {
    t.iter().map(|(w, c)| (w.clone(), -c)).collect()
}

pub(crate) fn single(w: Word, c: BigInt) -> Terms {
    let mut t = Terms::new();
    add_term(&mut t, w, c);
    t
}

pub(crate) fn format_coefficient(c: &BigInt, first: bool, out: &mut String) {
    if first {
        if c.is_negative() {
            out.push('-');
        }
    } else if c.is_negative() {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    out.push_str(&c.abs().to_string());
    out.push('·');
}
