//! Bracket trees over an alphabet.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde_json::Value;

use super::element::LieElement;
use super::word::{Alphabet, Letter, LyndonWord, Word};
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq, Hash)]
enum Node {
    Leaf(Letter),
    Bracket(LieMonomial, LieMonomial),
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Inner {
    node: Node,
    degree: usize,
    content: BTreeMap<Letter, usize>,
}

/// A Lie monomial: a leaf or a bracket `[left, right]` of two monomials.
/// Subtrees are shared, so cloning is cheap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LieMonomial(Arc<Inner>);

impl LieMonomial {
    pub fn leaf(l: Letter) -> Self {
        LieMonomial(Arc::new(Inner {
            node: Node::Leaf(l),
            degree: 1,
            content: BTreeMap::from([(l, 1)]),
        }))
    }

    pub fn bracket(left: &LieMonomial, right: &LieMonomial) -> Self {
        let mut content = left.0.content.clone();
        for (&l, &c) in &right.0.content {
            *content.entry(l).or_default() += c;
        }
        LieMonomial(Arc::new(Inner {
            degree: left.degree() + right.degree(),
            node: Node::Bracket(left.clone(), right.clone()),
            content,
        }))
    }

    /// `[...[[first, rest_1], rest_2], ..., rest_t]`
    pub fn left_normed<'a>(first: &LieMonomial, rest: impl IntoIterator<Item = &'a LieMonomial>) -> Self {
        rest.into_iter()
            .fold(first.clone(), |acc, m| LieMonomial::bracket(&acc, m))
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Multiset of leaf letters.
    pub fn content(&self) -> &BTreeMap<Letter, usize> {
        &self.0.content
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.0.content.contains_key(&l)
    }

    pub fn as_leaf(&self) -> Option<Letter> {
        match self.0.node {
            Node::Leaf(l) => Some(l),
            Node::Bracket(..) => None,
        }
    }

    pub fn children(&self) -> Option<(&LieMonomial, &LieMonomial)> {
        match &self.0.node {
            Node::Leaf(_) => None,
            Node::Bracket(a, b) => Some((a, b)),
        }
    }

    /// Evaluate the bracket tree to Lyndon normal form.
    pub fn to_element(&self, alphabet: &Arc<Alphabet>) -> Result<LieElement> {
        for &l in self.0.content.keys() {
            alphabet.check_letter(l)?;
        }
        let mut table = super::BracketTable::new();
        Ok(LieElement::from_terms_unchecked(
            alphabet.clone(),
            self.eval(&mut table),
        ))
    }

    pub(crate) fn eval(&self, table: &mut super::BracketTable) -> super::Terms {
        match &self.0.node {
            Node::Leaf(l) => super::terms::single(Word::letter(*l), 1.into()),
            Node::Bracket(a, b) => {
                let x = a.eval(table);
                let y = b.eval(table);
                table.terms(&x, &y)
            }
        }
    }

    /// Text form: leaves by symbol name, brackets as `[u,v]`.
    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        let mut s = String::new();
        self.write_text(alphabet, &mut s);
        s
    }

    fn write_text(&self, alphabet: &Alphabet, out: &mut String) {
        match &self.0.node {
            Node::Leaf(l) => {
                let _ = write!(out, "{}", alphabet.symbols()[*l as usize]);
            }
            Node::Bracket(a, b) => {
                out.push('[');
                a.write_text(alphabet, out);
                out.push(',');
                b.write_text(alphabet, out);
                out.push(']');
            }
        }
    }

    /// Parse the text form. Symbols must not contain unbalanced brackets at
    /// the top level; `A[i,j]` style names are handled.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let text = text.trim();
        let (m, rest) = Self::parse_prefix(text, alphabet)?;
        if !rest.trim().is_empty() {
            return Err(Error::Parse(format!("trailing input `{rest}`")));
        }
        Ok(m)
    }

    fn parse_prefix<'a>(text: &'a str, alphabet: &Alphabet) -> Result<(Self, &'a str)> {
        let text = text.trim_start();
        if let Some(rest) = text.strip_prefix('[') {
            let (a, rest) = Self::parse_prefix(rest, alphabet)?;
            let rest = rest
                .trim_start()
                .strip_prefix(',')
                .ok_or_else(|| Error::Parse(format!("expected `,` before `{rest}`")))?;
            let (b, rest) = Self::parse_prefix(rest, alphabet)?;
            let rest = rest
                .trim_start()
                .strip_prefix(']')
                .ok_or_else(|| Error::Parse(format!("expected `]` before `{rest}`")))?;
            Ok((LieMonomial::bracket(&a, &b), rest))
        } else {
            let best = alphabet
                .symbols()
                .iter()
                .enumerate()
                .filter(|(_, s)| text.starts_with(s.as_str()))
                .max_by_key(|(_, s)| s.len());
            match best {
                Some((i, s)) => Ok((LieMonomial::leaf(i as Letter), &text[s.len()..])),
                None => {
                    let end = text.find([',', ']']).unwrap_or(text.len());
                    Err(Error::UnknownSymbol(text[..end].to_string()))
                }
            }
        }
    }

    /// JSON form: a leaf is its symbol string, a bracket a two-element array.
    pub fn to_json(&self, alphabet: &Alphabet) -> Value {
        match &self.0.node {
            Node::Leaf(l) => Value::String(alphabet.symbols()[*l as usize].clone()),
            Node::Bracket(a, b) => Value::Array(vec![a.to_json(alphabet), b.to_json(alphabet)]),
        }
    }

    pub fn from_json(value: &Value, alphabet: &Alphabet) -> Result<Self> {
        match value {
            Value::String(s) => Ok(LieMonomial::leaf(alphabet.letter(s)?)),
            Value::Array(items) if items.len() == 2 => Ok(LieMonomial::bracket(
                &Self::from_json(&items[0], alphabet)?,
                &Self::from_json(&items[1], alphabet)?,
            )),
            other => Err(Error::Parse(format!("not a monomial: {other}"))),
        }
    }
}

/// Leaf for a single letter; otherwise `[sb(u), sb(v)]` along the right
/// standard factorization.
pub fn standard_bracketing(w: &LyndonWord) -> LieMonomial {
    match w.standard_factorization() {
        None => LieMonomial::leaf(w.letters()[0]),
        Some((u, v)) => LieMonomial::bracket(&standard_bracketing(&u), &standard_bracketing(&v)),
    }
}

/// Checked variant taking an arbitrary word.
pub fn standard_bracketing_of(w: &Word) -> Result<LieMonomial> {
    LyndonWord::new(w.clone()).map(|lw| standard_bracketing(&lw))
}
