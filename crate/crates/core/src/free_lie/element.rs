use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::assoc::AssocPoly;
use super::bracket::BracketTable;
use super::terms::{add_scaled, add_term, format_coefficient, single, Terms};
use super::word::{same_alphabet, standard_split, Alphabet, Letter, LyndonWord, Word};
use crate::error::{Error, Result};

/// An element of the free Lie ring, as a sparse integer combination of
/// Lyndon basis elements.
#[derive(Clone)]
pub struct LieElement {
    alphabet: Arc<Alphabet>,
    terms: Terms,
}

impl LieElement {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        LieElement {
            alphabet: alphabet.clone(),
            terms: Terms::new(),
        }
    }

    pub fn generator(alphabet: &Arc<Alphabet>, l: Letter) -> Result<Self> {
        alphabet.check_letter(l)?;
        Ok(Self::from_terms_unchecked(
            alphabet.clone(),
            single(Word::letter(l), BigInt::one()),
        ))
    }

    pub fn symbol(alphabet: &Arc<Alphabet>, name: &str) -> Result<Self> {
        Self::generator(alphabet, alphabet.letter(name)?)
    }

    pub fn basis(alphabet: &Arc<Alphabet>, w: &LyndonWord, coeff: impl Into<BigInt>) -> Result<Self> {
        for &l in w.letters() {
            alphabet.check_letter(l)?;
        }
        Ok(Self::from_terms_unchecked(
            alphabet.clone(),
            single(w.word().clone(), coeff.into()),
        ))
    }

    /// Build from explicit terms; every key must be a Lyndon word over the
    /// alphabet. Zero coefficients are dropped.
    pub fn from_terms(alphabet: &Arc<Alphabet>, terms: impl IntoIterator<Item = (Word, BigInt)>) -> Result<Self> {
        let mut t = Terms::new();
        for (w, c) in terms {
            if !w.is_lyndon() {
                return Err(Error::NotLyndon(alphabet.spell(w.letters())));
            }
            for &l in w.letters() {
                alphabet.check_letter(l)?;
            }
            add_term(&mut t, w, c);
        }
        Ok(Self::from_terms_unchecked(alphabet.clone(), t))
    }

    pub(crate) fn from_terms_unchecked(alphabet: Arc<Alphabet>, terms: Terms) -> Self {
        debug_assert!(terms.iter().all(|(w, c)| w.is_lyndon() && !c.is_zero()));
        LieElement { alphabet, terms }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<Word, BigInt> {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Terms {
        self.terms
    }

    pub fn coefficient(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().next_back().map_or(0, Word::len)
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(a), Some(b)) => a.len() == b.len(),
            _ => true,
        }
    }

    /// The degree-`q` part.
    pub fn homogeneous_component(&self, q: usize) -> LieElement {
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| w.len() == q)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        Self::from_terms_unchecked(self.alphabet.clone(), terms)
    }

    fn check_same(&self, other: &LieElement) -> Result<()> {
        if same_alphabet(&self.alphabet, &other.alphabet) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn bracket(&self, other: &LieElement) -> Result<LieElement> {
        let mut table = BracketTable::new();
        self.bracket_with(other, &mut table)
    }

    /// Bracket reusing a caller-held memo table.
    pub fn bracket_with(&self, other: &LieElement, table: &mut BracketTable) -> Result<LieElement> {
        self.check_same(other)?;
        Ok(Self::from_terms_unchecked(
            self.alphabet.clone(),
            table.terms(&self.terms, &other.terms),
        ))
    }

    pub fn checked_add(&self, other: &LieElement) -> Result<LieElement> {
        self.check_same(other)?;
        let mut t = self.terms.clone();
        add_scaled(&mut t, &other.terms, &BigInt::one());
        Ok(Self::from_terms_unchecked(self.alphabet.clone(), t))
    }

    pub fn scale(&self, c: &BigInt) -> LieElement {
        let mut t = Terms::new();
        add_scaled(&mut t, &self.terms, c);
        Self::from_terms_unchecked(self.alphabet.clone(), t)
    }

    /// Apply the Lie homomorphism sending each symbol to the given image.
    /// All images must live over `target`.
    pub fn substitute(&self, target: &Arc<Alphabet>, images: &HashMap<String, LieElement>) -> Result<LieElement> {
        let mut by_letter: Vec<Option<&Terms>> = vec![None; self.alphabet.len()];
        for (name, image) in images {
            if !same_alphabet(target, &image.alphabet) {
                return Err(Error::AlphabetMismatch);
            }
            if let Ok(l) = self.alphabet.letter(name) {
                by_letter[l as usize] = Some(&image.terms);
            }
        }
        let mut table = BracketTable::new();
        let mut memo: HashMap<Word, Terms> = HashMap::new();
        let mut acc = Terms::new();
        for (w, c) in &self.terms {
            let img = substitute_word(w, &by_letter, &self.alphabet, &mut table, &mut memo)?;
            add_scaled(&mut acc, &img, c);
        }
        Ok(Self::from_terms_unchecked(target.clone(), acc))
    }

    /// Substitution where each letter goes to a letter of `target` or to 0.
    /// Strictly increasing letter maps carry Lyndon words to Lyndon words with
    /// the same standard factorization, so no rewriting is needed.
    pub fn rename(&self, target: &Arc<Alphabet>, map: &[Option<Letter>]) -> Result<LieElement> {
        if map.len() < self.alphabet.len() {
            return Err(Error::MissingImage(self.alphabet.symbols()[map.len()].clone()));
        }
        for l in map.iter().flatten() {
            target.check_letter(*l)?;
        }
        let images: Vec<Letter> = map.iter().flatten().copied().collect();
        let monotone = images.windows(2).all(|p| p[0] < p[1]);
        if monotone {
            let mut acc = Terms::new();
            'terms: for (w, c) in &self.terms {
                let mut out = Vec::with_capacity(w.len());
                for &l in w.letters() {
                    match map[l as usize] {
                        Some(m) => out.push(m),
                        None => continue 'terms,
                    }
                }
                add_term(&mut acc, Word::new(out), c.clone());
            }
            return Ok(Self::from_terms_unchecked(target.clone(), acc));
        }
        let imgs: HashMap<String, LieElement> = self
            .alphabet
            .letters()
            .map(|l| {
                let img = match map[l as usize] {
                    Some(m) => LieElement::generator(target, m).expect("checked above"),
                    None => LieElement::zero(target),
                };
                (self.alphabet.symbols()[l as usize].clone(), img)
            })
            .collect();
        self.substitute(target, &imgs)
    }

    /// Image in the tensor algebra, brackets realized as commutators.
    pub fn to_associative(&self) -> AssocPoly {
        let mut memo: HashMap<Word, Terms> = HashMap::new();
        let mut acc = Terms::new();
        for (w, c) in &self.terms {
            let p = expand_word(w, &mut memo);
            add_scaled(&mut acc, &p, c);
        }
        AssocPoly::from_terms_unchecked(self.alphabet.clone(), acc)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| {
                    json!({
                        "coeff": c.to_string(),
                        "word": w.letters().iter().map(|&l| self.alphabet.symbols()[l as usize].clone()).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(alphabet: &Arc<Alphabet>, value: &Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Parse("element must be a JSON array".into()))?;
        let mut terms = Vec::with_capacity(items.len());
        for item in items {
            let coeff: BigInt = item["coeff"]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad coefficient in {item}")))?;
            let word = item["word"]
                .as_array()
                .ok_or_else(|| Error::Parse(format!("bad word in {item}")))?
                .iter()
                .map(|s| {
                    s.as_str()
                        .ok_or_else(|| Error::Parse(format!("bad symbol {s}")))
                        .and_then(|s| alphabet.letter(s))
                })
                .collect::<Result<Vec<_>>>()?;
            terms.push((Word::new(word), coeff));
        }
        Self::from_terms(alphabet, terms)
    }
}

fn substitute_word(
    w: &Word,
    images: &[Option<&Terms>],
    alphabet: &Alphabet,
    table: &mut BracketTable,
    memo: &mut HashMap<Word, Terms>,
) -> Result<Terms> {
    if let Some(t) = memo.get(w) {
        return Ok(t.clone());
    }
    let out = match standard_split(w.letters()) {
        None => {
            let l = w.letters()[0];
            images[l as usize]
                .cloned()
                .ok_or_else(|| Error::MissingImage(alphabet.symbols()[l as usize].clone()))?
        }
        Some(split) => {
            let u = Word::new(w.letters()[..split].to_vec());
            let v = Word::new(w.letters()[split..].to_vec());
            let iu = substitute_word(&u, images, alphabet, table, memo)?;
            let iv = substitute_word(&v, images, alphabet, table, memo)?;
            table.terms(&iu, &iv)
        }
    };
    memo.insert(w.clone(), out.clone());
    Ok(out)
}

fn expand_word(w: &Word, memo: &mut HashMap<Word, Terms>) -> Terms {
    if let Some(t) = memo.get(w) {
        return t.clone();
    }
    let out = match standard_split(w.letters()) {
        None => single(w.clone(), BigInt::one()),
        Some(split) => {
            let u = Word::new(w.letters()[..split].to_vec());
            let v = Word::new(w.letters()[split..].to_vec());
            let pu = expand_word(&u, memo);
            let pv = expand_word(&v, memo);
            let mut acc = super::assoc::multiply(&pu, &pv);
            let vu = super::assoc::multiply(&pv, &pu);
            add_scaled(&mut acc, &vu, &-BigInt::one());
            acc
        }
    };
    memo.insert(w.clone(), out.clone());
    out
}

impl PartialEq for LieElement {
    fn eq(&self, other: &Self) -> bool {
        same_alphabet(&self.alphabet, &other.alphabet) && self.terms == other.terms
    }
}

impl Eq for LieElement {}

impl fmt::Display for LieElement {
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

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieElement({self})")
    }
}

// Operator impls panic on mismatched alphabets; use `checked_add` to get an
// error instead.
impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        self.checked_add(rhs).expect("adding elements over different alphabets")
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        self.checked_add(&-rhs)
            .expect("subtracting elements over different alphabets")
    }
}

impl Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        LieElement::from_terms_unchecked(self.alphabet.clone(), super::terms::negate(&self.terms))
    }
}

impl Mul<&LieElement> for &BigInt {
    type Output = LieElement;
    fn mul(self, rhs: &LieElement) -> LieElement {
        rhs.scale(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_lie::{lyndon_words, standard_bracketing};

    fn ab() -> Arc<Alphabet> {
        Alphabet::shared(["a", "b"]).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::new(s.bytes().map(|b| b - b'a').collect())
    }

    fn el(alpha: &Arc<Alphabet>, terms: &[(&str, i64)]) -> LieElement {
        LieElement::from_terms(alpha, terms.iter().map(|&(s, c)| (w(s), BigInt::from(c)))).unwrap()
    }

    #[test]
    fn basic_brackets() {
        let a = ab();
        let x = el(&a, &[("a", 1)]);
        let y = el(&a, &[("b", 1)]);
        assert!(x.bracket(&x).unwrap().is_zero());
        assert_eq!(x.bracket(&y).unwrap(), el(&a, &[("ab", 1)]));
        let xy = el(&a, &[("ab", 1)]);
        assert_eq!(xy.bracket(&x).unwrap(), el(&a, &[("aab", -1)]));
    }

    #[test]
    fn bracket_against_commutator_oracle() {
        let a = ab();
        let x = el(&a, &[("ab", 1)]);
        let y = el(&a, &[("a", 1)]);
        let lhs = x.bracket(&y).unwrap().to_associative();
        let (px, py) = (x.to_associative(), y.to_associative());
        assert_eq!(lhs, &(&px * &py) - &(&py * &px));
    }

    #[test]
    fn mismatched_alphabets() {
        let a = ab();
        let c = Alphabet::shared(["c"]).unwrap();
        let x = el(&a, &[("a", 1)]);
        let z = LieElement::generator(&c, 0).unwrap();
        assert_eq!(x.bracket(&z), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn homogeneous_components() {
        let a = ab();
        let x = el(&a, &[("a", 1), ("ab", 1)]);
        assert_eq!(x.homogeneous_component(2), el(&a, &[("ab", 1)]));
        assert!(LieElement::zero(&a).homogeneous_component(3).is_zero());
        assert!(el(&a, &[("aab", 3)]).homogeneous_component(2).is_zero());
    }

    #[test]
    fn substitution_examples() {
        let a = ab();
        let x = el(&a, &[("ab", 1)]);
        let kill_b: HashMap<String, LieElement> = [
            ("a".to_string(), el(&a, &[("a", 1)])),
            ("b".to_string(), LieElement::zero(&a)),
        ]
        .into();
        assert!(x.substitute(&a, &kill_b).unwrap().is_zero());
        let swap: HashMap<String, LieElement> = [
            ("a".to_string(), el(&a, &[("b", 1)])),
            ("b".to_string(), el(&a, &[("a", 1)])),
        ]
        .into();
        assert_eq!(x.substitute(&a, &swap).unwrap(), el(&a, &[("ab", -1)]));
        let id: HashMap<String, LieElement> = [("a".to_string(), el(&a, &[("a", 1)]))].into();
        let g = el(&a, &[("a", 1)]);
        assert_eq!(g.substitute(&a, &id).unwrap(), g);
        assert!(matches!(x.substitute(&a, &id), Err(Error::MissingImage(_))));
    }

    #[test]
    fn non_monotone_rename_matches_substitute() {
        let abc = Alphabet::shared(["a", "b", "c"]).unwrap();
        let x = el(&abc, &[("aab", 2), ("abc", -1), ("acb", 1), ("bc", 5)]);
        let renamed = x.rename(&abc, &[Some(2), Some(0), Some(1)]).unwrap();
        let imgs: HashMap<String, LieElement> = [
            ("a".to_string(), el(&abc, &[("c", 1)])),
            ("b".to_string(), el(&abc, &[("a", 1)])),
            ("c".to_string(), el(&abc, &[("b", 1)])),
        ]
        .into();
        assert_eq!(renamed, x.substitute(&abc, &imgs).unwrap());
    }

    #[test]
    fn assoc_embedding_examples() {
        let a = ab();
        assert_eq!(el(&a, &[("a", 1)]).to_associative().to_string(), "1·(a)");
        assert_eq!(el(&a, &[("ab", 1)]).to_associative().to_string(), "1·(ab) - 1·(ba)");
        assert_eq!(
            el(&a, &[("aab", 1)]).to_associative().to_string(),
            "1·(aab) - 2·(aba) + 1·(baa)"
        );
    }

    #[test]
    fn monomial_examples() {
        let a = ab();
        let leaf_a = crate::free_lie::LieMonomial::leaf(0);
        let leaf_b = crate::free_lie::LieMonomial::leaf(1);
        use crate::free_lie::LieMonomial as M;
        assert_eq!(leaf_a.to_element(&a).unwrap(), el(&a, &[("a", 1)]));
        let abb = M::bracket(&M::bracket(&leaf_a, &leaf_b), &leaf_b);
        assert_eq!(abb.to_element(&a).unwrap(), el(&a, &[("abb", 1)]));
        assert_eq!(
            M::bracket(&leaf_b, &leaf_a).to_element(&a).unwrap(),
            el(&a, &[("ab", -1)])
        );
        let c = Alphabet::shared(["c"]).unwrap();
        assert!(leaf_b.to_element(&c).is_err());
    }

    #[test]
    fn standard_bracketing_is_basis_element() {
        let abc = Alphabet::shared(["a", "b", "c"]).unwrap();
        for lw in lyndon_words(&abc, 6).unwrap() {
            let m = standard_bracketing(&lw);
            let e = m.to_element(&abc).unwrap();
            assert_eq!(e, LieElement::basis(&abc, &lw, 1).unwrap());
        }
    }

    #[test]
    fn standard_bracketing_text() {
        let a = ab();
        let sb = |s: &str| standard_bracketing(&LyndonWord::new(w(s)).unwrap()).to_text(&a);
        assert_eq!(sb("ab"), "[a,b]");
        assert_eq!(sb("aab"), "[a,[a,b]]");
        assert_eq!(sb("abb"), "[[a,b],b]");
        assert!(crate::free_lie::standard_bracketing_of(&w("ba")).is_err());
    }

    #[test]
    fn display_and_json() {
        let a = ab();
        let x = el(&a, &[("a", 1), ("aab", -3)]);
        assert_eq!(x.to_string(), "1·(a) - 3·(aab)");
        let back = LieElement::from_json(&a, &x.to_json()).unwrap();
        assert_eq!(back, x);
        assert_eq!(LieElement::zero(&a).to_string(), "0");
    }
}
