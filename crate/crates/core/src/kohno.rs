//! The Lie algebra of the pure braid group, `L(P_n)`.
//!
//! `L(P_n)` is generated by `A[i,j]`, `1 <= i < j <= n`, subject to the
//! infinitesimal braid relations. It splits additively as a sum of free
//! layers: layer `k` is the free Lie ring on `A[1,k], ..., A[k-1,k]`, an ideal
//! of `L(P_k)` on which lower layers act by derivations. For `a < b < k`:
//!
//! ```text
//! [A[a,b], A[a,k]] =  [A[a,k], A[b,k]]
//! [A[a,b], A[b,k]] = -[A[a,k], A[b,k]]
//! [A[a,b], A[c,k]] =  0                 (c ∉ {a, b})
//! ```
//!
//! Storing one normal-form element per layer gives every element a unique
//! representation.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::free_lie::terms::{add_scaled, single};
use crate::free_lie::{apply_derivation, standard_split, Alphabet, BracketTable, Letter, LieElement, Terms, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidGenerator {
    pub i: usize,
    pub j: usize,
}

impl BraidGenerator {
    pub fn new(i: usize, j: usize, n: usize) -> Result<Self> {
        if i >= 1 && i < j && j <= n {
            Ok(BraidGenerator { i, j })
        } else {
            Err(Error::InvalidGenerator { i, j, n })
        }
    }

    /// Letter of this generator inside the alphabet of layer `j`.
    pub fn letter(&self) -> Letter {
        (self.i - 1) as Letter
    }

    /// All generators on `n` strands, ordered by layer, then by `i`.
    pub fn all(n: usize) -> Vec<BraidGenerator> {
        (2..=n)
            .flat_map(|j| (1..j).map(move |i| BraidGenerator { i, j }))
            .collect()
    }
}

impl fmt::Display for BraidGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A[{},{}]", self.i, self.j)
    }
}

pub fn generator_symbol(i: usize, j: usize) -> String {
    format!("A[{i},{j}]")
}

/// Alphabet `A[1,k] < ... < A[k-1,k]` of layer `k`.
pub fn layer_alphabet(k: usize) -> Arc<Alphabet> {
    assert!(k >= 2, "layers start at k = 2");
    Alphabet::shared((1..k).map(|i| generator_symbol(i, k))).expect("distinct symbols")
}

/// An element of `L(P_n)`, one free-Lie component per layer `k = 2..=n`.
#[derive(Clone, PartialEq, Eq)]
pub struct LayeredElement {
    n: usize,
    layers: Vec<LieElement>,
}

impl LayeredElement {
    /// Zero on `n` strands. `n = 0, 1` give the zero algebra.
    pub fn zero(n: usize) -> Self {
        LayeredElement {
            n,
            layers: (2..=n).map(|k| LieElement::zero(&layer_alphabet(k))).collect(),
        }
    }

    pub fn inject(g: BraidGenerator, n: usize) -> Result<Self> {
        let g = BraidGenerator::new(g.i, g.j, n)?;
        let mut x = Self::zero(n);
        let alpha = x.layers[g.j - 2].alphabet().clone();
        x.layers[g.j - 2] = LieElement::generator(&alpha, g.letter())?;
        Ok(x)
    }

    pub fn generator(i: usize, j: usize, n: usize) -> Result<Self> {
        Self::inject(BraidGenerator::new(i, j, n)?, n)
    }

    /// Place a layer-`k` element into `L(P_n)`.
    pub fn from_layer(n: usize, k: usize, x: LieElement) -> Result<Self> {
        if k < 2 || k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
        let mut out = Self::zero(n);
        if x.alphabet().as_ref() != out.layers[k - 2].alphabet().as_ref() {
            return Err(Error::AlphabetMismatch);
        }
        let alpha = out.layers[k - 2].alphabet().clone();
        out.layers[k - 2] = LieElement::from_terms_unchecked(alpha, x.into_terms());
        Ok(out)
    }

    pub(crate) fn from_layer_terms(n: usize, layers: Vec<Terms>) -> Self {
        debug_assert_eq!(layers.len(), n.saturating_sub(1));
        LayeredElement {
            n,
            layers: layers
                .into_iter()
                .enumerate()
                .map(|(idx, t)| LieElement::from_terms_unchecked(layer_alphabet(idx + 2), t))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Layer `k` component, `2 <= k <= n`.
    pub fn layer(&self, k: usize) -> &LieElement {
        &self.layers[k - 2]
    }

    pub fn layers(&self) -> impl Iterator<Item = (usize, &LieElement)> {
        self.layers.iter().enumerate().map(|(i, x)| (i + 2, x))
    }

    pub fn is_zero(&self) -> bool {
        self.layers.iter().all(LieElement::is_zero)
    }

    pub fn homogeneous_component(&self, q: usize) -> Self {
        LayeredElement {
            n: self.n,
            layers: self.layers.iter().map(|x| x.homogeneous_component(q)).collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.layers.iter().map(LieElement::max_degree).max().unwrap_or(0)
    }

    fn check_n(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::StrandMismatch(self.n, other.n))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        Ok(LayeredElement {
            n: self.n,
            layers: self.layers.iter().zip(&other.layers).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        LayeredElement {
            n: self.n,
            layers: self.layers.iter().map(|x| x.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }

    /// The bracket of `L(P_n)`.
    pub fn lp_bracket(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut tables: Vec<BracketTable> = (0..self.layers.len()).map(|_| BracketTable::new()).collect();
        Ok(self.lp_bracket_with(other, &mut tables))
    }

    fn lp_bracket_with(&self, other: &Self, tables: &mut [BracketTable]) -> Self {
        let n = self.n;
        let mut out: Vec<Terms> = Vec::with_capacity(self.layers.len());
        for k in 2..=n {
            let table = &mut tables[k - 2];
            let xk = self.layer(k).terms();
            let yk = other.layer(k).terms();
            let mut acc = table.terms(xk, yk);
            for j in 2..k {
                let xj = self.layer(j).terms();
                let yj = other.layer(j).terms();
                if !xj.is_empty() && !yk.is_empty() {
                    let t = act(table, j, xj, yk);
                    add_scaled(&mut acc, &t, &BigInt::one());
                }
                if !yj.is_empty() && !xk.is_empty() {
                    let t = act(table, j, yj, xk);
                    add_scaled(&mut acc, &t, &-BigInt::one());
                }
            }
            out.push(acc);
        }
        Self::from_layer_terms(n, out)
    }

    /// Strand deletion `d_k : L(P_n) -> L(P_{n-1})`, `1 <= k <= n`.
    pub fn face(&self, k: usize) -> Result<Self> {
        let n = self.n;
        if n == 0 || k < 1 || k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
        let mut out: Vec<Terms> = Vec::with_capacity(n.saturating_sub(2));
        for target in 2..n {
            // target layer `target` of P_{n-1} receives exactly one source layer
            let (src, map): (usize, Vec<Option<Letter>>) = if target < k {
                (target, (0..target - 1).map(|a| Some(a as Letter)).collect())
            } else {
                let src = target + 1;
                let map = (1..src)
                    .map(|i| match i.cmp(&k) {
                        std::cmp::Ordering::Less => Some((i - 1) as Letter),
                        std::cmp::Ordering::Equal => None,
                        std::cmp::Ordering::Greater => Some((i - 2) as Letter),
                    })
                    .collect();
                (src, map)
            };
            let img = self.layer(src).rename(&layer_alphabet(target), &map)?;
            out.push(img.into_terms());
        }
        Ok(Self::from_layer_terms(n - 1, out))
    }

    /// Strand insertion `d^i : L(P_n) -> L(P_{n+1})` at position `i`,
    /// `1 <= i <= n+1`: `A[a,b] -> A[a',b']` with indices `>= i` shifted up.
    pub fn coface(&self, i: usize) -> Result<Self> {
        let n = self.n;
        if i < 1 || i > n + 1 {
            return Err(Error::IndexOutOfRange { index: i, max: n + 1 });
        }
        let shift = |a: usize| if a >= i { a + 1 } else { a };
        let mut out: Vec<Terms> = vec![Terms::new(); n];
        for b in 2..=n {
            let tb = shift(b);
            let map: Vec<Option<Letter>> = (1..b).map(|a| Some((shift(a) - 1) as Letter)).collect();
            let img = self.layer(b).rename(&layer_alphabet(tb), &map)?;
            out[tb - 2] = img.into_terms();
        }
        Ok(Self::from_layer_terms(n + 1, out))
    }

    pub fn to_json(&self) -> Value {
        let mut layers = Map::new();
        for (k, x) in self.layers() {
            layers.insert(k.to_string(), x.to_json());
        }
        serde_json::json!({ "n": self.n, "layers": layers })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let n = value["n"]
            .as_u64()
            .ok_or_else(|| Error::Parse("missing strand count `n`".into()))? as usize;
        let mut out = Self::zero(n);
        if let Some(layers) = value["layers"].as_object() {
            for (key, v) in layers {
                let k: usize = key
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad layer key `{key}`")))?;
                if k < 2 || k > n {
                    return Err(Error::IndexOutOfRange { index: k, max: n });
                }
                out.layers[k - 2] = LieElement::from_json(&layer_alphabet(k), v)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for LayeredElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .layers()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| format!("L{k}: {x}"))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("; "))
        }
    }
}

impl fmt::Debug for LayeredElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LayeredElement(n={}, {})", self.n, self)
    }
}

/// Action of a layer-`j` element on an element of a higher layer.
fn act(table: &mut BracketTable, j: usize, xj: &Terms, y: &Terms) -> Terms {
    let mut acc = Terms::new();
    for (w, c) in xj {
        let t = act_word(table, j, w.letters(), y);
        add_scaled(&mut acc, &t, c);
    }
    acc
}

/// Action of the basis element `P_w` of layer `j`: generators act by the
/// derivations above, brackets by commutators of derivations.
fn act_word(table: &mut BracketTable, j: usize, w: &[Letter], y: &Terms) -> Terms {
    if y.is_empty() {
        return Terms::new();
    }
    match standard_split(w) {
        None => {
            let a = w[0] as usize + 1;
            generator_derivation(table, a, j, y)
        }
        Some(split) => {
            let (u, v) = w.split_at(split);
            let vy = act_word(table, j, v, y);
            let mut acc = act_word(table, j, u, &vy);
            let uy = act_word(table, j, u, y);
            let t = act_word(table, j, v, &uy);
            add_scaled(&mut acc, &t, &-BigInt::one());
            acc
        }
    }
}

/// `ad A[a,b]` restricted to a layer `k > b`.
fn generator_derivation(table: &mut BracketTable, a: usize, b: usize, y: &Terms) -> Terms {
    debug_assert!(a < b);
    let la = (a - 1) as Letter;
    let lb = (b - 1) as Letter;
    let on_letter = move |c: Letter| -> Terms {
        let bracket_ab = Word::new(vec![la, lb]);
        if c == la {
            single(bracket_ab, BigInt::one())
        } else if c == lb {
            single(bracket_ab, -BigInt::one())
        } else {
            Terms::new()
        }
    };
    apply_derivation(table, &on_letter, y)
}

/// Realizations of the three relation families for `i < j < k` and disjoint
/// pairs, as elements of `L(P_n)`. Each must vanish.
pub fn relation_instances(n: usize) -> Result<Vec<(String, LayeredElement)>> {
    let g = |i, j| LayeredElement::generator(i, j, n);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let r2 = g(i, j)?.lp_bracket(&g(i, k)?.checked_add(&g(j, k)?)?)?;
                out.push((format!("[A[{i},{j}], A[{i},{k}] + A[{j},{k}]]"), r2));
                let r3 = g(i, k)?.lp_bracket(&g(i, j)?.checked_add(&g(j, k)?)?)?;
                out.push((format!("[A[{i},{k}], A[{i},{j}] + A[{j},{k}]]"), r3));
            }
        }
    }
    let gens = BraidGenerator::all(n);
    for a in &gens {
        for b in &gens {
            if a < b && a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j {
                let r1 = LayeredElement::inject(*a, n)?.lp_bracket(&LayeredElement::inject(*b, n)?)?;
                out.push((format!("[{a}, {b}]"), r1));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: usize, j: usize, n: usize) -> LayeredElement {
        LayeredElement::generator(i, j, n).unwrap()
    }

    fn layer_elem(k: usize, word: &[Letter], c: i64) -> LieElement {
        LieElement::from_terms(&layer_alphabet(k), [(Word::new(word.to_vec()), BigInt::from(c))]).unwrap()
    }

    #[test]
    fn injection() {
        let x = g(1, 2, 3);
        assert_eq!(x.layer(2).to_string(), "1·(A[1,2])");
        assert!(x.layer(3).is_zero());
        assert_eq!(g(2, 3, 3).layer(3).to_string(), "1·(A[2,3])");
        assert!(LayeredElement::generator(1, 4, 3).is_err());
    }

    #[test]
    fn relation_brackets() {
        let r = g(1, 2, 3).lp_bracket(&g(1, 3, 3)).unwrap();
        assert!(r.layer(2).is_zero());
        assert_eq!(r.layer(3), &layer_elem(3, &[0, 1], 1));
        let r = g(1, 2, 3).lp_bracket(&g(2, 3, 3)).unwrap();
        assert_eq!(r.layer(3), &layer_elem(3, &[0, 1], -1));
        assert!(g(1, 2, 4).lp_bracket(&g(3, 4, 4)).unwrap().is_zero());
    }

    #[test]
    fn relations_vanish() {
        for n in 2..=5 {
            for (name, r) in relation_instances(n).unwrap() {
                assert!(r.is_zero(), "n={n}: {name} = {r}");
            }
        }
    }

    #[test]
    fn faces_on_generators() {
        assert!(g(1, 3, 3).face(3).unwrap().is_zero());
        assert_eq!(g(2, 3, 3).face(1).unwrap(), g(1, 2, 2));
        assert_eq!(g(1, 3, 3).face(2).unwrap(), g(1, 2, 2));
        assert!(g(1, 3, 3).face(4).is_err());
        assert!(g(1, 3, 3).face(0).is_err());
    }

    #[test]
    fn cofaces_on_generators() {
        assert_eq!(g(1, 2, 2).coface(1).unwrap(), g(2, 3, 3));
        assert_eq!(g(1, 2, 2).coface(3).unwrap(), g(1, 2, 3));
        assert_eq!(g(1, 3, 3).coface(2).unwrap(), g(1, 4, 4));
        assert!(g(1, 2, 2).coface(4).is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = g(1, 2, 3)
            .lp_bracket(&g(1, 3, 3))
            .unwrap()
            .checked_add(&g(1, 2, 3))
            .unwrap();
        let v = x.to_json();
        assert_eq!(v["n"], 3);
        assert_eq!(LayeredElement::from_json(&v).unwrap(), x);
    }

    #[test]
    fn mismatched_strands() {
        assert_eq!(g(1, 2, 3).lp_bracket(&g(1, 2, 4)), Err(Error::StrandMismatch(3, 4)));
    }
}
