//! Generating sets of kernel intersections inside the free layer
//! `L[A[1,n], ..., A[n-1,n]]`, truncated by degree.
//!
//! [`kset`] builds the levels `K(n)_k` recursively from `K(n)_n = {A[i,n]}`:
//! with `𝒜` the level-`k+1` monomials avoiding `A[k,n]` and `ℬ` the rest,
//! level `k` consists of all left-normed products `[...[[W', W1], W2], ..., Wt]`
//! with `W' ∈ ℬ`, `t >= 0`, and `(W1, ..., Wt)` an ordered tuple from `𝒜`.
//! Level 1 freely generates the Brunnian ideal.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::free_lie::{lyndon_words, standard_bracketing, Alphabet, Letter, LieMonomial};
use crate::kohno::{layer_alphabet, LayeredElement};

/// One level `K(n)_k`, truncated at `deg_max`, in canonical order
/// (degree, then monomial text).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSetLevel {
    pub n: usize,
    pub k: usize,
    pub deg_max: usize,
    pub monomials: Vec<LieMonomial>,
}

impl GeneratorSetLevel {
    pub fn alphabet(&self) -> Arc<Alphabet> {
        layer_alphabet(self.n)
    }

    pub fn counts(&self) -> BTreeMap<usize, u64> {
        degree_counts(&self.monomials)
    }

    pub fn to_lines(&self) -> String {
        listing(&self.monomials, &self.alphabet())
    }

    pub fn to_json(&self) -> Value {
        listing_json(&self.monomials, &self.alphabet())
    }
}

/// `degree text` per line.
pub fn listing(monomials: &[LieMonomial], alphabet: &Alphabet) -> String {
    let mut s = String::new();
    for m in monomials {
        s.push_str(&format!("{} {}\n", m.degree(), m.to_text(alphabet)));
    }
    s
}

pub fn listing_json(monomials: &[LieMonomial], alphabet: &Alphabet) -> Value {
    Value::Array(
        monomials
            .iter()
            .map(|m| serde_json::json!({ "degree": m.degree(), "monomial": m.to_json(alphabet) }))
            .collect(),
    )
}

pub fn degree_counts(monomials: &[LieMonomial]) -> BTreeMap<usize, u64> {
    let mut out = BTreeMap::new();
    for m in monomials {
        *out.entry(m.degree()).or_insert(0) += 1;
    }
    out
}

fn canonical_sort(monomials: Vec<LieMonomial>, alphabet: &Alphabet) -> Vec<LieMonomial> {
    let mut keyed: Vec<(usize, String, LieMonomial)> = monomials
        .into_iter()
        .map(|m| (m.degree(), m.to_text(alphabet), m))
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    keyed.into_iter().map(|(_, _, m)| m).collect()
}

fn check_n_k(n: usize, k: usize, max_k: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n}, need n >= 2")));
    }
    if k < 1 || k > max_k {
        return Err(Error::IndexOutOfRange { index: k, max: max_k });
    }
    Ok(())
}

fn check_deg(deg_max: usize) -> Result<()> {
    if deg_max == 0 {
        Err(Error::InvalidParameter("deg_max must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// All `[...[[first, w1], w2], ..., wt]`, `t >= 0`, `wi ∈ pool`, degree `<= deg_max`.
fn left_normed_extensions(first: &LieMonomial, pool: &[LieMonomial], deg_max: usize, out: &mut Vec<LieMonomial>) {
    if first.degree() > deg_max {
        return;
    }
    out.push(first.clone());
    for w in pool {
        if first.degree() + w.degree() <= deg_max {
            left_normed_extensions(&LieMonomial::bracket(first, w), pool, deg_max, out);
        }
    }
}

/// Level `K(n)_k` truncated at `deg_max`.
pub fn kset(n: usize, k: usize, deg_max: usize) -> Result<GeneratorSetLevel> {
    check_n_k(n, k, n)?;
    check_deg(deg_max)?;
    let alphabet = layer_alphabet(n);
    let mut level: Vec<LieMonomial> = (0..n - 1).map(|l| LieMonomial::leaf(l as Letter)).collect();
    for current in (k..n).rev() {
        let letter = (current - 1) as Letter;
        let (with, without): (Vec<LieMonomial>, Vec<LieMonomial>) = level.into_iter().partition(|m| m.contains(letter));
        let mut next = Vec::new();
        for w in &with {
            left_normed_extensions(w, &without, deg_max, &mut next);
        }
        level = next;
    }
    level.retain(|m| m.degree() <= deg_max);
    Ok(GeneratorSetLevel {
        n,
        k,
        deg_max,
        monomials: canonical_sort(level, &alphabet),
    })
}

/// Number of level-1 monomials per degree (degrees with none are omitted).
pub fn kset_counts(n: usize, deg_max: usize) -> Result<BTreeMap<usize, u64>> {
    Ok(kset(n, 1, deg_max)?.counts())
}

/// `x` and `[...[x, y1], ..., yt]` for `x ∈ X`, `yi ∈ Y` (ordered tuples),
/// degree `<= deg_max`; ordered by degree, then `x`, then the tuple.
pub fn lemma4_generators(x: &[Letter], y: &[Letter], deg_max: usize) -> Result<Vec<LieMonomial>> {
    if x.is_empty() {
        return Err(Error::InvalidParameter("X must be nonempty".into()));
    }
    if let Some(common) = x.iter().find(|l| y.contains(l)) {
        return Err(Error::OverlappingSets(format!("letter {common}")));
    }
    let ys: Vec<LieMonomial> = y.iter().map(|&l| LieMonomial::leaf(l)).collect();
    let mut layer: Vec<LieMonomial> = x.iter().map(|&l| LieMonomial::leaf(l)).collect();
    let mut out = Vec::new();
    for _ in 1..=deg_max {
        out.extend(layer.iter().cloned());
        layer = layer
            .iter()
            .flat_map(|m| ys.iter().map(move |yl| LieMonomial::bracket(m, yl)))
            .collect();
        if layer.is_empty() {
            break;
        }
    }
    Ok(out)
}

/// Generators `A[k,n]`, `[...[A[k,n], A[j1,n]], ..., A[jm,n]]`, `ji ∉ {k, n}`,
/// of `ker d_n ∩ ker d_k`, in canonical order.
pub fn prop5_generators(n: usize, k: usize, deg_max: usize) -> Result<Vec<LieMonomial>> {
    check_n_k(n, k, n - 1)?;
    check_deg(deg_max)?;
    let x = [(k - 1) as Letter];
    let y: Vec<Letter> = (1..n).filter(|&j| j != k).map(|j| (j - 1) as Letter).collect();
    let gens = lemma4_generators(&x, &y, deg_max)?;
    Ok(canonical_sort(gens, &layer_alphabet(n)))
}

/// Lyndon-basis monomials over `A[1,n], ..., A[n-1,n]` containing `A[k,n]`
/// exactly once; ordered by degree, then lexicographically.
pub fn prop6_generators(n: usize, k: usize, deg_max: usize) -> Result<Vec<LieMonomial>> {
    check_n_k(n, k, n - 1)?;
    check_deg(deg_max)?;
    let alphabet = layer_alphabet(n);
    let letter = (k - 1) as Letter;
    Ok(lyndon_words(&alphabet, deg_max)?
        .iter()
        .filter(|w| w.word().count(letter) == 1)
        .map(standard_bracketing)
        .collect())
}

/// Whether a layer-`n` monomial is killed by every strand deletion.
pub fn verify_in_kernels(generator: &LieMonomial, n: usize) -> Result<bool> {
    let alphabet = layer_alphabet(n);
    let x = LayeredElement::from_layer(n, n, generator.to_element(&alphabet)?)?;
    for i in 1..=n {
        if !x.face(i)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(ms: &[LieMonomial], n: usize) -> Vec<String> {
        let a = layer_alphabet(n);
        ms.iter().map(|m| m.to_text(&a)).collect()
    }

    #[test]
    fn n3_levels() {
        assert_eq!(texts(&kset(3, 3, 4).unwrap().monomials, 3), ["A[1,3]", "A[2,3]"]);
        assert_eq!(
            texts(&kset(3, 2, 3).unwrap().monomials, 3),
            ["A[2,3]", "[A[2,3],A[1,3]]", "[[A[2,3],A[1,3]],A[1,3]]"]
        );
    }

    #[test]
    fn n3_level_one_to_degree_four() {
        let mut got = texts(&kset(3, 1, 4).unwrap().monomials, 3);
        let mut expected = vec![
            "[A[2,3],A[1,3]]",
            "[[A[2,3],A[1,3]],A[1,3]]",
            "[[A[2,3],A[1,3]],A[2,3]]",
            "[[[A[2,3],A[1,3]],A[1,3]],A[1,3]]",
            "[[[A[2,3],A[1,3]],A[1,3]],A[2,3]]",
            "[[[A[2,3],A[1,3]],A[2,3]],A[2,3]]",
        ];
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn level_one_counts() {
        assert_eq!(
            kset_counts(3, 5).unwrap(),
            BTreeMap::from([(2, 1), (3, 2), (4, 3), (5, 4)])
        );
        assert_eq!(kset_counts(2, 4).unwrap(), BTreeMap::from([(1, 1)]));
        assert_eq!(kset_counts(4, 3).unwrap(), BTreeMap::from([(3, 2)]));
    }

    #[test]
    fn n4_degree_three() {
        let got = texts(&kset(4, 1, 3).unwrap().monomials, 4);
        assert_eq!(got, ["[[A[3,4],A[1,4]],A[2,4]]", "[[A[3,4],A[2,4]],A[1,4]]"]);
    }

    #[test]
    fn level_one_contains_every_letter() {
        for n in 2..=5 {
            for m in kset(n, 1, 6).unwrap().monomials {
                assert_eq!(m.content().len(), n - 1);
            }
        }
    }

    #[test]
    fn invalid_levels() {
        assert!(kset(3, 0, 3).is_err());
        assert!(kset(3, 4, 3).is_err());
        assert!(kset(1, 1, 3).is_err());
        assert!(prop5_generators(3, 3, 3).is_err());
        assert!(prop6_generators(3, 0, 3).is_err());
    }

    #[test]
    fn lemma4_examples() {
        let xy = Alphabet::new(["x", "y"]).unwrap();
        let got: Vec<String> = lemma4_generators(&[0], &[1], 3)
            .unwrap()
            .iter()
            .map(|m| m.to_text(&xy))
            .collect();
        assert_eq!(got, ["x", "[x,y]", "[[x,y],y]"]);
        assert_eq!(lemma4_generators(&[0], &[], 5).unwrap().len(), 1);
        let xxy = Alphabet::new(["x1", "x2", "y"]).unwrap();
        let got: Vec<String> = lemma4_generators(&[0, 1], &[2], 2)
            .unwrap()
            .iter()
            .map(|m| m.to_text(&xxy))
            .collect();
        assert_eq!(got, ["x1", "x2", "[x1,y]", "[x2,y]"]);
        assert!(matches!(
            lemma4_generators(&[0], &[0], 2),
            Err(Error::OverlappingSets(_))
        ));
    }

    #[test]
    fn prop5_examples() {
        assert_eq!(
            texts(&prop5_generators(3, 2, 3).unwrap(), 3),
            texts(&kset(3, 2, 3).unwrap().monomials, 3)
        );
        assert_eq!(
            texts(&prop5_generators(4, 3, 2).unwrap(), 4),
            ["A[3,4]", "[A[3,4],A[1,4]]", "[A[3,4],A[2,4]]"]
        );
        assert_eq!(texts(&prop5_generators(2, 1, 5).unwrap(), 2), ["A[1,2]"]);
    }

    #[test]
    fn prop6_examples() {
        assert_eq!(
            texts(&prop6_generators(3, 2, 3).unwrap(), 3),
            ["A[2,3]", "[A[1,3],A[2,3]]", "[A[1,3],[A[1,3],A[2,3]]]"]
        );
        assert_eq!(
            texts(&prop6_generators(3, 1, 2).unwrap(), 3),
            ["A[1,3]", "[A[1,3],A[2,3]]"]
        );
    }

    #[test]
    fn prop5_prop6_counts_agree() {
        for n in 2..=5 {
            for k in 1..n {
                assert_eq!(
                    degree_counts(&prop5_generators(n, k, 6).unwrap()),
                    degree_counts(&prop6_generators(n, k, 6).unwrap()),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn top_proper_level_is_prop5() {
        for n in 2..=5 {
            let a = texts(&kset(n, n - 1, 5).unwrap().monomials, n);
            let b = texts(&prop5_generators(n, n - 1, 5).unwrap(), n);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn kernel_membership() {
        let a = layer_alphabet(3);
        let m = LieMonomial::parse("[A[2,3],A[1,3]]", &a).unwrap();
        assert!(verify_in_kernels(&m, 3).unwrap());
        assert!(!verify_in_kernels(&LieMonomial::leaf(0), 3).unwrap());
        for m in kset(4, 1, 5).unwrap().monomials {
            assert!(verify_in_kernels(&m, 4).unwrap());
        }
    }
}
