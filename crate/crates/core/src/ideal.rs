//! Degreewise spans inside a free Lie ring: Lie ideals, brackets of ideals,
//! symmetric and fat bracket sums, generated subalgebras.
//!
//! A [`GradedSpan`] stores, for each degree `q <= deg_max`, an integer
//! lattice in the coordinates of the degree-`q` Lyndon basis.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::free_lie::terms::add_term;
use crate::free_lie::{Alphabet, BracketTable, DegreeIndex, Letter, LieElement, LieMonomial, Terms, Word};
use crate::kohno::layer_alphabet;
use crate::linalg::IntegerLattice;

/// Lyndon coordinates for every degree up to a bound.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    letters: usize,
    degrees: Vec<DegreeIndex>,
}

impl GradedBasis {
    pub fn new(letters: usize, deg_max: usize) -> Self {
        GradedBasis {
            letters,
            degrees: (1..=deg_max).map(|q| DegreeIndex::new(letters, q)).collect(),
        }
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn deg_max(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, q: usize) -> &DegreeIndex {
        &self.degrees[q - 1]
    }

    /// Coordinates of the degree-`q` part of `terms`.
    pub fn vector(&self, q: usize, terms: &Terms) -> Vec<BigInt> {
        let idx = self.degree(q);
        let mut v = vec![BigInt::zero(); idx.len()];
        for (w, c) in terms.iter().filter(|(w, _)| w.len() == q) {
            let pos = idx.position(w).expect("term is a Lyndon word of this degree");
            v[pos] = c.clone();
        }
        v
    }

    pub fn terms(&self, q: usize, v: &[BigInt]) -> Terms {
        let mut t = Terms::new();
        for (w, c) in self.degree(q).words().iter().zip(v) {
            add_term(&mut t, w.clone(), c.clone());
        }
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSpan {
    alphabet: Arc<Alphabet>,
    components: Vec<IntegerLattice>,
}

/// The ideals `I_k` and bracket sums share this type.
pub type GradedIdealSpan = GradedSpan;

impl GradedSpan {
    pub fn zero(alphabet: &Arc<Alphabet>, deg_max: usize) -> Self {
        let k = alphabet.len();
        GradedSpan {
            alphabet: alphabet.clone(),
            components: (1..=deg_max)
                .map(|q| IntegerLattice::zero(DegreeIndex::new(k, q).len()))
                .collect(),
        }
    }

    pub fn from_components(alphabet: &Arc<Alphabet>, components: Vec<IntegerLattice>) -> Result<Self> {
        let k = alphabet.len();
        for (i, c) in components.iter().enumerate() {
            let dim = DegreeIndex::new(k, i + 1).len();
            if c.dim() != dim {
                return Err(Error::DimensionMismatch(c.dim(), dim));
            }
        }
        Ok(GradedSpan {
            alphabet: alphabet.clone(),
            components,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn deg_max(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, q: usize) -> &IntegerLattice {
        &self.components[q - 1]
    }

    pub fn components(&self) -> &[IntegerLattice] {
        &self.components
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.components.iter().map(IntegerLattice::rank).collect()
    }

    fn check_compatible(&self, other: &GradedSpan) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        if self.deg_max() != other.deg_max() {
            return Err(Error::DimensionMismatch(self.deg_max(), other.deg_max()));
        }
        Ok(())
    }

    pub fn sum(&self, other: &GradedSpan) -> Result<GradedSpan> {
        self.check_compatible(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.sum(b))
            .collect::<Result<_>>()?;
        Ok(GradedSpan {
            alphabet: self.alphabet.clone(),
            components,
        })
    }

    /// First degree where the two spans differ.
    pub fn first_difference(&self, other: &GradedSpan) -> Result<Option<usize>> {
        self.check_compatible(other)?;
        Ok(self
            .components
            .iter()
            .zip(&other.components)
            .position(|(a, b)| a != b)
            .map(|i| i + 1))
    }

    pub fn contains_element(&self, x: &LieElement) -> Result<bool> {
        if x.alphabet() != &self.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        if x.max_degree() > self.deg_max() {
            return Err(Error::InvalidParameter(format!(
                "element of degree {} beyond span bound {}",
                x.max_degree(),
                self.deg_max()
            )));
        }
        let basis = GradedBasis::new(self.alphabet.len(), self.deg_max());
        for q in 1..=self.deg_max() {
            if !self.component(q).contains(&basis.vector(q, x.terms()))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether bracketing any element with any generator stays inside the
    /// span, for all degrees whose image is still below the bound.
    pub fn is_ideal(&self) -> Result<bool> {
        let mut table = BracketTable::new();
        let closed = close_under_generators(self, &mut table)?;
        Ok(&closed == self)
    }
}

fn basis_terms(span: &GradedSpan, basis: &GradedBasis, q: usize) -> Vec<Terms> {
    span.component(q)
        .basis()
        .iter()
        .map(|row| basis.terms(q, row))
        .collect()
}

/// Degree-`q` vectors of all brackets `[u, v]`, `u ∈ U_a`, `v ∈ V_b`, `a + b = q`.
fn bracket_rows(
    table: &mut BracketTable,
    basis: &GradedBasis,
    u: &[Vec<Terms>],
    v: &[Vec<Terms>],
    q: usize,
) -> Vec<Vec<BigInt>> {
    let mut rows = Vec::new();
    for a in 1..q {
        let b = q - a;
        for x in &u[a - 1] {
            for y in &v[b - 1] {
                let t = table.terms(x, y);
                if !t.is_empty() {
                    rows.push(basis.vector(q, &t));
                }
            }
        }
    }
    rows
}

fn all_basis_terms(span: &GradedSpan, basis: &GradedBasis) -> Vec<Vec<Terms>> {
    (1..=span.deg_max()).map(|q| basis_terms(span, basis, q)).collect()
}

pub(crate) fn bracket_spans_with(
    table: &mut BracketTable,
    basis: &GradedBasis,
    u: &GradedSpan,
    v: &GradedSpan,
) -> Result<GradedSpan> {
    u.check_compatible(v)?;
    let ut = all_basis_terms(u, basis);
    let vt = all_basis_terms(v, basis);
    let components = (1..=u.deg_max())
        .map(|q| IntegerLattice::from_rows(basis.degree(q).len(), bracket_rows(table, basis, &ut, &vt, q)))
        .collect();
    Ok(GradedSpan {
        alphabet: u.alphabet.clone(),
        components,
    })
}

/// `[U, V]`: in degree `q` the span of `[u, v]` over basis elements
/// `u ∈ U_a`, `v ∈ V_b`, `a + b = q`.
pub fn bracket_of_spans(u: &GradedSpan, v: &GradedSpan, deg_max: usize) -> Result<GradedSpan> {
    u.check_compatible(v)?;
    if deg_max != u.deg_max() {
        return Err(Error::DimensionMismatch(deg_max, u.deg_max()));
    }
    let basis = GradedBasis::new(u.alphabet.len(), deg_max);
    let mut table = BracketTable::new();
    bracket_spans_with(&mut table, &basis, u, v)
}

/// Smallest span containing `span` and stable under bracketing with the
/// degree-one generators, degreewise up to the bound.
pub(crate) fn close_under_generators(span: &GradedSpan, table: &mut BracketTable) -> Result<GradedSpan> {
    let k = span.alphabet.len();
    let basis = GradedBasis::new(k, span.deg_max());
    let gens: Vec<Word> = (0..k).map(|l| Word::letter(l as Letter)).collect();
    let mut components: Vec<IntegerLattice> = Vec::with_capacity(span.deg_max());
    for q in 1..=span.deg_max() {
        let mut current = span.component(q).clone();
        if q > 1 {
            let prev = &components[q - 2];
            let mut rows = Vec::new();
            for row in prev.basis() {
                let x = basis.terms(q - 1, row);
                for g in &gens {
                    let t = table.word_with_terms(g, &x);
                    if !t.is_empty() {
                        rows.push(basis.vector(q, &t));
                    }
                }
            }
            current = current.extend(rows)?;
        }
        components.push(current);
    }
    Ok(GradedSpan {
        alphabet: span.alphabet.clone(),
        components,
    })
}

/// The ideal generated by `A[k,n]` inside `L[A[1,n], ..., A[n-1,n]]`, which
/// equals `ker d_n ∩ ker d_k`: in each degree, the span of the Lyndon basis
/// elements whose word contains the letter.
pub fn ideal_of_letter(n: usize, k: usize, deg_max: usize) -> Result<GradedSpan> {
    if n < 2 || k < 1 || k >= n {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: n.saturating_sub(1),
        });
    }
    let alphabet = layer_alphabet(n);
    let letter = (k - 1) as Letter;
    let components = (1..=deg_max)
        .map(|q| {
            let idx = DegreeIndex::new(n - 1, q);
            let rows = idx
                .words()
                .iter()
                .enumerate()
                .filter(|(_, w)| w.contains(letter))
                .map(|(i, _)| {
                    let mut v = vec![BigInt::zero(); idx.len()];
                    v[i] = 1.into();
                    v
                })
                .collect();
            IntegerLattice::from_rows(idx.len(), rows)
        })
        .collect();
    Ok(GradedSpan { alphabet, components })
}

/// `Σ_σ [[I_σ(1), I_σ(2)], ..., I_σ(n-1)]` over all orderings of the ideals
/// `I_1, ..., I_{n-1}`.
pub fn symmetric_bracket_sum(n: usize, deg_max: usize) -> Result<GradedSpan> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n}, need n >= 2")));
    }
    let ideals: Vec<GradedSpan> = (1..n).map(|k| ideal_of_letter(n, k, deg_max)).collect::<Result<_>>()?;
    if n == 2 {
        return Ok(ideals[0].clone());
    }
    let alphabet = layer_alphabet(n);
    let basis = GradedBasis::new(n - 1, deg_max);
    let mut table = BracketTable::new();
    let mut total = GradedSpan::zero(&alphabet, deg_max);
    // [I_a, I_b] = [I_b, I_a], so only ordered first pairs a < b are needed
    for a in 0..ideals.len() {
        for b in a + 1..ideals.len() {
            let start = bracket_spans_with(&mut table, &basis, &ideals[a], &ideals[b])?;
            let rest: Vec<usize> = (0..ideals.len()).filter(|&i| i != a && i != b).collect();
            extend_orderings(&mut table, &basis, &ideals, start, &rest, &mut total)?;
        }
    }
    Ok(total)
}

fn extend_orderings(
    table: &mut BracketTable,
    basis: &GradedBasis,
    ideals: &[GradedSpan],
    prefix: GradedSpan,
    rest: &[usize],
    total: &mut GradedSpan,
) -> Result<()> {
    if rest.is_empty() {
        *total = total.sum(&prefix)?;
        return Ok(());
    }
    for (pos, &i) in rest.iter().enumerate() {
        let next = bracket_spans_with(table, basis, &prefix, &ideals[i])?;
        let mut remaining = rest.to_vec();
        remaining.remove(pos);
        extend_orderings(table, basis, ideals, next, &remaining, total)?;
    }
    Ok(())
}

/// Ideal generated by all bracket arrangements of elements `a_j ∈ I_j` whose
/// indices cover `{1, ..., n-1}`.
///
/// `F[S]` is the span of arrangements whose index set is exactly `S`; it
/// satisfies `F[{j}] = I_j` and `F[S] = Σ_{S1 ∪ S2 = S} [F[S1], F[S2]]`
/// (the ideals are closed under brackets, so `F[{j}]` needs no iteration).
pub fn fat_bracket_sum(n: usize, deg_max: usize) -> Result<GradedSpan> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n}, need n >= 2")));
    }
    let m = n - 1;
    let alphabet = layer_alphabet(n);
    let basis = GradedBasis::new(m, deg_max);
    let mut table = BracketTable::new();
    let full = (1usize << m) - 1;
    // spans[S][q-1]: basis vectors of F[S] in degree q, built by increasing q
    let mut spans: Vec<Vec<IntegerLattice>> = vec![Vec::with_capacity(deg_max); full + 1];
    let ideals: Vec<GradedSpan> = (1..n).map(|k| ideal_of_letter(n, k, deg_max)).collect::<Result<_>>()?;
    let mut terms_cache: Vec<Vec<Vec<Terms>>> = vec![Vec::with_capacity(deg_max); full + 1];
    for q in 1..=deg_max {
        let dim = basis.degree(q).len();
        for s in 1..=full {
            let lattice = if s.count_ones() == 1 {
                ideals[s.trailing_zeros() as usize].component(q).clone()
            } else {
                let mut rows = Vec::new();
                for s1 in 1..=full {
                    if s1 & !s != 0 {
                        continue;
                    }
                    for s2 in s1..=full {
                        if s2 & !s != 0 || s1 | s2 != s {
                            continue;
                        }
                        for a in 1..q {
                            let b = q - a;
                            for x in &terms_cache[s1][a - 1] {
                                for y in &terms_cache[s2][b - 1] {
                                    let t = table.terms(x, y);
                                    if !t.is_empty() {
                                        rows.push(basis.vector(q, &t));
                                    }
                                }
                            }
                        }
                    }
                }
                IntegerLattice::from_rows(dim, rows)
            };
            terms_cache[s].push(lattice.basis().iter().map(|r| basis.terms(q, r)).collect());
            spans[s].push(lattice);
        }
    }
    let seed = GradedSpan {
        alphabet,
        components: std::mem::take(&mut spans[full]),
    };
    close_under_generators(&seed, &mut table)
}

/// The subalgebra generated by the given monomials, degreewise:
/// `S_d = span(generators of degree d) + Σ_{a+b=d} [S_a, S_b]`.
pub fn generated_subalgebra(
    alphabet: &Arc<Alphabet>,
    generators: &[LieMonomial],
    deg_max: usize,
) -> Result<GradedSpan> {
    let k = alphabet.len();
    let basis = GradedBasis::new(k, deg_max);
    let mut table = BracketTable::new();
    let mut by_degree: BTreeMap<usize, Vec<Vec<BigInt>>> = BTreeMap::new();
    for g in generators {
        if g.degree() > deg_max {
            continue;
        }
        let e = g.to_element(alphabet)?;
        if !e.is_homogeneous() {
            return Err(Error::InvalidParameter("generator is not homogeneous".into()));
        }
        if !e.is_zero() {
            by_degree
                .entry(g.degree())
                .or_default()
                .push(basis.vector(g.degree(), e.terms()));
        }
    }
    let mut components: Vec<IntegerLattice> = Vec::with_capacity(deg_max);
    let mut terms: Vec<Vec<Terms>> = Vec::with_capacity(deg_max);
    for d in 1..=deg_max {
        let mut rows = by_degree.remove(&d).unwrap_or_default();
        for a in 1..=d / 2 {
            let b = d - a;
            for (i, x) in terms[a - 1].iter().enumerate() {
                let start = if a == b { i + 1 } else { 0 };
                for y in &terms[b - 1][start..] {
                    let t = table.terms(x, y);
                    if !t.is_empty() {
                        rows.push(basis.vector(d, &t));
                    }
                }
            }
        }
        let lattice = IntegerLattice::from_rows(basis.degree(d).len(), rows);
        terms.push(lattice.basis().iter().map(|r| basis.terms(d, r)).collect());
        components.push(lattice);
    }
    Ok(GradedSpan {
        alphabet: alphabet.clone(),
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank::witt_rank;

    #[test]
    fn ideal_of_letter_ranks() {
        assert_eq!(ideal_of_letter(3, 2, 2).unwrap().ranks(), [1, 1]);
        assert_eq!(ideal_of_letter(4, 1, 2).unwrap().component(2).rank(), 2);
        for n in 2..=5 {
            for k in 1..n {
                let span = ideal_of_letter(n, k, 6).unwrap();
                for q in 1..=6 {
                    let expected = witt_rank(q, n - 1).unwrap() - witt_rank(q, n - 2).unwrap();
                    assert_eq!(span.component(q).rank() as u64, expected);
                }
            }
        }
        assert!(ideal_of_letter(3, 3, 2).is_err());
    }

    #[test]
    fn ideals_are_ideals() {
        for n in 2..=4 {
            for k in 1..n {
                assert!(ideal_of_letter(n, k, 5).unwrap().is_ideal().unwrap());
            }
        }
    }

    #[test]
    fn brackets_of_ideals() {
        let i1 = ideal_of_letter(3, 1, 3).unwrap();
        let i2 = ideal_of_letter(3, 2, 3).unwrap();
        let b = bracket_of_spans(&i1, &i2, 3).unwrap();
        assert_eq!(b.component(2).rank(), 1);
        let zero = GradedSpan::zero(i1.alphabet(), 3);
        assert_eq!(bracket_of_spans(&i1, &zero, 3).unwrap(), zero);
        assert_eq!(bracket_of_spans(&i1, &i1, 3).unwrap().ranks(), [0, 0, 1]);
    }

    #[test]
    fn bracket_sums_small() {
        let s2 = symmetric_bracket_sum(2, 3).unwrap();
        assert_eq!(s2.ranks(), [1, 0, 0]);
        let s3 = symmetric_bracket_sum(3, 3).unwrap();
        assert_eq!(s3.ranks(), [0, 1, 2]);
        let f3 = fat_bracket_sum(3, 3).unwrap();
        assert_eq!(f3, s3);
        let s4 = symmetric_bracket_sum(4, 3).unwrap();
        assert_eq!(s4.ranks(), [0, 0, 2]);
        assert_eq!(fat_bracket_sum(4, 2).unwrap().ranks(), [0, 0]);
    }

    #[test]
    fn subalgebra_of_single_generator() {
        let alpha = layer_alphabet(3);
        let s = generated_subalgebra(&alpha, &[LieMonomial::leaf(0)], 4).unwrap();
        assert_eq!(s.ranks(), [1, 0, 0, 0]);
        let s = generated_subalgebra(&alpha, &[], 3).unwrap();
        assert_eq!(s.ranks(), [0, 0, 0]);
    }
}
