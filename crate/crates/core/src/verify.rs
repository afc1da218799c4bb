//! Degreewise brute-force checks over ℤ.
//!
//! Coordinates for `L_q(P_n)` are the concatenated Lyndon bases of the layers
//! `2..=n` (see [`DegreeBasis`]). Strand deletion and insertion become integer
//! matrices in these coordinates and every comparison is an exact lattice
//! comparison.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::free_lie::terms::add_term;
use crate::free_lie::{standard_bracketing_of, DegreeIndex, LieMonomial, Terms, Word};
use crate::generators::{degree_counts, kset, prop5_generators, prop6_generators};
use crate::ideal::{fat_bracket_sum, generated_subalgebra, symmetric_bracket_sum, GradedSpan};
use crate::kohno::{layer_alphabet, LayeredElement};
use crate::linalg::{kernel_lattice, IntMatrix, IntegerLattice};
use crate::rank::{binomial, rank_brunnian, rank_pure, witt_inversion, witt_rank};

/// Canonical coordinates of `L_q(P_n)`: layer by layer, Lyndon words in
/// lexicographic order inside each layer.
#[derive(Debug, Clone)]
pub struct DegreeBasis {
    n: usize,
    q: usize,
    layers: Vec<DegreeIndex>,
    offsets: Vec<usize>,
    len: usize,
}

impl DegreeBasis {
    /// `n = 1` gives the empty basis of `L(P_1) = 0`.
    pub fn new(n: usize, q: usize) -> Result<Self> {
        if n < 1 || q < 1 {
            return Err(Error::InvalidParameter(format!(
                "degree basis needs n >= 1, q >= 1 (got n = {n}, q = {q})"
            )));
        }
        let layers: Vec<DegreeIndex> = (2..=n).map(|k| DegreeIndex::new(k - 1, q)).collect();
        let mut offsets = Vec::with_capacity(layers.len());
        let mut len = 0;
        for l in &layers {
            offsets.push(len);
            len += l.len();
        }
        let expected = rank_pure(q, n)?;
        if len as u64 != expected {
            return Err(Error::FormulaViolation(format!(
                "degree basis of L_{q}(P_{n}) has {len} elements, expected {expected}"
            )));
        }
        Ok(DegreeBasis {
            n,
            q,
            layers,
            offsets,
            len,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Offset of layer `k` inside the coordinates.
    pub fn offset(&self, k: usize) -> usize {
        self.offsets[k - 2]
    }

    pub fn layer_len(&self, k: usize) -> usize {
        self.layers[k - 2].len()
    }

    /// `(layer, word)` for every coordinate, in order.
    pub fn labels(&self) -> Vec<(usize, Word)> {
        self.layers
            .iter()
            .enumerate()
            .flat_map(|(i, idx)| idx.words().iter().map(move |w| (i + 2, w.clone())))
            .collect()
    }

    pub fn label_text(&self, index: usize) -> String {
        let (k, w) = self.locate(index);
        standard_bracketing_of(w)
            .expect("basis words are Lyndon")
            .to_text(&layer_alphabet(k))
    }

    fn locate(&self, index: usize) -> (usize, &Word) {
        let i = self.offsets.partition_point(|&o| o <= index) - 1;
        // skip empty layers sharing the same offset
        let i = (i..self.layers.len())
            .find(|&j| index < self.offsets[j] + self.layers[j].len())
            .expect("index in range");
        (i + 2, &self.layers[i].words()[index - self.offsets[i]])
    }

    pub fn coordinates(&self, x: &LayeredElement) -> Result<Vec<BigInt>> {
        if x.n() != self.n {
            return Err(Error::StrandMismatch(x.n(), self.n));
        }
        let mut v = vec![BigInt::zero(); self.len];
        for (k, layer) in x.layers() {
            let idx = &self.layers[k - 2];
            for (w, c) in layer.terms() {
                let pos = idx.position(w).ok_or_else(|| {
                    Error::InvalidParameter(format!("term of degree {} in a degree-{} basis", w.len(), self.q))
                })?;
                v[self.offsets[k - 2] + pos] = c.clone();
            }
        }
        Ok(v)
    }

    pub fn element(&self, v: &[BigInt]) -> Result<LayeredElement> {
        if v.len() != self.len {
            return Err(Error::DimensionMismatch(v.len(), self.len));
        }
        let layers = self
            .layers
            .iter()
            .zip(&self.offsets)
            .map(|(idx, &off)| {
                let mut t = Terms::new();
                for (i, w) in idx.words().iter().enumerate() {
                    add_term(&mut t, w.clone(), v[off + i].clone());
                }
                t
            })
            .collect();
        Ok(LayeredElement::from_layer_terms(self.n, layers))
    }

    pub fn basis_element(&self, index: usize) -> LayeredElement {
        let mut v = vec![BigInt::zero(); self.len];
        v[index] = 1.into();
        self.element(&v).expect("length matches")
    }
}

pub fn degree_basis(n: usize, q: usize) -> Result<DegreeBasis> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n}, need n >= 2")));
    }
    DegreeBasis::new(n, q)
}

/// Matrix of a linear map given on basis elements, target × source.
fn map_matrix(
    source: &DegreeBasis,
    target: &DegreeBasis,
    f: impl Fn(&LayeredElement) -> Result<LayeredElement>,
) -> Result<IntMatrix> {
    let mut m = IntMatrix::zeros(target.len(), source.len());
    for j in 0..source.len() {
        let img = f(&source.basis_element(j))?;
        for (i, c) in target.coordinates(&img)?.into_iter().enumerate() {
            if !c.is_zero() {
                m.set(i, j, c);
            }
        }
    }
    Ok(m)
}

/// Matrix of `d_k : L_q(P_n) -> L_q(P_{n-1})`, rows indexed by the target basis.
pub fn face_matrix(n: usize, q: usize, k: usize) -> Result<IntMatrix> {
    if n < 1 || k < 1 || k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let source = DegreeBasis::new(n, q)?;
    let target = if n == 1 {
        DegreeBasis::new(1, q)?
    } else {
        DegreeBasis::new(n - 1, q)?
    };
    map_matrix(&source, &target, |x| x.face(k))
}

/// Matrix of `d^i : L_q(P_n) -> L_q(P_{n+1})`.
pub fn coface_matrix(n: usize, q: usize, i: usize) -> Result<IntMatrix> {
    let source = DegreeBasis::new(n, q)?;
    let target = DegreeBasis::new(n + 1, q)?;
    map_matrix(&source, &target, |x| x.coface(i))
}

/// `⋂_k ker d_k` in degree `q`, in [`DegreeBasis`] coordinates.
pub fn kernel_intersection(n: usize, q: usize) -> Result<IntegerLattice> {
    if n < 2 || q < 1 {
        return Err(Error::InvalidParameter(format!(
            "kernel intersection needs n >= 2, q >= 1 (got n = {n}, q = {q})"
        )));
    }
    let mut stacked = face_matrix(n, q, 1)?;
    for k in 2..=n {
        stacked = stacked.vstack(&face_matrix(n, q, k)?)?;
    }
    Ok(kernel_lattice(&stacked))
}

/// Degreewise spans `S_1, ..., S_{q_max}` of the subalgebra generated by
/// layer-`n` monomials, in layer-`n` Lyndon coordinates.
pub fn subalgebra_span(generators: &[LieMonomial], n: usize, q_max: usize) -> Result<Vec<IntegerLattice>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n}, need n >= 2")));
    }
    Ok(generated_subalgebra(&layer_alphabet(n), generators, q_max)?
        .components()
        .to_vec())
}

/// Layer-`n` lattice placed into `L_q(P_n)` coordinates.
fn embed_top(lattice: &IntegerLattice, basis: &DegreeBasis) -> IntegerLattice {
    lattice.embed(basis.len(), basis.offset(basis.n()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
        }
    }
}

/// One compared quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRow {
    pub degree: usize,
    pub item: String,
    pub observed: u64,
    pub expected: u64,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    pub q_max: usize,
    pub k: Option<usize>,
    pub status: CheckStatus,
    pub details: Vec<CheckRow>,
    /// First failing degree and a discrepancy description.
    pub witness: Option<String>,
    pub millis: u128,
}

impl CheckReport {
    fn new(check: &str, n: usize, q_max: usize, k: Option<usize>) -> Self {
        CheckReport {
            check: check.to_string(),
            n,
            q_max,
            k,
            status: CheckStatus::Pass,
            details: Vec::new(),
            witness: None,
            millis: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    fn row(&mut self, degree: usize, item: impl Into<String>, observed: u64, expected: u64) {
        let ok = observed == expected;
        let item = item.into();
        if !ok {
            self.fail(degree, format!("{item}: observed {observed}, expected {expected}"));
        }
        self.details.push(CheckRow {
            degree,
            item,
            observed,
            expected,
            ok,
        });
    }

    /// Records the first failure only.
    fn fail(&mut self, degree: usize, description: String) {
        self.status = CheckStatus::Fail;
        if self.witness.is_none() {
            self.witness = Some(format!("q={degree}: {description}"));
        }
    }

    fn finish(mut self, start: Instant) -> Self {
        self.millis = start.elapsed().as_millis();
        self
    }

    /// Human-readable report without timing, so reruns compare byte for byte.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} n={} q_max={}", self.check, self.n, self.q_max);
        if let Some(k) = self.k {
            s.push_str(&format!(" k={k}"));
        }
        s.push_str(&format!(": {}\n", self.status.as_str().to_uppercase()));
        for r in &self.details {
            s.push_str(&format!(
                "  q={} {}: {} / {}{}\n",
                r.degree,
                r.item,
                r.observed,
                r.expected,
                if r.ok { "" } else { "  MISMATCH" }
            ));
        }
        if let Some(w) = &self.witness {
            s.push_str(&format!("  witness: {w}\n"));
        }
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "n": self.n,
            "q_max": self.q_max,
            "k": self.k,
            "status": self.status.as_str(),
            "details": self.details.iter().map(|r| json!({
                "degree": r.degree,
                "item": r.item,
                "observed": r.observed,
                "expected": r.expected,
                "ok": r.ok,
            })).collect::<Vec<_>>(),
            "witness": self.witness,
            "millis": self.millis as u64,
        })
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Compare two lattices in `basis` coordinates, recording rank rows and a
/// witness vector from the symmetric difference on mismatch.
fn compare_lattices(
    report: &mut CheckReport,
    q: usize,
    what: &str,
    observed: &IntegerLattice,
    expected: &IntegerLattice,
    basis: &DegreeBasis,
) -> Result<()> {
    if observed != expected {
        let (v, side) = match expected.witness_outside(observed)? {
            Some(v) => (v, "missing from"),
            None => (
                observed
                    .witness_outside(expected)?
                    .expect("unequal lattices differ somewhere"),
                "extra in",
            ),
        };
        report.fail(q, format!("{} {side} {what}", basis.element(&v)?));
        report.details.push(CheckRow {
            degree: q,
            item: format!("lattice {what}"),
            observed: 0,
            expected: 1,
            ok: false,
        });
    }
    report.row(
        q,
        format!("rank {what}"),
        observed.rank() as u64,
        expected.rank() as u64,
    );
    Ok(())
}

fn check_q_range(n: usize, q_max: usize) -> Result<()> {
    if n < 2 || q_max < 1 {
        return Err(Error::InvalidParameter(format!(
            "checks need n >= 2, q_max >= 1 (got n = {n}, q_max = {q_max})"
        )));
    }
    Ok(())
}

/// Kernel ranks against the closed formula, plus saturation.
pub fn check_kernel(n: usize, q_max: usize) -> Result<CheckReport> {
    check_q_range(n, q_max)?;
    let start = Instant::now();
    let mut report = CheckReport::new("kernel", n, q_max, None);
    for q in 1..=q_max {
        let kernel = kernel_intersection(n, q)?;
        report.row(q, "rank kernel vs formula", kernel.rank() as u64, rank_brunnian(q, n)?);
        if !kernel.is_saturated() {
            report.fail(q, "kernel lattice is not saturated".into());
        }
    }
    Ok(report.finish(start))
}

/// `K(n)_1` generates the kernel intersection over ℤ, freely.
pub fn check_theorem8(n: usize, q_max: usize) -> Result<CheckReport> {
    check_q_range(n, q_max)?;
    let start = Instant::now();
    let mut report = CheckReport::new("theorem8", n, q_max, None);
    let generators = kset(n, 1, q_max)?.monomials;
    let spans = subalgebra_span(&generators, n, q_max)?;
    let free_ranks = witt_inversion(&degree_counts(&generators), q_max)?;
    for q in 1..=q_max {
        let basis = DegreeBasis::new(n, q)?;
        let kernel = kernel_intersection(n, q)?;
        let span = embed_top(&spans[q - 1], &basis);
        compare_lattices(&mut report, q, "generated subalgebra", &span, &kernel, &basis)?;
        report.row(
            q,
            "free rank from generator counts",
            free_ranks[&q],
            kernel.rank() as u64,
        );
    }
    Ok(report.finish(start))
}

/// `ker d_n` is the free top layer; the prop5 and prop6 families each freely
/// generate `ker d_n ∩ ker d_k`.
pub fn check_prop3_prop5_prop6(n: usize, k: usize, q_max: usize) -> Result<CheckReport> {
    check_q_range(n, q_max)?;
    if k < 1 || k >= n {
        return Err(Error::IndexOutOfRange { index: k, max: n - 1 });
    }
    let start = Instant::now();
    let mut report = CheckReport::new("props", n, q_max, Some(k));
    let families = [
        ("prop5", prop5_generators(n, k, q_max)?),
        ("prop6", prop6_generators(n, k, q_max)?),
    ];
    let mut spans = Vec::new();
    for (name, gens) in &families {
        spans.push((
            *name,
            subalgebra_span(gens, n, q_max)?,
            witt_inversion(&degree_counts(gens), q_max)?,
        ));
    }
    let counts5 = degree_counts(&families[0].1);
    let counts6 = degree_counts(&families[1].1);
    for q in 1..=q_max {
        let basis = DegreeBasis::new(n, q)?;
        let top = kernel_lattice(&face_matrix(n, q, n)?);
        report.row(q, "rank ker d_n vs free layer", top.rank() as u64, witt_rank(q, n - 1)?);
        let both = face_matrix(n, q, n)?.vstack(&face_matrix(n, q, k)?)?;
        let target = kernel_lattice(&both);
        for (name, span, free) in &spans {
            let span = embed_top(&span[q - 1], &basis);
            compare_lattices(&mut report, q, &format!("{name} span"), &span, &target, &basis)?;
            report.row(q, format!("{name} free rank"), free[&q], target.rank() as u64);
        }
        report.row(
            q,
            "prop6 count vs prop5 count",
            counts6.get(&q).copied().unwrap_or(0),
            counts5.get(&q).copied().unwrap_or(0),
        );
    }
    Ok(report.finish(start))
}

/// Symmetric sum, fat sum and kernel intersection agree degreewise.
pub fn check_symmetric_sum(n: usize, q_max: usize) -> Result<CheckReport> {
    check_q_range(n, q_max)?;
    let start = Instant::now();
    let mut report = CheckReport::new("symmetric", n, q_max, None);
    let sym: GradedSpan = symmetric_bracket_sum(n, q_max)?;
    let fat: GradedSpan = fat_bracket_sum(n, q_max)?;
    for q in 1..=q_max {
        let basis = DegreeBasis::new(n, q)?;
        let kernel = kernel_intersection(n, q)?;
        compare_lattices(
            &mut report,
            q,
            "symmetric sum",
            &embed_top(sym.component(q), &basis),
            &kernel,
            &basis,
        )?;
        compare_lattices(
            &mut report,
            q,
            "fat sum",
            &embed_top(fat.component(q), &basis),
            &kernel,
            &basis,
        )?;
    }
    Ok(report.finish(start))
}

/// Strictly increasing sequences of length `len` from `1..=n`.
fn increasing_sequences(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(next: usize, n: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in next..=n {
            cur.push(i);
            go(i + 1, n, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, len, &mut Vec::new(), &mut out);
    out
}

/// `L_q(P_n)` is the direct sum of the images of the Brunnian parts
/// `L_q^P(Brun_{n-k})` under the iterated insertions `d^{i_k} ⋯ d^{i_1}`,
/// `i_1 < ... < i_k`.
pub fn check_decomposition(n: usize, q: usize) -> Result<CheckReport> {
    check_q_range(n, q)?;
    let start = Instant::now();
    let mut report = CheckReport::new("decomposition", n, q, None);
    let target = DegreeBasis::new(n, q)?;
    let mut total = IntegerLattice::zero(target.len());
    let mut rank_sum = 0u64;
    for k in 0..=n - 2 {
        let m = n - k;
        let source = DegreeBasis::new(m, q)?;
        let kernel = kernel_intersection(m, q)?;
        let mut observed = 0u64;
        for seq in increasing_sequences(n, k) {
            let mut rows = Vec::with_capacity(kernel.rank());
            for v in kernel.basis() {
                let mut x = source.element(v)?;
                for &i in &seq {
                    x = x.coface(i)?;
                }
                rows.push(target.coordinates(&x)?);
            }
            let image = IntegerLattice::from_rows(target.len(), rows);
            observed += image.rank() as u64;
            total = total.sum(&image)?;
        }
        rank_sum += observed;
        report.row(
            q,
            format!("image rank from {m} strands"),
            observed,
            binomial(n, k) * rank_brunnian(q, m)?,
        );
    }
    report.row(q, "sum of image ranks", rank_sum, target.len() as u64);
    report.row(q, "rank of lattice sum", total.rank() as u64, target.len() as u64);
    let full = IntegerLattice::full(target.len());
    if let Some(v) = full.witness_outside(&total)? {
        report.fail(q, format!("{} is not in the sum of images", target.element(&v)?));
    }
    Ok(report.finish(start))
}

/// The simplicial identities between faces and cofaces on every degree-`q`
/// basis element of `L(P_n)`.
pub fn check_bidelta(n: usize, q: usize) -> Result<CheckReport> {
    check_q_range(n, q)?;
    let start = Instant::now();
    let mut report = CheckReport::new("bidelta", n, q, None);
    let basis = DegreeBasis::new(n, q)?;
    let mut tallies: BTreeMap<&str, (u64, u64)> = BTreeMap::new();
    for idx in 0..basis.len() {
        let x = basis.basis_element(idx);
        let label = basis.label_text(idx);
        let mut record =
            |report: &mut CheckReport, family: &'static str, what: String, lhs: LayeredElement, rhs: LayeredElement| {
                let e = tallies.entry(family).or_insert((0, 0));
                e.1 += 1;
                if lhs == rhs {
                    e.0 += 1;
                } else {
                    report.fail(q, format!("{what} on {label}: {lhs} vs {rhs}"));
                }
            };
        for i in 1..n {
            for j in i..n {
                let lhs = x.face(i)?.face(j)?;
                let rhs = x.face(j + 1)?.face(i)?;
                record(
                    &mut report,
                    "d_j d_i = d_i d_{j+1}",
                    format!("d_{j} d_{i} = d_{i} d_{}", j + 1),
                    lhs,
                    rhs,
                );
            }
        }
        for i in 1..=n + 1 {
            for j in 1..=i {
                let lhs = x.coface(i)?.coface(j)?;
                let rhs = x.coface(j)?.coface(i + 1)?;
                record(
                    &mut report,
                    "d^j d^i = d^{i+1} d^j",
                    format!("d^{j} d^{i} = d^{} d^{j}", i + 1),
                    lhs,
                    rhs,
                );
            }
        }
        for i in 1..=n + 1 {
            let up = x.coface(i)?;
            for j in 1..=n + 1 {
                let lhs = up.face(j)?;
                let rhs = match j.cmp(&i) {
                    std::cmp::Ordering::Less => x.face(j)?.coface(i - 1)?,
                    std::cmp::Ordering::Equal => x.clone(),
                    std::cmp::Ordering::Greater => x.face(j - 1)?.coface(i)?,
                };
                record(&mut report, "d_j d^i", format!("d_{j} d^{i}"), lhs, rhs);
            }
        }
    }
    for (family, (ok, total)) in tallies {
        report.details.push(CheckRow {
            degree: q,
            item: format!("instances of {family}"),
            observed: ok,
            expected: total,
            ok: ok == total,
        });
    }
    Ok(report.finish(start))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranks(n: usize, q_max: usize) -> Vec<usize> {
        (1..=q_max).map(|q| kernel_intersection(n, q).unwrap().rank()).collect()
    }

    #[test]
    fn degree_basis_examples() {
        let b = degree_basis(3, 1).unwrap();
        assert_eq!(b.len(), 3);
        let texts: Vec<String> = (0..3).map(|i| b.label_text(i)).collect();
        assert_eq!(texts, ["A[1,2]", "A[1,3]", "A[2,3]"]);
        let b = degree_basis(3, 2).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b.label_text(0), "[A[1,3],A[2,3]]");
        assert_eq!(degree_basis(4, 2).unwrap().len(), 4);
        assert!(degree_basis(1, 1).is_err());
    }

    #[test]
    fn coordinates_round_trip() {
        let b = degree_basis(4, 3).unwrap();
        for i in 0..b.len() {
            let x = b.basis_element(i);
            let v = b.coordinates(&x).unwrap();
            assert_eq!(b.element(&v).unwrap(), x);
            assert_eq!(v.iter().filter(|c| !c.is_zero()).count(), 1);
        }
    }

    #[test]
    fn face_matrix_examples() {
        let m = face_matrix(3, 1, 3).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 3));
        assert_eq!(m.row(0), [BigInt::from(1), BigInt::zero(), BigInt::zero()]);
        let m = face_matrix(2, 1, 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 1));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(ranks(3, 3), [0, 1, 2]);
        assert_eq!(kernel_intersection(4, 3).unwrap().rank(), 2);
        assert_eq!(ranks(2, 3), [1, 0, 0]);
    }

    #[test]
    fn subalgebra_examples() {
        let gens = kset(3, 1, 6).unwrap().monomials;
        let s = subalgebra_span(&gens, 3, 6).unwrap();
        assert_eq!(s[1].rank(), 1);
        assert_eq!(s[4].rank(), 6);
        let single = subalgebra_span(&[LieMonomial::leaf(0)], 4, 3).unwrap();
        assert_eq!(single.iter().map(IntegerLattice::rank).collect::<Vec<_>>(), [1, 0, 0]);
        assert!(subalgebra_span(&[], 3, 2).unwrap().iter().all(IntegerLattice::is_zero));
    }

    #[test]
    fn small_checks_pass() {
        for r in [
            check_kernel(3, 4).unwrap(),
            check_theorem8(2, 4).unwrap(),
            check_theorem8(3, 5).unwrap(),
            check_prop3_prop5_prop6(2, 1, 3).unwrap(),
            check_prop3_prop5_prop6(3, 2, 6).unwrap(),
            check_symmetric_sum(3, 4).unwrap(),
            check_decomposition(3, 1).unwrap(),
            check_decomposition(3, 2).unwrap(),
            check_bidelta(3, 2).unwrap(),
        ] {
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn decomposition_bookkeeping() {
        let r = check_decomposition(3, 1).unwrap();
        let observed: Vec<u64> = r.details.iter().map(|d| d.observed).collect();
        // images from 3 strands, then from 2 strands, then totals
        assert_eq!(observed, [0, 3, 3, 3]);
    }

    #[test]
    fn prop_counts_n3_k2() {
        let r = check_prop3_prop5_prop6(3, 2, 6).unwrap();
        assert!(r
            .details
            .iter()
            .filter(|d| d.item == "prop6 count vs prop5 count")
            .all(|d| d.observed == 1));
    }

    #[test]
    fn failing_comparison_has_witness() {
        let basis = DegreeBasis::new(3, 2).unwrap();
        let mut report = CheckReport::new("demo", 3, 2, None);
        let full = IntegerLattice::full(1);
        compare_lattices(&mut report, 2, "zero", &IntegerLattice::zero(1), &full, &basis).unwrap();
        assert_eq!(report.status, CheckStatus::Fail);
        let w = report.witness.clone().unwrap();
        assert!(w.starts_with("q=2:"), "{w}");
        assert!(w.contains("A[1,3]"), "{w}");
    }

    #[test]
    fn report_json_fields() {
        let r = check_kernel(2, 2).unwrap();
        let j = r.to_json();
        for key in ["check", "n", "q_max", "status", "details", "millis"] {
            assert!(j.get(key).is_some(), "{key}");
        }
        assert_eq!(j["status"], "pass");
    }
}
