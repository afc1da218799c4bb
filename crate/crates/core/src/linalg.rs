//! Exact integer linear algebra: Hermite normal form, rank, saturated
//! kernels and row lattices.
//!
//! HNF convention: row style. Nonzero rows only, the pivot (first nonzero
//! entry) of each row lies strictly right of the previous row's pivot, pivots
//! are positive, and every entry above a pivot lies in `[0, pivot)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// Build from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(bad.len(), cols));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&x| BigInt::from(x)).collect()
            })
            .collect();
        IntMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[Vec<BigInt>] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i][j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    t.data[j][i] = x.clone();
                }
            }
        }
        t
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(self.cols, other.cols));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(IntMatrix {
            rows: data.len(),
            cols: self.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length");
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.data
                .iter()
                .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
                .collect(),
        )
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in &self.data {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// `a -= q * b`, touching columns `from..` only.
fn sub_mul(a: &mut [BigInt], b: &[BigInt], q: &BigInt, from: usize) {
    for (x, y) in a[from..].iter_mut().zip(&b[from..]) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// Unimodular row reduction on the first `upto` columns. Returns the number
/// of pivots; rows `0..pivots` are the echelon rows, in pivot order, and the
/// remaining rows vanish on the first `upto` columns. With `reduce_above`,
/// entries above each pivot are reduced into `[0, pivot)`.
fn echelon(rows: &mut [Vec<BigInt>], upto: usize, reduce_above: bool) -> usize {
    let mut r = 0;
    for c in 0..upto {
        if r == rows.len() {
            break;
        }
        loop {
            let pivot = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&i, &j| rows[i][c].magnitude().cmp(rows[j][c].magnitude()));
            let Some(p) = pivot else { break };
            rows.swap(r, p);
            let (head, tail) = rows.split_at_mut(r + 1);
            let prow = &head[r];
            let mut clean = true;
            for row in tail.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&prow[c]);
                sub_mul(row, prow, &q, c);
                if !row[c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if r < rows.len() && !rows[r][c].is_zero() {
            if rows[r][c].is_negative() {
                for x in rows[r][c..].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            if reduce_above {
                let (head, tail) = rows.split_at_mut(r);
                let prow = &tail[0];
                for row in head.iter_mut() {
                    if row[c].is_zero() {
                        continue;
                    }
                    let q = row[c].div_floor(&prow[c]);
                    if !q.is_zero() {
                        sub_mul(row, prow, &q, c);
                    }
                }
            }
            r += 1;
        }
    }
    r
}

fn hnf_rows(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let r = echelon(&mut rows, cols, true);
    rows.truncate(r);
    rows
}

/// Row Hermite normal form of the row space; zero rows are dropped.
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    let rows = hnf_rows(m.data.clone(), m.cols);
    IntMatrix {
        rows: rows.len(),
        cols: m.cols,
        data: rows,
    }
}

/// Rank over ℚ by fraction-free (Bareiss) elimination.
pub fn rank_rational(m: &IntMatrix) -> usize {
    let mut a = m.data.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// The saturated lattice `{v ∈ ℤ^cols : M v = 0}` in HNF.
pub fn kernel_lattice(m: &IntMatrix) -> IntegerLattice {
    let (rows, cols) = (m.rows, m.cols);
    // Row j of the augmented matrix is [column j of M | e_j]; unimodular
    // reduction of the left block leaves a ℤ-basis of the kernel on the right
    // of the vanishing rows.
    let mut aug: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| {
            let mut row = Vec::with_capacity(rows + cols);
            row.extend((0..rows).map(|i| m.data[i][j].clone()));
            row.extend((0..cols).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let r = echelon(&mut aug, rows, false);
    let basis: Vec<Vec<BigInt>> = aug.drain(r..).map(|row| row[rows..].to_vec()).collect();
    IntegerLattice::from_rows(cols, basis)
}

/// A sublattice of ℤ^dim stored by its canonical HNF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    dim: usize,
    basis: Vec<Vec<BigInt>>,
}

impl IntegerLattice {
    pub fn zero(dim: usize) -> Self {
        IntegerLattice { dim, basis: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        IntegerLattice {
            dim,
            basis: IntMatrix::identity(dim).data,
        }
    }

    /// Lattice spanned by arbitrary generating rows of length `dim`.
    pub fn from_rows(dim: usize, rows: Vec<Vec<BigInt>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == dim));
        IntegerLattice {
            dim,
            basis: hnf_rows(rows, dim),
        }
    }

    pub fn from_matrix(m: &IntMatrix) -> Self {
        Self::from_rows(m.cols, m.data.clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> IntMatrix {
        IntMatrix {
            rows: self.basis.len(),
            cols: self.dim,
            data: self.basis.clone(),
        }
    }

    pub fn sum(&self, other: &IntegerLattice) -> Result<IntegerLattice> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(Self::from_rows(self.dim, rows))
    }

    /// Add generating rows to the lattice.
    pub fn extend(&self, rows: Vec<Vec<BigInt>>) -> Result<IntegerLattice> {
        if let Some(bad) = rows.iter().find(|r| r.len() != self.dim) {
            return Err(Error::DimensionMismatch(bad.len(), self.dim));
        }
        if rows.is_empty() {
            return Ok(self.clone());
        }
        let mut all = self.basis.clone();
        all.extend(rows);
        Ok(Self::from_rows(self.dim, all))
    }

    pub fn equals(&self, other: &IntegerLattice) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(self.basis == other.basis)
    }

    /// Membership by back-substitution against the HNF basis.
    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(v.len(), self.dim));
        }
        let mut rest = v.to_vec();
        for row in &self.basis {
            let p = row.iter().position(|x| !x.is_zero()).expect("nonzero basis row");
            if rest[..p].iter().any(|x| !x.is_zero()) {
                return Ok(false);
            }
            if rest[p].is_zero() {
                continue;
            }
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return Ok(false);
            }
            sub_mul(&mut rest, row, &q, p);
        }
        Ok(rest.iter().all(Zero::is_zero))
    }

    pub fn contains_lattice(&self, other: &IntegerLattice) -> Result<bool> {
        for row in &other.basis {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(true)
    }

    /// A basis vector of `self` that is not in `other`, if any.
    pub fn witness_outside(&self, other: &IntegerLattice) -> Result<Option<Vec<BigInt>>> {
        for row in &self.basis {
            if !other.contains(row)? {
                return Ok(Some(row.clone()));
            }
        }
        Ok(None)
    }

    /// Saturated iff the columns of the basis matrix span all of ℤ^rank,
    /// i.e. all invariant factors are 1.
    pub fn is_saturated(&self) -> bool {
        let r = self.rank();
        let columns = self.basis_matrix().transpose().data;
        IntegerLattice::from_rows(r, columns) == IntegerLattice::full(r)
    }

    /// Embed into a larger ambient space at coordinate offset `offset`.
    pub fn embed(&self, dim: usize, offset: usize) -> IntegerLattice {
        assert!(offset + self.dim <= dim, "embedding out of bounds");
        let rows = self
            .basis
            .iter()
            .map(|r| {
                let mut v = vec![BigInt::zero(); dim];
                v[offset..offset + self.dim].clone_from_slice(r);
                v
            })
            .collect();
        IntegerLattice { dim, basis: rows }
    }
}

impl fmt::Debug for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IntegerLattice(dim={}, rank={}, basis={:?})",
            self.dim,
            self.rank(),
            self.basis
        )
    }
}

/// Matrix with rows `vectors[i]` built from `i64` literals, for tests.
pub fn rows_i64(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(dim: usize, rows: &[&[i64]]) -> IntegerLattice {
        IntegerLattice::from_rows(dim, rows_i64(rows))
    }

    #[test]
    fn hnf_examples() {
        assert_eq!(
            hnf(&IntMatrix::from_i64(&[&[2, 4], &[6, 8]])),
            IntMatrix::from_i64(&[&[2, 0], &[0, 4]])
        );
        assert_eq!(hnf(&IntMatrix::identity(3)), IntMatrix::identity(3));
        assert_eq!(hnf(&IntMatrix::from_i64(&[&[0, 0]])).rows(), 0);
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let h = hnf(&IntMatrix::from_i64(&[&[1, 5, 7], &[0, 3, 4], &[0, 0, 2]]));
        assert_eq!(h, IntMatrix::from_i64(&[&[1, 2, 1], &[0, 3, 0], &[0, 0, 2]]));
    }

    #[test]
    fn rational_ranks() {
        assert_eq!(rank_rational(&IntMatrix::identity(4)), 4);
        assert_eq!(rank_rational(&IntMatrix::from_i64(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_rational(&IntMatrix::from_i64(&[&[1, 1, 1]])), 1);
        assert_eq!(rank_rational(&IntMatrix::zeros(2, 3)), 0);
    }

    #[test]
    fn kernels() {
        let k = kernel_lattice(&IntMatrix::from_i64(&[&[1, 1, 1]]));
        assert_eq!(k.rank(), 2);
        assert!(k.contains(&rows_i64(&[&[1, -1, 0]])[0]).unwrap());
        assert!(kernel_lattice(&IntMatrix::identity(3)).is_zero());
        assert_eq!(kernel_lattice(&IntMatrix::zeros(1, 3)), IntegerLattice::full(3));
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x + 4y = 0 has kernel spanned by (2,-1), not (4,-2)
        let k = kernel_lattice(&IntMatrix::from_i64(&[&[2, 4]]));
        assert_eq!(k, lat(2, &[&[2, -1]]));
        assert!(k.is_saturated());
        assert!(!lat(2, &[&[4, -2]]).is_saturated());
    }

    #[test]
    fn lattice_sums() {
        let a = lat(2, &[&[3, 1]]);
        assert_eq!(a.sum(&IntegerLattice::zero(2)).unwrap(), a);
        assert_eq!(
            lat(2, &[&[2, 0]]).sum(&lat(2, &[&[0, 3]])).unwrap().basis(),
            rows_i64(&[&[2, 0], &[0, 3]]).as_slice()
        );
        assert_eq!(
            lat(2, &[&[1, 1]]).sum(&lat(2, &[&[1, -1]])).unwrap().basis(),
            rows_i64(&[&[1, 1], &[0, 2]]).as_slice()
        );
        assert!(a.sum(&IntegerLattice::zero(3)).is_err());
    }

    #[test]
    fn membership() {
        let a = lat(2, &[&[2, 0], &[0, 2]]);
        assert!(a.equals(&a).unwrap());
        assert!(!a.contains(&rows_i64(&[&[1, 1]])[0]).unwrap());
        let b = lat(2, &[&[1, 1], &[0, 2]]);
        assert!(b.contains(&rows_i64(&[&[3, 1]])[0]).unwrap());
        assert!(a.contains(&rows_i64(&[&[1]])[0]).is_err());
    }

    #[test]
    fn embedding() {
        let a = lat(2, &[&[1, 2]]);
        let e = a.embed(4, 1);
        assert_eq!(e.basis(), rows_i64(&[&[0, 1, 2, 0]]).as_slice());
    }
}
