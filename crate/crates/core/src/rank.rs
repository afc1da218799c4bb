//! Closed-form ranks: Möbius function, Witt's formula, ranks of the graded
//! pieces of the pure braid Lie algebra and of its Brunnian ideal, and the
//! inversion of dimension series of free Lie algebras on graded generators.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn mobius(d: u64) -> i64 {
    assert!(d >= 1, "mobius is defined for d >= 1");
    let mut n = d;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn to_u64(x: &BigInt, what: &str) -> Result<u64> {
    x.to_u64()
        .ok_or_else(|| Error::FormulaViolation(format!("{what} = {x} is not a small nonnegative integer")))
}

/// Rank of the degree-`q` part of the free Lie algebra on `k` generators.
pub fn witt_rank(q: usize, k: usize) -> Result<u64> {
    if q == 0 {
        return Err(Error::InvalidParameter("degree must be at least 1".into()));
    }
    let mut sum = BigInt::zero();
    for d in 1..=q {
        if q % d == 0 {
            let mu = mobius(d as u64);
            if mu != 0 {
                sum += BigInt::from(mu) * BigInt::from(k).pow((q / d) as u32);
            }
        }
    }
    let (quot, rem) = sum.div_rem(&BigInt::from(q));
    if !rem.is_zero() {
        return Err(Error::FormulaViolation(format!(
            "Witt sum {sum} for q={q}, k={k} not divisible by {q}"
        )));
    }
    to_u64(&quot, "witt_rank")
}

/// Rank of the degree-`q` part of the Lie algebra of the pure braid group
/// on `m` strands: the sum of Witt ranks over the free layers.
pub fn rank_pure(q: usize, m: usize) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidParameter("strand count must be at least 1".into()));
    }
    (1..m).try_fold(0u64, |acc, k| Ok(acc + witt_rank(q, k)?))
}

/// Binomial coefficients by Pascal's rule.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut row = vec![0u64; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] += row[j - 1];
        }
    }
    row[k]
}

/// Rank of the degree-`q` part of the Brunnian ideal by the alternating
/// binomial sum.
pub fn rank_brunnian(q: usize, n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidParameter("strand count must be at least 1".into()));
    }
    let mut sum = BigInt::zero();
    for k in 0..n {
        let term = BigInt::from(binomial(n, k)) * BigInt::from(rank_pure(q, n - k)?);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_negative() {
        return Err(Error::FormulaViolation(format!(
            "negative Brunnian rank {sum} at q={q}, n={n}"
        )));
    }
    to_u64(&sum, "rank_brunnian")
}

/// Given generator counts `g_d`, find the ranks `l_q` of the free Lie algebra
/// they generate: `∏ (1 - t^q)^{l_q} = 1 - Σ g_d t^d` modulo `t^{deg_max+1}`.
pub fn witt_inversion(g: &BTreeMap<usize, u64>, deg_max: usize) -> Result<BTreeMap<usize, u64>> {
    if g.contains_key(&0) {
        return Err(Error::NotFreeSeries("generator of degree 0".into()));
    }
    // running product ∏_{j<q} (1 - t^j)^{l_j}, coefficients 0..=deg_max
    let mut prod: Vec<BigInt> = vec![BigInt::zero(); deg_max + 1];
    prod[0] = BigInt::one();
    let mut out = BTreeMap::new();
    for q in 1..=deg_max {
        let gq = BigInt::from(g.get(&q).copied().unwrap_or(0));
        let lq = &prod[q] + gq;
        if lq.is_negative() {
            return Err(Error::NotFreeSeries(format!("rank {lq} in degree {q}")));
        }
        let l = to_u64(&lq, "inverted rank")?;
        out.insert(q, l);
        if l > 0 {
            // multiply by (1 - t^q)^l = Σ_m (-1)^m C(l, m) t^{qm}
            let mut factor: Vec<BigInt> = vec![BigInt::zero(); deg_max + 1];
            let mut c = BigInt::one();
            let mut m = 0usize;
            while q * m <= deg_max && (m as u64) <= l {
                factor[q * m] = if m % 2 == 0 { c.clone() } else { -c.clone() };
                c = c * BigInt::from(l - m as u64) / BigInt::from(m as u64 + 1);
                m += 1;
            }
            let mut next = vec![BigInt::zero(); deg_max + 1];
            for (i, a) in prod.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in factor.iter().enumerate().take(deg_max + 1 - i) {
                    if !b.is_zero() {
                        next[i + j] += a * b;
                    }
                }
            }
            prod = next;
        }
    }
    Ok(out)
}

/// Ranks of `L_q(P_m)` for `m <= n` and of the Brunnian ideal for `m <= n`,
/// for `q <= q_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    pub n: usize,
    pub q_max: usize,
    pure: BTreeMap<(usize, usize), u64>,
    brunnian: BTreeMap<(usize, usize), u64>,
}

impl RankTable {
    pub fn pure(&self, q: usize, m: usize) -> u64 {
        self.pure[&(q, m)]
    }

    /// Brunnian rank on `m` strands.
    pub fn brunnian_on(&self, q: usize, m: usize) -> u64 {
        self.brunnian[&(q, m)]
    }

    /// Brunnian rank on the table's own strand count.
    pub fn brunnian(&self, q: usize) -> u64 {
        self.brunnian_on(q, self.n)
    }

    pub fn brunnian_column(&self) -> Vec<u64> {
        (1..=self.q_max).map(|q| self.brunnian(q)).collect()
    }

    pub fn pure_column(&self) -> Vec<u64> {
        (1..=self.q_max).map(|q| self.pure(q, self.n)).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = format!("q,rank_L_q(P_{n}),rank_L_q^P(Brun_{n})\r\n", n = self.n);
        for q in 1..=self.q_max {
            s.push_str(&format!("{},{},{}\r\n", q, self.pure(q, self.n), self.brunnian(q)));
        }
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{:>3}  {:>16}  {:>20}\n",
            "q",
            format!("L_q(P_{})", self.n),
            format!("L_q^P(Brun_{})", self.n)
        );
        for q in 1..=self.q_max {
            s.push_str(&format!(
                "{:>3}  {:>16}  {:>20}\n",
                q,
                self.pure(q, self.n),
                self.brunnian(q)
            ));
        }
        s
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::from("\\begin{tabular}{r|r|r}\n");
        s.push_str(&format!(
            "$q$ & $\\mathrm{{rank}}\\,L_q(P_{{{n}}})$ & $\\mathrm{{rank}}\\,L^P_q(\\mathrm{{Brun}}_{{{n}}})$ \\\\\n\\hline\n",
            n = self.n
        ));
        for q in 1..=self.q_max {
            s.push_str(&format!(
                "{} & {} & {} \\\\\n",
                q,
                self.pure(q, self.n),
                self.brunnian(q)
            ));
        }
        s.push_str("\\end{tabular}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (1..=self.q_max)
            .map(|q| {
                serde_json::json!({
                    "q": q,
                    "pure": self.pure(q, self.n),
                    "brunnian": self.brunnian(q),
                })
            })
            .collect();
        serde_json::json!({ "n": self.n, "q_max": self.q_max, "rows": rows })
    }
}

/// Build the table and check `rank L_q(P_m) = Σ_k C(m,k) rank L^P_q(Brun_{m-k})`
/// for every `m <= n`.
pub fn rank_table(n: usize, q_max: usize) -> Result<RankTable> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n}, need n >= 2")));
    }
    if q_max < 1 {
        return Err(Error::InvalidParameter("q_max must be at least 1".into()));
    }
    let mut pure = BTreeMap::new();
    let mut brunnian = BTreeMap::new();
    for q in 1..=q_max {
        for m in 1..=n {
            pure.insert((q, m), rank_pure(q, m)?);
            brunnian.insert((q, m), rank_brunnian(q, m)?);
        }
        for m in 1..=n {
            let conv: u64 = (0..m).map(|k| binomial(m, k) * brunnian[&(q, m - k)]).sum();
            if conv != pure[&(q, m)] {
                return Err(Error::FormulaViolation(format!(
                    "convolution identity fails at q={q}, m={m}: {conv} != {}",
                    pure[&(q, m)]
                )));
            }
        }
    }
    Ok(RankTable {
        n,
        q_max,
        pure,
        brunnian,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(2), -1);
        assert_eq!(mobius(30), -1);
    }

    #[test]
    fn witt_values() {
        assert_eq!(witt_rank(1, 5).unwrap(), 5);
        assert_eq!(witt_rank(2, 2).unwrap(), 1);
        assert_eq!(witt_rank(6, 3).unwrap(), (729 - 27 - 9 + 3) / 6);
        assert_eq!(witt_rank(6, 3).unwrap(), 116);
        assert_eq!(witt_rank(3, 0).unwrap(), 0);
    }

    #[test]
    fn pure_values() {
        for n in 2..7 {
            assert_eq!(rank_pure(1, n).unwrap(), (n * (n - 1) / 2) as u64);
        }
        assert_eq!(rank_pure(2, 3).unwrap(), 1);
        assert_eq!(rank_pure(3, 3).unwrap(), 2);
        assert_eq!(rank_pure(4, 1).unwrap(), 0);
    }

    #[test]
    fn brunnian_values() {
        assert_eq!(rank_brunnian(1, 3).unwrap(), 0);
        assert_eq!(rank_brunnian(2, 3).unwrap(), 1);
        assert_eq!(rank_brunnian(5, 3).unwrap(), 6);
        assert_eq!(rank_brunnian(1, 2).unwrap(), 1);
        assert_eq!(rank_brunnian(2, 2).unwrap(), 0);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn inversion_examples() {
        for k in 1..=4u64 {
            let inv = witt_inversion(&BTreeMap::from([(1, k)]), 6).unwrap();
            for q in 1..=6 {
                assert_eq!(inv[&q], witt_rank(q, k as usize).unwrap());
            }
        }
        let inv = witt_inversion(&BTreeMap::from([(2, 1)]), 6).unwrap();
        assert_eq!(inv, BTreeMap::from([(1, 0), (2, 1), (3, 0), (4, 0), (5, 0), (6, 0)]));
        let g = BTreeMap::from([(2, 1), (3, 2), (4, 3), (5, 4), (6, 5)]);
        let inv = witt_inversion(&g, 6).unwrap();
        let expected: Vec<u64> = (1..=6).map(|q| rank_brunnian(q, 3).unwrap()).collect();
        assert_eq!(inv.values().copied().collect::<Vec<_>>(), expected);
        assert_eq!(expected, [0, 1, 2, 3, 6, 9]);
    }

    #[test]
    fn inversion_rejects_degree_zero() {
        let g = BTreeMap::from([(1, 2), (2, 0)]);
        assert_eq!(witt_inversion(&g, 3).unwrap(), BTreeMap::from([(1, 2), (2, 1), (3, 2)]));
        assert!(matches!(
            witt_inversion(&BTreeMap::from([(0, 1)]), 3),
            Err(Error::NotFreeSeries(_))
        ));
    }

    #[test]
    fn tables() {
        let t = rank_table(2, 4).unwrap();
        assert_eq!(t.brunnian_column(), [1, 0, 0, 0]);
        let t = rank_table(3, 6).unwrap();
        assert_eq!(t.brunnian_column(), [0, 1, 2, 3, 6, 9]);
        let t = rank_table(4, 4).unwrap();
        assert_eq!(t.brunnian_column(), [0, 0, 2, 9]);
        assert!(rank_table(1, 3).is_err());
    }
}
