//! Integer partitions and Young diagram combinatorics.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::ring::factorial;

/// Weakly decreasing parts with trailing zeros removed; the empty partition
/// is written `0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Single row `(m)`.
    pub fn row(m: u32) -> Self {
        Partition::new(vec![m]).unwrap()
    }

    /// Single column `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `λ_i`, zero past the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parts padded with zeros to length `n`; errors when longer.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        if self.0.len() > n {
            return Err(Error::Domain(format!(
                "partition {self} has more than {n} parts"
            )));
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Ok(v)
    }

    pub fn fits(&self, rows: usize, cols: u32) -> bool {
        self.0.len() <= rows && self.part(0) <= cols
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition(
            (1..=cols)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition((0..n).map(|i| self.part(i) + other.part(i)).collect())
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid part '{t}' in '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses `"2,1;1;0"` into a list of partitions.
pub fn parse_partition_list(s: &str) -> Result<Vec<Partition>> {
    s.split(';').map(str::parse).collect()
}

/// Hook length of every box, row by row.
pub fn hooks(lambda: &Partition) -> Vec<u32> {
    let conj = lambda.conjugate();
    let mut out = Vec::with_capacity(lambda.weight() as usize);
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.part(j as usize) - i as u32 - 1;
            out.push(arm + leg + 1);
        }
    }
    out
}

/// Number of standard Young tableaux, by the hook length formula.
pub fn syt_count(lambda: &Partition) -> BigInt {
    let prod = hooks(lambda)
        .into_iter()
        .fold(BigInt::from(1), |acc, h| acc * h);
    factorial(lambda.weight() as u64) / prod
}

/// All `μ ⊇ λ` with `|μ| = |λ| + i` and `μ_0 ≥ λ_0 ≥ μ_1 ≥ λ_1 ≥ ...`,
/// optionally confined to a `rows × cols` rectangle. Sorted in decreasing
/// lexicographic order.
pub fn pieri_strips(lambda: &Partition, i: u32, rect: Option<(usize, u32)>) -> Vec<Partition> {
    let n = lambda.len() + 1;
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    strips_rec(lambda, 0, i, &mut cur, &mut out);
    let mut res: Vec<Partition> = out
        .into_iter()
        .map(|v| Partition::new(v).expect("interlacing keeps parts decreasing"))
        .filter(|m| rect.is_none_or(|(r, c)| m.fits(r, c)))
        .collect();
    res.sort_by(|a, b| b.cmp(a));
    res
}

fn strips_rec(
    lambda: &Partition,
    j: usize,
    left: u32,
    cur: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if j == cur.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let lo = lambda.part(j);
    let hi = if j == 0 {
        lo + left
    } else {
        lambda.part(j - 1).min(lo + left)
    };
    for v in lo..=hi {
        cur[j] = v;
        strips_rec(lambda, j + 1, left - (v - lo), cur, out);
    }
}

/// Partitions with at most `rows` parts, each at most `cols`, in decreasing
/// lexicographic order.
pub fn rect_enumerate(rows: usize, cols: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    rect_rec(rows, cols, &mut cur, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn rect_rec(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if cur.len() == rows {
        out.push(Partition::new(cur.clone()).unwrap());
        return;
    }
    for v in 0..=max {
        cur.push(v);
        rect_rec(rows, v, cur, out);
        cur.pop();
    }
}

/// Partitions of `n` with at most `max_parts` parts.
pub fn partitions_of(n: u32, max_parts: Option<usize>) -> Vec<Partition> {
    let rows = max_parts.unwrap_or(n as usize);
    rect_enumerate(rows, n)
        .into_iter()
        .filter(|p| p.weight() == n)
        .collect()
}

/// `μ_i = cols - λ_{rows-1-i}`.
pub fn complement(lambda: &Partition, rows: usize, cols: u32) -> Result<Partition> {
    if !lambda.fits(rows, cols) {
        return Err(Error::Domain(format!(
            "partition {lambda} does not fit in a {rows}x{cols} rectangle"
        )));
    }
    Partition::new(
        (0..rows)
            .map(|i| cols - lambda.part(rows - 1 - i))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(p("3,1,1,0").parts(), &[3, 1, 1]);
        assert_eq!(p("0").to_string(), "0");
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(parse_partition_list("1;1;2,1").unwrap().len(), 3);
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
    }

    #[test]
    fn hook_examples() {
        assert_eq!(hooks(&p("1")), vec![1]);
        let mut h = hooks(&p("2,1"));
        h.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(h, vec![3, 1, 1]);
        let mut h = hooks(&p("2,2"));
        h.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(h, vec![3, 2, 2, 1]);
        assert_eq!(syt_count(&p("0")), BigInt::from(1));
        assert_eq!(syt_count(&p("2,1")), BigInt::from(2));
        assert_eq!(syt_count(&p("1,1,1")), BigInt::from(1));
    }

    #[test]
    fn strip_examples() {
        assert_eq!(pieri_strips(&p("0"), 2, None), vec![p("2")]);
        assert_eq!(pieri_strips(&p("1"), 1, None), vec![p("2"), p("1,1")]);
        assert!(pieri_strips(&p("1"), 1, Some((1, 1))).is_empty());
    }

    #[test]
    fn rectangle_examples() {
        assert_eq!(rect_enumerate(1, 1), vec![p("1"), p("0")]);
        assert_eq!(rect_enumerate(2, 2).len(), 6);
        assert_eq!(rect_enumerate(0, 3), vec![p("0")]);
        assert_eq!(complement(&p("0"), 2, 2).unwrap(), p("2,2"));
        assert_eq!(complement(&p("2,1"), 2, 2).unwrap(), p("1"));
        assert_eq!(complement(&p("2,2"), 2, 2).unwrap(), p("0"));
        assert!(complement(&p("3"), 2, 2).is_err());
    }
}
