//! Schubert calculus on G(r+1, d+1) in the exterior-power model.
//!
//! A class is a rational combination of wedges `μ^{a_0} ∧ ... ∧ μ^{a_r}` with
//! `0 <= a_0 < ... < a_r <= d`. The wedge of partition λ has indices
//! `(λ_r, 1+λ_{r-1}, ..., r+λ_0)`, and `h_i` acts by raising indices in every
//! possible way with total increase i. Indices above d vanish.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::multipoly::MultiPoly;
use crate::exactalg::ring::{factorial, format_rational, Rational};
use crate::partitions::Partition;
use crate::schur::{h_symbols, schur_delta};

/// Strictly increasing wedge indices.
pub type Wedge = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct GrassClass {
    r: usize,
    d: usize,
    terms: BTreeMap<Wedge, Rational>,
}

fn check_context(r: usize, d: usize) -> Result<()> {
    if r > d {
        return Err(Error::Domain(format!(
            "G({}, {}) needs r <= d",
            r + 1,
            d + 1
        )));
    }
    Ok(())
}

pub fn wedge_of(lambda: &Partition, r: usize) -> Result<Wedge> {
    let parts = lambda.padded(r + 1)?;
    Ok((0..=r).map(|j| j as u32 + parts[r - j]).collect())
}

pub fn partition_of(wedge: &[u32]) -> Partition {
    let r = wedge.len() - 1;
    Partition::new((0..=r).map(|i| wedge[r - i] - (r - i) as u32).collect())
        .expect("strictly increasing wedge gives a partition")
}

/// Sorts `idx` in place and returns the permutation sign, or `None` on a
/// repeated index.
fn normalize(idx: &mut [u32]) -> Option<bool> {
    let mut positive = true;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            positive = !positive;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(positive)
    }
}

impl GrassClass {
    pub fn zero(r: usize, d: usize) -> Result<Self> {
        check_context(r, d)?;
        Ok(GrassClass {
            r,
            d,
            terms: BTreeMap::new(),
        })
    }

    /// The fundamental class `μ^0 ∧ ... ∧ μ^r`.
    pub fn unit(r: usize, d: usize) -> Result<Self> {
        class_of(&Partition::empty(), r, d)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Wedge, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficients by partition, largest partition first.
    pub fn by_partition(&self) -> Vec<(Partition, Rational)> {
        let mut v: Vec<(Partition, Rational)> = self
            .terms
            .iter()
            .map(|(w, c)| (partition_of(w), c.clone()))
            .collect();
        v.sort_by(|a, b| b.0.weight().cmp(&a.0.weight()).then_with(|| b.0.cmp(&a.0)));
        v
    }

    pub fn coeff_of(&self, lambda: &Partition) -> Rational {
        wedge_of(lambda, self.r)
            .ok()
            .and_then(|w| self.terms.get(&w).cloned())
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the class of the full rectangle.
    pub fn top_coefficient(&self) -> Rational {
        let top: Wedge = ((self.d - self.r) as u32..=self.d as u32).collect();
        self.terms.get(&top).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, w: Wedge, c: Rational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_context(&self, other: &GrassClass) -> Result<()> {
        if self.r != other.r || self.d != other.d {
            return Err(Error::Domain(format!(
                "classes live on G({},{}) and G({},{})",
                self.r + 1,
                self.d + 1,
                other.r + 1,
                other.d + 1
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &GrassClass) -> Result<GrassClass> {
        self.same_context(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, q: &Rational) -> GrassClass {
        let mut out = GrassClass {
            r: self.r,
            d: self.d,
            terms: BTreeMap::new(),
        };
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * q);
        }
        out
    }

    /// Wedge notation, e.g. `μ^0∧μ^3 + 2 μ^1∧μ^2`.
    pub fn wedge_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let wedge: Vec<String> = w.iter().map(|i| format!("μ^{i}")).collect();
                let wedge = wedge.join("∧");
                if c.is_one() {
                    wedge
                } else {
                    format!("{} {wedge}", format_rational(c))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for GrassClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.by_partition();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (p, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if k > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{}*", format_rational(&mag))?;
            }
            write!(f, "s({p})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GrassClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GrassClass[G({},{})]({self})", self.r + 1, self.d + 1)
    }
}

/// The Schubert class `σ_λ` on G(r+1, d+1).
pub fn class_of(lambda: &Partition, r: usize, d: usize) -> Result<GrassClass> {
    check_context(r, d)?;
    if !lambda.fits(r + 1, (d - r) as u32) {
        return Err(Error::Domain(format!(
            "partition {lambda} does not fit in the {}x{} rectangle",
            r + 1,
            d - r
        )));
    }
    let mut c = GrassClass::zero(r, d)?;
    c.add_term(wedge_of(lambda, r)?, Rational::one());
    Ok(c)
}

/// `h_i` acting on a class.
pub fn h_act(i: u32, c: &GrassClass) -> GrassClass {
    if i == 0 {
        return c.clone();
    }
    let mut out = GrassClass {
        r: c.r,
        d: c.d,
        terms: BTreeMap::new(),
    };
    let n = c.r + 1;
    let mut raise = vec![0u32; n];
    for (w, coeff) in &c.terms {
        raise_rec(w, coeff, c.d as u32, 0, i, &mut raise, &mut out);
    }
    out
}

fn raise_rec(
    w: &[u32],
    coeff: &Rational,
    d: u32,
    j: usize,
    left: u32,
    raise: &mut Vec<u32>,
    out: &mut GrassClass,
) {
    if j + 1 == w.len() {
        raise[j] = left;
        if w[j] + left > d {
            return;
        }
        let mut idx: Vec<u32> = w.iter().zip(raise.iter()).map(|(a, k)| a + k).collect();
        if let Some(positive) = normalize(&mut idx) {
            out.add_term(
                idx,
                if positive {
                    coeff.clone()
                } else {
                    -coeff.clone()
                },
            );
        }
        return;
    }
    for k in 0..=left {
        if w[j] + k > d {
            break;
        }
        raise[j] = k;
        raise_rec(w, coeff, d, j + 1, left - k, raise, out);
    }
}

/// Applies a polynomial in the symbols `h_1, h_2, ...` as an operator.
pub fn apply_h_polynomial(p: &MultiPoly, c: &GrassClass) -> GrassClass {
    let mut out = GrassClass {
        r: c.r,
        d: c.d,
        terms: BTreeMap::new(),
    };
    for (m, coeff) in p.terms() {
        let mut acc = c.clone();
        for &(v, e) in m.factors() {
            for _ in 0..e {
                acc = h_act(v.index, &acc);
            }
        }
        for (w, x) in acc.terms {
            out.add_term(w, x * coeff);
        }
    }
    out
}

/// `σ_λ` as a polynomial in the h symbols (the Schur determinant of h̄).
pub fn giambelli_h(lambda: &Partition, r: usize) -> Result<MultiPoly> {
    let h = h_symbols(lambda.part(0) as usize + r + 1);
    schur_delta(lambda, &h, r)
}

/// Cup product: each monomial of `c1` is expanded as a determinant in h's
/// and applied to `c2`.
pub fn multiply(c1: &GrassClass, c2: &GrassClass) -> Result<GrassClass> {
    c1.same_context(c2)?;
    let mut out = GrassClass {
        r: c1.r,
        d: c1.d,
        terms: BTreeMap::new(),
    };
    for (w, coeff) in &c1.terms {
        let g = giambelli_h(&partition_of(w), c1.r)?;
        let part = apply_h_polynomial(&g, c2);
        for (w2, x) in part.terms {
            out.add_term(w2, x * coeff);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionNumber {
    pub count: BigInt,
    /// Set when the weights do not add up to the rectangle area.
    pub weight_mismatch: bool,
}

/// Degree of `σ_{λ_1} ⋯ σ_{λ_k}` on G(r+1, d+1).
pub fn intersection_number(
    lambdas: &[Partition],
    r: usize,
    d: usize,
) -> Result<IntersectionNumber> {
    check_context(r, d)?;
    let area = ((r + 1) * (d - r)) as u32;
    let total: u32 = lambdas.iter().map(Partition::weight).sum();
    if total != area {
        return Ok(IntersectionNumber {
            count: BigInt::zero(),
            weight_mismatch: true,
        });
    }
    let mut acc = GrassClass::unit(r, d)?;
    for lam in lambdas {
        if acc.is_zero() {
            break;
        }
        let c = class_of(lam, r, d);
        let Ok(c) = c else {
            // A class outside the rectangle is zero.
            return Ok(IntersectionNumber {
                count: BigInt::zero(),
                weight_mismatch: false,
            });
        };
        acc = if lam.len() == 1 {
            h_act(lam.part(0), &acc)
        } else {
            multiply(&c, &acc)?
        };
    }
    let top = acc.top_coefficient();
    debug_assert!(top.is_integer());
    Ok(IntersectionNumber {
        count: top.to_integer(),
        weight_mismatch: false,
    })
}

/// Many intersection numbers at once; the output order follows the input.
pub fn intersection_numbers(
    batch: &[Vec<Partition>],
    r: usize,
    d: usize,
) -> Result<Vec<IntersectionNumber>> {
    batch
        .par_iter()
        .map(|ls| intersection_number(ls, r, d))
        .collect()
}

/// `1!2!⋯r! ((r+1)(d-r))! / ((d-r)!(d-r+1)!⋯d!)`.
pub fn plucker_degree(r: usize, d: usize) -> Result<BigInt> {
    check_context(r, d)?;
    let mut num = factorial(((r + 1) * (d - r)) as u64);
    for k in 1..=r {
        num *= factorial(k as u64);
    }
    let den = (d - r..=d).fold(BigInt::one(), |acc, k| acc * factorial(k as u64));
    Ok(num / den)
}
