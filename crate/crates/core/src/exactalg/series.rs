//! Truncated power series `c_0 + c_1 t + ... + c_N t^N` (ordinary) or
//! `c_0 + c_1 t + ... + c_N t^N / N!` (exponential).

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::ring::{binomial, factorial, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Ordinary,
    Exponential,
}

/// Invariant: `coeffs.len() == order + 1`, so the list is never empty.
#[derive(Clone, PartialEq)]
pub struct Series<R> {
    coeffs: Vec<R>,
    convention: Convention,
}

fn frac(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

impl<R: Ring> Series<R> {
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<R>, convention: Convention) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        Series { coeffs, convention }
    }

    pub fn zeros(template: &R, order: usize, convention: Convention) -> Self {
        Series::new(vec![template.zero_like(); order + 1], convention)
    }

    pub fn constant(c: R, order: usize, convention: Convention) -> Self {
        let mut s = Series::zeros(&c, order, convention);
        s.coeffs[0] = c;
        s
    }

    /// The series `t`.
    pub fn variable(template: &R, order: usize, convention: Convention) -> Self {
        let mut s = Series::zeros(template, order, convention);
        if order >= 1 {
            s.coeffs[1] = template.one_like();
        }
        s
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn constant_term(&self) -> &R {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::vanishes)
    }

    /// Index of the first nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.vanishes())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        Series::new(self.coeffs[..=n].to_vec(), self.convention)
    }

    pub fn map<S: Ring, F: Fn(&R) -> S>(&self, f: F) -> Series<S> {
        Series::new(self.coeffs.iter().map(f).collect(), self.convention)
    }

    fn check_convention(&self, rhs: &Self) {
        assert_eq!(
            self.convention, rhs.convention,
            "series with different conventions cannot be combined"
        );
    }

    fn zip_with<F: Fn(&R, &R) -> R>(&self, rhs: &Self, f: F) -> Self {
        self.check_convention(rhs);
        let n = self.order().min(rhs.order());
        Series::new(
            (0..=n)
                .map(|i| f(&self.coeffs[i], &rhs.coeffs[i]))
                .collect(),
            self.convention,
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, R::plus)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, R::minus)
    }

    pub fn neg(&self) -> Self {
        self.map(R::negated)
    }

    pub fn scale_by(&self, c: &R) -> Self {
        self.map(|a| a.times(c))
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.map(|a| a.scale(q))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_convention(rhs);
        let n = self.order().min(rhs.order());
        let zero = self.coeffs[0].zero_like();
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = zero.clone();
            for i in 0..=k {
                let (a, b) = (&self.coeffs[i], &rhs.coeffs[k - i]);
                if a.vanishes() || b.vanishes() {
                    continue;
                }
                let mut term = a.times(b);
                if self.convention == Convention::Exponential {
                    let c = binomial(k as u64, i as u64);
                    if !c.is_one() {
                        term = term.scale(&frac(c));
                    }
                }
                acc = acc.plus(&term);
            }
            out.push(acc);
        }
        Series::new(out, self.convention)
    }

    /// Coefficients rewritten in the other convention; the series itself is
    /// unchanged.
    pub fn to_convention(&self, target: Convention) -> Self {
        match (self.convention, target) {
            (a, b) if a == b => self.clone(),
            (Convention::Exponential, Convention::Ordinary) => Series::new(
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(n, c)| c.scale(&frac(factorial(n as u64)).recip()))
                    .collect(),
                target,
            ),
            _ => Series::new(
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(n, c)| c.scale(&frac(factorial(n as u64))))
                    .collect(),
                target,
            ),
        }
    }

    /// Reinterprets the coefficient list under the other convention.
    pub fn relabel(&self, target: Convention) -> Self {
        Series::new(self.coeffs.clone(), target)
    }

    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inverse().ok_or_else(|| {
            Error::Inversion(format!("constant term {:?} is not a unit", self.coeffs[0]))
        })?;
        let s = self.to_convention(Convention::Ordinary);
        let n = s.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = inv0.zero_like();
            for i in 1..=k {
                if !s.coeffs[i].vanishes() {
                    acc = acc.plus(&s.coeffs[i].times(&out[k - i]));
                }
            }
            out.push(acc.times(&inv0).negated());
        }
        Ok(Series::new(out, Convention::Ordinary).to_convention(self.convention))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.invert()?))
    }

    /// Formal derivative. The result has order `N - 1` in both conventions;
    /// a series of order zero differentiates to the zero series of order zero.
    pub fn derive(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Series::zeros(&self.coeffs[0], 0, self.convention);
        }
        let coeffs = match self.convention {
            Convention::Exponential => self.coeffs[1..].to_vec(),
            Convention::Ordinary => (1..=n)
                .map(|i| self.coeffs[i].scale(&frac(BigInt::from(i))))
                .collect(),
        };
        Series::new(coeffs, self.convention)
    }

    pub fn derive_n(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |s, _| s.derive())
    }

    /// Antiderivative with zero constant term; the order grows by one.
    pub fn integrate(&self) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut coeffs = vec![zero];
        match self.convention {
            Convention::Exponential => coeffs.extend(self.coeffs.iter().cloned()),
            Convention::Ordinary => coeffs.extend(
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c.scale(&frac(BigInt::from(i + 1)).recip())),
            ),
        }
        Series::new(coeffs, self.convention)
    }
}

impl<R: fmt::Debug> fmt::Debug for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{:?}](", self.convention)?;
        f.debug_list().entries(self.coeffs.iter()).finish()?;
        f.write_str(")")
    }
}

impl<R: Ring> Ring for Series<R> {
    fn zero_like(&self) -> Self {
        Series::zeros(&self.coeffs[0], self.order(), self.convention)
    }
    fn one_like(&self) -> Self {
        Series::constant(self.coeffs[0].one_like(), self.order(), self.convention)
    }
    fn vanishes(&self) -> bool {
        Series::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scalar_like(&self, q: &Rational) -> Self {
        Series::constant(self.coeffs[0].scalar_like(q), self.order(), self.convention)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.invert().ok()
    }
    fn scale(&self, q: &Rational) -> Self {
        self.scale_rational(q)
    }
}
