//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{format_rational, rat, rational_to_f64, ExactDiv, Rational, Ring};

/// Polynomial with ascending coefficients; the zero polynomial has no
/// coefficients and every other polynomial has a nonzero last coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, Rational::one())
    }

    pub fn monomial(deg: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// `prod (x - root)`.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            &acc * &Self::new(vec![-r.clone(), Rational::one()])
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_complex(&self, at: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| {
                acc * at + Complex64::new(rational_to_f64(c), 0.0)
            })
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    /// Antiderivative with zero constant term.
    pub fn integrate(&self) -> Self {
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / rat(i as i64 + 1)),
        );
        Self::new(coeffs)
    }

    /// Euclidean division. Panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let lc_inv = divisor.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Quotient when `divisor` divides `self`, otherwise `None`.
    pub fn checked_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading_coeff().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return if self.is_zero() {
                Self::zero()
            } else {
                Self::one()
            };
        }
        let g = self.gcd(&self.derivative());
        self.checked_div(&g)
            .expect("gcd divides the polynomial")
            .monic()
    }

    /// Multiplicity of `at` as a root (0 when it is not a root). Panics on
    /// the zero polynomial.
    pub fn root_multiplicity(&self, at: &Rational) -> usize {
        assert!(!self.is_zero(), "root multiplicity of the zero polynomial");
        let lin = Self::new(vec![-at.clone(), Rational::one()]);
        let mut p = self.clone();
        let mut m = 0;
        while let Some(q) = p.checked_div(&lin) {
            p = q;
            m += 1;
        }
        m
    }

    /// Coefficients of `self(x + at)`, i.e. the Taylor coefficients at `at`.
    pub fn shift(&self, at: &Rational) -> Self {
        // Repeated synthetic division.
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * at;
                c[j] += t;
            }
        }
        Self::new(c)
    }

    /// `x^d * self(1/x)`; requires `deg self <= d`.
    pub fn reverse(&self, d: usize) -> Self {
        assert!(
            self.degree().is_none_or(|k| k <= d),
            "degree exceeds reversal bound"
        );
        let mut c = self.coeffs.clone();
        c.resize(d + 1, Rational::zero());
        c.reverse();
        Self::new(c)
    }

    /// Integer polynomial with the same roots, positive leading coefficient
    /// and content one.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() {
            -1
        } else {
            1
        };
        for c in ints.iter_mut() {
            *c = &*c / &content * sign;
        }
        ints
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&mag), mono));
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Ring for UniPoly {
    fn zero_like(&self) -> Self {
        UniPoly::zero()
    }
    fn one_like(&self) -> Self {
        UniPoly::one()
    }
    fn vanishes(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scalar_like(&self, q: &Rational) -> Self {
        UniPoly::constant(q.clone())
    }
    fn try_inverse(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(UniPoly::constant(self.coeffs[0].recip())),
            _ => None,
        }
    }
    fn scale(&self, q: &Rational) -> Self {
        UniPoly::scale(self, q)
    }
}

impl ExactDiv for UniPoly {
    fn div_exact(&self, rhs: &Self) -> Self {
        self.checked_div(rhs)
            .expect("exact polynomial division left a remainder")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ring::ratio;

    #[test]
    fn division_and_gcd() {
        let f = UniPoly::from_ints(&[-1, 0, 1]); // x^2 - 1
        let g = UniPoly::from_ints(&[1, 1]); // x + 1
        let (q, r) = f.div_rem(&g);
        assert_eq!(q, UniPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(f.gcd(&UniPoly::from_ints(&[2, 2])), g);
        let (gg, s, t) = f.ext_gcd(&UniPoly::from_ints(&[-2, 1]));
        assert_eq!(gg, UniPoly::one());
        assert_eq!(
            &(&s * &f) + &(&t * &UniPoly::from_ints(&[-2, 1])),
            UniPoly::one()
        );
    }

    #[test]
    fn shift_reverse_and_multiplicity() {
        let f = UniPoly::from_roots(&[rat(1), rat(1), rat(2)]);
        assert_eq!(f.root_multiplicity(&rat(1)), 2);
        assert_eq!(f.root_multiplicity(&rat(2)), 1);
        assert_eq!(f.root_multiplicity(&rat(3)), 0);
        let shifted = f.shift(&rat(1));
        // f(x+1) = x^2 (x-1)
        assert_eq!(shifted, UniPoly::from_ints(&[0, 0, -1, 1]));
        assert_eq!(
            UniPoly::from_ints(&[1, 0, 1]).reverse(3),
            UniPoly::from_ints(&[0, 1, 0, 1])
        );
        assert_eq!(f.squarefree_part(), UniPoly::from_roots(&[rat(1), rat(2)]));
    }

    #[test]
    fn calculus_and_display() {
        let f = UniPoly::from_ints(&[1, 0, 3]);
        assert_eq!(f.derivative(), UniPoly::from_ints(&[0, 6]));
        assert_eq!(
            UniPoly::from_ints(&[1, 1]).integrate(),
            UniPoly::new(vec![rat(0), rat(1), ratio(1, 2)])
        );
        assert_eq!(f.to_string(), "3*x^2 + 1");
        assert_eq!(UniPoly::from_ints(&[0, -1, 0, 1]).to_string(), "x^3 - x");
        assert_eq!(
            UniPoly::new(vec![ratio(1, 2), ratio(-3, 4)]).primitive_integer(),
            vec![BigInt::from(-2), BigInt::from(3)]
        );
    }
}
