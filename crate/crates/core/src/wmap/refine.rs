//! Fixed-point complex numbers with big-integer mantissas, used to push float
//! solutions to a few hundred bits before recognizing rational numbers in them.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactalg::ring::Rational;
use crate::exactalg::unipoly::UniPoly;

/// `(re + i im) / 2^scale`. Exact integers carry scale zero; products keep the
/// larger scale of their factors, which rounds them to the working precision.
#[derive(Clone, Debug, PartialEq)]
pub struct Fx {
    re: BigInt,
    im: BigInt,
    scale: usize,
}

/// Working precision in bits.
#[derive(Clone, Copy, Debug)]
pub struct Prec {
    pub bits: usize,
}

fn shift(m: &BigInt, by: isize) -> BigInt {
    if by >= 0 {
        m << by as usize
    } else {
        m >> (-by) as usize
    }
}

impl Fx {
    pub fn from_int(k: i64) -> Fx {
        Fx {
            re: BigInt::from(k),
            im: BigInt::zero(),
            scale: 0,
        }
    }

    pub fn from_rational(q: &Rational, p: Prec) -> Fx {
        let s = Rational::from_integer(BigInt::one() << p.bits);
        Fx {
            re: (q * s).round().to_integer(),
            im: BigInt::zero(),
            scale: p.bits,
        }
    }

    pub fn from_c64(c: Complex64, p: Prec) -> Fx {
        let q = |x: f64| Rational::from_float(x).unwrap_or_else(Rational::zero);
        let (re, im) = (
            Fx::from_rational(&q(c.re), p),
            Fx::from_rational(&q(c.im), p),
        );
        Fx {
            re: re.re,
            im: im.re,
            scale: p.bits,
        }
    }

    /// Same value rounded to scale `bits`.
    pub fn at(&self, p: Prec) -> Fx {
        let by = p.bits as isize - self.scale as isize;
        Fx {
            re: shift(&self.re, by),
            im: shift(&self.im, by),
            scale: p.bits,
        }
    }

    pub fn to_rational(&self) -> Complex<Rational> {
        let den = BigInt::one() << self.scale;
        Complex::new(
            Rational::new(self.re.clone(), den.clone()),
            Rational::new(self.im.clone(), den),
        )
    }

    pub fn to_c64(&self) -> Complex64 {
        let f = |m: &BigInt| {
            let drop = m.bits().saturating_sub(60) as usize;
            let top = (m >> drop).to_f64().unwrap_or(0.0);
            let e = drop as i64 - self.scale as i64;
            // Split the power so that large scales do not underflow early.
            top * 2f64.powi((e / 2) as i32) * 2f64.powi((e - e / 2) as i32)
        };
        Complex64::new(f(&self.re), f(&self.im))
    }

    /// Size of the larger mantissa part; comparable between equal scales.
    fn magnitude(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }

    /// `self / other` at precision `p`, or `None` for a zero divisor.
    pub fn div(&self, other: &Fx, p: Prec) -> Option<Fx> {
        let den = &other.re * &other.re + &other.im * &other.im;
        if den.is_zero() {
            return None;
        }
        // (a conj b) / |b|^2 with scales sa + sb over 2 sb.
        let nre = &self.re * &other.re + &self.im * &other.im;
        let nim = &self.im * &other.re - &self.re * &other.im;
        let by = p.bits as isize + other.scale as isize - self.scale as isize;
        Some(Fx {
            re: shift(&nre, by) / &den,
            im: shift(&nim, by) / &den,
            scale: p.bits,
        })
    }
}

fn align(a: &Fx, b: &Fx) -> (BigInt, BigInt, BigInt, BigInt, usize) {
    let s = a.scale.max(b.scale);
    let (x, y) = (a.at(Prec { bits: s }), b.at(Prec { bits: s }));
    (x.re, x.im, y.re, y.im, s)
}

impl Add for Fx {
    type Output = Fx;
    fn add(self, o: Fx) -> Fx {
        let (a, b, c, d, scale) = align(&self, &o);
        Fx {
            re: a + c,
            im: b + d,
            scale,
        }
    }
}

impl Sub for Fx {
    type Output = Fx;
    fn sub(self, o: Fx) -> Fx {
        let (a, b, c, d, scale) = align(&self, &o);
        Fx {
            re: a - c,
            im: b - d,
            scale,
        }
    }
}

impl Neg for Fx {
    type Output = Fx;
    fn neg(self) -> Fx {
        Fx {
            re: -self.re,
            im: -self.im,
            scale: self.scale,
        }
    }
}

impl Mul for Fx {
    type Output = Fx;
    fn mul(self, o: Fx) -> Fx {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        let drop = self.scale.min(o.scale) as isize;
        Fx {
            re: shift(&re, -drop),
            im: shift(&im, -drop),
            scale: self.scale.max(o.scale),
        }
    }
}

impl Zero for Fx {
    fn zero() -> Fx {
        Fx::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Fx {
    fn one() -> Fx {
        Fx::from_int(1)
    }
}

/// Gaussian elimination at precision `p` with the largest pivot.
pub fn solve(p: Prec, a: Vec<Vec<Fx>>, b: Vec<Fx>) -> Option<Vec<Fx>> {
    let n = b.len();
    let mut a: Vec<Vec<Fx>> = a
        .into_iter()
        .map(|r| r.iter().map(|c| c.at(p)).collect())
        .collect();
    let mut b: Vec<Fx> = b.iter().map(|c| c.at(p)).collect();
    for col in 0..n {
        let piv = (col..n).max_by_key(|&i| a[i][col].magnitude())?;
        if a[piv][col].is_zero() {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let f = a[row][col].div(&a[col][col], p)?;
            for k in col..n {
                let v = a[row][k].clone() - f.clone() * a[col][k].clone();
                a[row][k] = v;
            }
            let v = b[row].clone() - f * b[col].clone();
            b[row] = v;
        }
    }
    let mut x = vec![Fx::zero(); n];
    for row in (0..n).rev() {
        let mut s = b[row].clone();
        for k in row + 1..n {
            s = s - a[row][k].clone() * x[k].clone();
        }
        x[row] = s.div(&a[row][row], p)?;
    }
    Some(x)
}

/// Monic polynomial with the given roots, ascending.
pub fn poly_from_roots(t: &[Fx]) -> Vec<Fx> {
    let mut c = vec![Fx::one()];
    for r in t {
        let mut next = vec![Fx::zero(); c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + a.clone();
            next[i] = next[i].clone() - a.clone() * r.clone();
        }
        c = next;
    }
    c
}

/// The rational closest to `c` in the continued-fraction sense, when `c` is
/// real and a convergent of small height matches it to high precision.
///
/// A convergent `p/q` that is only a chance approximation matches to about
/// `max(|p|, q) q` relative to `max(|x|, 1)`. Heights are capped at half the
/// working bits and agreement is required to three quarters of them, so such
/// convergents are rejected.
pub fn recognize(p: Prec, c: &Fx) -> Option<Rational> {
    let c = c.to_rational();
    let tol = Rational::new(BigInt::one(), BigInt::one() << (p.bits * 3 / 4));
    let scale = c.re.abs().max(Rational::one());
    if c.im.abs() > &tol * &scale {
        return None;
    }
    let x = &c.re;
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut rest = x.clone();
    loop {
        let a = rest.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if (h2.bits().max(k2.bits()) + k2.bits()) as usize > p.bits / 2 {
            return None;
        }
        let conv = Rational::new(h2.clone(), k2.clone());
        if (&conv - x).abs() <= &tol * &scale {
            return Some(conv);
        }
        let frac = &rest - Rational::from_integer(a);
        if frac.is_zero() {
            return None;
        }
        rest = frac.recip();
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
    }
}

/// Numerator of the rational univariate form: `sum_s y_s m(T)/(T - x_s)`,
/// whose coefficients are symmetric in the conjugates and hence rational.
/// The coordinate itself is this polynomial divided by `m'` modulo `m`.
pub fn trace_numerator(p: Prec, m: &[Fx], xs: &[Fx], ys: &[Fx]) -> Option<UniPoly> {
    let n = xs.len();
    let mut acc = vec![Fx::zero(); n];
    for (x, y) in xs.iter().zip(ys) {
        // Synthetic division of m by (T - x).
        let mut carry = Fx::zero();
        for k in (0..n).rev() {
            carry = m[k + 1].clone() + carry * x.clone();
            acc[k] = acc[k].clone() + carry.clone() * y.clone();
        }
    }
    Some(UniPoly::new(
        acc.iter()
            .map(|c| recognize(p, c))
            .collect::<Option<Vec<_>>>()?,
    ))
}

/// Horner evaluation of a rational polynomial.
pub fn eval(poly: &UniPoly, x: &Fx, p: Prec) -> Fx {
    poly.coeffs().iter().rev().fold(Fx::zero(), |acc, c| {
        acc * x.clone() + Fx::from_rational(c, p)
    })
}

fn eval_fx(coeffs: &[Fx], x: &Fx) -> (Fx, Fx) {
    let mut v = Fx::zero();
    let mut dv = Fx::zero();
    for c in coeffs.iter().rev() {
        dv = dv * x.clone() + v.clone();
        v = v * x.clone() + c.clone();
    }
    (v, dv)
}

/// Newton polish of an approximate simple root of `coeffs` (ascending).
pub fn polish_root(coeffs: &[Fx], x: Complex64, p: Prec) -> Complex64 {
    let mut x = Fx::from_c64(x, p);
    for _ in 0..3 + (p.bits / 20).next_power_of_two().trailing_zeros() {
        let (v, dv) = eval_fx(coeffs, &x);
        match v.div(&dv, p) {
            Some(step) => x = x - step,
            None => break,
        }
    }
    x.to_c64()
}

/// Bits needed to carry the largest coefficient of the polynomials.
pub fn height_bits<'a>(polys: impl IntoIterator<Item = &'a UniPoly>) -> usize {
    polys
        .into_iter()
        .flat_map(|p| p.coeffs().iter())
        .map(|c| (c.numer().bits() + c.denom().bits()) as usize)
        .max()
        .unwrap_or(0)
}
