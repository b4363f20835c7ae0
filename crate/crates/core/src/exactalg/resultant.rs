//! Resultants and discriminants of univariate rational polynomials.

use num_traits::{One, Zero};

use super::det::det_bareiss;
use super::ring::Rational;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Sylvester matrix of `f` (degree m) and `g` (degree n), size m+n.
pub fn sylvester_matrix(f: &UniPoly, g: &UniPoly) -> Vec<Vec<Rational>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![Rational::zero(); size];
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Rational::zero(); size];
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// `Res(f, g) = lc(f)^deg g * prod g(root of f)`. A nonzero constant `c`
/// against a polynomial of degree k gives `c^k`; two constants give 1.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Result<Rational> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::Domain("resultant of the zero polynomial".into()));
    }
    let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
    if m == 0 {
        return Ok(num_traits::pow(f.leading_coeff(), n));
    }
    if n == 0 {
        return Ok(num_traits::pow(g.leading_coeff(), m));
    }
    det_bareiss(&sylvester_matrix(f, g))
}

/// `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`, with discriminant 1 in degree one.
pub fn discriminant(f: &UniPoly) -> Result<Rational> {
    match f.degree() {
        None | Some(0) => Err(Error::Domain(
            "discriminant needs a polynomial of degree at least one".into(),
        )),
        Some(1) => Ok(Rational::one()),
        Some(n) => {
            let r = resultant(f, &f.derivative())? / f.leading_coeff();
            Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
        }
    }
}

/// Discriminant extended to constants by the empty-product value 1.
pub fn discriminant_or_one(f: &UniPoly) -> Result<Rational> {
    match f.degree() {
        None => Err(Error::Domain("discriminant of the zero polynomial".into())),
        Some(0) => Ok(Rational::one()),
        _ => discriminant(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ring::rat;

    #[test]
    fn resultant_examples() {
        let p = UniPoly::from_ints;
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[-2, 1])).unwrap(), rat(-1));
        assert_eq!(resultant(&p(&[0, 1]), &p(&[0, 1])).unwrap(), rat(0));
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-3, 1])).unwrap(), rat(8));
        assert_eq!(resultant(&p(&[3]), &p(&[0, 0, 1])).unwrap(), rat(9));
        assert_eq!(resultant(&p(&[3]), &p(&[5])).unwrap(), rat(1));
        assert!(resultant(&UniPoly::zero(), &p(&[1])).is_err());
    }

    #[test]
    fn discriminant_examples() {
        let p = UniPoly::from_ints;
        assert_eq!(discriminant(&p(&[2, 3, 1])).unwrap(), rat(1));
        assert_eq!(discriminant(&p(&[-5, 1])).unwrap(), rat(1));
        assert_eq!(discriminant(&p(&[1, -2, 1])).unwrap(), rat(0));
        // x^3 + px + q has discriminant -4p^3 - 27q^2.
        assert_eq!(discriminant(&p(&[1, 2, 0, 1])).unwrap(), rat(-32 - 27));
        assert!(discriminant(&p(&[4])).is_err());
        assert_eq!(discriminant_or_one(&p(&[4])).unwrap(), rat(1));
    }
}
