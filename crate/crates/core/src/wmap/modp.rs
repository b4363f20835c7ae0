//! Polynomials over a prime field, used to certify that an element of
//! `Q[θ]/(m)` is a unit without computing with large rationals. If its image
//! is coprime to `m` modulo a prime that divides no denominator, the
//! resultant with the monic `m` is nonzero over the rationals as well.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exactalg::ring::Rational;
use crate::exactalg::unipoly::UniPoly;

/// Primes below `2^31`, so products fit in `u64`.
pub const PRIMES: [u64; 4] = [2_147_483_647, 2_147_483_629, 2_147_483_587, 2_147_483_579];

#[derive(Clone, Copy, Debug)]
pub struct Fp(pub u64);

impl Fp {
    fn pow(self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        b %= self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.0;
            }
            b = b * b % self.0;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> Option<u64> {
        (!a.is_multiple_of(self.0)).then(|| self.pow(a, self.0 - 2))
    }

    fn residue(self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.0);
        (((n % &p) + &p) % &p).to_u64().unwrap_or(0)
    }

    /// Image of a rational, when `p` does not divide its denominator.
    pub fn reduce(self, q: &Rational) -> Option<u64> {
        let den = self.inv(self.residue(q.denom()))?;
        Some(self.residue(q.numer()) * den % self.0)
    }

    pub fn reduce_poly(self, f: &UniPoly) -> Option<Vec<u64>> {
        let mut v: Vec<u64> = f
            .coeffs()
            .iter()
            .map(|c| self.reduce(c))
            .collect::<Option<_>>()?;
        trim(&mut v);
        Some(v)
    }

    pub fn add(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut v: Vec<u64> = (0..a.len().max(b.len()))
            .map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % self.0)
            .collect();
        trim(&mut v);
        v
    }

    pub fn neg(self, a: &[u64]) -> Vec<u64> {
        a.iter().map(|&c| (self.0 - c) % self.0).collect()
    }

    pub fn mul(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut v = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                v[i + j] = (v[i + j] + x * y) % self.0;
            }
        }
        trim(&mut v);
        v
    }

    /// Remainder modulo a divisor with invertible leading coefficient.
    pub fn rem(self, a: &[u64], m: &[u64]) -> Vec<u64> {
        let mut r = a.to_vec();
        let dm = m.len() - 1;
        let lead = self.inv(m[dm]).expect("leading coefficient is a unit");
        while r.len() > dm {
            let top = r.len() - 1;
            let c = r[top] * lead % self.0;
            for (k, &mk) in m.iter().enumerate() {
                let i = top - dm + k;
                r[i] = (r[i] + self.0 - c * mk % self.0) % self.0;
            }
            trim(&mut r);
        }
        r
    }

    /// Whether `gcd(a, m)` is constant.
    pub fn coprime(self, a: &[u64], m: &[u64]) -> bool {
        let (mut x, mut y) = (m.to_vec(), a.to_vec());
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        x.len() == 1
    }
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ring::ratio;

    #[test]
    fn field_operations() {
        let f = Fp(7);
        assert_eq!(f.reduce(&ratio(1, 3)), Some(5));
        assert_eq!(f.reduce(&ratio(1, 14)), None);
        // (x + 1)(x + 2) mod (x + 1) = 0, and x + 3 is coprime to it.
        let a = f.mul(&[1, 1], &[2, 1]);
        assert!(f.rem(&a, &[1, 1]).is_empty());
        assert!(!f.coprime(&a, &[1, 1]));
        assert!(f.coprime(&[3, 1], &a));
    }
}
