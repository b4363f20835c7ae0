//! Exact rational roots of rational polynomials.
//!
//! The squarefree part is scaled to a primitive integer polynomial g with
//! leading coefficient lc. A rational root `a` makes `lc * a` an integer
//! bounded by `lc` times the Cauchy bound. Roots of g modulo a small prime
//! where g stays squarefree are Hensel lifted past twice that bound, and each
//! lift gives one candidate `m / lc`, which is tested exactly.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ring::Rational;
use super::unipoly::UniPoly;

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|k| k * k <= p)
            .all(|k| !p.is_multiple_of(k))
}

fn reduce(c: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    c.iter()
        .map(|x| x.mod_floor(&pb).to_u64().unwrap())
        .collect()
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Degree of `gcd(a, b)` over `F_p`, with `None` for a zero gcd.
fn gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Option<usize> {
    a = trim(a);
    b = trim(b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let q = a.last().unwrap() * inv % p;
            for (i, &bi) in b.iter().enumerate() {
                a[i + shift] = (a[i + shift] + p - q * bi % p) % p;
            }
            a = trim(a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().checked_sub(1)
}

fn eval_mod(c: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    c.iter()
        .rev()
        .fold(BigInt::zero(), |acc, ci| (acc * x + ci).mod_floor(m))
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Distinct rational roots in increasing order.
pub fn rational_roots(f: &UniPoly) -> Vec<Rational> {
    if f.is_constant() {
        return Vec::new();
    }
    let mut ints = f.squarefree_part().primitive_integer();
    let mut found = BTreeSet::new();
    if ints[0].is_zero() {
        found.insert(Rational::zero());
        ints.remove(0);
    }
    if ints.len() < 2 {
        return found.into_iter().collect();
    }
    let lc = ints.last().unwrap().clone();
    let deriv: Vec<BigInt> = ints
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let g = UniPoly::new(
        ints.iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect(),
    );

    // |lc * a| <= lc + max |c_i|.
    let bound = lc.abs() + ints.iter().map(BigInt::abs).max().unwrap();
    let target = bound * 2 + 1;

    let p = (3u64..)
        .filter(|&p| is_prime(p))
        .find(|&p| {
            let gp = reduce(&ints, p);
            *gp.last().unwrap() != 0 && gcd_degree(gp, reduce(&deriv, p), p) == Some(0)
        })
        .expect("a squarefree polynomial stays squarefree modulo all but finitely many primes");
    let pb = BigInt::from(p);
    let gp = reduce(&ints, p);
    let roots_mod_p =
        (0..p).filter(|&x| gp.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p) == 0);

    for r0 in roots_mod_p {
        let mut x = BigInt::from(r0);
        let mut m = pb.clone();
        while m < target {
            m = &m * &m;
            let num = eval_mod(&ints, &x, &m);
            let den = inverse_mod(&eval_mod(&deriv, &x, &m), &m)
                .expect("simple roots modulo p lift uniquely");
            x = (&x - num * den).mod_floor(&m);
        }
        let mut k = (&lc * &x).mod_floor(&m);
        if &k * 2 > m {
            k -= &m;
        }
        let cand = Rational::new(k, lc.clone());
        if g.eval(&cand).is_zero() {
            found.insert(cand);
        }
    }
    found.into_iter().collect()
}

/// Rational roots with multiplicities.
pub fn rational_roots_with_multiplicity(f: &UniPoly) -> Vec<(Rational, usize)> {
    rational_roots(f)
        .into_iter()
        .map(|r| {
            let m = f.root_multiplicity(&r);
            (r, m)
        })
        .collect()
}

/// Removes all rational linear factors, returning the monic remainder.
pub fn strip_rational_roots(f: &UniPoly) -> UniPoly {
    let mut rest = f.monic();
    for r in rational_roots(f) {
        let lin = UniPoly::new(vec![-r, Rational::one()]);
        while let Some(q) = rest.checked_div(&lin) {
            rest = q;
        }
    }
    rest
}

/// Continued-fraction approximation of a float by a rational whose
/// denominator does not exceed `max_den`.
pub fn best_rational(x: f64, max_den: &BigInt) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        let ai = BigInt::from(a as i128);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if &k2 > max_den {
            break;
        }
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        let frac = v - a;
        if frac.abs() < 1e-15 {
            break;
        }
        v = 1.0 / frac;
        if !v.is_finite() || v.abs() > 1e18 {
            break;
        }
    }
    if k1.is_zero() {
        return None;
    }
    let g = h1.gcd(&k1);
    Some(Rational::new(h1 / &g, k1 / g))
}
