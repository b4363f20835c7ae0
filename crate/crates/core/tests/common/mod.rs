#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use wsk_core::exactalg::ring::{ratio, Rational};
use wsk_core::exactalg::series::{Convention, Series};
use wsk_core::exactalg::unipoly::UniPoly;
use wsk_core::partitions::Partition;
use wsk_core::wmap::LinearSystemP1;

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| ratio(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| *q != ratio(0, 1))
}

pub fn unipoly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(rational(), 1..=max_deg + 1).prop_map(UniPoly::new)
}

pub fn series(order: usize, convention: Convention) -> impl Strategy<Value = Series<Rational>> {
    prop::collection::vec(rational(), order + 1).prop_map(move |c| Series::new(c, convention))
}

pub fn matrix(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(rational(), n), n)
}

pub fn rand_rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rational {
    ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

/// A random system of rank r+1 in degree d. Ramification is forced at a few
/// random rational points by multiplying basis elements by their powers.
pub fn random_system<R: Rng>(rng: &mut R, r: usize, d: usize) -> LinearSystemP1 {
    loop {
        let a = rand_rational(rng, 3, 2);
        let basis: Vec<UniPoly> = (0..=r)
            .map(|_| {
                let mut c: Vec<Rational> = (0..=d).map(|_| rand_rational(rng, 6, 3)).collect();
                // Occasionally divisible by (x - a)^k.
                if rng.gen_bool(0.3) {
                    let k = rng.gen_range(1..=d.min(2));
                    let lin = UniPoly::new(vec![-a.clone(), ratio(1, 1)]);
                    let mut f = UniPoly::one();
                    for _ in 0..k {
                        f = &f * &lin;
                    }
                    c.truncate(d + 1 - k);
                    return &UniPoly::new(c) * &f;
                }
                // Occasionally degree-deficient, ramifying at infinity.
                if rng.gen_bool(0.2) {
                    c[d] = ratio(0, 1);
                }
                UniPoly::new(c)
            })
            .collect();
        if let Ok(v) = LinearSystemP1::new(d, basis) {
            return v;
        }
    }
}

/// A random invertible rational matrix.
pub fn invertible<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<Rational>> {
    loop {
        let m: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..n).map(|_| rand_rational(rng, 4, 3)).collect())
            .collect();
        if wsk_core::exactalg::linalg::inverse(&m).is_some() {
            return m;
        }
    }
}

pub fn combine(m: &[Vec<Rational>], basis: &[UniPoly]) -> Vec<UniPoly> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(basis)
                .fold(UniPoly::zero(), |acc, (c, b)| &acc + &b.scale(c))
        })
        .collect()
}

/// Exponential coefficients from `y^{(n+k)} = Σ_i (-1)^{i+1} e_i y^{(n+k-i)} + φ_n`.
pub fn recurrence(
    e: &[Rational],
    init: &[Rational],
    forcing: Option<&[Rational]>,
    n: usize,
) -> Vec<Rational> {
    let k = e.len();
    let mut p: Vec<Rational> = init.to_vec();
    while p.len() <= n {
        let m = p.len();
        let mut acc = forcing.map_or_else(|| ratio(0, 1), |f| f[m - k].clone());
        for (i, ei) in e.iter().enumerate() {
            let term = ei * &p[m - 1 - i];
            acc = if i % 2 == 0 { acc + term } else { acc - term };
        }
        p.push(acc);
    }
    p
}
