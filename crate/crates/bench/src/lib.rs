//! Fixed inputs shared by the benchmarks.

use wsk_core::exactalg::ring::{ratio, Rational};
use wsk_core::exactalg::unipoly::UniPoly;
use wsk_core::wmap::LinearSystemP1;

/// Distinct rational roots `1/1, -3/2, 5/3, ...` for a Wronski target.
pub fn target_roots(k: usize) -> Vec<Rational> {
    (0..k as i64)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            ratio(sign * (2 * i + 1), i % 3 + 1)
        })
        .collect()
}

/// A system in G(r+1, Poly_d) with small dense coefficients.
pub fn dense_system(r: usize, d: usize) -> LinearSystemP1 {
    let basis = (0..=r)
        .map(|j| {
            UniPoly::new(
                (0..=d)
                    .map(|i| ratio(((i * 7 + j * 3) % 11) as i64 - 5, (i + j) as i64 % 3 + 1))
                    .collect(),
            )
        })
        .collect();
    LinearSystemP1::new(d, basis).expect("the fixture is independent")
}
