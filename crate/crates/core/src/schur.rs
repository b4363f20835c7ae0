//! Complete homogeneous sequences and Schur determinants.

use crate::error::{Error, Result};
use crate::exactalg::det::det;
use crate::exactalg::multipoly::{MultiPoly, Var};
use crate::exactalg::ring::Ring;
use crate::partitions::Partition;

/// `e_i` generator.
pub fn e_var(i: u32) -> Var {
    Var::new('e', i)
}

/// `h_i` generator, used when a determinant is kept in unexpanded h form.
pub fn h_var(i: u32) -> Var {
    Var::new('h', i)
}

/// A finite prefix `a_0, a_1, ...` read as zero at negative indices and past
/// the prefix.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffSequence<R> {
    entries: Vec<R>,
    zero: R,
}

impl<R: Ring> CoeffSequence<R> {
    pub fn new(entries: Vec<R>, zero: R) -> Self {
        CoeffSequence { entries, zero }
    }

    pub fn get(&self, n: i64) -> R {
        if n < 0 {
            return self.zero.clone();
        }
        self.entries
            .get(n as usize)
            .cloned()
            .unwrap_or_else(|| self.zero.clone())
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn map<S: Ring, F: Fn(&R) -> S>(&self, f: F) -> CoeffSequence<S> {
        CoeffSequence {
            entries: self.entries.iter().map(&f).collect(),
            zero: f(&self.zero),
        }
    }
}

/// `e_0 = 1, e_1, ..., e_{r+1}` and zero afterwards.
pub fn e_sequence(r: usize) -> CoeffSequence<MultiPoly> {
    let mut entries = vec![MultiPoly::one()];
    entries.extend((1..=r as u32 + 1).map(|i| MultiPoly::var(e_var(i))));
    CoeffSequence::new(entries, MultiPoly::zero())
}

/// `h_0..h_{n_max}` in terms of `e_1..e_{r+1}` via
/// `h_n = e_1 h_{n-1} - e_2 h_{n-2} + ...`.
pub fn h_from_e(r: usize, n_max: usize) -> CoeffSequence<MultiPoly> {
    let mut h: Vec<MultiPoly> = vec![MultiPoly::one()];
    for n in 1..=n_max {
        let mut acc = MultiPoly::zero();
        for i in 1..=n.min(r + 1) {
            let term = &MultiPoly::var(e_var(i as u32)) * &h[n - i];
            acc = if i % 2 == 1 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        h.push(acc);
    }
    CoeffSequence::new(h, MultiPoly::zero())
}

/// Symbolic `h_0, h_1, ...` as independent generators with `h_0 = 1`.
pub fn h_symbols(n_max: usize) -> CoeffSequence<MultiPoly> {
    let mut entries = vec![MultiPoly::one()];
    entries.extend((1..=n_max as u32).map(|i| MultiPoly::var(h_var(i))));
    CoeffSequence::new(entries, MultiPoly::zero())
}

/// `h_n = det(e_{j-i+1})_{1<=i,j<=n}`, with `e_m = 0` for `m > r+1`.
pub fn jacobi_trudi_h(n: usize, r: usize) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one();
    }
    let e = e_sequence(r);
    let m: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| (0..n).map(|j| e.get(j as i64 - i as i64 + 1)).collect())
        .collect();
    det(&m).expect("square by construction")
}

/// Determinant with entry `(i, j) = a_{cols[j] - i}`.
pub fn delta_columns<R: Ring>(cols: &[i64], a: &CoeffSequence<R>) -> Result<R> {
    if cols.is_empty() {
        return Err(Error::Dimension("no columns".into()));
    }
    let m: Vec<Vec<R>> = (0..cols.len())
        .map(|i| cols.iter().map(|&c| a.get(c - i as i64)).collect())
        .collect();
    det(&m)
}

/// Column indices `λ_{r-j} + j` of the Schur matrix for `λ` padded to r+1.
pub fn schur_columns(lambda: &Partition, r: usize) -> Result<Vec<i64>> {
    let parts = lambda.padded(r + 1)?;
    Ok((0..=r).map(|j| parts[r - j] as i64 + j as i64).collect())
}

/// `Δ_λ(a)`: the `(r+1)×(r+1)` determinant whose first row is
/// `a_{λ_r}, a_{λ_{r-1}+1}, ..., a_{λ_0+r}` and whose rows step down by one.
pub fn schur_delta<R: Ring>(lambda: &Partition, a: &CoeffSequence<R>, r: usize) -> Result<R> {
    delta_columns(&schur_columns(lambda, r)?, a)
}

/// The transposed layout `det(a_{i + λ_{r-i} - j})`; equal to
/// [`schur_delta`].
pub fn schur_delta_transposed<R: Ring>(
    lambda: &Partition,
    a: &CoeffSequence<R>,
    r: usize,
) -> Result<R> {
    let parts = lambda.padded(r + 1)?;
    let m: Vec<Vec<R>> = (0..=r)
        .map(|i| {
            (0..=r)
                .map(|j| a.get(i as i64 + parts[r - i] as i64 - j as i64))
                .collect()
        })
        .collect();
    det(&m)
}

/// `Δ_λ(h̄)` expanded in `e_1..e_{r+1}`.
pub fn schur_in_e(lambda: &Partition, r: usize) -> Result<MultiPoly> {
    let h = h_from_e(r, lambda.part(0) as usize + r + 1);
    schur_delta(lambda, &h, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::series::{Convention, Series};

    fn e(i: u32) -> MultiPoly {
        MultiPoly::var(e_var(i))
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn h_examples() {
        let h = h_from_e(1, 3);
        assert_eq!(h.get(1), e(1));
        assert_eq!(h.get(2).to_string(), "e_1^2 - e_2");
        assert_eq!(h.get(3).to_string(), "e_1^3 - 2*e_1*e_2");
        assert_eq!(jacobi_trudi_h(0, 2), MultiPoly::one());
        assert_eq!(jacobi_trudi_h(2, 2).to_string(), "e_1^2 - e_2");
    }

    #[test]
    fn h_matches_series_inverse() {
        let r = 2;
        let mut den = vec![MultiPoly::one()];
        for i in 1..=r as u32 + 1 {
            den.push(if i % 2 == 1 { -&e(i) } else { e(i) });
        }
        den.resize(8, MultiPoly::zero());
        let inv = Series::new(den, Convention::Ordinary).invert().unwrap();
        let h = h_from_e(r, 7);
        assert_eq!(inv.coeffs(), h.entries());
    }

    #[test]
    fn delta_examples() {
        let h = h_symbols(6);
        let hv = |i| MultiPoly::var(h_var(i));
        assert_eq!(schur_delta(&p("0"), &h, 2).unwrap(), MultiPoly::one());
        assert_eq!(
            schur_delta(&p("2,1"), &h, 1).unwrap(),
            &(&hv(1) * &hv(2)) - &hv(3)
        );
        assert_eq!(schur_in_e(&p("1,1"), 1).unwrap(), e(2));
        assert!(schur_delta(&p("1,1,1"), &h, 1).is_err());
        // Padding with extra zero rows leaves the value unchanged.
        assert_eq!(
            schur_delta(&p("2,1"), &h, 1).unwrap(),
            schur_delta(&p("2,1"), &h, 3).unwrap()
        );
    }

    #[test]
    fn transposed_layout_agrees() {
        let h = h_symbols(10);
        for lam in crate::partitions::rect_enumerate(3, 3) {
            assert_eq!(
                schur_delta(&lam, &h, 2).unwrap(),
                schur_delta_transposed(&lam, &h, 2).unwrap(),
                "{lam}"
            );
        }
    }

    #[test]
    fn rows_and_columns() {
        for r in 0..=3usize {
            let h = h_from_e(r, 12);
            for m in 0..=(r as u32 + 1) {
                assert_eq!(
                    schur_delta(&Partition::row(m), &h, r).unwrap(),
                    h.get(m as i64)
                );
                let col = schur_delta(&Partition::column(m as usize), &h, r).unwrap();
                let expected = if m == 0 { MultiPoly::one() } else { e(m) };
                assert_eq!(col, expected, "r={r} m={m}");
            }
        }
    }
}
