//! Exact determinants.

use std::collections::HashMap;

use super::ring::{ExactDiv, Ring};
use crate::error::{Error, Result};

fn check_square<R>(m: &[Vec<R>]) -> Result<usize> {
    let n = m.len();
    if n == 0 {
        return Err(Error::Dimension("empty matrix".into()));
    }
    if let Some(row) = m.iter().find(|row| row.len() != n) {
        return Err(Error::Dimension(format!(
            "expected {n} columns, found a row of length {}",
            row.len()
        )));
    }
    Ok(n)
}

/// Laplace expansion along rows, memoized on the set of columns still free.
/// Works over any commutative ring; meant for matrices of size at most ~16.
pub fn det<R: Ring>(m: &[Vec<R>]) -> Result<R> {
    let n = check_square(m)?;
    if n > 24 {
        return Err(Error::Dimension(format!(
            "cofactor expansion is limited to 24x24, got {n}x{n}"
        )));
    }
    let mut memo: HashMap<u32, R> = HashMap::new();
    let full = (1u32 << n) - 1;
    Ok(minor(m, 0, full, &mut memo))
}

fn minor<R: Ring>(m: &[Vec<R>], row: usize, cols: u32, memo: &mut HashMap<u32, R>) -> R {
    if row == m.len() {
        return m[0][0].one_like();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = m[0][0].zero_like();
    let mut sign_positive = true;
    for j in 0..m.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &m[row][j];
        if !entry.vanishes() {
            let sub = minor(m, row + 1, cols & !(1 << j), memo);
            if !sub.vanishes() {
                let term = entry.times(&sub);
                acc = if sign_positive {
                    acc.plus(&term)
                } else {
                    acc.minus(&term)
                };
            }
        }
        sign_positive = !sign_positive;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Fraction-free Gaussian elimination (Bareiss) for rings with exact division.
pub fn det_bareiss<R: ExactDiv>(m: &[Vec<R>]) -> Result<R> {
    let n = check_square(m)?;
    let mut a: Vec<Vec<R>> = m.to_vec();
    let mut negate = false;
    let mut prev = a[0][0].one_like();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].vanishes() {
            match (k + 1..n).find(|&i| !a[i][k].vanishes()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(a[0][0].zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = v.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { d.negated() } else { d })
}
