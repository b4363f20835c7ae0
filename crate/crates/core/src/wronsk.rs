//! Generalized Wronskians of series tuples and the identities they satisfy.
//!
//! For `v = (v_0, ..., v_r)` and a partition λ with at most r+1 parts,
//! `W_λ(v)` is the determinant whose row j is `D^{j + λ_{r-j}} v`. Every
//! identity below is returned as a residual series so a failure shows where
//! it starts.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactalg::det::det;
use crate::exactalg::multipoly::MultiPoly;
use crate::exactalg::ring::{Rational, Ring};
use crate::exactalg::series::Series;
use crate::odeuniv::{fundamental_basis, MonicOperator};
use crate::partitions::{partitions_of, pieri_strips, syt_count, Partition};
use crate::schur::{delta_columns, h_from_e, schur_delta};

fn check_tuple<R: Ring>(v: &[Series<R>]) -> Result<usize> {
    let first = v
        .first()
        .ok_or_else(|| Error::Dimension("empty series tuple".into()))?;
    if v.iter()
        .any(|s| s.order() != first.order() || s.convention() != first.convention())
    {
        return Err(Error::Dimension(
            "series in a tuple must share order and convention".into(),
        ));
    }
    Ok(v.len() - 1)
}

/// Derivative orders `j + λ_{r-j}` of the rows.
pub fn row_orders(lambda: &Partition, r: usize) -> Result<Vec<usize>> {
    let parts = lambda.padded(r + 1)?;
    Ok((0..=r).map(|j| j + parts[r - j] as usize).collect())
}

/// `W_λ(v)`, of order `N - (r + λ_0)`.
pub fn gen_wronskian<R: Ring>(lambda: &Partition, v: &[Series<R>]) -> Result<Series<R>> {
    let r = check_tuple(v)?;
    let rows = row_orders(lambda, r)?;
    let top = *rows.last().unwrap();
    let n = v[0].order();
    if n < top {
        return Err(Error::Truncation {
            needed: top,
            available: n,
        });
    }
    let target = n - top;
    let mut derivs: Vec<Vec<Series<R>>> = Vec::with_capacity(r + 1);
    let mut cur: Vec<Series<R>> = v.to_vec();
    let mut k = 0;
    for &want in &rows {
        while k < want {
            cur = cur.iter().map(Series::derive).collect();
            k += 1;
        }
        derivs.push(cur.iter().map(|s| s.truncate(target)).collect());
    }
    det(&derivs)
}

/// `D^h W(v) - Σ_{|λ|=h} f^λ W_λ(v)` over λ with at most r+1 parts, where
/// `f^λ` is the number of standard tableaux.
pub fn derivative_expansion_residual<R: Ring>(v: &[Series<R>], h: usize) -> Result<Series<R>> {
    let r = check_tuple(v)?;
    let mut lhs = gen_wronskian(&Partition::empty(), v)?.derive_n(h);
    if v[0].order() < r + h {
        return Err(Error::Truncation {
            needed: r + h,
            available: v[0].order(),
        });
    }
    for lam in partitions_of(h as u32, Some(r + 1)) {
        let c = Rational::from_integer(syt_count(&lam));
        let w = gen_wronskian(&lam, v)?;
        lhs = lhs.sub(&w.scale_rational(&c));
    }
    Ok(lhs)
}

/// Pairs `(λ, f^λ)` appearing in the expansion of `D^h W`.
pub fn derivative_expansion_terms(h: u32, r: usize) -> Vec<(Partition, BigInt)> {
    partitions_of(h, Some(r + 1))
        .into_iter()
        .map(|l| {
            let c = syt_count(&l);
            (l, c)
        })
        .collect()
}

/// The fundamental basis computed far enough that W_λ has order N.
fn basis_for<R: Ring>(
    op: &MonicOperator<R>,
    lambda_top: usize,
    n: usize,
) -> Result<Vec<Series<R>>> {
    fundamental_basis(op, n + op.r() + lambda_top)
}

/// `W_{(1^k)}(u) - e_k W(u)` for the fundamental basis u of `op`.
pub fn liouville_residual<R: Ring>(op: &MonicOperator<R>, k: usize, n: usize) -> Result<Series<R>> {
    if k == 0 || k > op.order() {
        return Err(Error::Domain(format!(
            "k must lie in 1..={}, got {k}",
            op.order()
        )));
    }
    let u = basis_for(op, 1, n)?;
    let lhs = gen_wronskian(&Partition::column(k), &u)?;
    let w = gen_wronskian(&Partition::empty(), &u)?.truncate(n);
    Ok(lhs.sub(&w.scale_by(&op.e(k))))
}

/// `Δ_λ(h̄)` for the complete sequence of `op`.
pub fn schur_of_operator<R: Ring>(lambda: &Partition, op: &MonicOperator<R>) -> Result<R> {
    let h = op.h_sequence(lambda.part(0) as usize + op.order());
    schur_delta(lambda, &h, op.r())
}

/// `W_λ(u) - Δ_λ(h̄) W(u)`.
pub fn giambelli_residual<R: Ring>(
    lambda: &Partition,
    op: &MonicOperator<R>,
    n: usize,
) -> Result<Series<R>> {
    let u = basis_for(op, lambda.part(0) as usize, n)?;
    let lhs = gen_wronskian(lambda, &u)?;
    let w = gen_wronskian(&Partition::empty(), &u)?.truncate(n);
    Ok(lhs.sub(&w.scale_by(&schur_of_operator(lambda, op)?)))
}

/// `h_i W_λ(u) - Σ W_μ(u)` over the Pieri strips μ of λ with at most r+1
/// rows.
pub fn pieri_residual<R: Ring>(
    lambda: &Partition,
    i: u32,
    op: &MonicOperator<R>,
    n: usize,
) -> Result<Series<R>> {
    let r = op.r();
    let strips = pieri_strips(lambda, i, Some((r + 1, u32::MAX)));
    let top = lambda.part(0) as usize + i as usize;
    let u = basis_for(op, top, n)?;
    let h = op.h_sequence(i as usize);
    let mut acc = gen_wronskian(lambda, &u)?
        .truncate(n)
        .scale_by(&h.get(i as i64));
    for mu in strips {
        acc = acc.sub(&gen_wronskian(&mu, &u)?.truncate(n));
    }
    Ok(acc)
}

/// `n`-th exponential coefficient of `W_λ(u)` for the universal operator of
/// order r+1, written as
/// `Σ_m multinomial(n; m) Δ_{(j + λ_{r-j} + m_j)_j}(h̄)` over weak
/// compositions m of n into r+1 parts. Compositions whose shifted indices
/// collide contribute zero, and the rest reorder into Schur determinants of
/// partitions containing λ.
pub fn exponential_coefficient(lambda: &Partition, n: usize, r: usize) -> Result<MultiPoly> {
    let base = row_orders(lambda, r)?;
    let h = h_from_e(r, base[r] + n + 1);
    let mut total = MultiPoly::zero();
    let mut m = vec![0usize; r + 1];
    compositions(n, 0, &mut m, &mut |m| {
        let cols: Vec<i64> = base.iter().zip(m).map(|(b, k)| (b + k) as i64).collect();
        let mut sorted = cols.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Ok(());
        }
        let coeff = multinomial(n, m);
        let d = delta_columns(&cols, &h)?;
        total = &total + &d.scale(&Rational::from_integer(coeff));
        Ok(())
    })?;
    Ok(total)
}

fn compositions<F>(left: usize, j: usize, m: &mut Vec<usize>, f: &mut F) -> Result<()>
where
    F: FnMut(&[usize]) -> Result<()>,
{
    if j + 1 == m.len() {
        m[j] = left;
        return f(m);
    }
    for k in 0..=left {
        m[j] = k;
        compositions(left - k, j + 1, m, f)?;
    }
    Ok(())
}

fn multinomial(n: usize, parts: &[usize]) -> BigInt {
    use crate::exactalg::ring::factorial;
    parts
        .iter()
        .fold(factorial(n as u64), |acc, &k| acc / factorial(k as u64))
}

/// `W_λ(u) / W(u)`, which is the constant series `Δ_λ(h̄)`.
pub fn schur_as_ratio<R: Ring>(
    lambda: &Partition,
    op: &MonicOperator<R>,
    n: usize,
) -> Result<Series<R>> {
    let u = basis_for(op, lambda.part(0) as usize, n)?;
    let num = gen_wronskian(lambda, &u)?;
    let den = gen_wronskian(&Partition::empty(), &u)?.truncate(n);
    num.div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ring::rat;
    use crate::exactalg::series::Convention;
    use crate::schur::e_var;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ord(c: &[i64]) -> Series<Rational> {
        Series::new(c.iter().map(|&x| rat(x)).collect(), Convention::Ordinary)
    }

    #[test]
    fn small_wronskians() {
        let v = vec![ord(&[1, 0, 0, 0]), ord(&[0, 1, 0, 0])];
        let w = gen_wronskian(&p("0"), &v).unwrap();
        assert_eq!(w, ord(&[1, 0, 0]));
        assert!(gen_wronskian(&p("1"), &v).unwrap().is_zero());
        assert!(gen_wronskian(&p("1,1,1"), &v).is_err());
        let short = vec![ord(&[1]), ord(&[0])];
        assert!(gen_wronskian(&p("0"), &short).is_err());
    }

    #[test]
    fn fundamental_wronskian_starts_at_one() {
        let op = MonicOperator::universal(2);
        let u = fundamental_basis(&op, 6).unwrap();
        let w = gen_wronskian(&p("0"), &u).unwrap();
        assert_eq!(w.constant_term(), &MultiPoly::one());
    }

    #[test]
    fn identities_for_r1() {
        let op = MonicOperator::universal(1);
        for k in 1..=2 {
            assert!(liouville_residual(&op, k, 6).unwrap().is_zero());
        }
        assert!(liouville_residual(&op, 3, 6).is_err());
        assert!(giambelli_residual(&p("2,1"), &op, 8).unwrap().is_zero());
        let ratio = schur_as_ratio(&p("1,1"), &op, 5).unwrap();
        assert_eq!(
            ratio,
            Series::constant(MultiPoly::var(e_var(2)), 5, Convention::Exponential)
        );
        let ratio = schur_as_ratio(&p("1"), &op, 5).unwrap();
        assert_eq!(ratio.constant_term(), &MultiPoly::var(e_var(1)));
    }

    #[test]
    fn exponential_coefficient_small() {
        assert_eq!(
            exponential_coefficient(&p("0"), 0, 1).unwrap(),
            MultiPoly::one()
        );
        assert_eq!(
            exponential_coefficient(&p("0"), 1, 1).unwrap(),
            MultiPoly::var(e_var(1))
        );
        let e1 = MultiPoly::var(e_var(1));
        assert_eq!(exponential_coefficient(&p("0"), 2, 1).unwrap(), &e1 * &e1);
    }

    #[test]
    fn expansion_terms() {
        let t = derivative_expansion_terms(3, 1);
        assert_eq!(
            t,
            vec![(p("3"), BigInt::from(1)), (p("2,1"), BigInt::from(2))]
        );
    }
}
