//! Recovering a basis of V near an ordinary point from its intermediate
//! Wronskians by iterated integration.

use crate::error::{Error, Result};
use crate::exactalg::linalg::rank;
use crate::exactalg::ring::{format_rational, Rational};
use crate::exactalg::series::Series;
use crate::exactalg::unipoly::UniPoly;

use super::system::{taylor_series, FlagData};

/// `g_0 = W_0` and
/// `g_k = W_0 ∫ (W_{-1} W_1 / W_0^2) ∫ (W_0 W_2 / W_1^2) ... ∫ (W_{k-2} W_k / W_{k-1}^2)`
/// with `W_{-1} = 1`, each integral taken from `a`. Series are ordinary, in
/// `x - a`, of order N.
pub fn reconstruct_basis_series(
    flag: &FlagData,
    a: &Rational,
    n: usize,
) -> Result<Vec<Series<Rational>>> {
    let r = flag.wronskians.len() - 1;
    if n < r + 2 {
        return Err(Error::Truncation {
            needed: r + 2,
            available: n,
        });
    }
    for (j, w) in flag.wronskians.iter().enumerate() {
        if num_traits::Zero::is_zero(&w.eval(a)) {
            return Err(Error::SingularPoint(format!(
                "W_{j} vanishes at {}",
                format_rational(a)
            )));
        }
    }
    let w: Vec<Series<Rational>> = flag
        .wronskians
        .iter()
        .map(|p| taylor_series(p, a, n))
        .collect();
    let one = taylor_series(&UniPoly::one(), a, n);
    let prev = |i: usize| if i == 0 { &one } else { &w[i - 1] };
    // kernel[l] = W_{l-1} W_{l+1} / W_l^2 for l = 0..r-1.
    let kernel = (0..r)
        .map(|l| prev(l).mul(&w[l + 1]).div(&w[l].mul(&w[l])))
        .collect::<Result<Vec<_>>>()?;
    let mut out = vec![w[0].clone()];
    for k in 1..=r {
        let mut acc = kernel[k - 1].integrate().truncate(n);
        for l in (0..k - 1).rev() {
            acc = kernel[l].mul(&acc).integrate().truncate(n);
        }
        out.push(w[0].mul(&acc));
    }
    Ok(out)
}

/// Rank of the coefficient rows of a list of series.
pub fn series_rank(s: &[Series<Rational>]) -> usize {
    let rows: Vec<Vec<Rational>> = s.iter().map(|x| x.coeffs().to_vec()).collect();
    rank(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ring::rat;
    use crate::wmap::system::{
        annihilator_residual_series, intermediate_wronskians, LinearSystemP1,
    };

    fn sys(d: usize, polys: &[&[i64]]) -> LinearSystemP1 {
        LinearSystemP1::new(d, polys.iter().map(|c| UniPoly::from_ints(c)).collect()).unwrap()
    }

    fn check(v: &LinearSystemP1, a: i64, n: usize) -> Vec<Series<Rational>> {
        let a = rat(a);
        let g = reconstruct_basis_series(&intermediate_wronskians(v), &a, n).unwrap();
        for s in &g {
            assert!(annihilator_residual_series(v, &a, s).unwrap().is_zero());
        }
        let mut all = g.clone();
        all.extend(v.basis().iter().map(|p| taylor_series(p, &a, n)));
        assert_eq!(series_rank(&g), v.r() + 1);
        assert_eq!(series_rank(&all), v.r() + 1);
        g
    }

    #[test]
    fn lines() {
        let g = check(&sys(1, &[&[1], &[0, 1]]), 3, 6);
        assert_eq!(g[0].coeffs()[..2], [rat(1), rat(0)]);
        assert_eq!(g[1].coeffs()[..2], [rat(0), rat(1)]);
    }

    #[test]
    fn examples() {
        check(&sys(2, &[&[1], &[0, 0, 1]]), 1, 8);
        check(&sys(3, &[&[2, 1], &[0, 1, 0, 1], &[1, 0, 1]]), 2, 10);
        let g = check(&sys(2, &[&[1, 2, 3]]), 0, 5);
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn singular_point() {
        let v = sys(2, &[&[1], &[0, 0, 1]]);
        assert!(matches!(
            reconstruct_basis_series(&intermediate_wronskians(&v), &rat(0), 8),
            Err(Error::SingularPoint(_))
        ));
    }
}
