//! Constant-coefficient linear ODEs solved by generating functions.
//!
//! The operator `P(D) = D^{r+1} - e_1 D^r + ... + (-1)^{r+1} e_{r+1}` acts on
//! exponential series. The Cauchy problem `P(D) y = φ`, `D^i y(0) = b_i` has
//! the solution `y = Σ p_n t^n / n!` where `Σ p_n t^n` is the ordinary series
//!
//! ```text
//! U_0(b) + U_1(b) t + ... + U_r(b) t^r + Σ_{n>r} φ_{n-r-1} t^n
//! -------------------------------------------------------------
//!        1 - e_1 t + ... + (-1)^{r+1} e_{r+1} t^{r+1}
//! ```

use crate::error::{Error, Result};
use crate::exactalg::multipoly::MultiPoly;
use crate::exactalg::ring::{Rational, Ring};
use crate::exactalg::series::{Convention, Series};
use crate::schur::{e_var, CoeffSequence};

/// Monic operator of order r+1 given by `e_1..e_{r+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonicOperator<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> MonicOperator<R> {
    pub fn new(coeffs: Vec<R>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("an operator needs order at least one".into()));
        }
        Ok(MonicOperator { coeffs })
    }

    /// `e_1..e_{r+1}`.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn r(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `e_k` with `e_0 = 1` and zero past the order.
    pub fn e(&self, k: usize) -> R {
        match k {
            0 => self.coeffs[0].one_like(),
            k if k <= self.coeffs.len() => self.coeffs[k - 1].clone(),
            _ => self.coeffs[0].zero_like(),
        }
    }

    fn signed_e(&self, k: usize) -> R {
        let e = self.e(k);
        if k % 2 == 1 {
            e.negated()
        } else {
            e
        }
    }

    /// `h_0..h_{n_max}` with `Σ h_n t^n = 1 / (1 - e_1 t + ...)`.
    pub fn h_sequence(&self, n_max: usize) -> CoeffSequence<R> {
        let zero = self.coeffs[0].zero_like();
        let mut h = vec![self.coeffs[0].one_like()];
        for n in 1..=n_max {
            let mut acc = zero.clone();
            for i in 1..=n.min(self.order()) {
                acc = acc.minus(&self.signed_e(i).times(&h[n - i]));
            }
            h.push(acc);
        }
        CoeffSequence::new(h, zero)
    }

    /// `1 - e_1 t + ... + (-1)^{r+1} e_{r+1} t^{r+1}` as an ordinary series.
    pub fn denominator(&self, n: usize) -> Series<R> {
        let zero = self.coeffs[0].zero_like();
        Series::new(
            (0..=n)
                .map(|k| {
                    if k <= self.order() {
                        self.signed_e(k)
                    } else {
                        zero.clone()
                    }
                })
                .collect(),
            Convention::Ordinary,
        )
    }
}

impl MonicOperator<MultiPoly> {
    /// The universal operator with generators `e_1..e_{r+1}`.
    pub fn universal(r: usize) -> Self {
        MonicOperator {
            coeffs: (1..=r as u32 + 1)
                .map(|i| MultiPoly::var(e_var(i)))
                .collect(),
        }
    }
}

impl MonicOperator<Rational> {
    pub fn specialize(universal: &MonicOperator<MultiPoly>, values: &[Rational]) -> Result<Self> {
        let coeffs = universal
            .coeffs
            .iter()
            .map(|c| {
                c.eval(|v| values.get(v.index as usize - 1).cloned())
                    .ok_or_else(|| Error::Domain("missing value for a coefficient".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        MonicOperator::new(coeffs)
    }
}

/// `U_i(a) = a_i - e_1 a_{i-1} + ... + (-1)^i e_i a_0`.
pub fn u_transform<R: Ring>(a: &[R], op: &MonicOperator<R>) -> Result<Vec<R>> {
    if a.len() != op.order() {
        return Err(Error::Domain(format!(
            "expected {} values, got {}",
            op.order(),
            a.len()
        )));
    }
    Ok((0..a.len())
        .map(|i| {
            (0..=i).fold(a[0].zero_like(), |acc, k| {
                acc.plus(&op.signed_e(k).times(&a[i - k]))
            })
        })
        .collect())
}

#[derive(Clone, Debug)]
pub struct CauchyData<R> {
    pub op: MonicOperator<R>,
    /// `b_0..b_r`.
    pub init: Vec<R>,
    /// Exponential coefficients `φ_0, φ_1, ...`; `None` for the homogeneous
    /// problem.
    pub forcing: Option<Series<R>>,
    /// Truncation order N of the solution.
    pub order: usize,
}

/// Solution of the Cauchy problem as an exponential series of order N.
pub fn solve_cauchy<R: Ring>(data: &CauchyData<R>) -> Result<Series<R>> {
    let op = &data.op;
    let (k, n) = (op.order(), data.order);
    if n < k {
        return Err(Error::Truncation {
            needed: k,
            available: n,
        });
    }
    if let Some(f) = &data.forcing {
        if f.convention() != Convention::Exponential {
            return Err(Error::Domain(
                "forcing must use the exponential convention".into(),
            ));
        }
        if f.order() + k < n {
            return Err(Error::Truncation {
                needed: n - k,
                available: f.order(),
            });
        }
    }
    let u = u_transform(&data.init, op)?;
    let zero = op.coeffs[0].zero_like();
    let num: Vec<R> = (0..=n)
        .map(|m| {
            if m < k {
                u[m].clone()
            } else {
                data.forcing
                    .as_ref()
                    .map_or_else(|| zero.clone(), |f| f.coeff(m - k).clone())
            }
        })
        .collect();
    let p = Series::new(num, Convention::Ordinary).mul(&op.denominator(n).invert()?);
    Ok(p.relabel(Convention::Exponential))
}

/// The basis `u_0..u_r` of the kernel with initial data
/// `(0, ..., 0, 1, h_1, ..., h_{r-i})`.
pub fn fundamental_basis<R: Ring>(op: &MonicOperator<R>, order: usize) -> Result<Vec<Series<R>>> {
    let r = op.r();
    let h = op.h_sequence(r);
    (0..=r)
        .map(|i| {
            let init: Vec<R> = (0..=r)
                .map(|j| {
                    if j < i {
                        h.get(-1)
                    } else {
                        h.get((j - i) as i64)
                    }
                })
                .collect();
            solve_cauchy(&CauchyData {
                op: op.clone(),
                init,
                forcing: None,
                order,
            })
        })
        .collect()
}

/// `P(D) s`; the order drops by r+1.
pub fn apply_operator<R: Ring>(op: &MonicOperator<R>, s: &Series<R>) -> Result<Series<R>> {
    let k = op.order();
    if s.order() < k {
        return Err(Error::Truncation {
            needed: k,
            available: s.order(),
        });
    }
    let target = s.order() - k;
    let mut acc = Series::zeros(s.constant_term(), target, s.convention());
    let mut deriv = s.clone();
    for j in 0..=k {
        // deriv = D^j s, weighted by the coefficient of T^j, i.e. (-1)^{k-j} e_{k-j}.
        let w = op.signed_e(k - j);
        acc = acc.add(&deriv.truncate(target).scale_by(&w));
        deriv = deriv.derive();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ring::rat;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn homogeneous(e: &[i64], b: &[i64], n: usize) -> Series<Rational> {
        let data = CauchyData {
            op: MonicOperator::new(q(e)).unwrap(),
            init: q(b),
            forcing: None,
            order: n,
        };
        solve_cauchy(&data).unwrap()
    }

    #[test]
    fn u_transform_examples() {
        let op = MonicOperator::universal(1);
        let x = |i| MultiPoly::var(crate::exactalg::multipoly::Var::new('x', i));
        let u = u_transform(&[x(0), x(1)], &op).unwrap();
        assert_eq!(u[1], &x(1) - &(&MultiPoly::var(e_var(1)) * &x(0)));
        let h = op.h_sequence(1);
        let u = u_transform(h.entries(), &op).unwrap();
        assert_eq!(u, vec![MultiPoly::one(), MultiPoly::zero()]);
        assert!(u_transform(&[x(0)], &op).is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            homogeneous(&[2], &[1], 4).coeffs(),
            q(&[1, 2, 4, 8, 16]).as_slice()
        );
        assert_eq!(
            homogeneous(&[0, 0], &[3, 5], 5).coeffs(),
            q(&[3, 5, 0, 0, 0, 0]).as_slice()
        );
        let cosh = homogeneous(&[0, -1], &[1, 0], 6);
        assert_eq!(cosh.coeffs(), q(&[1, 0, 1, 0, 1, 0, 1]).as_slice());
        assert_eq!(cosh.derive().derive(), cosh.truncate(4));
    }

    #[test]
    fn forced_solution() {
        // y'' + y = t: particular solution t, so with y(0)=0, y'(0)=1 the
        // answer is exactly t.
        let op = MonicOperator::new(q(&[0, 1])).unwrap();
        let forcing = Series::new(q(&[0, 1, 0, 0, 0, 0]), Convention::Exponential);
        let data = CauchyData {
            op,
            init: q(&[0, 1]),
            forcing: Some(forcing),
            order: 7,
        };
        let y = solve_cauchy(&data).unwrap();
        assert_eq!(y.coeffs(), q(&[0, 1, 0, 0, 0, 0, 0, 0]).as_slice());
    }

    #[test]
    fn operator_examples() {
        let op = MonicOperator::new(q(&[0, 0])).unwrap();
        let s = Series::new(q(&[0, 0, 1]), Convention::Exponential);
        assert_eq!(
            apply_operator(&op, &s).unwrap().coeffs(),
            q(&[1]).as_slice()
        );
        let op = MonicOperator::new(q(&[2])).unwrap();
        let s = homogeneous(&[2], &[1], 6);
        assert!(apply_operator(&op, &s).unwrap().is_zero());
        assert!(apply_operator(&op, &Series::new(q(&[1]), Convention::Exponential)).is_err());
    }

    #[test]
    fn basis_initial_data() {
        let op = MonicOperator::universal(1);
        let u = fundamental_basis(&op, 6).unwrap();
        let h = op.h_sequence(6);
        assert_eq!(u[0].coeffs(), h.entries());
        assert_eq!(u[1].coeff(0), &MultiPoly::zero());
        assert_eq!(&u[1].coeffs()[1..], &h.entries()[..6]);
        for ui in &u {
            assert!(apply_operator(&op, ui).unwrap().is_zero());
        }
    }
}
