//! Planes in G(2, Poly_d) with a prescribed Wronskian.
//!
//! A plane is written in flag form: `w_0` monic of degree n and `w_1` monic
//! of degree d with no `x^n` term. The equations `Wr(w_0, w_1) = (d-n) F`
//! form a square polynomial system in the free coefficients, solved by
//! multi-start complex Newton. For non-degenerate planes the roots of `w_0`
//! are critical points of the r = 1 master function; degenerate planes are
//! found as well. The whole solution set is then rebuilt exactly over
//! `Q[θ]/(m)`, where θ is a rational linear form separating the solutions and
//! m is its eliminant, and checked symbolically.

use std::fmt;
use std::ops::Sub;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::linalg::rref;
use crate::exactalg::ring::{rational_to_f64, Rational};
use crate::exactalg::unipoly::UniPoly;
use crate::grasscalc::intersection_number;
use crate::partitions::Partition;

use super::config::{
    critical_residual_complex, nondegenerate, NondegeneracyReport, RamificationConfig,
};
use super::modp;
use super::refine::{self, Fx, Prec};
use super::system::{wronskian_of_system, LinearSystemP1};

#[derive(Clone, Debug)]
pub struct SolverOptions {
    pub seed: u64,
    pub starts_per_round: usize,
    pub max_rounds: usize,
    pub tol: f64,
    pub max_iter: usize,
    /// Monodromy loops allowed without finding a new solution.
    pub stale_loops: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            seed: 0x5eed,
            starts_per_round: 32,
            max_rounds: 4,
            tol: 1e-10,
            max_iter: 100,
            stale_loops: 12,
        }
    }
}

/// A plane whose basis coefficients lie in `Q[θ]/(m)`; one plane per root of
/// `m`, selected by `theta`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicPlane {
    pub d: usize,
    pub eliminant: UniPoly,
    /// Approximate value of θ picking out this plane.
    pub theta: Complex64,
    /// Coefficients of `w_0` (ascending in x), each a polynomial in θ.
    pub w0: Vec<UniPoly>,
    pub w1: Vec<UniPoly>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExactPlane {
    Rational(LinearSystemP1),
    Algebraic(AlgebraicPlane),
}

impl fmt::Display for ExactPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactPlane::Rational(v) => write!(f, "{v}"),
            ExactPlane::Algebraic(p) => {
                let show = |c: &[UniPoly]| {
                    let terms: Vec<String> = c
                        .iter()
                        .enumerate()
                        .rev()
                        .filter(|(_, q)| !q.is_zero())
                        .map(|(i, q)| format!("({})*x^{i}", q.display_in("t")))
                        .collect();
                    terms.join(" + ")
                };
                write!(
                    f,
                    "span({}, {}) with {} = 0, t ~ {:.6}{:+.6}i",
                    show(&p.w0),
                    show(&p.w1),
                    p.eliminant.display_in("t"),
                    p.theta.re,
                    p.theta.im
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FoundPlane {
    pub exact: ExactPlane,
    /// Approximate coefficients of `w_0` and `w_1`, ascending.
    pub approx_w0: Vec<Complex64>,
    pub approx_w1: Vec<Complex64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveStats {
    pub starts: usize,
    pub converged: usize,
    pub failed: usize,
    pub loops: usize,
    pub expected: String,
    pub complete: bool,
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub planes: Vec<FoundPlane>,
    pub config: RamificationConfig,
    pub stats: SolveStats,
}

/// Degree data for a target with k simple roots in degree d.
struct Shape {
    d: usize,
    n: usize,
    target: UniPoly,
    z: Vec<Complex64>,
}

fn shape(target_roots: &[Rational], d: usize) -> Result<(Shape, RamificationConfig)> {
    if d < 1 {
        return Err(Error::Domain("d must be at least 1".into()));
    }
    let mut sorted = target_roots.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Domain("repeated target root".into()));
    }
    let k = target_roots.len();
    let full = 2 * (d - 1);
    if k > full || k + 1 < d {
        return Err(Error::Domain(format!(
            "{k} simple roots do not fit degree {d}: need between {} and {full}",
            d - 1
        )));
    }
    let w_inf = full - k;
    let n = d - 1 - w_inf;
    let config = RamificationConfig::new(
        target_roots.to_vec(),
        vec![Partition::row(1); k],
        Partition::row(w_inf as u32),
    )?;
    let target = UniPoly::from_roots(target_roots);
    let z = target_roots
        .iter()
        .map(|q| Complex64::new(rational_to_f64(q), 0.0))
        .collect();
    Ok((Shape { d, n, target, z }, config))
}

/// Expected number of planes, an intersection number of Schubert classes.
pub fn expected_count(target_roots: &[Rational], d: usize) -> Result<BigInt> {
    let (_, config) = shape(target_roots, d)?;
    let mut lambdas = config.partitions.clone();
    if !config.infinity.is_empty() {
        lambdas.push(config.infinity.clone());
    }
    Ok(intersection_number(&lambdas, 1, d)?.count)
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Solves a square complex system by Gaussian elimination with partial
/// pivoting.
fn solve_complex(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))?;
        if a[piv][col].norm() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            if f.is_zero() {
                continue;
            }
            for k in col..n {
                let v = a[col][k];
                a[row][k] -= f * v;
            }
            let v = b[col];
            b[row] -= f * v;
        }
    }
    let mut x = vec![Complex64::zero(); n];
    for row in (0..n).rev() {
        let mut s = b[row];
        for k in row + 1..n {
            s -= a[row][k] * x[k];
        }
        x[row] = s / a[row][row];
    }
    x.iter().all(|c| c.is_finite()).then_some(x)
}

/// Least squares through the normal equations.
fn least_squares(a: &[Vec<Complex64>], b: &[Complex64]) -> Option<Vec<Complex64>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut ata = vec![vec![Complex64::zero(); cols]; cols];
    let mut atb = vec![Complex64::zero(); cols];
    for (row, rhs) in a.iter().zip(b) {
        for i in 0..cols {
            let ci = row[i].conj();
            atb[i] += ci * rhs;
            for j in 0..cols {
                ata[i][j] += ci * row[j];
            }
        }
    }
    solve_complex(ata, atb)
}

fn poly_from_roots(t: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::one()];
    for r in t {
        let mut next = vec![Complex64::zero(); c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * r;
        }
        c = next;
    }
    c
}

/// Coefficient rings for the Wronski equations.
trait Coef: Clone + Zero + One + Sub<Output = Self> {}

impl<T: Clone + Zero + One + Sub<Output = T>> Coef for T {}

/// `k` as an element of any ring with unity.
fn int<T: Coef>(k: i64) -> T {
    let mut acc = T::zero();
    for _ in 0..k.unsigned_abs() {
        acc = acc + T::one();
    }
    if k < 0 {
        T::zero() - acc
    } else {
        acc
    }
}

/// Coefficients of `Wr(p, q) = p q' - p' q`.
fn wr<T: Coef>(p: &[T], q: &[T]) -> Vec<T> {
    let len = (p.len() + q.len()).saturating_sub(1).max(1);
    let mut out = vec![T::zero(); len];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            if i + j >= 1 && i != j {
                let t = a.clone() * b.clone() * int::<T>(j as i64 - i as i64);
                out[i + j - 1] = out[i + j - 1].clone() + t;
            }
        }
    }
    out
}

fn wr_complex(p: &[Complex64], q: &[Complex64]) -> Vec<Complex64> {
    wr(p, q)
}
/// Splits free coordinates into `w_0` and `w_1` coefficient vectors.
fn unpack<T: Coef>(sh: &Shape, x: &[T]) -> (Vec<T>, Vec<T>) {
    let mut w0 = x[..sh.n].to_vec();
    w0.push(T::one());
    let mut w1 = vec![T::zero(); sh.d + 1];
    w1[sh.d] = T::one();
    for (slot, v) in w1_slots(sh).into_iter().zip(&x[sh.n..]) {
        w1[slot] = v.clone();
    }
    (w0, w1)
}

fn monomial<T: Coef>(j: usize) -> Vec<T> {
    let mut v = vec![T::zero(); j + 1];
    v[j] = T::one();
    v
}

/// Coefficients below the top of `Wr(w_0, w_1) - (d-n) F`.
fn wronski_residual<T: Coef>(sh: &Shape, f: &[T], x: &[T]) -> Vec<T> {
    let (w0, w1) = unpack(sh, x);
    let w = wr(&w0, &w1);
    (0..f.len() - 1)
        .map(|i| w.get(i).cloned().unwrap_or_else(T::zero) - f[i].clone())
        .collect()
}

/// The equations are bilinear, so each Jacobian column is a Wronskian.
fn wronski_jacobian<T: Coef>(sh: &Shape, x: &[T]) -> Vec<Vec<T>> {
    let (w0, w1) = unpack(sh, x);
    let cols: Vec<Vec<T>> = (0..sh.n)
        .map(|i| wr(&monomial(i), &w1))
        .chain(w1_slots(sh).iter().map(|&j| wr(&w0, &monomial(j))))
        .collect();
    (0..x.len())
        .map(|row| {
            cols.iter()
                .map(|c| c.get(row).cloned().unwrap_or_else(T::zero))
                .collect()
        })
        .collect()
}

/// Damped Newton on the Wronski equations; `f` is `(d-n) F` in floats.
fn wronski_newton(
    sh: &Shape,
    f: &[Complex64],
    mut x: Vec<Complex64>,
    bound: f64,
    opts: &SolverOptions,
) -> Option<Vec<Complex64>> {
    let scale = f.iter().map(|c| c.norm()).fold(1.0, f64::max);
    let mut polish = 0;
    for _ in 0..opts.max_iter {
        let g = wronski_residual(sh, f, &x);
        let r = norm(&g);
        if !r.is_finite() || x.iter().any(|c| c.norm() > bound) {
            return None;
        }
        if r < opts.tol * scale {
            polish += 1;
            if polish > 2 {
                return Some(x);
            }
        }
        let jac = wronski_jacobian(sh, &x);
        let step = solve_complex(jac, g.iter().map(|c| -c).collect())?;
        let mut lambda = 1.0;
        loop {
            let trial: Vec<Complex64> = x.iter().zip(&step).map(|(a, s)| a + s * lambda).collect();
            if norm(&wronski_residual(sh, f, &trial)) < r || lambda < 1e-3 {
                x = trial;
                break;
            }
            lambda *= 0.5;
        }
    }
    let g = wronski_residual(sh, f, &x);
    (norm(&g) < opts.tol * scale).then_some(x)
}

/// Indices of the free coefficients of `w_1`.
fn w1_slots(sh: &Shape) -> Vec<usize> {
    (0..sh.d).filter(|&j| j != sh.n).collect()
}

/// Numerical `w_1` completing `w_0` so that `Wr(w_0, w_1) = (d-n) F`.
fn complete_w1(sh: &Shape, w0: &[Complex64]) -> Option<Vec<Complex64>> {
    let c = (sh.d - sh.n) as f64;
    let k = sh.target.degree().unwrap_or(0);
    let rows = k + 1;
    let slots = w1_slots(sh);
    let mono = |j: usize| {
        let mut v = vec![Complex64::zero(); j + 1];
        v[j] = Complex64::one();
        v
    };
    let col_of = |j: usize| {
        let mut w = wr_complex(w0, &mono(j));
        w.resize(rows.max(w.len()), Complex64::zero());
        w
    };
    let cols: Vec<Vec<Complex64>> = slots.iter().map(|&j| col_of(j)).collect();
    let top = col_of(sh.d);
    let f: Vec<Complex64> = (0..rows.max(top.len()))
        .map(|i| Complex64::new(rational_to_f64(&sh.target.coeff(i)) * c, 0.0))
        .collect();
    let m = f.len();
    let a: Vec<Vec<Complex64>> = (0..m)
        .map(|i| {
            cols.iter()
                .map(|col| col.get(i).copied().unwrap_or_default())
                .collect()
        })
        .collect();
    let b: Vec<Complex64> = (0..m)
        .map(|i| f[i] - top.get(i).copied().unwrap_or_default())
        .collect();
    let u = if slots.is_empty() {
        vec![]
    } else {
        least_squares(&a, &b)?
    };
    let mut w1 = vec![Complex64::zero(); sh.d + 1];
    w1[sh.d] = Complex64::one();
    for (j, val) in slots.iter().zip(u) {
        w1[*j] = val;
    }
    Some(w1)
}

/// Exact `w_1` for a rational `w_0`, or `None` when no completion exists.
fn complete_w1_exact(sh: &Shape, w0: &UniPoly) -> Option<UniPoly> {
    let c = Rational::from_integer(BigInt::from(sh.d - sh.n));
    let slots = w1_slots(sh);
    let wr = |q: &UniPoly| &(w0 * &q.derivative()) - &(&w0.derivative() * q);
    let top = wr(&UniPoly::monomial(sh.d, Rational::one()));
    let rhs = &sh.target.scale(&c) - &top;
    let cols: Vec<UniPoly> = slots
        .iter()
        .map(|&j| wr(&UniPoly::monomial(j, Rational::one())))
        .collect();
    let len = 2 * sh.d + 1;
    // Augmented system, one row per power of x.
    let rows: Vec<Vec<Rational>> = (0..len)
        .map(|i| {
            let mut row: Vec<Rational> = cols.iter().map(|p| p.coeff(i)).collect();
            row.push(rhs.coeff(i));
            row
        })
        .collect();
    let (red, pivots) = rref(&rows);
    if pivots.contains(&slots.len()) {
        return None;
    }
    let mut w1 = vec![Rational::zero(); sh.d + 1];
    w1[sh.d] = Rational::one();
    for (row, &p) in red.iter().zip(&pivots) {
        w1[slots[p]] = row[slots.len()].clone();
    }
    let w1 = UniPoly::new(w1);
    (wr(&w1) == sh.target.scale(&c)).then_some(w1)
}

/// Reduces a list of coefficients in `Q[θ]` modulo `m`.
fn reduce_all(ps: &[UniPoly], m: &UniPoly) -> Vec<UniPoly> {
    ps.iter().map(|p| p.rem(m)).collect()
}

/// `Wr(w_0, w_1)` with coefficients in `Q[θ]`, reduced modulo `m`.
fn wr_over(w0: &[UniPoly], w1: &[UniPoly], m: &UniPoly) -> Vec<UniPoly> {
    let len = (w0.len() + w1.len()).saturating_sub(1).max(1);
    let mut out = vec![UniPoly::zero(); len];
    for (i, a) in w0.iter().enumerate() {
        for (j, b) in w1.iter().enumerate() {
            if i + j >= 1 && i != j {
                let k = Rational::from_integer(BigInt::from(j as i64 - i as i64));
                out[i + j - 1] = &out[i + j - 1] + &(a * b).scale(&k);
            }
        }
    }
    reduce_all(&out, m)
}

impl AlgebraicPlane {
    /// `Wr(w_0, w_1) - (d - n) F` reduced modulo the eliminant; all zero for a
    /// verified plane.
    pub fn wronskian_defect(&self, target: &UniPoly) -> Vec<UniPoly> {
        let n = self.w0.len() - 1;
        let c = Rational::from_integer(BigInt::from(self.d - n));
        let w = wr_over(&self.w0, &self.w1, &self.eliminant);
        let len = w.len().max(target.coeffs().len());
        (0..len)
            .map(|i| {
                let wi = w.get(i).cloned().unwrap_or_else(UniPoly::zero);
                (&wi - &UniPoly::constant(target.coeff(i) * &c)).rem(&self.eliminant)
            })
            .collect()
    }

    /// θ refined to a root of the eliminant by Newton's method.
    pub fn refined_theta(&self) -> Complex64 {
        self.theta_precise(self.precision()).to_c64()
    }

    /// Precision that survives cancellation in the coefficients.
    fn precision(&self) -> Prec {
        let h = refine::height_bits(self.w0.iter().chain(&self.w1).chain([&self.eliminant]));
        Prec { bits: 128 + 2 * h }
    }

    fn theta_precise(&self, p: Prec) -> Fx {
        let (m, dm) = (&self.eliminant, self.eliminant.derivative());
        let mut t = Fx::from_c64(self.theta, p);
        for _ in 0..60 {
            let Some(step) = refine::eval(m, &t, p).div(&refine::eval(&dm, &t, p), p) else {
                break;
            };
            let small = step.to_c64().norm() < 1e-30 * t.to_c64().norm().max(1.0);
            t = t - step;
            if small {
                break;
            }
        }
        t
    }

    fn coeffs_precise(&self, polys: &[UniPoly], p: Prec) -> Vec<Fx> {
        let t = self.theta_precise(p);
        polys.iter().map(|q| refine::eval(q, &t, p)).collect()
    }

    /// Numerical coefficients of `w_0`, ascending.
    pub fn w0_numeric(&self) -> Vec<Complex64> {
        self.coeffs_precise(&self.w0, self.precision())
            .iter()
            .map(Fx::to_c64)
            .collect()
    }

    pub fn w1_numeric(&self) -> Vec<Complex64> {
        self.coeffs_precise(&self.w1, self.precision())
            .iter()
            .map(Fx::to_c64)
            .collect()
    }
}

impl FoundPlane {
    /// Roots of `T_1 = w_0`, computed from the exact data.
    pub fn additional_roots(&self) -> Vec<Complex64> {
        let (coeffs, p) = match &self.exact {
            ExactPlane::Rational(v) => {
                let w0 = &v.basis()[0];
                let p = Prec {
                    bits: 128 + 2 * refine::height_bits([w0]),
                };
                (
                    w0.coeffs()
                        .iter()
                        .map(|q| Fx::from_rational(q, p))
                        .collect::<Vec<_>>(),
                    p,
                )
            }
            ExactPlane::Algebraic(a) => {
                let p = a.precision();
                (a.coeffs_precise(&a.w0, p), p)
            }
        };
        let approx: Vec<Complex64> = coeffs.iter().map(Fx::to_c64).collect();
        polynomial_roots(&approx)
            .into_iter()
            .map(|x| refine::polish_root(&coeffs, x, p))
            .collect()
    }
}

/// All complex roots of a polynomial (ascending coefficients) by the
/// Aberth iteration.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|x| x.norm() == 0.0) {
        c.pop();
    }
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return vec![];
    }
    let lead = c[n];
    let c: Vec<Complex64> = c.iter().map(|x| x / lead).collect();
    let radius = 1.0 + c[..n].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let eval = |z: Complex64| {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for a in c.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            Complex64::from_polar(
                radius * 0.5,
                0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64,
            )
        })
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let w = ratio / (Complex64::one() - ratio * sum);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-16 {
            break;
        }
    }
    z
}

fn random_start(rng: &mut ChaCha8Rng, n: usize, center: Complex64, radius: f64) -> Vec<Complex64> {
    if rng.gen_bool(0.5) {
        (0..n)
            .map(|_| {
                center + Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) * radius
            })
            .collect()
    } else {
        // Perturbed symmetric configuration on a circle.
        let phase: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let rad = radius * rng.gen_range(0.2..1.2);
        (0..n)
            .map(|k| {
                let base =
                    Complex64::from_polar(rad, phase + std::f64::consts::TAU * k as f64 / n as f64);
                center
                    + base
                    + Complex64::new(rng.gen_range(-0.05..0.05), rng.gen_range(-0.05..0.05))
                        * radius
            })
            .collect()
    }
}

/// Numeric solutions as `w_0` coefficient vectors (ascending, monic).
struct NumericSolution {
    w0: Vec<Complex64>,
    w1: Vec<Complex64>,
}

fn same_solution(a: &[Complex64], b: &[Complex64]) -> bool {
    let scale = a.iter().chain(b).map(|c| c.norm()).fold(1.0, f64::max);
    a.iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-6 * scale)
}

fn scaled_target(sh: &Shape) -> Vec<Complex64> {
    let c = (sh.d - sh.n) as f64;
    sh.target
        .coeffs()
        .iter()
        .map(|q| Complex64::new(rational_to_f64(q) * c, 0.0))
        .collect()
}

fn search(sh: &Shape, expected: usize, opts: &SolverOptions) -> (Vec<NumericSolution>, SolveStats) {
    let n = sh.n;
    let center = sh.z.iter().sum::<Complex64>() / sh.z.len().max(1) as f64;
    let radius = 1.0 + sh.z.iter().map(|z| (z - center).norm()).fold(0.0, f64::max);
    let f = scaled_target(sh);
    let bound = 1e6 * radius.powi(sh.d as i32 + 1);
    let mut found: Vec<NumericSolution> = Vec::new();
    let (mut starts, mut converged) = (0, 0);
    for round in 0..opts.max_rounds {
        let results: Vec<Option<(Vec<Complex64>, Vec<Complex64>)>> = (0..opts.starts_per_round)
            .into_par_iter()
            .map(|i| {
                let idx = (round * opts.starts_per_round + i) as u64;
                let mut rng =
                    ChaCha8Rng::seed_from_u64(opts.seed ^ idx.wrapping_mul(0x9e37_79b9_7f4a_7c15));
                let w0 = poly_from_roots(&random_start(&mut rng, n, center, radius));
                let mut x: Vec<Complex64> = w0[..n].to_vec();
                let (_, w1) = unpack(sh, &vec![Complex64::zero(); n + sh.d - 1]);
                let guess = complete_w1(sh, &w0).unwrap_or(w1);
                x.extend(w1_slots(sh).iter().map(|&j| guess[j]));
                let x = wronski_newton(sh, &f, x, bound, opts)?;
                Some(unpack(sh, &x))
            })
            .collect();
        starts += results.len();
        for (w0, w1) in results.into_iter().flatten() {
            converged += 1;
            insert_new(&mut found, w0, w1);
        }
        if found.len() >= expected {
            break;
        }
    }
    let loops = if found.is_empty() || found.len() >= expected {
        0
    } else {
        monodromy(sh, &f, &mut found, expected, bound, opts)
    };
    let stats = SolveStats {
        starts,
        converged,
        failed: starts - converged,
        loops,
        expected: expected.to_string(),
        complete: found.len() == expected,
    };
    (found, stats)
}

fn insert_new(found: &mut Vec<NumericSolution>, w0: Vec<Complex64>, w1: Vec<Complex64>) -> bool {
    if found
        .iter()
        .any(|s| same_solution(&s.w0, &w0) && same_solution(&s.w1, &w1))
    {
        return false;
    }
    found.push(NumericSolution { w0, w1 });
    true
}

/// Moves the known solutions around random triangles `f -> f_1 -> f_2 -> f`
/// in the space of targets; the endpoints are solutions for `f` again, and
/// new ones appear until the fibre is exhausted.
fn monodromy(
    sh: &Shape,
    f: &[Complex64],
    found: &mut Vec<NumericSolution>,
    expected: usize,
    bound: f64,
    opts: &SolverOptions,
) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.rotate_left(17) ^ 0x6d6f_6e6f);
    let size = f.iter().map(|c| c.norm()).fold(1.0, f64::max);
    let mut stale = 0;
    let mut loops = 0;
    while found.len() < expected && stale < opts.stale_loops {
        loops += 1;
        let mut wobble = || -> Vec<Complex64> {
            let mut g = f.to_vec();
            let top = g.len() - 1;
            for c in &mut g[..top] {
                *c += Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) * size;
            }
            g
        };
        let (f1, f2) = (wobble(), wobble());
        let starts: Vec<Vec<Complex64>> = found.iter().map(|s| coordinates(sh, s)).collect();
        let ends: Vec<Option<Vec<Complex64>>> = starts
            .into_par_iter()
            .map(|x| {
                let x = track(sh, f, &f1, x)?;
                let x = track(sh, &f1, &f2, x)?;
                let x = track(sh, &f2, f, x)?;
                wronski_newton(sh, f, x, bound, opts)
            })
            .collect();
        let mut fresh = false;
        for x in ends.into_iter().flatten() {
            let (w0, w1) = unpack(sh, &x);
            fresh |= insert_new(found, w0, w1);
        }
        stale = if fresh { 0 } else { stale + 1 };
    }
    loops
}

/// Follows a solution of `Wr = f_a` to one of `Wr = f_b` along the straight
/// segment, with a fourth-order predictor and Newton corrector.
fn track(
    sh: &Shape,
    fa: &[Complex64],
    fb: &[Complex64],
    mut x: Vec<Complex64>,
) -> Option<Vec<Complex64>> {
    let dim = x.len();
    let df: Vec<Complex64> = fb.iter().zip(fa).map(|(b, a)| b - a).take(dim).collect();
    let at =
        |t: f64| -> Vec<Complex64> { fa.iter().zip(fb).map(|(a, b)| a + (b - a) * t).collect() };
    let velocity = |x: &[Complex64]| solve_complex(wronski_jacobian(sh, x), df.clone());
    let (mut t, mut h) = (0.0f64, 0.02f64);
    let mut streak = 0;
    while t < 1.0 {
        if h < 1e-9 {
            return None;
        }
        let h_used = h.min(1.0 - t);
        let step = || -> Option<Vec<Complex64>> {
            let shift = |x: &[Complex64], v: &[Complex64], c: f64| -> Vec<Complex64> {
                x.iter().zip(v).map(|(a, b)| a + b * c).collect()
            };
            let k1 = velocity(&x)?;
            let k2 = velocity(&shift(&x, &k1, h_used / 2.0))?;
            let k3 = velocity(&shift(&x, &k2, h_used / 2.0))?;
            let k4 = velocity(&shift(&x, &k3, h_used))?;
            let mut y: Vec<Complex64> = (0..dim)
                .map(|i| x[i] + (k1[i] + k2[i] * 2.0 + k3[i] * 2.0 + k4[i]) * (h_used / 6.0))
                .collect();
            let target = at(t + h_used);
            let scale = 1.0 + norm(&y);
            for it in 0..3 {
                let g = wronski_residual(sh, &target, &y);
                let dx = solve_complex(wronski_jacobian(sh, &y), g.iter().map(|c| -c).collect())?;
                let size = norm(&dx);
                y.iter_mut().zip(&dx).for_each(|(a, b)| *a += b);
                if it == 0 && size > 1e-3 * scale {
                    return None;
                }
                if size < 1e-11 * scale {
                    break;
                }
            }
            y.iter().all(|c| c.is_finite()).then_some(y)
        };
        match step() {
            Some(y) => {
                x = y;
                t += h_used;
                streak += 1;
                if streak >= 3 {
                    h = (h * 2.0).min(0.1);
                    streak = 0;
                }
            }
            None => {
                h /= 2.0;
                streak = 0;
            }
        }
    }
    Some(x)
}

/// Free coordinates of a numeric solution: `w_0` below its top degree and
/// the free slots of `w_1`.
fn coordinates(sh: &Shape, s: &NumericSolution) -> Vec<Complex64> {
    let mut c: Vec<Complex64> = s.w0[..sh.n].to_vec();
    c.extend(w1_slots(sh).iter().map(|&j| s.w1[j]));
    c
}

/// Newton steps at precision `p` from a float solution. Convergence is
/// quadratic, so the step count follows the bit count.
fn refine_solution(p: Prec, sh: &Shape, f: &[Fx], x: &[Complex64]) -> Option<Vec<Fx>> {
    let mut x: Vec<Fx> = x.iter().map(|c| Fx::from_c64(*c, p)).collect();
    let steps = 3 + (p.bits / 20).next_power_of_two().trailing_zeros() as usize;
    for _ in 0..steps {
        let g = wronski_residual(sh, f, &x);
        let step = refine::solve(
            p,
            wronski_jacobian(sh, &x),
            g.into_iter().map(|c| -c).collect(),
        )?;
        x = x.into_iter().zip(step).map(|(a, s)| a + s).collect();
    }
    Some(x)
}

/// Rebuilds the numeric solutions exactly over `Q[θ]/(m)` and verifies them.
/// Precision doubles until the eliminant and coordinates are recognized.
fn reconstruct(sh: &Shape, sols: &[NumericSolution]) -> Result<Vec<FoundPlane>> {
    let c = Rational::from_integer(BigInt::from(sh.d - sh.n));
    let approx: Vec<Vec<Complex64>> = sols.iter().map(|s| coordinates(sh, s)).collect();
    let dim = approx[0].len();
    let mut candidates: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..16 {
        candidates.push((0..dim).map(|_| rng.gen_range(-3..=3)).collect());
    }
    // A few separating forms of small height.
    let forms: Vec<Vec<i64>> = candidates
        .into_iter()
        .filter(|form| {
            let th: Vec<Complex64> = approx
                .iter()
                .map(|x| x.iter().zip(form).map(|(v, &k)| v * k as f64).sum())
                .collect();
            (0..th.len()).all(|a| (0..a).all(|b| (th[a] - th[b]).norm() > 1e-5))
        })
        .take(3)
        .collect();
    for bits in [256, 512, 1024, 2048, 4096] {
        let p = Prec { bits };
        let f: Vec<Fx> = sh
            .target
            .coeffs()
            .iter()
            .map(|q| Fx::from_rational(&(q * &c), p))
            .collect();
        let coords: Vec<Vec<Fx>> = approx
            .iter()
            .map(|x| refine_solution(p, sh, &f, x))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Solver("refinement hit a singular Jacobian".into()))?;
        for form in &forms {
            let thetas: Vec<Fx> = coords
                .iter()
                .map(|c| {
                    c.iter()
                        .zip(form)
                        .fold(Fx::zero(), |acc, (x, &k)| acc + x.clone() * Fx::from_int(k))
                })
                .collect();
            if let Some(planes) = try_reconstruct(p, sh, sols, &coords, &thetas) {
                return Ok(planes);
            }
        }
    }
    Err(Error::Solver(
        "could not rebuild the solutions exactly".into(),
    ))
}

fn try_reconstruct(
    p: Prec,
    sh: &Shape,
    sols: &[NumericSolution],
    coords: &[Vec<Fx>],
    thetas: &[Fx],
) -> Option<Vec<FoundPlane>> {
    let mc = refine::poly_from_roots(thetas);
    let m = UniPoly::new(
        mc.iter()
            .map(|c| refine::recognize(p, c))
            .collect::<Option<Vec<_>>>()?,
    );
    let (g, _, dinv) = m.ext_gcd(&m.derivative());
    if m.degree()? != thetas.len() || g != UniPoly::one() {
        return None;
    }
    let dim = coords[0].len();
    let mut lifted = Vec::with_capacity(dim);
    for i in 0..dim {
        let ys: Vec<Fx> = coords.iter().map(|c| c[i].clone()).collect();
        let num = refine::trace_numerator(p, &mc, thetas, &ys)?;
        lifted.push((&num * &dinv).rem(&m));
    }
    let (w0, w1) = assemble(sh, &lifted);
    let base = AlgebraicPlane {
        d: sh.d,
        eliminant: m.clone(),
        theta: Complex64::zero(),
        w0,
        w1,
    };
    if !base
        .wronskian_defect(&sh.target)
        .iter()
        .all(UniPoly::is_zero)
    {
        return None;
    }
    // Rational roots of the eliminant give rational planes.
    let mut rational: Vec<Rational> = thetas
        .iter()
        .filter_map(|t| refine::recognize(p, t))
        .filter(|q| m.eval(q).is_zero())
        .collect();
    rational.sort();
    rational.dedup();
    let mut rest = m.clone();
    for q in &rational {
        rest = rest.checked_div(&UniPoly::new(vec![-q.clone(), Rational::one()]))?;
    }
    let mut out = Vec::with_capacity(sols.len());
    for (s, th) in sols.iter().zip(thetas) {
        let th = th.to_c64();
        let near = rational.iter().find(|q| {
            (Complex64::new(rational_to_f64(q), 0.0) - th).norm() < 1e-6 * th.norm().max(1.0)
        });
        let exact = if let Some(q) = near {
            let v0 = UniPoly::new(base.w0.iter().map(|p| p.eval(q)).collect());
            let v1 = UniPoly::new(base.w1.iter().map(|p| p.eval(q)).collect());
            let v = LinearSystemP1::new(sh.d, vec![v0, v1]).ok()?;
            let w = wronskian_of_system(&v).ok()?;
            if w.monic() != sh.target {
                return None;
            }
            ExactPlane::Rational(v)
        } else {
            ExactPlane::Algebraic(AlgebraicPlane {
                d: sh.d,
                eliminant: rest.clone(),
                theta: th,
                w0: reduce_all(&base.w0, &rest),
                w1: reduce_all(&base.w1, &rest),
            })
        };
        out.push(FoundPlane {
            exact,
            approx_w0: s.w0.clone(),
            approx_w1: s.w1.clone(),
        });
    }
    Some(out)
}

/// Places the lifted coordinates back into `w_0` and `w_1` coefficient lists.
fn assemble(sh: &Shape, lifted: &[UniPoly]) -> (Vec<UniPoly>, Vec<UniPoly>) {
    let mut w0: Vec<UniPoly> = lifted[..sh.n].to_vec();
    w0.push(UniPoly::one());
    let mut w1 = vec![UniPoly::zero(); sh.d + 1];
    w1[sh.d] = UniPoly::one();
    for (slot, p) in w1_slots(sh).into_iter().zip(&lifted[sh.n..]) {
        w1[slot] = p.clone();
    }
    (w0, w1)
}

/// Sort key: rational planes first by their canonical coefficients, then
/// algebraic ones by the approximate θ.
fn sort_key(p: &FoundPlane) -> (u8, Vec<Rational>, (i64, i64)) {
    let q = |x: f64| (x * 1e9).round() as i64;
    match &p.exact {
        ExactPlane::Rational(v) => (
            0,
            v.basis().iter().flat_map(|b| b.coeffs().to_vec()).collect(),
            (0, 0),
        ),
        ExactPlane::Algebraic(a) => (1, vec![], (q(a.theta.re), q(a.theta.im))),
    }
}

/// All planes `V` in `G(2, Poly_d)` whose Wronskian is proportional to
/// `Π (x - root)`; roots missing from `2(d-1)` are placed at infinity.
pub fn find_planes_r1(
    target_roots: &[Rational],
    d: usize,
    opts: &SolverOptions,
) -> Result<SolveReport> {
    let (sh, config) = shape(target_roots, d)?;
    let expected = expected_count(target_roots, d)?;
    let exp = expected.to_usize().unwrap_or(usize::MAX);
    if sh.n == 0 {
        let w1 = complete_w1_exact(&sh, &UniPoly::one())
            .ok_or_else(|| Error::Solver("no plane completes w_0 = 1".into()))?;
        let approx_w1 = w1
            .coeffs()
            .iter()
            .map(|q| Complex64::new(rational_to_f64(q), 0.0))
            .collect();
        let v = LinearSystemP1::new(d, vec![UniPoly::one(), w1])?;
        return Ok(SolveReport {
            planes: vec![FoundPlane {
                exact: ExactPlane::Rational(v),
                approx_w0: vec![Complex64::one()],
                approx_w1,
            }],
            config,
            stats: SolveStats {
                starts: 0,
                converged: 0,
                failed: 0,
                loops: 0,
                expected: expected.to_string(),
                complete: exp == 1,
            },
        });
    }
    let (sols, stats) = search(&sh, exp, opts);
    if sols.is_empty() {
        return Err(Error::Solver(format!(
            "no start converged in {} attempts",
            stats.starts
        )));
    }
    let mut planes = reconstruct(&sh, &sols)?;
    planes.sort_by_cached_key(sort_key);
    Ok(SolveReport {
        planes,
        config,
        stats,
    })
}

/// Non-degeneracy of a found plane: exact for rational planes, and in every
/// component of `Q[θ]/(m)` for algebraic ones.
pub fn nondegenerate_found(
    plane: &FoundPlane,
    config: &RamificationConfig,
) -> Result<NondegeneracyReport> {
    match &plane.exact {
        ExactPlane::Rational(v) => nondegenerate(v, config),
        ExactPlane::Algebraic(a) => {
            if modp::PRIMES
                .iter()
                .any(|&p| degeneracy_tests_mod(a, config, modp::Fp(p)) == Some(true))
            {
                return Ok(NondegeneracyReport {
                    nondegenerate: true,
                    violations: vec![],
                });
            }
            let m = &a.eliminant;
            let unit = |p: &UniPoly| !p.is_zero() && p.gcd(m).is_constant();
            let tests = degeneracy_tests(a, config);
            let mut violations = Vec::new();
            for (z, t) in config.points.iter().zip(&tests) {
                if !unit(t) {
                    violations.push(format!(
                        "(i) T_1({}) = 0",
                        crate::exactalg::ring::format_rational(z)
                    ));
                }
            }
            if !unit(tests.last().expect("discriminant test")) {
                violations.push("(ii) T_1 has a multiple root".into());
            }
            Ok(NondegeneracyReport {
                nondegenerate: violations.is_empty(),
                violations,
            })
        }
    }
}

/// Resultant of `w_0` and `w_0'` over `Q[θ]`, reduced modulo `m`. Up to a
/// sign and the unit leading coefficient this is the discriminant.
/// Ring operations of a quotient `R[θ]/(m)`.
struct Ops<E, A, N, M> {
    zero: E,
    one: E,
    add: A,
    neg: N,
    mul: M,
}

/// `Res(w_0, w_0')` for monic `w_0` over a commutative ring, as `det w_0'(C)`
/// with `C` the companion matrix. Only ring operations occur.
fn resultant_with_derivative<E, A, N, M>(w0: &[E], dw: &[E], ops: &Ops<E, A, N, M>) -> E
where
    E: Clone,
    A: Fn(&E, &E) -> E,
    N: Fn(&E) -> E,
    M: Fn(&E, &E) -> E,
{
    let n = w0.len() - 1;
    let mut g: Vec<Vec<E>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        dw[n - 1].clone()
                    } else {
                        ops.zero.clone()
                    }
                })
                .collect()
        })
        .collect();
    for k in (0..n - 1).rev() {
        // g <- g C + dw_k I, using the shape of the companion matrix.
        for (i, row) in g.iter_mut().enumerate() {
            let last = (ops.neg)(&row.iter().zip(w0).fold(ops.zero.clone(), |acc, (x, c)| {
                (ops.add)(&acc, &(ops.mul)(x, c))
            }));
            row.rotate_left(1);
            row[n - 1] = last;
            row[i] = (ops.add)(&row[i], &dw[k]);
        }
    }
    // Determinant by expansion over column subsets.
    let mut minors = vec![ops.zero.clone(); 1 << n];
    minors[0] = ops.one.clone();
    for set in 1usize..1 << n {
        let row = set.count_ones() as usize - 1;
        let mut acc = ops.zero.clone();
        for j in (0..n).filter(|j| set & (1 << j) != 0) {
            let term = (ops.mul)(&g[row][j], &minors[set & !(1 << j)]);
            let term = if (set >> (j + 1)).count_ones() % 2 == 0 {
                term
            } else {
                (ops.neg)(&term)
            };
            acc = (ops.add)(&acc, &term);
        }
        minors[set] = acc;
    }
    minors[(1 << n) - 1].clone()
}

fn derivative_coeffs(w0: &[UniPoly]) -> Vec<UniPoly> {
    (1..w0.len())
        .map(|i| w0[i].scale(&Rational::from_integer(BigInt::from(i))))
        .collect()
}

/// Values at the points of `config` and the discriminant of `w_0`, as
/// elements of `Q[θ]/(m)`; the plane is non-degenerate when all are units.
fn degeneracy_tests(a: &AlgebraicPlane, config: &RamificationConfig) -> Vec<UniPoly> {
    let m = &a.eliminant;
    let mut out: Vec<UniPoly> = config
        .points
        .iter()
        .map(|z| {
            a.w0.iter()
                .rev()
                .fold(UniPoly::zero(), |acc, c| &acc.scale(z) + c)
                .rem(m)
        })
        .collect();
    if a.w0.len() > 2 {
        let ops = Ops {
            zero: UniPoly::zero(),
            one: UniPoly::one(),
            add: |x: &UniPoly, y: &UniPoly| x + y,
            neg: |x: &UniPoly| -x,
            mul: |x: &UniPoly, y: &UniPoly| (x * y).rem(m),
        };
        out.push(resultant_with_derivative(
            &a.w0,
            &derivative_coeffs(&a.w0),
            &ops,
        ));
    } else {
        out.push(UniPoly::one());
    }
    out
}

/// The same tests modulo a prime: `Some(true)` certifies that every test is
/// a unit, `None` means the prime divides some denominator or the check fails.
fn degeneracy_tests_mod(
    a: &AlgebraicPlane,
    config: &RamificationConfig,
    f: modp::Fp,
) -> Option<bool> {
    let m = f.reduce_poly(&a.eliminant)?;
    if m.len() != a.eliminant.coeffs().len() {
        return None;
    }
    let w0: Vec<Vec<u64>> =
        a.w0.iter()
            .map(|c| f.reduce_poly(c).map(|v| f.rem(&v, &m)))
            .collect::<Option<_>>()?;
    for z in &config.points {
        let z = f.reduce(z)?;
        let v = w0
            .iter()
            .rev()
            .fold(vec![], |acc, c| f.add(&f.mul(&acc, &[z]), c));
        if !f.coprime(&v, &m) {
            return None;
        }
    }
    if w0.len() > 2 {
        let dw: Vec<Vec<u64>> = (1..w0.len())
            .map(|i| f.mul(&w0[i], &[i as u64 % f.0]))
            .collect();
        let ops = Ops {
            zero: vec![],
            one: vec![1],
            add: |x: &Vec<u64>, y: &Vec<u64>| f.add(x, y),
            neg: |x: &Vec<u64>| f.neg(x),
            mul: |x: &Vec<u64>, y: &Vec<u64>| f.rem(&f.mul(x, y), &m),
        };
        if !f.coprime(&resultant_with_derivative(&w0, &dw, &ops), &m) {
            return None;
        }
    }
    Some(true)
}

/// Largest residual norm of the critical-point equations at a plane's
/// additional roots.
pub fn plane_residual(plane: &FoundPlane, config: &RamificationConfig) -> Result<f64> {
    let g = critical_residual_complex(config, &plane.additional_roots())?;
    Ok(g.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ring::{rat, ratio};

    #[test]
    fn modular_and_exact_degeneracy_agree() {
        // θ^2 = 2 and w_0 = (x - θ)^2 = x^2 - 2θ x + 2: the discriminant vanishes.
        let th = UniPoly::from_ints(&[0, 1]);
        let plane = |w0: Vec<UniPoly>| FoundPlane {
            exact: ExactPlane::Algebraic(AlgebraicPlane {
                d: 3,
                eliminant: UniPoly::from_ints(&[-2, 0, 1]),
                theta: Complex64::new(2f64.sqrt(), 0.0),
                w0,
                w1: vec![],
            }),
            approx_w0: vec![],
            approx_w1: vec![],
        };
        let config = RamificationConfig::simple(vec![rat(1), rat(3)]).unwrap();
        let bad = plane(vec![
            UniPoly::from_ints(&[2]),
            th.scale(&rat(-2)),
            UniPoly::one(),
        ]);
        let ExactPlane::Algebraic(a) = &bad.exact else {
            unreachable!()
        };
        assert!(modp::PRIMES
            .iter()
            .all(|&p| degeneracy_tests_mod(a, &config, modp::Fp(p)).is_none()));
        let rep = nondegenerate_found(&bad, &config).unwrap();
        assert_eq!(
            rep.violations,
            vec!["(ii) T_1 has a multiple root".to_string()]
        );
        // x^2 - θ x - 1 has discriminant 6 and no root at 1 or 3.
        let good = plane(vec![UniPoly::from_ints(&[-1]), -&th, UniPoly::one()]);
        let ExactPlane::Algebraic(a) = &good.exact else {
            unreachable!()
        };
        assert_eq!(
            degeneracy_tests_mod(a, &config, modp::Fp(modp::PRIMES[0])),
            Some(true)
        );
        assert!(degeneracy_tests(a, &config)
            .iter()
            .all(|t| t.gcd(&a.eliminant).is_constant()));
        // A root at z = 1: x^2 - θ x + (θ - 1).
        let hit = plane(vec![&th - &UniPoly::one(), -&th, UniPoly::one()]);
        let rep = nondegenerate_found(&hit, &config).unwrap();
        assert_eq!(rep.violations, vec!["(i) T_1(1) = 0".to_string()]);
    }

    #[test]
    fn degree_two_single_plane() {
        let rep = find_planes_r1(&[rat(0)], 2, &SolverOptions::default()).unwrap();
        assert_eq!(rep.planes.len(), 1);
        let ExactPlane::Rational(v) = &rep.planes[0].exact else {
            panic!()
        };
        let want =
            LinearSystemP1::new(2, vec![UniPoly::one(), UniPoly::from_ints(&[0, 0, 1])]).unwrap();
        assert!(v.same_span(&want));
    }

    #[test]
    fn repeated_root_rejected() {
        assert!(find_planes_r1(
            &[rat(1), rat(1), rat(2), rat(3)],
            3,
            &SolverOptions::default()
        )
        .is_err());
    }

    #[test]
    fn degree_three_two_planes() {
        let roots = [rat(-2), rat(0), ratio(1, 2), rat(3)];
        let rep = find_planes_r1(&roots, 3, &SolverOptions::default()).unwrap();
        assert_eq!(rep.planes.len(), 2);
        assert!(rep.stats.complete);
        for p in &rep.planes {
            assert!(plane_residual(p, &rep.config).unwrap() < 1e-9);
            assert!(nondegenerate_found(p, &rep.config).unwrap().nondegenerate);
        }
    }

    #[test]
    fn roots_of_known_polynomial() {
        let r = polynomial_roots(&[
            Complex64::new(-2.0, 0.0),
            Complex64::zero(),
            Complex64::one(),
        ]);
        let mut re: Vec<f64> = r.iter().map(|c| c.re).collect();
        re.sort_by(f64::total_cmp);
        assert!((re[0] + 2f64.sqrt()).abs() < 1e-14 && (re[1] - 2f64.sqrt()).abs() < 1e-14);
    }
}
