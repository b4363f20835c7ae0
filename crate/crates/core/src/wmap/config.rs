//! Prescribed ramification, the Z/T splitting of intermediate Wronskians,
//! relative discriminants and resultants, the master function and
//! non-degeneracy.

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::resultant::{discriminant_or_one, resultant};
use crate::exactalg::ring::{format_rational, rational_to_f64, Rational};
use crate::exactalg::unipoly::UniPoly;
use crate::partitions::Partition;

use super::system::{intermediate_wronskians, ramification_profile, LinearSystemP1, Point};

/// Ramification prescribed at finite rational points and at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationConfig {
    #[serde(with = "crate::exactalg::ring::rational_strings")]
    pub points: Vec<Rational>,
    pub partitions: Vec<Partition>,
    pub infinity: Partition,
}

impl RamificationConfig {
    pub fn new(
        points: Vec<Rational>,
        partitions: Vec<Partition>,
        infinity: Partition,
    ) -> Result<Self> {
        if points.len() != partitions.len() {
            return Err(Error::DegenerateConfig(format!(
                "{} points but {} partitions",
                points.len(),
                partitions.len()
            )));
        }
        let mut sorted = points.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DegenerateConfig("repeated point".into()));
        }
        Ok(RamificationConfig {
            points,
            partitions,
            infinity,
        })
    }

    /// Simple ramification at each point and nothing at infinity.
    pub fn simple(points: Vec<Rational>) -> Result<Self> {
        let n = points.len();
        RamificationConfig::new(points, vec![Partition::row(1); n], Partition::empty())
    }

    /// Checks that every partition fits the `(r+1) × (d-r)` box and that the
    /// weights add up to `(r+1)(d-r)`.
    pub fn validate(&self, r: usize, d: usize) -> Result<()> {
        if d < r {
            return Err(Error::DegenerateConfig(format!("d = {d} is below r = {r}")));
        }
        let cols = (d - r) as u32;
        for lam in self
            .partitions
            .iter()
            .chain(std::iter::once(&self.infinity))
        {
            if !lam.fits(r + 1, cols) {
                return Err(Error::DegenerateConfig(format!(
                    "{lam} does not fit a {} x {cols} box",
                    r + 1
                )));
            }
        }
        let total: u64 = self
            .partitions
            .iter()
            .map(|l| l.weight() as u64)
            .sum::<u64>()
            + self.infinity.weight() as u64;
        let want = ((r + 1) * (d - r)) as u64;
        if total != want {
            return Err(Error::DegenerateConfig(format!(
                "total weight {total}, expected {want}"
            )));
        }
        Ok(())
    }

    /// `m_j(i) = λ_{j,r} + ... + λ_{j,r-i}`.
    pub fn m(&self, j: usize, i: usize, r: usize) -> Result<u32> {
        let parts = self.partitions[j].padded(r + 1)?;
        Ok((0..=i).map(|l| parts[r - l]).sum())
    }
}

/// Configuration read off from a system whose ramification is all rational.
pub fn config_of_system(v: &LinearSystemP1) -> Result<RamificationConfig> {
    let prof = ramification_profile(v)?;
    if prof.irrational_degree > 0 {
        return Err(Error::ConfigMismatch(
            "the Wronskian has irrational roots".into(),
        ));
    }
    let mut points = Vec::new();
    let mut partitions = Vec::new();
    let mut infinity = Partition::empty();
    for datum in prof.points {
        match datum.point {
            Point::Finite(a) => {
                points.push(a);
                partitions.push(datum.partition);
            }
            Point::Infinity => infinity = datum.partition,
        }
    }
    RamificationConfig::new(points, partitions, infinity)
}

/// `Z_0..Z_r` with `Z_i = Π_j (x - z_j)^{m_j(i)}`.
pub fn z_polys(config: &RamificationConfig, r: usize) -> Result<Vec<UniPoly>> {
    (0..=r)
        .map(|i| {
            let mut z = UniPoly::one();
            for (j, a) in config.points.iter().enumerate() {
                let lin = UniPoly::new(vec![-a.clone(), Rational::one()]);
                for _ in 0..config.m(j, i, r)? {
                    z = &z * &lin;
                }
            }
            Ok(z)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct TPolys {
    /// `T_0..T_r`, with `T_{r-i} = W_i / Z_i` and `W_i` made monic.
    pub t: Vec<UniPoly>,
    /// Degree of `T_{r-i}` by division, indexed by i.
    pub degrees: Vec<usize>,
    /// `(i+1)(d-i) - Σ_{l<=i} λ_{∞,r-l} - Σ_j m_j(i)` for each i.
    pub formula_degrees: Vec<i64>,
    pub warnings: Vec<String>,
}

pub fn t_polys(v: &LinearSystemP1, config: &RamificationConfig) -> Result<TPolys> {
    let (r, d) = (v.r(), v.d());
    let flag = intermediate_wronskians(v);
    let z = z_polys(config, r)?;
    let inf = config.infinity.padded(r + 1)?;
    let mut t = vec![UniPoly::zero(); r + 1];
    let mut degrees = Vec::with_capacity(r + 1);
    let mut formula_degrees = Vec::with_capacity(r + 1);
    let mut warnings = Vec::new();
    for i in 0..=r {
        let w = flag.wronskians[i].monic();
        let q = w.checked_div(&z[i]).ok_or_else(|| {
            Error::ConfigMismatch(format!("W_{i} = {w} is not divisible by Z_{i} = {}", z[i]))
        })?;
        let deg = q.degree().unwrap_or(0);
        let mut f = ((i + 1) * (d - i)) as i64;
        for l in 0..=i {
            f -= inf[r - l] as i64;
        }
        for j in 0..config.points.len() {
            f -= config.m(j, i, r)? as i64;
        }
        if f != deg as i64 {
            warnings.push(format!(
                "deg T_{} = {deg} by division, degree formula gives {f}",
                r - i
            ));
        }
        degrees.push(deg);
        formula_degrees.push(f);
        t[r - i] = q;
    }
    Ok(TPolys {
        t,
        degrees,
        formula_degrees,
        warnings,
    })
}

/// `f = T Z` with `Z = Π (x - z_j)^{ord_{z_j} f}`; both returned monic.
pub fn split_tz(f: &UniPoly, z: &[Rational]) -> Result<(UniPoly, UniPoly)> {
    if f.is_zero() {
        return Err(Error::Domain("cannot split the zero polynomial".into()));
    }
    let mut t = f.monic();
    let mut zz = UniPoly::one();
    for a in z {
        let lin = UniPoly::new(vec![-a.clone(), Rational::one()]);
        while let Some(q) = t.checked_div(&lin) {
            t = q;
            zz = &zz * &lin;
        }
    }
    Ok((t, zz))
}

/// `Δ(T) Res(Z, T)^2` for the monic splitting of `f`.
pub fn relative_discriminant(f: &UniPoly, z: &[Rational]) -> Result<Rational> {
    let (t, zz) = split_tz(f, z)?;
    let res = resultant(&zz, &t)?;
    Ok(discriminant_or_one(&t)? * &res * &res)
}

/// `Res(T_1, T_2) Res(T_1, Z_2) Res(T_2, Z_1)` for the monic splittings.
pub fn relative_resultant(f1: &UniPoly, f2: &UniPoly, z: &[Rational]) -> Result<Rational> {
    let (t1, z1) = split_tz(f1, z)?;
    let (t2, z2) = split_tz(f2, z)?;
    Ok(resultant(&t1, &t2)? * resultant(&t1, &z2)? * resultant(&t2, &z1)?)
}

fn rebuild_wronskians(config: &RamificationConfig, t_list: &[UniPoly]) -> Result<Vec<UniPoly>> {
    if t_list.is_empty() {
        return Err(Error::Dimension("need T_0..T_r".into()));
    }
    let r = t_list.len() - 1;
    let z = z_polys(config, r)?;
    Ok((0..=r).map(|i| &t_list[r - i] * &z[i]).collect())
}

/// `Δ_z(W_0) ... Δ_z(W_{r-1}) / (Res_z(W_1, W_2) ... Res_z(W_{r-1}, W_r))`
/// with `W_i = T_{r-i} Z_i`, taking `t_list = [T_0, ..., T_r]`.
pub fn master_function(config: &RamificationConfig, t_list: &[UniPoly]) -> Result<Rational> {
    let w = rebuild_wronskians(config, t_list)?;
    master_value(config, &w, 1)
}

/// The same product with the denominator running over every consecutive
/// pair, `Res_z(W_0, W_1) ... Res_z(W_{r-1}, W_r)`.
pub fn master_function_complete(
    config: &RamificationConfig,
    t_list: &[UniPoly],
) -> Result<Rational> {
    let w = rebuild_wronskians(config, t_list)?;
    master_value(config, &w, 0)
}

fn master_value(config: &RamificationConfig, w: &[UniPoly], first_pair: usize) -> Result<Rational> {
    let r = w.len() - 1;
    let mut num = Rational::one();
    for wi in &w[..r] {
        num *= relative_discriminant(wi, &config.points)?;
    }
    let mut den = Rational::one();
    for i in first_pair..r {
        den *= relative_resultant(&w[i], &w[i + 1], &config.points)?;
    }
    if den.is_zero() {
        return Err(Error::DegenerateConfig(
            "a relative resultant vanishes".into(),
        ));
    }
    Ok(num / den)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NondegeneracyReport {
    pub nondegenerate: bool,
    /// Violated conditions, e.g. `"(i) T_1(1) = 0"`.
    pub violations: Vec<String>,
}

/// Evaluates the three conditions exactly on `T_0..T_r`.
pub fn nondegenerate_t(t: &[UniPoly], z: &[Rational]) -> Result<NondegeneracyReport> {
    let mut violations = Vec::new();
    for (i, ti) in t.iter().enumerate() {
        for a in z {
            if ti.eval(a).is_zero() {
                violations.push(format!("(i) T_{i}({}) = 0", format_rational(a)));
            }
        }
        if discriminant_or_one(ti)?.is_zero() {
            violations.push(format!("(ii) T_{i} has a multiple root"));
        }
        if i > 0 && resultant(ti, &t[i - 1])?.is_zero() {
            violations.push(format!("(iii) T_{i} and T_{} share a root", i - 1));
        }
    }
    Ok(NondegeneracyReport {
        nondegenerate: violations.is_empty(),
        violations,
    })
}

pub fn nondegenerate(
    v: &LinearSystemP1,
    config: &RamificationConfig,
) -> Result<NondegeneracyReport> {
    let t = t_polys(v, config)?;
    nondegenerate_t(&t.t, &config.points)
}

/// Exponent of `(t_a - z_j)` in the r = 1 master function, `λ_{j,1} - λ_{j,0}`.
fn r1_exponents(config: &RamificationConfig) -> Result<Vec<f64>> {
    config
        .partitions
        .iter()
        .map(|l| {
            let p = l.padded(2)?;
            Ok(p[1] as f64 - p[0] as f64)
        })
        .collect()
}

/// Distance below which two evaluation points count as colliding.
pub const COLLISION_TOL: f64 = 1e-12;

/// Gradient of `log Φ` for r = 1 with respect to the roots `t_a` of `T_1`:
/// `Σ_{b≠a} 2/(t_a - t_b) + Σ_j (λ_{j,1} - λ_{j,0})/(t_a - z_j)`. Here Φ
/// carries the `Res_z(W_0, W_1)` factor, so the exponents at `z_j` follow
/// [`master_function_complete`].
pub fn critical_residual_complex(
    config: &RamificationConfig,
    roots: &[Complex64],
) -> Result<Vec<Complex64>> {
    if config.points.is_empty() {
        return Err(Error::DegenerateConfig(
            "no finite ramification points".into(),
        ));
    }
    let ex = r1_exponents(config)?;
    let z: Vec<f64> = config.points.iter().map(rational_to_f64).collect();
    let mut out = Vec::with_capacity(roots.len());
    for (a, ta) in roots.iter().enumerate() {
        let mut g = Complex64::zero();
        for (b, tb) in roots.iter().enumerate() {
            if a != b {
                let diff = ta - tb;
                if diff.norm() < COLLISION_TOL {
                    return Err(Error::DegenerateConfig(format!(
                        "roots {a} and {b} collide"
                    )));
                }
                g += 2.0 / diff;
            }
        }
        for (zj, e) in z.iter().zip(&ex) {
            let diff = ta - zj;
            if diff.norm() < COLLISION_TOL {
                return Err(Error::DegenerateConfig(format!(
                    "root {a} meets the point {zj}"
                )));
            }
            g += e / diff;
        }
        out.push(g);
    }
    Ok(out)
}

/// [`critical_residual_complex`] at real roots.
pub fn critical_residual(config: &RamificationConfig, roots: &[f64]) -> Result<Vec<f64>> {
    let c: Vec<Complex64> = roots.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    Ok(critical_residual_complex(config, &c)?
        .into_iter()
        .map(|g| g.re)
        .collect())
}
