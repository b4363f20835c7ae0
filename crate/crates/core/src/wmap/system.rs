//! Linear systems of polynomials of degree at most d, their Wronskians and
//! ramification.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::det::{det, det_bareiss};
use crate::exactalg::linalg::{rank, rref};
use crate::exactalg::ring::{format_rational, Rational};
use crate::exactalg::roots::{rational_roots, rational_roots_with_multiplicity};
use crate::exactalg::series::{Convention, Series};
use crate::exactalg::unipoly::UniPoly;
use crate::partitions::Partition;

/// A point of the projective line: a rational value of `x` or the point at
/// infinity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Finite(Rational),
    Infinity,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(q) => f.write_str(&format_rational(q)),
            Point::Infinity => f.write_str("inf"),
        }
    }
}

/// An (r+1)-dimensional space of polynomials of degree at most d, given by
/// a basis.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearSystemP1 {
    d: usize,
    basis: Vec<UniPoly>,
}

impl LinearSystemP1 {
    pub fn new(d: usize, basis: Vec<UniPoly>) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::DegenerateSystem("empty basis".into()));
        }
        if basis.len() > d + 1 {
            return Err(Error::DegenerateSystem(format!(
                "{} polynomials cannot be independent in degree {d}",
                basis.len()
            )));
        }
        if let Some(p) = basis.iter().find(|p| p.degree().is_some_and(|k| k > d)) {
            return Err(Error::DegenerateSystem(format!("{p} has degree above {d}")));
        }
        let sys = LinearSystemP1 { d, basis };
        if rank(&sys.coefficient_rows()) < sys.basis.len() {
            return Err(Error::DegenerateSystem(
                "basis is linearly dependent".into(),
            ));
        }
        Ok(sys)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn basis(&self) -> &[UniPoly] {
        &self.basis
    }

    /// Coefficient vectors of length d+1, ascending powers.
    pub fn coefficient_rows(&self) -> Vec<Vec<Rational>> {
        self.basis
            .iter()
            .map(|p| (0..=self.d).map(|i| p.coeff(i)).collect())
            .collect()
    }

    /// Unique basis: reduced echelon form with pivots taken from the top
    /// degree down, each element monic in its own degree.
    pub fn canonical(&self) -> LinearSystemP1 {
        let flag = intermediate_wronskians(self);
        LinearSystemP1 {
            d: self.d,
            basis: flag.flag_basis,
        }
    }

    /// Same system in the chart `1/x`: each element reversed as a
    /// polynomial of degree d.
    pub fn at_infinity_chart(&self) -> LinearSystemP1 {
        LinearSystemP1 {
            d: self.d,
            basis: self.basis.iter().map(|p| p.reverse(self.d)).collect(),
        }
    }

    /// Contains `g` (a polynomial of degree at most d)?
    pub fn contains(&self, g: &UniPoly) -> bool {
        if g.degree().is_some_and(|k| k > self.d) {
            return false;
        }
        let mut rows = self.coefficient_rows();
        rows.push((0..=self.d).map(|i| g.coeff(i)).collect());
        rank(&rows) == self.basis.len()
    }

    /// Same span (both must share d)?
    pub fn same_span(&self, other: &LinearSystemP1) -> bool {
        self.d == other.d && self.canonical().basis == other.canonical().basis
    }
}

impl fmt::Display for LinearSystemP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.basis.iter().map(UniPoly::to_string).collect();
        write!(f, "span({}) in degree {}", b.join(", "), self.d)
    }
}

impl fmt::Debug for LinearSystemP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearSystemP1[{self}]")
    }
}

/// Wronskian `det(D^i p_j)` of a list of polynomials.
pub fn wronskian_of_polys(polys: &[UniPoly]) -> UniPoly {
    if polys.is_empty() {
        return UniPoly::one();
    }
    let n = polys.len();
    let mut rows = Vec::with_capacity(n);
    let mut cur: Vec<UniPoly> = polys.to_vec();
    for _ in 0..n {
        rows.push(cur.clone());
        cur = cur.iter().map(UniPoly::derivative).collect();
    }
    det_bareiss(&rows).expect("square by construction")
}

/// Wronskian of the system in the affine chart; never zero for an
/// independent basis.
pub fn wronskian_of_system(v: &LinearSystemP1) -> Result<UniPoly> {
    let w = wronskian_of_polys(v.basis());
    if w.is_zero() {
        return Err(Error::DegenerateSystem(
            "Wronskian vanishes identically".into(),
        ));
    }
    Ok(w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationDatum {
    #[serde(serialize_with = "ser_point", deserialize_with = "de_point")]
    pub point: Point,
    /// Vanishing orders `i_0 < ... < i_r` of the sections at the point.
    pub order_sequence: Vec<usize>,
    /// `(i_r - r, ..., i_1 - 1, i_0)`.
    pub partition: Partition,
    pub weight: usize,
}

fn ser_point<S: serde::Serializer>(p: &Point, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

fn de_point<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Point, D::Error> {
    let s = String::deserialize(d)?;
    if s == "inf" {
        return Ok(Point::Infinity);
    }
    crate::exactalg::ring::parse_rational(&s)
        .map(Point::Finite)
        .map_err(serde::de::Error::custom)
}

/// Vanishing orders of the space spanned by `rows` (Taylor coefficients at
/// the point): the pivot columns of the reduced echelon form.
fn vanishing_orders(rows: &[Vec<Rational>]) -> Vec<usize> {
    rref(rows).1
}

fn datum_from_orders(point: Point, orders: Vec<usize>) -> RamificationDatum {
    let r = orders.len() - 1;
    let partition = Partition::new((0..=r).map(|j| (orders[r - j] - (r - j)) as u32).collect())
        .expect("increasing orders give a partition");
    let weight = partition.weight() as usize;
    RamificationDatum {
        point,
        order_sequence: orders,
        partition,
        weight,
    }
}

/// Order sequence and order partition of `v` at `p`.
pub fn order_partition_at(v: &LinearSystemP1, p: &Point) -> RamificationDatum {
    let rows: Vec<Vec<Rational>> = match p {
        Point::Finite(a) => v
            .basis()
            .iter()
            .map(|f| {
                let s = f.shift(a);
                (0..=v.d()).map(|i| s.coeff(i)).collect()
            })
            .collect(),
        Point::Infinity => v.at_infinity_chart().coefficient_rows(),
    };
    let datum = datum_from_orders(p.clone(), vanishing_orders(&rows));
    if let Point::Finite(a) = p {
        debug_assert_eq!(
            datum.weight,
            wronskian_of_system(v).map_or(0, |w| w.root_multiplicity(a)),
            "weight must equal the vanishing order of the Wronskian"
        );
    }
    datum
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationProfile {
    /// Rational ramification points in increasing order, then infinity.
    pub points: Vec<RamificationDatum>,
    /// Degree of the part of the Wronskian without rational roots.
    pub irrational_degree: usize,
    /// Degree of the squarefree part of that factor.
    pub irrational_squarefree_degree: usize,
    /// Sum of all weights plus the irrational degree.
    pub total_weight: usize,
    /// `(r+1)(d-r)`.
    pub expected_weight: usize,
}

pub fn ramification_profile(v: &LinearSystemP1) -> Result<RamificationProfile> {
    let w = wronskian_of_system(v)?;
    let mut points = Vec::new();
    let mut rational_degree = 0;
    for (a, m) in rational_roots_with_multiplicity(&w) {
        let datum = order_partition_at(v, &Point::Finite(a));
        debug_assert_eq!(datum.weight, m);
        rational_degree += m;
        points.push(datum);
    }
    let inf = order_partition_at(v, &Point::Infinity);
    let deg = w.degree().unwrap_or(0);
    let (r, d) = (v.r(), v.d());
    let expected = (r + 1) * (d - r);
    if inf.weight > 0 {
        points.push(inf.clone());
    }
    let rest = crate::exactalg::roots::strip_rational_roots(&w);
    let irrational_degree = deg - rational_degree;
    let total = points.iter().map(|p| p.weight).sum::<usize>() + irrational_degree;
    debug_assert_eq!(
        deg + inf.weight,
        expected,
        "degree deficit must equal the weight at infinity"
    );
    Ok(RamificationProfile {
        points,
        irrational_degree,
        irrational_squarefree_degree: rest.squarefree_part().degree().unwrap_or(0),
        total_weight: total,
        expected_weight: expected,
    })
}

/// Common zeros of the system with multiplicities; infinity counts when every
/// element has degree below d.
pub fn base_locus(v: &LinearSystemP1) -> Vec<(Point, usize)> {
    let g = v.basis().iter().fold(UniPoly::zero(), |acc, p| acc.gcd(p));
    let mut out: Vec<(Point, usize)> = rational_roots(&g)
        .into_iter()
        .map(|a| {
            let m = g.root_multiplicity(&a);
            (Point::Finite(a), m)
        })
        .collect();
    let top = v
        .basis()
        .iter()
        .filter_map(UniPoly::degree)
        .max()
        .unwrap_or(0);
    if top < v.d() {
        out.push((Point::Infinity, v.d() - top));
    }
    out
}

/// The flag `V_0 ⊂ ... ⊂ V_r` cut out by degree, with its Wronskians.
#[derive(Clone, Debug, PartialEq)]
pub struct FlagData {
    /// `d_0 < d_1 < ... < d_r`.
    pub degrees: Vec<usize>,
    /// `w_j` monic of degree `d_j`, with zero coefficient at every other
    /// `d_i`.
    pub flag_basis: Vec<UniPoly>,
    /// `W_j = Wr(w_0, ..., w_j)`.
    pub wronskians: Vec<UniPoly>,
}

pub fn intermediate_wronskians(v: &LinearSystemP1) -> FlagData {
    let d = v.d();
    // Columns ordered from x^d down to x^0.
    let rows: Vec<Vec<Rational>> = v
        .coefficient_rows()
        .into_iter()
        .map(|mut r| {
            r.reverse();
            r
        })
        .collect();
    let (red, pivots) = rref(&rows);
    let mut pairs: Vec<(usize, UniPoly)> = red
        .into_iter()
        .zip(pivots)
        .map(|(mut row, p)| {
            row.reverse();
            (d - p, UniPoly::new(row))
        })
        .collect();
    pairs.sort_by_key(|(deg, _)| *deg);
    let degrees: Vec<usize> = pairs.iter().map(|(k, _)| *k).collect();
    let flag_basis: Vec<UniPoly> = pairs.into_iter().map(|(_, p)| p).collect();
    let wronskians = (0..flag_basis.len())
        .map(|j| wronskian_of_polys(&flag_basis[..=j]))
        .collect();
    FlagData {
        degrees,
        flag_basis,
        wronskians,
    }
}

/// `E_V(g)`: the bordered Wronskian with first column `(g, Dg, ...,
/// D^{r+1} g)`. Vanishes exactly when `g` lies in V.
pub fn annihilator_residual(v: &LinearSystemP1, g: &UniPoly) -> UniPoly {
    let mut cols = vec![g.clone()];
    cols.extend(v.basis().iter().cloned());
    wronskian_of_polys(&cols)
}

/// Taylor expansion of a polynomial at `a` as an ordinary series of order n.
pub fn taylor_series(p: &UniPoly, a: &Rational, n: usize) -> Series<Rational> {
    let s = p.shift(a);
    Series::new((0..=n).map(|i| s.coeff(i)).collect(), Convention::Ordinary)
}

/// `E_V(g)` for a series `g` centered at `a`; the order drops by r+1.
pub fn annihilator_residual_series(
    v: &LinearSystemP1,
    a: &Rational,
    g: &Series<Rational>,
) -> Result<Series<Rational>> {
    let n = g.order();
    let k = v.r() + 1;
    if n < k {
        return Err(Error::Truncation {
            needed: k,
            available: n,
        });
    }
    let mut cols = vec![g.to_convention(Convention::Ordinary)];
    cols.extend(v.basis().iter().map(|p| taylor_series(p, a, n)));
    let target = n - k;
    let mut rows = Vec::with_capacity(k + 1);
    let mut cur = cols;
    for _ in 0..=k {
        rows.push(cur.iter().map(|s| s.truncate(target)).collect::<Vec<_>>());
        cur = cur.iter().map(Series::derive).collect();
    }
    det(&rows)
}

/// Dimension count used by the tests: rank of `rows` over the rationals.
pub fn span_rank(rows: &[Vec<Rational>]) -> usize {
    rank(rows)
}
