use std::fmt::Display;

use serde::Deserialize;
use serde_json::{json, Value};
use wsk_core::error::Error;
use wsk_core::exactalg::ring::{format_rational, parse_rational, Rational};
use wsk_core::exactalg::series::{Convention, Series};
use wsk_core::exactalg::unipoly::UniPoly;
use wsk_core::partitions::{parse_partition_list, Partition};
use wsk_core::wmap::{LinearSystemP1, RamificationConfig};

/// Usage errors exit with 2, domain errors with 1.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

pub type Outcome<T> = Result<T, Failure>;

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

pub fn partition(s: &str) -> Outcome<Partition> {
    s.parse().map_err(usage)
}

pub fn partitions(s: &str) -> Outcome<Vec<Partition>> {
    parse_partition_list(s).map_err(usage)
}

pub fn rationals(s: &str) -> Outcome<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| parse_rational(t).map_err(usage))
        .collect()
}

pub fn series_list(s: &str, convention: Convention) -> Outcome<Vec<Series<Rational>>> {
    s.split(';')
        .map(|row| rationals(row).map(|c| Series::new(c, convention)))
        .collect()
}

pub fn q(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn qs(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(q).collect())
}

pub fn poly(p: &UniPoly) -> Value {
    qs(p.coeffs())
}

pub fn strings<T: Display>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
pub fn integer<T: Display>(n: &T) -> Value {
    let s = n.to_string();
    s.parse::<i64>().map_or(Value::String(s), Value::from)
}

/// `"0"` for a vanishing series, otherwise its coefficients.
pub fn residual<R: wsk_core::exactalg::ring::Ring + Display>(s: &Series<R>) -> Value {
    if s.is_zero() {
        json!({ "residual": "0" })
    } else {
        json!({ "residual": strings(s.coeffs()), "first_nonzero": s.first_nonzero() })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemFile {
    d: usize,
    basis: Vec<Vec<String>>,
}

fn read(path: &str) -> Outcome<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
}

pub fn system(path: &str) -> Outcome<LinearSystemP1> {
    let file: SystemFile =
        serde_json::from_str(&read(path)?).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    let basis = file
        .basis
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| parse_rational(c).map_err(usage))
                .collect::<Outcome<Vec<_>>>()
                .map(UniPoly::new)
        })
        .collect::<Outcome<Vec<_>>>()?;
    Ok(LinearSystemP1::new(file.d, basis)?)
}

pub fn config(path: &str) -> Outcome<RamificationConfig> {
    let c: RamificationConfig =
        serde_json::from_str(&read(path)?).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    Ok(RamificationConfig::new(c.points, c.partitions, c.infinity)?)
}
