use std::fmt::Display;

use serde_json::{json, Value};
use wsk_core::exactalg::multipoly::{MultiPoly, Var};
use wsk_core::exactalg::ring::{Rational, Ring};
use wsk_core::exactalg::series::{Convention, Series};
use wsk_core::grasscalc::{class_of, intersection_number, multiply, plucker_degree, GrassClass};
use wsk_core::odeuniv::{fundamental_basis, solve_cauchy, CauchyData, MonicOperator};
use wsk_core::partitions::{hooks, pieri_strips, syt_count};
use wsk_core::schur::schur_in_e;
use wsk_core::wmap::bethe::{expected_count, nondegenerate_found};
use wsk_core::wmap::{
    config_of_system, find_planes_r1, intermediate_wronskians, master_function,
    master_function_complete, nondegenerate, ramification_profile, t_polys, wronskian_of_system,
    ExactPlane, SolverOptions,
};
use wsk_core::wronsk::{
    derivative_expansion_residual, derivative_expansion_terms, gen_wronskian, giambelli_residual,
    liouville_residual, pieri_residual, schur_of_operator,
};

use crate::args::*;
use crate::io::{self, Failure, Outcome};

enum Operator {
    Rational(MonicOperator<Rational>),
    Symbolic(MonicOperator<MultiPoly>),
}

fn operator(a: &OperatorArgs) -> Outcome<Operator> {
    match (&a.coeffs, a.r) {
        (Some(c), _) => Ok(Operator::Rational(MonicOperator::new(io::rationals(c)?)?)),
        (None, Some(r)) => Ok(Operator::Symbolic(MonicOperator::universal(r))),
        (None, None) => Err(Failure::Usage("give --coeffs or --r".into())),
    }
}

/// Runs `$body` with `$op` bound to the operator in either coefficient ring.
macro_rules! with_operator {
    ($a:expr, |$op:ident| $body:expr) => {
        match operator($a)? {
            Operator::Rational($op) => $body,
            Operator::Symbolic($op) => $body,
        }
    };
}

pub fn run(cmd: &Command, order: usize) -> Outcome<Value> {
    match cmd {
        Command::Schur(c) => schur(c),
        Command::Grass(c) => grass(c),
        Command::Ode(c) => ode(c, order),
        Command::Wronsk(c) => wronsk(c, order),
        Command::Wmap(c) => wmap(c),
        Command::Partition(c) => partition(c),
    }
}

fn schur(cmd: &SchurCmd) -> Outcome<Value> {
    match cmd {
        SchurCmd::Delta { lambda, op } => {
            let lambda = io::partition(lambda)?;
            match operator(op)? {
                Operator::Symbolic(u) => {
                    Ok(json!({ "value": schur_in_e(&lambda, u.r())?.to_string() }))
                }
                Operator::Rational(o) => {
                    Ok(json!({ "value": io::q(&schur_of_operator(&lambda, &o)?) }))
                }
            }
        }
        SchurCmd::H { n, op } => with_operator!(op, |o| {
            let h = o.h_sequence(*n);
            Ok(json!({ "h": io::strings(h.entries()) }))
        }),
    }
}

fn class_json(c: &GrassClass) -> Value {
    let terms: Vec<Value> = c
        .by_partition()
        .into_iter()
        .map(|(p, x)| json!({ "partition": p.to_string(), "coeff": io::q(&x) }))
        .collect();
    json!({ "terms": terms, "wedge": c.wedge_string() })
}

fn grass(cmd: &GrassCmd) -> Outcome<Value> {
    match cmd {
        GrassCmd::Degree { r, d } => Ok(json!({ "degree": io::integer(&plucker_degree(*r, *d)?) })),
        GrassCmd::Intersect { r, d, partitions } => {
            let n = intersection_number(&io::partitions(partitions)?, *r, *d)?;
            let mut out = json!({ "count": io::integer(&n.count) });
            if n.weight_mismatch {
                out["weight_mismatch"] = Value::Bool(true);
            }
            Ok(out)
        }
        GrassCmd::Class {
            r,
            d,
            lambda,
            times,
        } => {
            let mut c = class_of(&io::partition(lambda)?, *r, *d)?;
            if let Some(t) = times {
                c = multiply(&c, &class_of(&io::partition(t)?, *r, *d)?)?;
            }
            Ok(class_json(&c))
        }
    }
}

fn cauchy<R: Ring + Display>(
    op: MonicOperator<R>,
    init: Vec<R>,
    forcing: Option<Vec<R>>,
    order: usize,
) -> Outcome<Value> {
    let y = solve_cauchy(&CauchyData {
        op,
        init,
        forcing: forcing.map(|f| Series::new(f, Convention::Exponential)),
        order,
    })?;
    Ok(json!({ "convention": "exponential", "coefficients": io::strings(y.coeffs()) }))
}

fn ode(cmd: &OdeCmd, order: usize) -> Outcome<Value> {
    match cmd {
        OdeCmd::Solve { op, init, forcing } => match operator(op)? {
            Operator::Rational(o) => {
                let init = init
                    .as_deref()
                    .ok_or_else(|| Failure::Usage("--init is required with --coeffs".into()))?;
                let forcing = forcing.as_deref().map(io::rationals).transpose()?;
                cauchy(o, io::rationals(init)?, forcing, order)
            }
            Operator::Symbolic(o) => {
                let constants = |s: &str| -> Outcome<Vec<MultiPoly>> {
                    Ok(io::rationals(s)?
                        .into_iter()
                        .map(MultiPoly::constant)
                        .collect())
                };
                let init = match init {
                    Some(s) => constants(s)?,
                    None => (0..o.order())
                        .map(|i| MultiPoly::var(Var::new('b', i as u32)))
                        .collect(),
                };
                let forcing = forcing.as_deref().map(constants).transpose()?;
                cauchy(o, init, forcing, order)
            }
        },
        OdeCmd::Basis { op } => with_operator!(op, |o| {
            let u = fundamental_basis(&o, order)?;
            let rows: Vec<Value> = u.iter().map(|s| io::strings(s.coeffs())).collect();
            Ok(json!({ "convention": "exponential", "basis": rows }))
        }),
    }
}

fn wronsk(cmd: &WronskCmd, order: usize) -> Outcome<Value> {
    match cmd {
        WronskCmd::General {
            lambda,
            series,
            convention,
        } => {
            let conv = match convention {
                ConventionArg::Ordinary => Convention::Ordinary,
                ConventionArg::Exponential => Convention::Exponential,
            };
            let w = gen_wronskian(&io::partition(lambda)?, &io::series_list(series, conv)?)?;
            Ok(json!({ "wronskian": io::qs(w.coeffs()) }))
        }
        WronskCmd::Giambelli { lambda, op } => {
            let lambda = io::partition(lambda)?;
            with_operator!(op, |o| Ok(io::residual(&giambelli_residual(
                &lambda, &o, order
            )?)))
        }
        WronskCmd::Pieri { lambda, i, op } => {
            let lambda = io::partition(lambda)?;
            with_operator!(op, |o| Ok(io::residual(&pieri_residual(
                &lambda, *i, &o, order
            )?)))
        }
        WronskCmd::Liouville { k, op } => {
            with_operator!(op, |o| Ok(io::residual(&liouville_residual(
                &o, *k, order
            )?)))
        }
        WronskCmd::Expand { h, r, series } => match (r, series) {
            (Some(r), _) => {
                let terms: Vec<Value> = derivative_expansion_terms(*h, *r)
                    .into_iter()
                    .map(|(p, c)| json!({ "partition": p.to_string(), "coefficient": io::integer(&c) }))
                    .collect();
                Ok(json!({ "terms": terms }))
            }
            (None, Some(s)) => {
                let v = io::series_list(s, Convention::Ordinary)?;
                Ok(io::residual(&derivative_expansion_residual(
                    &v,
                    *h as usize,
                )?))
            }
            (None, None) => Err(Failure::Usage("give --r or --series".into())),
        },
    }
}

fn wmap(cmd: &WmapCmd) -> Outcome<Value> {
    match cmd {
        WmapCmd::Wronskian { sys } => {
            let w = wronskian_of_system(&io::system(&sys.file)?)?;
            Ok(json!({ "wronskian": io::poly(&w), "display": w.to_string() }))
        }
        WmapCmd::Profile { sys } => {
            let p = ramification_profile(&io::system(&sys.file)?)?;
            serde_json::to_value(p).map_err(|e| Failure::Domain(e.to_string()))
        }
        WmapCmd::Flag { sys } => {
            let f = intermediate_wronskians(&io::system(&sys.file)?);
            let polys = |ps: &[wsk_core::exactalg::unipoly::UniPoly]| -> Vec<Value> {
                ps.iter().map(io::poly).collect()
            };
            Ok(json!({
                "degrees": f.degrees,
                "flag_basis": polys(&f.flag_basis),
                "wronskians": polys(&f.wronskians),
            }))
        }
        WmapCmd::Phi { sys, config } => {
            let v = io::system(&sys.file)?;
            let c = match config {
                Some(path) => io::config(path)?,
                None => config_of_system(&v)?,
            };
            let t = t_polys(&v, &c)?;
            Ok(json!({
                "t": t.t.iter().map(io::poly).collect::<Vec<_>>(),
                "degrees": t.degrees,
                "formula_degrees": t.formula_degrees,
                "warnings": t.warnings,
                "master_function": io::q(&master_function(&c, &t.t)?),
                "master_function_complete": io::q(&master_function_complete(&c, &t.t)?),
            }))
        }
        WmapCmd::Nondeg { sys, config } => {
            let v = io::system(&sys.file)?;
            let c = match config {
                Some(path) => io::config(path)?,
                None => config_of_system(&v)?,
            };
            serde_json::to_value(nondegenerate(&v, &c)?).map_err(|e| Failure::Domain(e.to_string()))
        }
        WmapCmd::Solve { roots, d, seed } => solve(&io::rationals(roots)?, *d, *seed),
    }
}

/// `[re, im]` pairs.
macro_rules! complex {
    ($zs:expr) => {
        Value::Array($zs.iter().map(|z| json!([z.re, z.im])).collect())
    };
}

fn solve(roots: &[Rational], d: usize, seed: u64) -> Outcome<Value> {
    let opts = SolverOptions {
        seed,
        ..SolverOptions::default()
    };
    let report = find_planes_r1(roots, d, &opts)?;
    let mut planes = Vec::new();
    for p in &report.planes {
        let nd = nondegenerate_found(p, &report.config)?;
        let exact = match &p.exact {
            ExactPlane::Rational(v) => json!({
                "field": "rational",
                "basis": v.basis().iter().map(io::poly).collect::<Vec<_>>(),
            }),
            ExactPlane::Algebraic(a) => json!({
                "field": "algebraic",
                "eliminant": io::poly(&a.eliminant),
                "w0": a.w0.iter().map(io::poly).collect::<Vec<_>>(),
                "w1": a.w1.iter().map(io::poly).collect::<Vec<_>>(),
            }),
        };
        planes.push(json!({
            "exact": exact,
            "display": p.exact.to_string(),
            "nondegenerate": nd.nondegenerate,
            "violations": nd.violations,
            "approximate": { "w0": complex!(p.approx_w0), "w1": complex!(p.approx_w1) },
        }));
    }
    Ok(json!({
        "expected": io::integer(&expected_count(roots, d)?),
        "planes": planes,
        "stats": serde_json::to_value(&report.stats).map_err(|e| Failure::Domain(e.to_string()))?,
    }))
}

fn partition(cmd: &PartitionCmd) -> Outcome<Value> {
    match cmd {
        PartitionCmd::Syt { lambda } => {
            Ok(json!({ "count": io::integer(&syt_count(&io::partition(lambda)?)) }))
        }
        PartitionCmd::Hooks { lambda } => Ok(json!({ "hooks": hooks(&io::partition(lambda)?) })),
        PartitionCmd::Strips {
            lambda,
            i,
            rows,
            cols,
        } => {
            let rect = rows.zip(*cols);
            let s = pieri_strips(&io::partition(lambda)?, *i, rect);
            Ok(json!({ "strips": io::strings(&s) }))
        }
    }
}
