//! Acceptance run: one line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wsk_core::exactalg::ring::{factorial, format_rational, ratio, Rational};
use wsk_core::exactalg::series::{Convention, Series};
use wsk_core::exactalg::unipoly::UniPoly;
use wsk_core::grasscalc::{intersection_number, plucker_degree};
use wsk_core::odeuniv::{fundamental_basis, solve_cauchy, CauchyData, MonicOperator};
use wsk_core::partitions::{complement, partitions_of, rect_enumerate, syt_count, Partition};
use wsk_core::wmap::bethe::{nondegenerate_found, plane_residual};
use wsk_core::wmap::{
    annihilator_residual_series, find_planes_r1, intermediate_wronskians, order_partition_at,
    ramification_profile, reconstruct_basis_series, series_rank, span_rank, taylor_series,
    wronskian_of_system, ExactPlane, LinearSystemP1, Point, SolverOptions,
};
use wsk_core::wronsk::{
    derivative_expansion_residual, exponential_coefficient, gen_wronskian, giambelli_residual,
    liouville_residual, pieri_residual,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn FnOnce(&mut Vec<Fibre>) -> Outcome>);

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: f64) -> Result<(), String> {
    check(elapsed.as_secs_f64() < limit, || {
        format!("took {:.2} s, limit {limit} s", elapsed.as_secs_f64())
    })
}

fn c1_plucker() -> Outcome {
    let t = Instant::now();
    let mut cases = 0;
    for r in 0..=3usize {
        for d in r..=9usize {
            let ones = vec![Partition::row(1); (r + 1) * (d - r)];
            let n = intersection_number(&ones, r, d)
                .map_err(|e| e.to_string())?
                .count;
            let p = plucker_degree(r, d).map_err(|e| e.to_string())?;
            check(n == p, || format!("r={r} d={d}: {n} vs {p}"))?;
            cases += 1;
        }
    }
    check(plucker_degree(1, 3).unwrap() == BigInt::from(2), || {
        "G(2,4) != 2".into()
    })?;
    check(plucker_degree(2, 4).unwrap() == BigInt::from(5), || {
        "G(3,5) != 5".into()
    })?;
    within(t.elapsed(), 10.0)?;
    Ok(format!("{cases} (r, d) pairs"))
}

fn c2_giambelli() -> Outcome {
    let t = Instant::now();
    let op = MonicOperator::universal(2);
    let rect = rect_enumerate(3, 3);
    for lam in &rect {
        let res = giambelli_residual(lam, &op, 12).map_err(|e| e.to_string())?;
        check(res.is_zero(), || format!("nonzero residual for {lam}"))?;
    }
    within(t.elapsed(), 30.0)?;
    Ok(format!("{} partitions, N = 12", rect.len()))
}

fn c3_pieri() -> Outcome {
    let op = MonicOperator::universal(2);
    let rect = rect_enumerate(3, 3);
    for lam in &rect {
        for i in 1..=3 {
            let res = pieri_residual(lam, i, &op, 8).map_err(|e| e.to_string())?;
            check(res.is_zero(), || {
                format!("nonzero residual for {lam}, i = {i}")
            })?;
        }
    }
    Ok(format!("{} partitions, i = 1..3", rect.len()))
}

fn c4_derivative_expansion() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for t in 0..50 {
        let r = t % 4;
        let conv = if t % 2 == 0 {
            Convention::Ordinary
        } else {
            Convention::Exponential
        };
        let v: Vec<Series<Rational>> = (0..=r)
            .map(|_| {
                Series::new(
                    (0..=12)
                        .map(|_| common::rand_rational(&mut rng, 9, 5))
                        .collect(),
                    conv,
                )
            })
            .collect();
        for h in 0..=5 {
            let res = derivative_expansion_residual(&v, h).map_err(|e| e.to_string())?;
            check(res.is_zero(), || {
                format!("tuple {t}: nonzero residual at h = {h}")
            })?;
        }
    }
    for h in 0..=6u32 {
        let sum: BigInt = partitions_of(h, None)
            .iter()
            .map(|l| syt_count(l).pow(2))
            .sum();
        check(sum == factorial(h as u64), || {
            format!("sum of squares at h = {h} is {sum}")
        })?;
    }
    Ok("50 tuples, h <= 5; hook counts for h <= 6".into())
}

fn c5_liouville() -> Outcome {
    let mut n = 0;
    for r in 0..=3usize {
        let op = MonicOperator::universal(r);
        for k in 1..=r + 1 {
            let res = liouville_residual(&op, k, 6).map_err(|e| e.to_string())?;
            check(res.is_zero(), || format!("r = {r}, k = {k}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} (r, k) pairs"))
}

fn c6_exponential_coefficient() -> Outcome {
    let mut n_checked = 0;
    for r in 1..=2usize {
        let op = MonicOperator::universal(r);
        let u = fundamental_basis(&op, 8 + r + 2).map_err(|e| e.to_string())?;
        for lam in rect_enumerate(2, 2) {
            if lam.len() > r + 1 {
                continue;
            }
            let w = gen_wronskian(&lam, &u).map_err(|e| e.to_string())?;
            let w = w.to_convention(Convention::Exponential);
            for n in 0..=8 {
                let c = exponential_coefficient(&lam, n, r).map_err(|e| e.to_string())?;
                check(&c == w.coeff(n), || format!("r = {r}, {lam}, n = {n}"))?;
                n_checked += 1;
            }
        }
    }
    Ok(format!("{n_checked} coefficients"))
}

fn c7_cauchy() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 16;
    for t in 0..100 {
        let k = rng.gen_range(1..=4);
        let e: Vec<Rational> = (0..k)
            .map(|_| common::rand_rational(&mut rng, 6, 4))
            .collect();
        let b: Vec<Rational> = (0..k)
            .map(|_| common::rand_rational(&mut rng, 6, 4))
            .collect();
        let f: Option<Vec<Rational>> = (t % 2 == 1).then(|| {
            (0..=n - k)
                .map(|_| common::rand_rational(&mut rng, 6, 4))
                .collect()
        });
        let y = solve_cauchy(&CauchyData {
            op: MonicOperator::new(e.clone()).map_err(|e| e.to_string())?,
            init: b.clone(),
            forcing: f.clone().map(|c| Series::new(c, Convention::Exponential)),
            order: n,
        })
        .map_err(|e| e.to_string())?;
        let want = common::recurrence(&e, &b, f.as_deref(), n);
        check(y.coeffs() == want.as_slice(), || {
            format!("instance {t} differs")
        })?;
    }
    let q = |n: i64| ratio(n, 1);
    let solve = |e: Vec<Rational>, b: Vec<Rational>| {
        solve_cauchy(&CauchyData {
            op: MonicOperator::new(e).unwrap(),
            init: b,
            forcing: None,
            order: 12,
        })
        .unwrap()
        .coeffs()
        .to_vec()
    };
    let exp2: Vec<Rational> = (0..=12).map(|n| q(1 << n)).collect();
    check(solve(vec![q(2)], vec![q(1)]) == exp2, || "e^{2t}".into())?;
    let cosh: Vec<Rational> = (0..=12).map(|n| q(i64::from(n % 2 == 0))).collect();
    check(solve(vec![q(0), q(-1)], vec![q(1), q(0)]) == cosh, || {
        "cosh t".into()
    })?;
    let mut poly = vec![q(-1), q(4), q(6)];
    poly.resize(13, q(0));
    check(
        solve(vec![q(0); 3], vec![q(-1), q(4), q(6)]) == poly,
        || "polynomial".into(),
    )?;
    Ok("100 instances to order 16; three closed forms".into())
}

fn systems() -> Vec<LinearSystemP1> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut out: Vec<LinearSystemP1> = (0..100)
        .map(|_| common::random_system(&mut rng, 1, 4))
        .collect();
    out.extend((0..100).map(|_| common::random_system(&mut rng, 2, 5)));
    out
}

fn c8_brill_segre() -> Outcome {
    for (i, v) in systems().iter().enumerate() {
        let p = ramification_profile(v).map_err(|e| e.to_string())?;
        let want = (v.r() + 1) * (v.d() - v.r());
        check(p.total_weight == want && p.expected_weight == want, || {
            format!("system {i}: total weight {} vs {want}", p.total_weight)
        })?;
    }
    Ok("200 systems".into())
}

fn c9_orders() -> Outcome {
    let mut points = 0;
    for (i, v) in systems().iter().enumerate() {
        let w = wronskian_of_system(v).map_err(|e| e.to_string())?;
        for datum in ramification_profile(v).map_err(|e| e.to_string())?.points {
            let Point::Finite(a) = &datum.point else {
                continue;
            };
            let again = order_partition_at(v, &datum.point);
            check(
                w.root_multiplicity(a) == again.partition.weight() as usize,
                || format!("system {i} at {}", datum.point),
            )?;
            points += 1;
        }
    }
    Ok(format!("{points} rational ramification points"))
}

fn distinct_roots(rng: &mut ChaCha8Rng, k: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    while out.len() < k {
        let q = ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4));
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

/// For monic `x^4 + s1 x^3 + s2 x^2 + s3 x + s4`, a plane
/// `span(x^2 + a x + b, x^3 + α x + β)` with that Wronskian has `a = s1/2`,
/// `α = 3b - s2`, `β = -s3/2` and `3b^2 - s2 b + s1 s3/4 - s4 = 0`.
fn elimination(target: &UniPoly) -> (Rational, Rational, UniPoly) {
    let s = |i: usize| target.coeff(4 - i);
    let quad = UniPoly::new(vec![&s(1) * &s(3) / ratio(4, 1) - s(4), -s(2), ratio(3, 1)]);
    (s(1) / ratio(2, 1), -s(3) / ratio(2, 1), quad)
}

fn compose(p: &UniPoly, x: &UniPoly) -> UniPoly {
    p.coeffs().iter().rev().fold(UniPoly::zero(), |acc, c| {
        &(&acc * x) + &UniPoly::constant(c.clone())
    })
}

struct Fibre {
    roots: Vec<Rational>,
    report: wsk_core::wmap::SolveReport,
}

fn c10_preimages(fibres: &mut Vec<Fibre>) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut slowest = 0.0f64;
    let (mut rational, mut algebraic) = (0, 0);
    for t in 0..20 {
        let roots = distinct_roots(&mut rng, 4);
        let start = Instant::now();
        let report =
            find_planes_r1(&roots, 3, &SolverOptions::default()).map_err(|e| e.to_string())?;
        let secs = start.elapsed().as_secs_f64();
        slowest = slowest.max(secs);
        check(secs < 1.0, || format!("target {t} took {secs:.2} s"))?;
        check(report.planes.len() == 2, || {
            format!("target {t}: {} planes", report.planes.len())
        })?;
        let target = UniPoly::from_roots(&roots);
        let (a, beta, quad) = elimination(&target);
        let mut bs: Vec<num_complex::Complex64> = Vec::new();
        for p in &report.planes {
            match &p.exact {
                ExactPlane::Rational(v) => {
                    let flag = intermediate_wronskians(v);
                    let (w0, w1) = (&flag.flag_basis[0], &flag.flag_basis[1]);
                    let b = w0.coeff(0);
                    check(
                        w0.coeff(1) == a
                            && quad.eval(&b).is_zero()
                            && w1.coeff(1) == &b * &ratio(3, 1) - target.coeff(2)
                            && w1.coeff(0) == beta,
                        || format!("target {t}: rational plane off the oracle"),
                    )?;
                    let w = wronskian_of_system(v).map_err(|e| e.to_string())?;
                    check(w.monic() == target, || {
                        format!("target {t}: Wronskian mismatch")
                    })?;
                    rational += 1;
                }
                ExactPlane::Algebraic(alg) => {
                    check(
                        alg.wronskian_defect(&target).iter().all(UniPoly::is_zero),
                        || format!("target {t}: Wronskian defect"),
                    )?;
                    check(
                        compose(&quad, &alg.w0[0]).rem(&alg.eliminant).is_zero(),
                        || format!("target {t}: b is not a root of the oracle quadratic"),
                    )?;
                    check(
                        (&alg.w0[1] - &UniPoly::constant(a.clone()))
                            .rem(&alg.eliminant)
                            .is_zero(),
                        || format!("target {t}: a differs from the oracle"),
                    )?;
                    algebraic += 1;
                }
            }
            bs.push(p.approx_w0[0]);
        }
        check((bs[0] - bs[1]).norm() > 1e-8, || {
            format!("target {t}: repeated plane")
        })?;
        fibres.push(Fibre { roots, report });
    }
    Ok(format!(
        "20 targets, {rational} rational and {algebraic} algebraic planes, slowest {slowest:.2} s"
    ))
}

fn c11_duality() -> Outcome {
    let mut n = 0;
    for rows in 1..=3usize {
        for cols in 1..=4u32 {
            let (r, d) = (rows - 1, rows - 1 + cols as usize);
            for lam in rect_enumerate(rows, cols) {
                let dual = complement(&lam, rows, cols).map_err(|e| e.to_string())?;
                let c = intersection_number(&[lam.clone(), dual], r, d)
                    .map_err(|e| e.to_string())?
                    .count;
                check(c == BigInt::from(1), || {
                    format!("{lam} in {rows}x{cols}: {c}")
                })?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} partitions"))
}

fn c12_reconstruction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let n = 14;
    for t in 0..50 {
        let r = t % 3;
        let d = r + rng.gen_range(1..=3);
        let v = common::random_system(&mut rng, r, d);
        let flag = intermediate_wronskians(&v);
        let a = loop {
            let a = common::rand_rational(&mut rng, 5, 3);
            if flag.wronskians.iter().all(|w| !w.eval(&a).is_zero()) {
                break a;
            }
        };
        let g = reconstruct_basis_series(&flag, &a, n).map_err(|e| e.to_string())?;
        for gk in &g {
            let e = annihilator_residual_series(&v, &a, gk).map_err(|e| e.to_string())?;
            check(e.order() == n - (r + 1) && e.is_zero(), || {
                format!("system {t}: not annihilated")
            })?;
        }
        let mut rows: Vec<Vec<Rational>> = g.iter().map(|s| s.coeffs().to_vec()).collect();
        rows.extend(
            v.basis()
                .iter()
                .map(|f| taylor_series(f, &a, n).coeffs().to_vec()),
        );
        check(
            series_rank(&g) == r + 1 && span_rank(&rows) == r + 1,
            || format!("system {t}: span differs"),
        )?;
    }
    Ok("50 systems, N = 14".into())
}

fn c13_nondegenerate(fibres: &[Fibre]) -> Outcome {
    check(fibres.len() == 20, || {
        "criterion 10 did not produce its fibres".into()
    })?;
    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for (t, f) in fibres.iter().enumerate() {
        for p in &f.report.planes {
            let nd = nondegenerate_found(p, &f.report.config).map_err(|e| e.to_string())?;
            if !nd.nondegenerate {
                let roots: Vec<String> = f.roots.iter().map(format_rational).collect();
                failures.push(format!(
                    "target {t} ({}): degenerate plane {}",
                    roots.join(", "),
                    p.exact
                ));
                continue;
            }
            match plane_residual(p, &f.report.config) {
                Ok(res) if res < 1e-9 => worst = worst.max(res),
                Ok(res) => failures.push(format!("target {t}: residual {res:.2e}")),
                Err(e) => failures.push(format!("target {t}: {e}")),
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("40 planes, worst residual {worst:.1e}"))
    } else {
        Err(failures.join("; "))
    }
}

fn main() -> ExitCode {
    let mut fibres = Vec::new();
    let criteria: Vec<Criterion> = vec![
        ("Plücker degree vs σ_1 powers", Box::new(|_| c1_plucker())),
        ("Giambelli residual", Box::new(|_| c2_giambelli())),
        ("Pieri residual", Box::new(|_| c3_pieri())),
        (
            "tableau derivative expansion",
            Box::new(|_| c4_derivative_expansion()),
        ),
        ("generalized Liouville", Box::new(|_| c5_liouville())),
        (
            "exponential coefficient formula",
            Box::new(|_| c6_exponential_coefficient()),
        ),
        ("universal Cauchy solver", Box::new(|_| c7_cauchy())),
        ("Brill–Segre at genus 0", Box::new(|_| c8_brill_segre())),
        ("order partitions vs Wronskian", Box::new(|_| c9_orders())),
        ("preimage enumeration", Box::new(c10_preimages)),
        ("duality", Box::new(|_| c11_duality())),
        ("basis reconstruction", Box::new(|_| c12_reconstruction())),
        (
            "non-degeneracy and critical points",
            Box::new(|f| c13_nondegenerate(f)),
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let out = run(&mut fibres);
        let secs = t.elapsed().as_secs_f64();
        match out {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2} s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2} s): {why}", i + 1);
            }
        }
    }
    println!("{} of 13 criteria passed", 13 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
