mod common;

use common::*;
use proptest::prelude::*;
use wsk_core::exactalg::multipoly::{MultiPoly, Var};
use wsk_core::exactalg::ring::{ratio, Rational};
use wsk_core::exactalg::series::{Convention, Series};
use wsk_core::odeuniv::{
    apply_operator, fundamental_basis, solve_cauchy, CauchyData, MonicOperator,
};

fn instance() -> impl Strategy<Value = (Vec<Rational>, Vec<Rational>, Option<Vec<Rational>>)> {
    (1usize..=4).prop_flat_map(|k| {
        (
            prop::collection::vec(rational(), k),
            prop::collection::vec(rational(), k),
            prop::option::of(prop::collection::vec(rational(), 17)),
        )
    })
}

fn data(
    e: &[Rational],
    b: &[Rational],
    f: Option<&Vec<Rational>>,
    n: usize,
) -> CauchyData<Rational> {
    CauchyData {
        op: MonicOperator::new(e.to_vec()).unwrap(),
        init: b.to_vec(),
        forcing: f.map(|f| Series::new(f[..=n - e.len()].to_vec(), Convention::Exponential)),
        order: n,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn matches_recurrence((e, b, f) in instance()) {
        let y = solve_cauchy(&data(&e, &b, f.as_ref(), 16)).unwrap();
        prop_assert_eq!(y.coeffs().to_vec(), recurrence(&e, &b, f.as_deref(), 16));
        // And it solves the equation.
        let op = MonicOperator::new(e.clone()).unwrap();
        let lhs = apply_operator(&op, &y).unwrap();
        let rhs: Vec<Rational> = (0..=16 - e.len())
            .map(|m| f.as_ref().map_or_else(|| ratio(0, 1), |f| f[m].clone()))
            .collect();
        prop_assert_eq!(lhs.coeffs().to_vec(), rhs);
    }

    #[test]
    fn linear_in_data(
        (e, b1, f1) in instance(),
        b2 in prop::collection::vec(rational(), 4),
        f2 in prop::collection::vec(rational(), 17),
        s in rational(),
    ) {
        let k = e.len();
        let b2 = b2[..k].to_vec();
        let f1 = f1.unwrap_or_else(|| vec![ratio(0, 1); 17]);
        let y1 = solve_cauchy(&data(&e, &b1, Some(&f1), 12)).unwrap();
        let y2 = solve_cauchy(&data(&e, &b2, Some(&f2), 12)).unwrap();
        let b: Vec<Rational> = b1.iter().zip(&b2).map(|(x, y)| x + &s * y).collect();
        let f: Vec<Rational> = f1.iter().zip(&f2).map(|(x, y)| x + &s * y).collect();
        let y = solve_cauchy(&data(&e, &b, Some(&f), 12)).unwrap();
        prop_assert_eq!(y, y1.add(&y2.scale_rational(&s)));
    }
}

#[test]
fn specialization_commutes() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for r in 0..=3usize {
        let k = r + 1;
        let n = 12;
        let op = MonicOperator::universal(r);
        let init: Vec<MultiPoly> = (0..k)
            .map(|i| MultiPoly::var(Var::new('b', i as u32)))
            .collect();
        let forcing: Vec<MultiPoly> = (0..=n - k)
            .map(|i| MultiPoly::var(Var::new('f', i as u32)))
            .collect();
        let universal = solve_cauchy(&CauchyData {
            op,
            init,
            forcing: Some(Series::new(forcing, Convention::Exponential)),
            order: n,
        })
        .unwrap();
        for _ in 0..5 {
            let e: Vec<Rational> = (0..k).map(|_| rand_rational(&mut rng, 5, 3)).collect();
            let b: Vec<Rational> = (0..k).map(|_| rand_rational(&mut rng, 5, 3)).collect();
            let f: Vec<Rational> = (0..=n).map(|_| rand_rational(&mut rng, 5, 3)).collect();
            let value = |v: Var| -> Option<Rational> {
                let i = v.index as usize;
                match v.family {
                    'e' => e.get(i - 1).cloned(),
                    'b' => b.get(i).cloned(),
                    'f' => f.get(i).cloned(),
                    _ => None,
                }
            };
            let substituted: Vec<Rational> = universal
                .coeffs()
                .iter()
                .map(|c| c.eval(value).unwrap())
                .collect();
            let direct = solve_cauchy(&data(&e, &b, Some(&f), n)).unwrap();
            assert_eq!(substituted, direct.coeffs().to_vec(), "r = {r}");
        }
    }
}

#[test]
fn fundamental_basis_is_unit_triangular() {
    for r in 0..=3usize {
        let op = MonicOperator::universal(r);
        let u = fundamental_basis(&op, 8).unwrap();
        for (i, ui) in u.iter().enumerate() {
            for j in 0..=r {
                let c = ui.coeff(j);
                if j < i {
                    assert!(c.is_zero(), "u_{i} coefficient {j}");
                } else if j == i {
                    assert_eq!(*c, MultiPoly::one());
                }
            }
        }
    }
}

#[test]
fn closed_forms() {
    let q = |n: i64| ratio(n, 1);
    // y' = 2y, y(0) = 1.
    let y = solve_cauchy(&data(&[q(2)], &[q(1)], None, 10)).unwrap();
    assert_eq!(
        y.coeffs().to_vec(),
        (0..=10).map(|n| q(1 << n)).collect::<Vec<_>>()
    );
    // y'' = y, y(0) = 1, y'(0) = 0.
    let y = solve_cauchy(&data(&[q(0), q(-1)], &[q(1), q(0)], None, 10)).unwrap();
    assert_eq!(
        y.coeffs().to_vec(),
        (0..=10)
            .map(|n| q(i64::from(n % 2 == 0)))
            .collect::<Vec<_>>()
    );
    // y''' = 0 with y = 3 + 5t - t^2.
    let y = solve_cauchy(&data(&[q(0), q(0), q(0)], &[q(3), q(5), q(-2)], None, 8)).unwrap();
    let mut want = vec![q(3), q(5), q(-2)];
    want.resize(9, q(0));
    assert_eq!(y.coeffs().to_vec(), want);
}
