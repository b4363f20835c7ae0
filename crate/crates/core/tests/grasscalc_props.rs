mod common;

use common::p;
use num_bigint::BigInt;
use num_traits::Signed;
use wsk_core::exactalg::ring::ratio;
use wsk_core::grasscalc::{
    apply_h_polynomial, class_of, giambelli_h, intersection_number, multiply, plucker_degree,
    GrassClass,
};
use wsk_core::partitions::{complement, rect_enumerate, Partition};

#[test]
fn plucker_matches_sigma_one_powers() {
    for r in 0..=3 {
        for d in r..=9 {
            let area = (r + 1) * (d - r);
            let ones = vec![Partition::row(1); area];
            let n = intersection_number(&ones, r, d).unwrap();
            assert_eq!(n.count, plucker_degree(r, d).unwrap(), "r = {r}, d = {d}");
        }
    }
    assert_eq!(plucker_degree(1, 3).unwrap(), BigInt::from(2));
    assert_eq!(plucker_degree(2, 4).unwrap(), BigInt::from(5));
}

#[test]
fn duality() {
    for rows in 1..=3usize {
        for cols in 1..=4u32 {
            let (r, d) = (rows - 1, rows - 1 + cols as usize);
            let rect = rect_enumerate(rows, cols);
            for lam in &rect {
                let dual = complement(lam, rows, cols).unwrap();
                for mu in &rect {
                    if mu.weight() + lam.weight() != rows as u32 * cols {
                        continue;
                    }
                    let n = intersection_number(&[lam.clone(), mu.clone()], r, d).unwrap();
                    let want = BigInt::from(u8::from(*mu == dual));
                    assert_eq!(n.count, want, "{lam} · {mu} in {rows}x{cols}");
                }
            }
        }
    }
}

#[test]
fn products_agree_with_h_actions() {
    let (r, d) = (1, 3);
    let unit = GrassClass::unit(r, d).unwrap();
    for lam in rect_enumerate(2, 2) {
        for mu in rect_enumerate(2, 2) {
            let prod = multiply(
                &class_of(&lam, r, d).unwrap(),
                &class_of(&mu, r, d).unwrap(),
            )
            .unwrap();
            let g = &giambelli_h(&lam, r).unwrap() * &giambelli_h(&mu, r).unwrap();
            assert_eq!(prod, apply_h_polynomial(&g, &unit), "{lam} · {mu}");
        }
    }
}

#[test]
fn determinants_of_h_reproduce_classes() {
    let (r, d) = (2, 5);
    let unit = GrassClass::unit(r, d).unwrap();
    for lam in rect_enumerate(3, 3) {
        let g = giambelli_h(&lam, r).unwrap();
        assert_eq!(
            apply_h_polynomial(&g, &unit),
            class_of(&lam, r, d).unwrap(),
            "{lam}"
        );
    }
}

#[test]
fn structure_constants_are_nonnegative_integers() {
    let (r, d) = (2, 5);
    for lam in rect_enumerate(3, 3) {
        for mu in rect_enumerate(3, 3) {
            let prod = multiply(
                &class_of(&lam, r, d).unwrap(),
                &class_of(&mu, r, d).unwrap(),
            )
            .unwrap();
            for (nu, c) in prod.by_partition() {
                assert!(
                    c.is_integer() && !c.is_negative(),
                    "{lam} · {mu} has {c} at {nu}"
                );
            }
        }
    }
    // The first Littlewood-Richardson coefficient above one.
    let s21 = class_of(&p("2,1"), 2, 5).unwrap();
    assert_eq!(
        multiply(&s21, &s21).unwrap().coeff_of(&p("3,2,1")),
        ratio(2, 1)
    );
}

#[test]
fn product_is_commutative_and_associative() {
    let (r, d) = (1, 4);
    let rect = rect_enumerate(2, 3);
    let c = |l: &Partition| class_of(l, r, d).unwrap();
    for a in &rect {
        for b in &rect {
            assert_eq!(
                multiply(&c(a), &c(b)).unwrap(),
                multiply(&c(b), &c(a)).unwrap()
            );
            for e in rect.iter().take(4) {
                let left = multiply(&multiply(&c(a), &c(b)).unwrap(), &c(e)).unwrap();
                let right = multiply(&c(a), &multiply(&c(b), &c(e)).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }
}
