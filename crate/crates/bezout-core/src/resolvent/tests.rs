use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::poly::VarTable;
use crate::rational::{int, rat};

fn table(names: &[&str]) -> Arc<VarTable> {
    VarTable::new(names.to_vec()).unwrap()
}

#[test]
fn depressed_cubic_class() {
    // n=3, p=-3, q=2: e2 = 1, e1 = -2, equation x^3 - 3x + 2.
    let cls = solvable_class(3, int(-3), int(2)).unwrap();
    assert_eq!(cls.e2, int(1));
    assert_eq!(cls.e1, int(-2));
    assert_eq!(cls.coeffs_e, vec![int(1), int(0), int(-3), int(2)]);
}

#[test]
fn cubic_class_covers_every_depressed_cubic() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..200 {
        let p = rat(rng.gen_range(-9..=9), rng.gen_range(1..=4));
        if p.is_zero() {
            continue;
        }
        let q = rat(rng.gen_range(-9..=9), rng.gen_range(1..=4));
        let cls = solvable_class(3, p.clone(), q.clone()).unwrap();
        assert_eq!(cls.coeffs_e, vec![int(1), int(0), p, q]);
    }
}

#[test]
fn quartic_class_coefficients_match_direct_expansion() {
    // n=4: check the h-recurrence against an explicit expansion of the
    // displayed equation with a, b from X^2 - e1 X + e2.
    let cls = solvable_class(4, int(-6), int(-8)).unwrap();
    // e2 = -p/C(4,2) = 1; e1 = -q/(C(4,3) e2) = 8/4 = 2.
    assert_eq!(cls.e2, int(1));
    assert_eq!(cls.e1, int(2));
    // Coefficient of x^(4-k) is -C(4,k) e2 h_{k-2}:
    // h_0 = 1, h_1 = e1 = 2, h_2 = e1^2 - e2 = 3.
    // x^2: -6*1 = -6 = p; x^1: -4*2 = -8 = q; x^0: -1*3 = -3.
    assert_eq!(
        cls.coeffs_e,
        vec![int(1), int(0), int(-6), int(-8), int(-3)]
    );
}

#[test]
fn class_rejects_p_zero_and_low_degree() {
    assert!(matches!(
        solvable_class(3, int(0), int(1)),
        Err(ResolventError::DegenerateClass)
    ));
    assert!(matches!(
        solvable_class(2, int(1), int(1)),
        Err(ResolventError::UnsupportedDegree(2))
    ));
}

#[test]
fn symbolic_class_identity_in_elementary_values() {
    // Over Q[e1, e2]: coefficient of x equals p = -C(n,2) e2 and the
    // constant equals q = -C(n,3) e2 e1, as polynomial identities.
    let t = table(&["e1", "e2"]);
    let e1 = MultiPoly::var(&t, 0);
    let e2 = MultiPoly::var(&t, 1);
    for n in 3..=6u32 {
        let coeffs = class_coefficients_from_elementary(n, &e1, &e2);
        assert_eq!(coeffs.len(), n as usize + 1);
        let p = e2.scale(&-binomial_rat(n as u64, 2));
        let q = e2.try_mul(&e1).unwrap().scale(&-binomial_rat(n as u64, 3));
        assert_eq!(coeffs[2], p);
        assert_eq!(coeffs[3], q);
    }
}

#[test]
fn radical_root_of_worked_cubic() {
    // x^3 - 3x + 2 has a = b = -1 and the radical sum collapses to -2.
    let cls = solvable_class(3, int(-3), int(2)).unwrap();
    let root = radical_root(&cls, 12).unwrap();
    assert!((root.value.re - (-2.0)).abs() < 1e-10);
    assert!(root.value.im.abs() < 1e-10);
    assert!(root.residual < 1e-10);
}

#[test]
fn radical_root_random_cubics_meet_tolerance() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let mut accepted = 0;
    for _ in 0..60 {
        let p = rat(rng.gen_range(-8..=8), rng.gen_range(1..=3));
        if p.is_zero() {
            continue;
        }
        let q = rat(rng.gen_range(-8..=8), rng.gen_range(1..=3));
        let cls = solvable_class(3, p, q).unwrap();
        let root = radical_root(&cls, 10).unwrap();
        assert!(root.residual < 1e-8);
        accepted += 1;
    }
    assert!(accepted > 40);
}

#[test]
fn radical_root_complex_parameters() {
    // A class whose a, b are complex (e1^2 - 4 e2 < 0).
    // e2 = 5, e1 = 2 -> p = -C(3,2)*5 = -15, q = -C(3,3)*5*2 = -10.
    let cls = solvable_class(3, int(-15), int(-10)).unwrap();
    assert_eq!(cls.e2, int(5));
    assert_eq!(cls.e1, int(2));
    let root = radical_root(&cls, 10).unwrap();
    assert!(root.residual < 1e-8);
}

#[test]
fn two_radical_minpoly_cubic_symbolic() {
    // x^3 - 3abx - ab(a+b), i.e. x^3 = a^2 b + a b^2 + 3abx.
    let t = table(&["x", "a", "b"]);
    let a = MultiPoly::var(&t, 1);
    let b = MultiPoly::var(&t, 2);
    let out = two_radical_minpoly(3, &a, &b, 0).unwrap();
    let x = MultiPoly::var(&t, 0);
    let ab = a.try_mul(&b).unwrap();
    let expect = x
        .pow(3)
        .try_sub(&ab.try_mul(&x).unwrap().scale(&int(3)))
        .unwrap()
        .try_sub(&ab.try_mul(&a.try_add(&b).unwrap()).unwrap())
        .unwrap();
    assert_eq!(out.minpoly, expect);
    // The series route agrees at n = 3.
    let series = two_radical_series_polynomial(3, &a, &b, 0).unwrap();
    assert_eq!(out.minpoly, series);
    // Certified stripping: minpoly * cofactor = full elimination.
    assert_eq!(
        out.minpoly.try_mul(&out.stripped_cofactor).unwrap(),
        out.full_resultant
    );
    assert_eq!(out.full_resultant.degree_in(0), Some(9));
}

#[test]
fn two_radical_minpoly_quartic_matches_series() {
    // n=4 series: x^4 = a^3 b - a^2 b^2 + 4 a^2 b x + 2 a b x^2.
    let t = table(&["x", "a", "b"]);
    let a = MultiPoly::var(&t, 1);
    let b = MultiPoly::var(&t, 2);
    let out = two_radical_minpoly(4, &a, &b, 0).unwrap();
    let series = two_radical_series_polynomial(4, &a, &b, 0).unwrap();
    // The x^3, x^2, x^1 coefficients of the eliminated minimal polynomial
    // follow the series pattern exactly; so does the rest.
    assert_eq!(out.minpoly, series);
    assert_eq!(out.full_resultant.degree_in(0), Some(16));
    assert_eq!(
        out.minpoly.try_mul(&out.stripped_cofactor).unwrap(),
        out.full_resultant
    );
}

#[test]
fn two_radical_numeric_root() {
    // a=2, b=1, n=3. The identity (u+v)^3 = u^3 + v^3 + 3uv(u+v) with
    // u^3 = 4, v^3 = 2, uv = 2 gives x^3 - 6x - 6, and the numeric root
    // 4^(1/3) + 2^(1/3) confirms it.
    let t = table(&["x"]);
    let a = MultiPoly::constant(&t, int(2));
    let b = MultiPoly::constant(&t, int(1));
    let out = two_radical_minpoly(3, &a, &b, 0).unwrap();
    let x = MultiPoly::var(&t, 0);
    let expect = x
        .pow(3)
        .try_sub(&x.scale(&int(6)))
        .unwrap()
        .try_sub(&MultiPoly::constant(&t, int(6)))
        .unwrap();
    assert_eq!(out.minpoly, expect);
    let root = 4f64.powf(1.0 / 3.0) + 2f64.powf(1.0 / 3.0);
    let val = root.powi(3) - 6.0 * root - 6.0;
    assert!(val.abs() < 1e-9);
}

#[test]
fn two_radical_rejects_bad_degree_and_inputs() {
    let t = table(&["x", "a", "b"]);
    let a = MultiPoly::var(&t, 1);
    let b = MultiPoly::var(&t, 2);
    assert!(matches!(
        two_radical_minpoly(5, &a, &b, 0),
        Err(ResolventError::UnsupportedDegree(5))
    ));
    let x = MultiPoly::var(&t, 0);
    assert!(matches!(
        two_radical_minpoly(3, &x, &b, 0),
        Err(ResolventError::BadEliminationInput(_))
    ));
}

#[test]
fn two_radical_random_rational_residuals() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let t = table(&["x"]);
    for _ in 0..30 {
        let av = rat(rng.gen_range(1..=6), rng.gen_range(1..=2));
        let bv = rat(rng.gen_range(1..=6), rng.gen_range(1..=2));
        let a = MultiPoly::constant(&t, av.clone());
        let b = MultiPoly::constant(&t, bv.clone());
        let out = two_radical_minpoly(3, &a, &b, 0).unwrap();
        // numeric root of the radical sum
        let af = crate::resolvent::to_f64(&av);
        let bf = crate::resolvent::to_f64(&bv);
        let u = (af * af * bf).powf(1.0 / 3.0);
        let v = (af * bf * bf).powf(1.0 / 3.0);
        let x = u + v;
        // evaluate minpoly at x
        let view = collect_wrt(&out.minpoly, 0).unwrap();
        let mut acc = 0f64;
        for c in view.coeffs() {
            acc = acc * x + crate::resolvent::to_f64(&c.constant_term());
        }
        let scale = 1.0
            + view
                .coeffs()
                .iter()
                .map(|c| crate::resolvent::to_f64(&c.constant_term()).abs())
                .fold(0.0, f64::max);
        assert!(
            (acc / scale).abs() < 1e-10,
            "residual too large for a={av} b={bv}"
        );
    }
}
