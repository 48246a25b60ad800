use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::rational::{int, rat};

fn table(names: &[&str]) -> Arc<VarTable> {
    VarTable::new(names.to_vec()).unwrap()
}

/// Parse-free builder: terms given as (coefficient, exponents).
fn poly(vars: &Arc<VarTable>, terms: &[(i64, &[u32])]) -> MultiPoly {
    MultiPoly::from_terms(
        vars,
        terms
            .iter()
            .map(|(c, e)| (Monomial(e.to_vec()), int(*c))),
    )
}

#[test]
fn add_basic() {
    let t = table(&["x"]);
    let a = poly(&t, &[(1, &[1]), (1, &[0])]); // x+1
    let b = poly(&t, &[(1, &[1]), (-1, &[0])]); // x-1
    assert_eq!(a.try_add(&b).unwrap(), poly(&t, &[(2, &[1])]));
}

#[test]
fn add_identity_and_cancellation() {
    let t = table(&["x", "y"]);
    let p = poly(&t, &[(1, &[2, 1]), (-1, &[0, 1])]); // x^2y - y
    let zero = MultiPoly::zero(&t);
    assert_eq!(p.try_add(&zero).unwrap(), p);
    let y = poly(&t, &[(1, &[0, 1])]);
    let sum = p.try_add(&y).unwrap();
    assert_eq!(sum, poly(&t, &[(1, &[2, 1])])); // cancellation prunes the term
    assert_eq!(sum.num_terms(), 1);
}

#[test]
fn add_table_mismatch_is_usage_error() {
    let a = MultiPoly::one(&table(&["x"]));
    let b = MultiPoly::one(&table(&["y"]));
    assert_eq!(a.try_add(&b), Err(PolyError::VarTableMismatch));
}

#[test]
fn mul_basic() {
    let t = table(&["x", "y"]);
    let a = poly(&t, &[(1, &[1, 0]), (1, &[0, 1])]); // x+y
    let b = poly(&t, &[(1, &[1, 0]), (-1, &[0, 1])]); // x-y
    assert_eq!(
        a.try_mul(&b).unwrap(),
        poly(&t, &[(1, &[2, 0]), (-1, &[0, 2])])
    );
    let one = MultiPoly::one(&t);
    assert_eq!(a.try_mul(&one).unwrap(), a);
}

#[test]
fn mul_univariate() {
    let t = table(&["x"]);
    let a = poly(&t, &[(1, &[1]), (-1, &[0])]);
    let b = poly(&t, &[(1, &[1]), (-2, &[0])]);
    assert_eq!(
        a.try_mul(&b).unwrap(),
        poly(&t, &[(1, &[2]), (-3, &[1]), (2, &[0])])
    );
}

#[test]
fn mul_degree_adds() {
    let t = table(&["x", "y"]);
    let a = poly(&t, &[(3, &[2, 1]), (1, &[0, 0])]);
    let b = poly(&t, &[(2, &[1, 3]), (5, &[1, 0])]);
    let p = a.try_mul(&b).unwrap();
    assert_eq!(
        p.total_degree().unwrap(),
        a.total_degree().unwrap() + b.total_degree().unwrap()
    );
}

#[test]
fn eval_examples() {
    let t = table(&["x"]);
    let p = poly(&t, &[(1, &[2]), (-3, &[1]), (2, &[0])]); // x^2-3x+2
    assert_eq!(p.eval_full(&[int(1)]).unwrap(), int(0));
    assert_eq!(p.eval_full(&[int(0)]).unwrap(), int(2));

    let t3 = table(&["x", "y", "z"]);
    let q = poly(&t3, &[(1, &[1, 1, 0]), (1, &[0, 0, 1])]); // xy+z
    assert_eq!(q.eval_full(&[int(1), int(2), int(3)]).unwrap(), int(5));
}

#[test]
fn eval_unbound_variable_errors() {
    let t = table(&["x", "y"]);
    let p = poly(&t, &[(1, &[1, 1])]);
    let r = p.eval(&[Some(int(1)), None]);
    assert_eq!(r, Err(PolyError::UnboundVariable("y".into())));
    // A variable that does not occur needs no binding.
    let q = poly(&t, &[(1, &[1, 0])]);
    assert_eq!(q.eval(&[Some(int(4)), None]).unwrap(), int(4));
}

#[test]
fn collect_wrt_regroups() {
    let t = table(&["x", "y"]);
    // x^2y + xy^2 + 3, wrt x -> coeffs [y, y^2, 3], m=2, p_offsets [1,2,0]
    let p = poly(&t, &[(1, &[2, 1]), (1, &[1, 2]), (3, &[0, 0])]);
    let v = collect_wrt(&p, 0).unwrap();
    assert_eq!(v.degree(), 2);
    assert_eq!(v.coeffs()[0], poly(&t, &[(1, &[0, 1])]));
    assert_eq!(v.coeffs()[1], poly(&t, &[(1, &[0, 2])]));
    assert_eq!(v.coeffs()[2], poly(&t, &[(3, &[0, 0])]));
    assert_eq!(v.p_offsets(), &[Some(1), Some(2), Some(0)]);
    assert_eq!(v.assemble(), p);
}

#[test]
fn collect_wrt_quadratic_layout() {
    // A(y)x^2 + B(y)x + C(y): the displayed two-equation arrangement.
    let t = table(&["x", "y"]);
    let a = poly(&t, &[(2, &[0, 1]), (1, &[0, 0])]);
    let b = poly(&t, &[(1, &[0, 2])]);
    let c = poly(&t, &[(-1, &[0, 1])]);
    let x2 = MultiPoly::var_power(&t, 0, 2);
    let x1 = MultiPoly::var(&t, 0);
    let p = a
        .try_mul(&x2)
        .unwrap()
        .try_add(&b.try_mul(&x1).unwrap())
        .unwrap()
        .try_add(&c)
        .unwrap();
    let v = collect_wrt(&p, 0).unwrap();
    assert_eq!(v.coeffs(), &[a, b, c]);
}

#[test]
fn collect_wrt_constant_and_zero() {
    let t = table(&["x"]);
    let five = MultiPoly::constant(&t, int(5));
    let v = collect_wrt(&five, 0).unwrap();
    assert_eq!(v.degree(), 0);
    assert_eq!(v.coeffs()[0], five);
    assert_eq!(
        collect_wrt(&MultiPoly::zero(&t), 0),
        Err(PolyError::ZeroPolynomial)
    );
}

#[test]
fn substitute_power_one_step() {
    // p = x^2 against A'x^2+B'x+C' -> -B'x - C', multiplier A'.
    let t = table(&["x", "a", "b", "c"]);
    let p = collect_wrt(&MultiPoly::var_power(&t, 0, 2), 0).unwrap();
    let rel_poly = poly(&t, &[(1, &[2, 1, 0, 0]), (1, &[1, 0, 1, 0]), (1, &[0, 0, 0, 1])]);
    let rel = collect_wrt(&rel_poly, 0).unwrap();
    let red = substitute_power(&p, &rel).unwrap();
    assert_eq!(red.multiplier, MultiPoly::var(&t, 1));
    assert_eq!(red.steps, 1);
    let expect = poly(&t, &[(-1, &[1, 0, 1, 0]), (-1, &[0, 0, 0, 1])]);
    assert_eq!(red.reduced_poly(0), expect);
}

#[test]
fn substitute_power_already_low() {
    let t = table(&["x"]);
    let p = collect_wrt(&poly(&t, &[(1, &[1]), (4, &[0])]), 0).unwrap();
    let rel = collect_wrt(&poly(&t, &[(1, &[2]), (1, &[0])]), 0).unwrap();
    let red = substitute_power(&p, &rel).unwrap();
    assert_eq!(red.multiplier, MultiPoly::one(&t));
    assert_eq!(red.reduced_poly(0), poly(&t, &[(1, &[1]), (4, &[0])]));
}

#[test]
fn substitute_power_cube_by_x2_plus_1() {
    let t = table(&["x"]);
    let p = collect_wrt(&MultiPoly::var_power(&t, 0, 3), 0).unwrap();
    let rel = collect_wrt(&poly(&t, &[(1, &[2]), (1, &[0])]), 0).unwrap();
    let red = substitute_power(&p, &rel).unwrap();
    assert_eq!(red.reduced_poly(0), poly(&t, &[(-1, &[1])]));
}

#[test]
fn substitute_power_degree_zero_relation_rejected() {
    let t = table(&["x"]);
    let p = collect_wrt(&MultiPoly::var_power(&t, 0, 2), 0).unwrap();
    let rel = collect_wrt(&MultiPoly::constant(&t, int(3)), 0).unwrap();
    assert_eq!(
        substitute_power(&p, &rel).err(),
        Some(PolyError::RelationDegreeZero)
    );
}

#[test]
fn substitute_power_identity_at_planted_roots() {
    // multiplier * p == reduced (mod relation), so they agree wherever the
    // relation vanishes. Plant rational roots and check numerically.
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let t = table(&["x"]);
    for _ in 0..50 {
        let r = rat(rng.gen_range(-6..=6), rng.gen_range(1..=4));
        let s = rat(rng.gen_range(-6..=6), rng.gen_range(1..=4));
        let c = rat(rng.gen_range(1..=5), 1);
        // relation = c (x - r)(x - s)
        let x = MultiPoly::var(&t, 0);
        let fr = x.try_sub(&MultiPoly::constant(&t, r.clone())).unwrap();
        let fs = x.try_sub(&MultiPoly::constant(&t, s)).unwrap();
        let rel_poly = fr.try_mul(&fs).unwrap().scale(&c);
        let rel = collect_wrt(&rel_poly, 0).unwrap();
        let mut p = MultiPoly::zero(&t);
        for e in 0..=5u32 {
            let k = rng.gen_range(-9..=9);
            p = p
                .try_add(&MultiPoly::var_power(&t, 0, e).scale(&int(k)))
                .unwrap();
        }
        if p.is_zero() {
            continue;
        }
        let view = collect_wrt(&p, 0).unwrap();
        let red = substitute_power(&view, &rel).unwrap();
        let lhs = red.multiplier.eval_full(&[r.clone()]).unwrap()
            * p.eval_full(&[r.clone()]).unwrap();
        let rhs = red.reduced_poly(0).eval_full(&[r]).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn divexact_roundtrip_and_failure() {
    let t = table(&["x", "y"]);
    let a = poly(&t, &[(2, &[2, 1]), (1, &[0, 1]), (3, &[0, 0])]);
    let b = poly(&t, &[(1, &[1, 1]), (-2, &[0, 0])]);
    let prod = a.try_mul(&b).unwrap();
    assert_eq!(prod.divexact(&b).unwrap(), a);
    assert_eq!(prod.divexact(&a).unwrap(), b);
    let off = prod.try_add(&MultiPoly::one(&t)).unwrap();
    assert_eq!(off.divexact(&b), Err(PolyError::NotDivisible));
}

#[test]
fn primitive_part_is_canonical() {
    let t = table(&["x"]);
    let p = poly(&t, &[(4, &[2]), (-6, &[1])]);
    let prim = p.primitive_part();
    assert_eq!(prim, poly(&t, &[(2, &[2]), (-3, &[1])]));
    assert_eq!(p.scale(&rat(-7, 3)).primitive_part(), prim);
}

#[test]
fn display_is_canonical() {
    let t = table(&["x", "y"]);
    let p = poly(&t, &[(2, &[1, 0]), (-1, &[0, 0])]);
    assert_eq!(p.to_string(), "2*x - 1");
    let q = MultiPoly::from_terms(
        &t,
        [
            (Monomial(vec![2, 1]), int(1)),
            (Monomial(vec![0, 0]), rat(-1, 2)),
        ],
    );
    assert_eq!(q.to_string(), "x^2*y - 1/2");
    assert_eq!(MultiPoly::zero(&t).to_string(), "0");
}

// --- randomized algebra checks -------------------------------------------

fn arb_poly(nvars: usize, maxdeg: u32, terms: usize) -> impl Strategy<Value = MultiPoly> {
    let names: Vec<String> = (0..nvars).map(|i| format!("v{i}")).collect();
    prop::collection::vec(
        (
            prop::collection::vec(0..=maxdeg, nvars),
            -9i64..=9,
        ),
        0..=terms,
    )
    .prop_map(move |raw| {
        let t = VarTable::new(names.clone()).unwrap();
        MultiPoly::from_terms(
            &t,
            raw.into_iter()
                .map(|(e, c)| (Monomial(e), int(c))),
        )
    })
}

proptest! {
    #[test]
    fn ring_axioms((a, b, c) in (arb_poly(3, 3, 5), arb_poly(3, 3, 5), arb_poly(3, 3, 5))) {
        let ab_c = a.try_mul(&b).unwrap().try_mul(&c).unwrap();
        let a_bc = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&ab_c, &a_bc);
        let lhs = a.try_mul(&b.try_add(&c).unwrap()).unwrap();
        let rhs = a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(a.try_add(&b).unwrap(), b.try_add(&a).unwrap());
    }

    #[test]
    fn eval_is_ring_homomorphism((a, b) in (arb_poly(3, 3, 5), arb_poly(3, 3, 5)),
                                  pt in prop::collection::vec(-5i64..=5, 3)) {
        let point: Vec<_> = pt.iter().map(|&v| int(v)).collect();
        let ea = a.eval_full(&point).unwrap();
        let eb = b.eval_full(&point).unwrap();
        prop_assert_eq!(a.try_mul(&b).unwrap().eval_full(&point).unwrap(), &ea * &eb);
        prop_assert_eq!(a.try_add(&b).unwrap().eval_full(&point).unwrap(), &ea + &eb);
    }
}

#[test]
fn collect_then_assemble_is_identity() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let t = table(&["a", "b", "c", "d"]);
    for _ in 0..500 {
        let nterms = rng.gen_range(1..=10);
        let mut terms = Vec::new();
        for _ in 0..nterms {
            let mut e = vec![0u32; 4];
            let mut budget = 6u32;
            for slot in e.iter_mut() {
                let k = rng.gen_range(0..=budget.min(4));
                *slot = k;
                budget -= k;
            }
            terms.push((Monomial(e), int(rng.gen_range(-9..=9))));
        }
        let p = MultiPoly::from_terms(&t, terms);
        if p.is_zero() {
            continue;
        }
        let main = rng.gen_range(0..4);
        let v = collect_wrt(&p, main).unwrap();
        assert_eq!(v.assemble(), p);
    }
}
