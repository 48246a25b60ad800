//! Solvable equation classes built from two parameters a, b.
//!
//! For degree n with the x^(n-1) term removed, matching the x^(n-2) and
//! x^(n-3) coefficients p, q forces e2 = ab = -p / C(n,2) and
//! e1 = a + b = -q / (C(n,3) e2); the remaining coefficients follow from
//! the complete homogeneous symmetric polynomials of a and b, so the
//! whole family stays rational even for irrational or complex a, b.
//! Roots come as radical sums
//! x = (a^(n-1) b)^(1/n) + (a^(n-2) b^2)^(1/n) + ... + (a b^(n-1))^(1/n),
//! and the two-radical variant is derived by elimination.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::{collect_wrt, MultiPoly, PolyError, UniView, VarIndex};
use crate::rational::{binomial_rat, Rational};
use crate::resultant::{resultant, ResultantError};

#[derive(Debug, Clone, PartialEq)]
pub enum ResolventError {
    /// p = 0 breaks the e1 derivation; the construction refuses the
    /// exceptional case rather than guessing.
    DegenerateClass,
    /// Class degrees start at 3; the two-radical elimination is
    /// implemented for n in {3, 4}.
    UnsupportedDegree(u32),
    /// No branch pairing met the residual tolerance.
    BranchFailure { best_residual: f64 },
    /// Inputs to the two-radical elimination must avoid the output
    /// variable and share one table.
    BadEliminationInput(String),
    Poly(PolyError),
    Resultant(Box<ResultantError>),
}

impl fmt::Display for ResolventError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResolventError::DegenerateClass => {
                write!(f, "p = 0 gives a degenerate class; not supported")
            }
            ResolventError::UnsupportedDegree(n) => write!(f, "unsupported degree {n}"),
            ResolventError::BranchFailure { best_residual } => write!(
                f,
                "no radical branch met the tolerance (best residual {best_residual:.3e})"
            ),
            ResolventError::BadEliminationInput(s) => write!(f, "{s}"),
            ResolventError::Poly(e) => write!(f, "{e}"),
            ResolventError::Resultant(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ResolventError {}

impl From<PolyError> for ResolventError {
    fn from(e: PolyError) -> Self {
        ResolventError::Poly(e)
    }
}

impl From<ResultantError> for ResolventError {
    fn from(e: ResultantError) -> Self {
        ResolventError::Resultant(Box::new(e))
    }
}

/// Coefficient arithmetic shared by the rational and symbolic class
/// constructions.
pub trait ClassScalar: Clone {
    fn one_of(like: &Self) -> Self;
    fn zero_of(like: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
}

impl ClassScalar for Rational {
    fn one_of(_: &Self) -> Self {
        Rational::one()
    }
    fn zero_of(_: &Self) -> Self {
        Rational::zero()
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
}

impl ClassScalar for MultiPoly {
    fn one_of(like: &Self) -> Self {
        MultiPoly::one(like.vars())
    }
    fn zero_of(like: &Self) -> Self {
        MultiPoly::zero(like.vars())
    }
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("same table")
    }
    fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("same table")
    }
    fn scale(&self, r: &Rational) -> Self {
        MultiPoly::scale(self, r)
    }
}

/// Descending coefficients of the class equation from the elementary
/// symmetric values e1 = a+b, e2 = ab: the coefficient of x^(n-k) is
/// -C(n,k) e2 h_{k-2}, with h_j = e1 h_{j-1} - e2 h_{j-2}, h_0 = 1,
/// h_{-1} = 0.
pub fn class_coefficients_from_elementary<T: ClassScalar>(n: u32, e1: &T, e2: &T) -> Vec<T> {
    let one = T::one_of(e1);
    let zero = T::zero_of(e1);
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    coeffs.push(one.clone());
    coeffs.push(zero.clone());
    let mut h_prev = zero; // h_{-1}
    let mut h = one; // h_0
    for k in 2..=n {
        coeffs.push(e2.mul(&h).scale(&-binomial_rat(n as u64, k as u64)));
        let next = e1.mul(&h).sub(&e2.mul(&h_prev));
        h_prev = h;
        h = next;
    }
    coeffs
}

/// A solvable class: the degree-n equation whose x^(n-2) and x^(n-3)
/// coefficients are p and q and whose remaining coefficients are forced
/// by the two-parameter construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SolvableClass {
    pub n: u32,
    pub p: Rational,
    pub q: Rational,
    /// a + b.
    pub e1: Rational,
    /// a * b.
    pub e2: Rational,
    /// Descending coefficients of the class equation: length n+1,
    /// leading 1, second entry 0.
    pub coeffs_e: Vec<Rational>,
}

pub fn solvable_class(n: u32, p: Rational, q: Rational) -> Result<SolvableClass, ResolventError> {
    if n < 3 {
        return Err(ResolventError::UnsupportedDegree(n));
    }
    if p.is_zero() {
        return Err(ResolventError::DegenerateClass);
    }
    let e2 = -&p / binomial_rat(n as u64, 2);
    let e1 = -&q / (binomial_rat(n as u64, 3) * &e2);
    let coeffs_e = class_coefficients_from_elementary(n, &e1, &e2);
    Ok(SolvableClass {
        n,
        p,
        q,
        e1,
        e2,
        coeffs_e,
    })
}

/// Numeric radical-sum root of a class equation.
#[derive(Debug, Clone)]
pub struct RadicalRoot {
    pub value: Complex64,
    /// |E(value)| / (1 + max |coefficient|).
    pub residual: f64,
    /// Index of the accepted branch of the second radical.
    pub branch: usize,
}

fn to_f64(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

fn horner(coeffs: &[Rational], x: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs {
        acc = acc * x + Complex64::new(to_f64(c), 0.0);
    }
    acc
}

/// Evaluate the radical sum x = sum_{j=1}^{n-1} s^(n-j) t^j, where s and
/// t are n-th roots of a and b. The branch of s stays principal and t is
/// rotated over its n branches; every pairing keeps the product
/// constraint (the two radicals multiply to a power of ab) built into
/// the derivation. The first branch whose relative residual clears
/// 10^(2-digits) is accepted. Radical evaluation is the only
/// floating-point surface in the crate.
pub fn radical_root(cls: &SolvableClass, digits: u32) -> Result<RadicalRoot, ResolventError> {
    let n = cls.n;
    // a, b are the roots of X^2 - e1 X + e2.
    let e1 = Complex64::new(to_f64(&cls.e1), 0.0);
    let e2 = Complex64::new(to_f64(&cls.e2), 0.0);
    let disc = (e1 * e1 - 4.0 * e2).sqrt();
    let a = (e1 + disc) / 2.0;
    let b = (e1 - disc) / 2.0;
    let s = a.powf(1.0 / n as f64);
    let t0 = b.powf(1.0 / n as f64);
    let tol = 10f64.powi(2 - digits as i32);
    let scale = 1.0
        + cls
            .coeffs_e
            .iter()
            .map(|c| to_f64(c).abs())
            .fold(0.0, f64::max);
    let mut best = f64::INFINITY;
    for k in 0..n as usize {
        let rot = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64);
        let t = t0 * rot;
        let mut x = Complex64::new(0.0, 0.0);
        for j in 1..n {
            x += s.powu(n - j) * t.powu(j);
        }
        let residual = horner(&cls.coeffs_e, x).norm() / scale;
        if residual < tol {
            return Ok(RadicalRoot {
                value: x,
                residual,
                branch: k,
            });
        }
        best = best.min(residual);
    }
    Err(ResolventError::BranchFailure { best_residual: best })
}

/// Output of the two-radical elimination.
#[derive(Debug, Clone)]
pub struct TwoRadicalMinPoly {
    /// Monic-in-x polynomial of degree n satisfied by
    /// (a^(n-1) b)^(1/n) + (a^(n-2) b^2)^(1/n) with consistent branches.
    pub minpoly: MultiPoly,
    /// Full elimination of u, v from {u^n = a^(n-1) b,
    /// v^n = a^(n-2) b^2, x = u + v}: degree n^2 in x, every branch pair.
    pub full_resultant: MultiPoly,
    /// full_resultant / minpoly: the extraneous branch-mismatch factor,
    /// certified by exact division.
    pub stripped_cofactor: MultiPoly,
}

/// Minimal polynomial of x = (a^(n-1) b)^(1/n) + (a^(n-2) b^2)^(1/n) for
/// n in {3, 4}, computed by elimination rather than trusted from the
/// series. Both radicals are powers of the single radical t = (b/a)^(1/n)
/// scaled by a (u = a t, v = a t^2), so eliminating t from
/// {x = a(t + t^2), a t^n = b} yields the degree-n factor directly; the
/// full u, v elimination is also computed and the factor is certified by
/// exact division into it.
pub fn two_radical_minpoly(
    n: u32,
    a: &MultiPoly,
    b: &MultiPoly,
    x: VarIndex,
) -> Result<TwoRadicalMinPoly, ResolventError> {
    if !(n == 3 || n == 4) {
        return Err(ResolventError::UnsupportedDegree(n));
    }
    if a.vars() != b.vars() {
        return Err(ResolventError::Poly(PolyError::VarTableMismatch));
    }
    if a.is_zero() || b.is_zero() {
        return Err(ResolventError::Poly(PolyError::ZeroPolynomial));
    }
    if a.contains_var(x) || b.contains_var(x) {
        return Err(ResolventError::BadEliminationInput(
            "a and b must not involve the output variable".into(),
        ));
    }
    let vars = a.vars().clone();
    let mut aux_name = String::from("t#aux");
    while vars.index_of(&aux_name).is_some() {
        aux_name.push('_');
    }
    let big = vars.extended(vec![aux_name])?;
    let aux = big.len() - 1;
    let idmap: Vec<usize> = (0..vars.len()).collect();
    let a_big = a.relabel(&big, &idmap);
    let b_big = b.relabel(&big, &idmap);
    let x_big = MultiPoly::var(&big, x);

    // Principal relation: A(t) = a t^2 + a t - x, B(t) = a t^n - b.
    let a_view = UniView::from_coeffs(aux, vec![a_big.clone(), a_big.clone(), x_big.neg()])?;
    let mut b_coeffs = vec![a_big.clone()];
    for _ in 0..n - 1 {
        b_coeffs.push(MultiPoly::zero(&big));
    }
    b_coeffs.push(b_big.neg());
    let b_view = UniView::from_coeffs(aux, b_coeffs)?;
    let principal = resultant(&a_view, &b_view)?;
    let view = collect_wrt(&principal, x)?;
    let lead = view.leading().clone();
    let mut monic_coeffs = Vec::with_capacity(view.coeffs().len());
    for c in view.coeffs() {
        monic_coeffs.push(c.divexact(&lead)?);
    }
    let minpoly_big = UniView::from_coeffs(x, monic_coeffs)?.assemble();

    // Full elimination with u already substituted as x - v.
    let v_poly = MultiPoly::var(&big, aux);
    let p1 = x_big
        .try_sub(&v_poly)?
        .pow(n)
        .try_sub(&a_big.pow(n - 1).try_mul(&b_big)?)?;
    let p2 = v_poly
        .pow(n)
        .try_sub(&a_big.pow(n - 2).try_mul(&b_big.pow(2))?)?;
    let full_big = resultant(&collect_wrt(&p1, aux)?, &collect_wrt(&p2, aux)?)?;
    let cofactor_big = full_big.divexact(&minpoly_big)?;

    // Project back to the original table; aux is gone from all three.
    let back = |m: &MultiPoly| -> MultiPoly {
        debug_assert!(!m.contains_var(aux));
        MultiPoly::from_terms(
            &vars,
            m.terms().map(|(mono, c)| {
                (
                    crate::poly::Monomial(mono.0[..vars.len()].to_vec()),
                    c.clone(),
                )
            }),
        )
    };
    Ok(TwoRadicalMinPoly {
        minpoly: back(&minpoly_big),
        full_resultant: back(&full_big),
        stripped_cofactor: back(&cofactor_big),
    })
}

/// The series form of the two-radical equation, for comparison with the
/// elimination route: x^n = a^(n-1) b +/- a^(n-2) b^2 + n a^(n-2) b x
/// + n (n-3)/2 a^(n-3) b x^2 + ... + n (n-p)/2 ... (n-2p+3)/2
/// a^(n-p) b x^(p-1) + ..., the sign of the second term positive for odd
/// n, the series stopping at the first zero coefficient. Returned as the
/// monic polynomial x^n - rhs.
pub fn two_radical_series_polynomial(
    n: u32,
    a: &MultiPoly,
    b: &MultiPoly,
    x: VarIndex,
) -> Result<MultiPoly, ResolventError> {
    if n < 3 {
        return Err(ResolventError::UnsupportedDegree(n));
    }
    let vars = a.vars();
    let xp = MultiPoly::var(vars, x);
    let mut rhs = a.pow(n - 1).try_mul(b)?;
    let second = a.pow(n - 2).try_mul(&b.pow(2))?;
    rhs = if n % 2 == 1 {
        rhs.try_add(&second)?
    } else {
        rhs.try_sub(&second)?
    };
    for p in 2..=n {
        // c_p = n * (n-p)/2 * (n-p-1)/2 * ... * (n-2p+3)/2, p-2 factors.
        let mut c = Rational::from_integer(BigInt::from(n));
        for i in 0..p.saturating_sub(2) {
            let num = n as i64 - p as i64 - i as i64;
            c = c * Rational::new(BigInt::from(num), BigInt::from(2));
        }
        if c.is_zero() {
            break;
        }
        let term = a.pow(n - p).try_mul(b)?.try_mul(&xp.pow(p - 1))?.scale(&c);
        rhs = rhs.try_add(&term)?;
    }
    Ok(xp.pow(n).try_sub(&rhs)?)
}

#[cfg(test)]
mod tests;
