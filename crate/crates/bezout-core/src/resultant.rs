//! Two-equation elimination in one main variable.
//!
//! The resultant of `f = A x^m + ... + V` and `g = A' x^m' + ... + V'`
//! is the determinant of the square matrix R whose columns are the
//! shifted coefficient lists of f (m' columns) and g (m columns): the
//! condition for multipliers L1 (degree m'-1) and L2 (degree m-1) with
//! L1 f + L2 g = 0 to exist. The Bezout matrix reaches the same value
//! with an m-square determinant built from truncation differences.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::linalg::{det_fraction_free, solve_rational_system, LinAlgError, RingMatrix};
use crate::poly::{
    collect_wrt, substitute_power, Monomial, MultiPoly, PolyError, UniView, VarIndex, VarTable,
};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResultantError {
    /// Inputs must have degree >= 1 in the main variable.
    DegreeZeroInput,
    /// Inputs disagree on the main variable or the table.
    MainMismatch,
    /// bezoutian_matrix needs equal degrees; use bezoutian_unequal.
    UnequalDegrees { m: u32, n: u32 },
    /// bezoutian_unequal needs strictly decreasing degrees.
    NotStrictlyUnequal { m: u32, n: u32 },
    /// The pair shares a root (resultant vanishes); no identity witness.
    NotCoprime,
    /// Operation requires constant (degree-0) coefficients.
    NonConstantCoefficients,
    /// gcd of two zero polynomials is undefined.
    BothZero,
    Poly(PolyError),
    LinAlg(LinAlgError),
}

impl fmt::Display for ResultantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResultantError::DegreeZeroInput => {
                write!(f, "inputs must have degree >= 1 in the main variable")
            }
            ResultantError::MainMismatch => {
                write!(f, "inputs must share the main variable and table")
            }
            ResultantError::UnequalDegrees { m, n } => write!(
                f,
                "degrees {m} and {n} differ; use bezoutian_unequal for mixed degrees"
            ),
            ResultantError::NotStrictlyUnequal { m, n } => write!(
                f,
                "bezoutian_unequal needs deg f > deg g >= 1, got {m} and {n}"
            ),
            ResultantError::NotCoprime => write!(f, "polynomials share a common divisor"),
            ResultantError::NonConstantCoefficients => {
                write!(f, "operation requires rational (degree-0) coefficients")
            }
            ResultantError::BothZero => write!(f, "gcd(0, 0) is undefined"),
            ResultantError::Poly(e) => write!(f, "{e}"),
            ResultantError::LinAlg(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ResultantError {}

impl From<PolyError> for ResultantError {
    fn from(e: PolyError) -> Self {
        ResultantError::Poly(e)
    }
}

impl From<LinAlgError> for ResultantError {
    fn from(e: LinAlgError) -> Self {
        ResultantError::LinAlg(e)
    }
}

fn check_pair(f: &UniView, g: &UniView) -> Result<(), ResultantError> {
    if f.main() != g.main() || f.leading().vars() != g.leading().vars() {
        return Err(ResultantError::MainMismatch);
    }
    Ok(())
}

/// The matrix R of shifted coefficient columns: block 1 holds f's
/// coefficients (m' columns, shifted down one row per column), block 2
/// holds g's likewise (m columns).
#[derive(Debug, Clone)]
pub struct SylvesterLayout {
    pub f: UniView,
    pub g: UniView,
    pub matrix: RingMatrix,
}

pub fn sylvester_matrix(f: &UniView, g: &UniView) -> Result<SylvesterLayout, ResultantError> {
    check_pair(f, g)?;
    let m = f.degree();
    let mp = g.degree();
    if m == 0 || mp == 0 {
        return Err(ResultantError::DegreeZeroInput);
    }
    let vars = f.leading().vars().clone();
    let size = (m + mp) as usize;
    let zero = MultiPoly::zero(&vars);
    let matrix = RingMatrix::from_fn(size, size, &vars, |r, c| {
        if c < mp as usize {
            let idx = r as i64 - c as i64;
            if (0..=m as i64).contains(&idx) {
                f.coeffs()[idx as usize].clone()
            } else {
                zero.clone()
            }
        } else {
            let c2 = c - mp as usize;
            let idx = r as i64 - c2 as i64;
            if (0..=mp as i64).contains(&idx) {
                g.coeffs()[idx as usize].clone()
            } else {
                zero.clone()
            }
        }
    });
    Ok(SylvesterLayout {
        f: f.clone(),
        g: g.clone(),
        matrix,
    })
}

/// Determinant of the Sylvester layout. Vanishes at a specialization
/// exactly when f and g share a root there (leading coefficients not
/// both vanishing). Sign convention: f block first, powers descending.
pub fn resultant(f: &UniView, g: &UniView) -> Result<MultiPoly, ResultantError> {
    let layout = sylvester_matrix(f, g)?;
    Ok(det_fraction_free(&layout.matrix)?)
}

/// The m-square symmetric matrix of truncation differences. Row i is
/// the coefficient list of g_i f - f_i g where f_i, g_i keep the first
/// i+1 coefficients: f_m = A, f_{m-1} = A x + B, and so on.
#[derive(Debug, Clone)]
pub struct BezoutianLayout {
    pub f: UniView,
    pub g: UniView,
    pub matrix: RingMatrix,
    /// The multiplier pair (f_i, g_i) that produced each row.
    pub row_provenance: Vec<(MultiPoly, MultiPoly)>,
}

/// First k+1 coefficients of v as a polynomial of degree k in main.
fn truncation(v: &UniView, k: usize) -> MultiPoly {
    let vars = v.leading().vars();
    let mut acc = MultiPoly::zero(vars);
    for (j, c) in v.coeffs().iter().take(k + 1).enumerate() {
        let power = Monomial::var(vars.len(), v.main(), (k - j) as u32);
        acc = acc.try_add(&c.mul_monomial(&power)).expect("same table");
    }
    acc
}

pub fn bezoutian_matrix(f: &UniView, g: &UniView) -> Result<BezoutianLayout, ResultantError> {
    check_pair(f, g)?;
    let m = f.degree();
    if m != g.degree() {
        return Err(ResultantError::UnequalDegrees { m, n: g.degree() });
    }
    if m == 0 {
        return Err(ResultantError::DegreeZeroInput);
    }
    let vars = f.leading().vars().clone();
    let main = f.main();
    let fp = f.assemble();
    let gp = g.assemble();
    let mut matrix = RingMatrix::zero(m as usize, m as usize, &vars);
    let mut row_provenance = Vec::with_capacity(m as usize);
    for i in 0..m as usize {
        let fi = truncation(f, i);
        let gi = truncation(g, i);
        let row_poly = gi.try_mul(&fp)?.try_sub(&fi.try_mul(&gp)?)?;
        debug_assert!(row_poly.degree_in(main).unwrap_or(0) < m);
        for (mono, c) in row_poly.terms() {
            let e = mono.exponent(main);
            let mut rest = mono.clone();
            rest.0[main] = 0;
            let col = (m - 1 - e) as usize;
            let t = MultiPoly::from_terms(&vars, [(rest, c.clone())]);
            let cur = matrix.at(i, col).try_add(&t)?;
            matrix.set(i, col, cur);
        }
        row_provenance.push((fi, gi));
    }
    Ok(BezoutianLayout {
        f: f.clone(),
        g: g.clone(),
        matrix,
        row_provenance,
    })
}

/// Unequal-degree Bezout construction, deg f = m > deg g = n >= 1.
#[derive(Debug, Clone)]
pub struct UnequalBezoutian {
    /// n equations of degree n-1 in the main variable.
    pub matrix: RingMatrix,
    /// Power of g's leading coefficient introduced by the power
    /// substitutions. Observed law, characterized against the Sylvester
    /// oracle over all degree pairs n < m <= 6 and pinned by tests:
    /// det(matrix) * lc(g)^(m-n) = s * extraneous * Res(f, g) with
    /// s = (-1)^(n(n+1)/2 + n(m-n)).
    pub extraneous: MultiPoly,
    /// Total number of substitution steps across rows.
    pub substitutions: u32,
}

/// Difference rows against g shifted by x^(m-n), then repeated power
/// substitution through g until every row has degree below n.
pub fn bezoutian_unequal(f: &UniView, g: &UniView) -> Result<UnequalBezoutian, ResultantError> {
    check_pair(f, g)?;
    let m = f.degree();
    let n = g.degree();
    if m <= n || n == 0 {
        return Err(ResultantError::NotStrictlyUnequal { m, n });
    }
    let vars = f.leading().vars().clone();
    let main = f.main();
    let fp = f.assemble();
    let gp = g.assemble();
    let shift = Monomial::var(vars.len(), main, m - n);
    let g_shifted = gp.mul_monomial(&shift);
    let mut matrix = RingMatrix::zero(n as usize, n as usize, &vars);
    let mut extraneous = MultiPoly::one(&vars);
    let mut substitutions = 0u32;
    for i in 0..n as usize {
        let gi = truncation(g, i);
        let row_poly = gi
            .try_mul(&fp)?
            .try_sub(&truncation(f, i).try_mul(&g_shifted)?)?;
        debug_assert!(row_poly.degree_in(main).unwrap_or(0) < m);
        let reduced_coeffs: Vec<MultiPoly> = if row_poly.is_zero() {
            vec![MultiPoly::zero(&vars); n as usize]
        } else {
            let view = collect_wrt(&row_poly, main)?;
            if view.degree() < n {
                let mut padded =
                    vec![MultiPoly::zero(&vars); (n - 1 - view.degree()) as usize];
                padded.extend(view.coeffs().iter().cloned());
                padded
            } else {
                let red = substitute_power(&view, g)?;
                extraneous = extraneous.try_mul(&red.multiplier)?;
                substitutions += red.steps;
                red.reduced
            }
        };
        debug_assert_eq!(reduced_coeffs.len(), n as usize);
        for (j, c) in reduced_coeffs.into_iter().enumerate() {
            matrix.set(i, j, c);
        }
    }
    Ok(UnequalBezoutian {
        matrix,
        extraneous,
        substitutions,
    })
}

/// Maximum degree of the two-equation resultant: G = m m' + m p' + m' p,
/// where p and p' bound the coefficient-degree progressions. With
/// p = p' = 0 this is the product of the degrees.
pub fn degree_bound_two(m: u32, mp: u32, p: u32, pp: u32) -> u64 {
    m as u64 * mp as u64 + m as u64 * pp as u64 + mp as u64 * p as u64
}

/// The unique degree-bounded pair with L1 P + L2 Q = 1.
#[derive(Debug, Clone)]
pub struct IdentityWitness {
    pub l1: UniView,
    pub l2: UniView,
}

fn constant_coeffs(v: &UniView) -> Option<Vec<Rational>> {
    v.coeffs()
        .iter()
        .map(|c| {
            if c.is_constant() {
                Some(c.constant_term())
            } else {
                None
            }
        })
        .collect()
}

fn uniview_from_rationals(
    vars: &Arc<VarTable>,
    main: VarIndex,
    desc: &[Rational],
) -> Result<UniView, ResultantError> {
    let trimmed: Vec<Rational> = desc.iter().skip_while(|c| c.is_zero()).cloned().collect();
    if trimmed.is_empty() {
        return Err(ResultantError::Poly(PolyError::ZeroPolynomial));
    }
    let coeffs: Vec<MultiPoly> = trimmed
        .into_iter()
        .map(|c| MultiPoly::constant(vars, c))
        .collect();
    Ok(UniView::from_coeffs(main, coeffs)?)
}

/// Solve R (M, N, ..., M', N', ...) = (0, ..., 0, 1) over the rationals:
/// the Sylvester system whose solution multipliers combine to the
/// constant 1. Errors with NotCoprime when the resultant vanishes.
pub fn bezout_identity(p: &UniView, q: &UniView) -> Result<IdentityWitness, ResultantError> {
    check_pair(p, q)?;
    let (pc, qc) = match (constant_coeffs(p), constant_coeffs(q)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(ResultantError::NonConstantCoefficients),
    };
    let m = p.degree() as usize;
    let mp = q.degree() as usize;
    if m == 0 || mp == 0 {
        return Err(ResultantError::DegreeZeroInput);
    }
    let size = m + mp;
    let mut rows = vec![vec![Rational::zero(); size]; size];
    for c in 0..mp {
        for (idx, coeff) in pc.iter().enumerate() {
            rows[idx + c][c] = coeff.clone();
        }
    }
    for c in 0..m {
        for (idx, coeff) in qc.iter().enumerate() {
            rows[idx + c][mp + c] = coeff.clone();
        }
    }
    let mut rhs = vec![Rational::zero(); size];
    rhs[size - 1] = Rational::one();
    let w = solve_rational_system(&rows, &rhs).ok_or(ResultantError::NotCoprime)?;
    let vars = p.leading().vars().clone();
    let main = p.main();
    let l1 = uniview_from_rationals(&vars, main, &w[..mp])?;
    let l2 = uniview_from_rationals(&vars, main, &w[mp..])?;
    Ok(IdentityWitness { l1, l2 })
}

/// Monic gcd by the Euclidean algorithm; gcd(P, 0) is monic P. Errors
/// only when both inputs vanish.
pub fn gcd_euclid(p: &UniView, q: &UniView) -> Result<UniView, ResultantError> {
    check_pair(p, q)?;
    let (pc, qc) = match (constant_coeffs(p), constant_coeffs(q)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(ResultantError::NonConstantCoefficients),
    };
    let gcd = rational_gcd(&pc, &qc).ok_or(ResultantError::BothZero)?;
    uniview_from_rationals(&p.leading().vars().clone(), p.main(), &gcd)
}

/// Euclid over descending rational coefficient lists; None iff both zero.
/// The result is monic.
pub(crate) fn rational_gcd(a: &[Rational], b: &[Rational]) -> Option<Vec<Rational>> {
    fn trim(v: &[Rational]) -> Vec<Rational> {
        v.iter().skip_while(|c| c.is_zero()).cloned().collect()
    }
    let mut a = trim(a);
    let mut b = trim(b);
    if a.is_empty() && b.is_empty() {
        return None;
    }
    while !b.is_empty() {
        let r = rational_rem(&a, &b);
        a = b;
        b = r;
    }
    let lead = a[0].clone();
    Some(a.into_iter().map(|c| c / &lead).collect())
}

/// Remainder of dense descending coefficient lists, leading zeros trimmed.
pub(crate) fn rational_rem(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    debug_assert!(!den.is_empty() && !den[0].is_zero());
    let mut r: Vec<Rational> = num.to_vec();
    while !r.is_empty() && r[0].is_zero() {
        r.remove(0);
    }
    while r.len() >= den.len() {
        let factor = r[0].clone() / den[0].clone();
        for (i, d) in den.iter().enumerate() {
            let v = &r[i] - &factor * d;
            r[i] = v;
        }
        r.remove(0);
        while !r.is_empty() && r[0].is_zero() {
            r.remove(0);
        }
    }
    r
}

/// Outcome of an independent check of the symbolic resultant at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Agreement {
    Equal,
    Mismatch,
    /// A leading coefficient vanished at the point; nothing to compare
    /// (the corresponding solutions escape to infinity).
    Skipped,
}

/// Evaluate the symbolic resultant at `other = y0` and compare with the
/// resultant of the specialized univariate pair.
pub fn specialization_oracle(
    f: &UniView,
    g: &UniView,
    other: VarIndex,
    y0: &Rational,
) -> Result<Agreement, ResultantError> {
    check_pair(f, g)?;
    if f.leading().specialize(other, y0).is_zero() || g.leading().specialize(other, y0).is_zero()
    {
        return Ok(Agreement::Skipped);
    }
    let symbolic = resultant(f, g)?;
    let lhs = symbolic.specialize(other, y0);
    let f0 = collect_wrt(&f.assemble().specialize(other, y0), f.main())?;
    let g0 = collect_wrt(&g.assemble().specialize(other, y0), g.main())?;
    let rhs = resultant(&f0, &g0)?;
    Ok(if lhs == rhs {
        Agreement::Equal
    } else {
        Agreement::Mismatch
    })
}
