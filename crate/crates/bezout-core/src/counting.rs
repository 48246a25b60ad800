//! Term counting, finite differences, and the degree theorem.
//!
//! A complete polynomial of degree T in n unknowns has C(T+n, n) terms.
//! Removing the terms divisible by prescribed variable powers is an
//! iterated finite difference of that count, and running the same
//! bookkeeping on the equation-produit of a system yields the degree of
//! its resultant: the product of the equation degrees.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::poly::{MultiPoly, PolyError, VarIndex};
use crate::rational::{binomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountingError {
    /// A difference step names a variable outside the polynomial's table.
    UnknownVariable(String),
    /// Removal powers must be >= 1, on distinct variables, summing <= T.
    InvalidRemoval(String),
    /// The three-equation multiplier degree violates the feasibility
    /// constraints of the 1764 construction.
    InfeasibleMultiplierDegree(String),
    Poly(PolyError),
}

impl fmt::Display for CountingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountingError::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            CountingError::InvalidRemoval(s) => write!(f, "invalid removal spec: {s}"),
            CountingError::InfeasibleMultiplierDegree(s) => write!(f, "{s}"),
            CountingError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CountingError {}

impl From<PolyError> for CountingError {
    fn from(e: PolyError) -> Self {
        CountingError::Poly(e)
    }
}

/// Number of terms of a complete polynomial of degree T in n unknowns:
/// N(u...n)^T = (T+1)(T+2)...(T+n) / n! = C(T+n, n).
pub fn num_terms_complete(n: u32, t: u32) -> u64 {
    binomial((t + n) as u64, n as u64)
        .to_u64()
        .expect("count fits in u64 at desk scale")
}

/// N extended by zero for negative degree, which makes the removal
/// formulas total when the table has gaps.
fn num_terms_signed(n: u32, t: i64) -> BigInt {
    if t < 0 {
        BigInt::zero()
    } else {
        binomial(t as u64 + n as u64, n as u64)
    }
}

/// Ordered difference steps: applying k of them realizes the k-th
/// difference d^k. Step values may be rationals or polynomials.
#[derive(Debug, Clone)]
pub struct DiffSpec {
    pub steps: Vec<(VarIndex, MultiPoly)>,
}

impl DiffSpec {
    pub fn new(steps: Vec<(VarIndex, MultiPoly)>) -> Self {
        DiffSpec { steps }
    }
}

/// Iterated exact finite difference: one step over (x, k) maps
/// X to X(x+k) - X(x).
pub fn finite_difference(p: &MultiPoly, spec: &DiffSpec) -> Result<MultiPoly, CountingError> {
    let mut acc = p.clone();
    for (var, step) in &spec.steps {
        if *var >= p.vars().len() {
            return Err(CountingError::UnknownVariable(format!("#{var}")));
        }
        let shifted_var = MultiPoly::var(acc.vars(), *var).try_add(step)?;
        let shifted = acc.substitute(*var, &shifted_var)?;
        acc = shifted.try_sub(&acc)?;
    }
    Ok(acc)
}

/// Removal bounds (variable, power): the terms divisible by any listed
/// variable power are deleted from the complete polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovalSpec {
    pub bounds: Vec<(usize, u32)>,
}

impl RemovalSpec {
    pub fn new(bounds: Vec<(usize, u32)>) -> Self {
        RemovalSpec { bounds }
    }

    fn validate(&self, n: u32, t: u32) -> Result<(), CountingError> {
        let mut seen = Vec::new();
        let mut total = 0u64;
        for &(v, p) in &self.bounds {
            if v as u32 >= n {
                return Err(CountingError::InvalidRemoval(format!(
                    "variable index {v} out of range for {n} unknowns"
                )));
            }
            if p == 0 {
                return Err(CountingError::InvalidRemoval("power must be >= 1".into()));
            }
            if seen.contains(&v) {
                return Err(CountingError::InvalidRemoval(format!(
                    "variable index {v} listed twice"
                )));
            }
            seen.push(v);
            total += p as u64;
        }
        if total > t as u64 {
            return Err(CountingError::InvalidRemoval(format!(
                "powers sum to {total}, exceeding degree {t}"
            )));
        }
        Ok(())
    }
}

/// Count of monomials of the complete polynomial (degree T, n unknowns)
/// divisible by none of the listed variable powers. Computed as the
/// k-fold difference of N with steps (-P, -Q, ...), N extended by zero
/// below degree zero; expanding the difference gives the signed sum
/// over subsets of removals.
pub fn terms_after_removals(n: u32, t: u32, spec: &RemovalSpec) -> Result<u64, CountingError> {
    spec.validate(n, t)?;
    let k = spec.bounds.len();
    let mut acc = BigInt::zero();
    for mask in 0u32..(1 << k) {
        let mut arg = t as i64;
        let mut bits = 0u32;
        for (i, &(_, p)) in spec.bounds.iter().enumerate() {
            if mask & (1 << i) != 0 {
                arg -= p as i64;
                bits += 1;
            }
        }
        let term = num_terms_signed(n, arg);
        if bits % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc.to_u64().expect("non-negative count"))
}

/// Sum of any transversal of the n-row arithmetic-progression table with
/// first row S and common step k: S + k n(n-1)/2, whatever the selection
/// order.
pub fn progression_lemma_sum(first_row: &[Rational], k: &Rational) -> Rational {
    let n = first_row.len() as i64;
    let mut s = Rational::zero();
    for v in first_row {
        s += v;
    }
    s + k * Rational::from_integer(BigInt::from(n * (n - 1) / 2))
}

/// The degree theorem: the resultant of n complete equations of degrees
/// t, t1, ..., t_{n-1} has degree equal to their product.
pub fn resultant_degree_complete(degrees: &[u32]) -> u64 {
    degrees.iter().map(|&t| t as u64).product()
}

/// The theorem's own finite-difference route: (1/n!) d^n [(T+t)^n] with
/// steps (t, t1, ..., t_{n-1}) and T left symbolic. The result is a
/// polynomial in T that must be the constant prod(t_i).
pub fn degree_theorem_difference_form(degrees: &[u32]) -> Result<MultiPoly, CountingError> {
    use crate::poly::VarTable;
    let n = degrees.len() as u32;
    let vars = VarTable::new(vec!["T"]).expect("fresh table");
    let t0 = Rational::from_integer(BigInt::from(degrees[0]));
    let base = MultiPoly::var(&vars, 0)
        .try_add(&MultiPoly::constant(&vars, t0))?
        .pow(n);
    let steps: Vec<(VarIndex, MultiPoly)> = degrees
        .iter()
        .map(|&d| {
            (
                0usize,
                MultiPoly::constant(&vars, Rational::from_integer(BigInt::from(d))),
            )
        })
        .collect();
    let diff = finite_difference(&base, &DiffSpec::new(steps))?;
    let mut factorial = BigInt::from(1);
    for i in 2..=n as u64 {
        factorial *= BigInt::from(i);
    }
    Ok(diff.scale(&Rational::new(BigInt::from(1), factorial)))
}

/// The 1764 three-equation degree bound for the first derived polynomial,
/// as a function of the free multiplier degree n''. Transcribed as
/// given; the n''=0 boundary is sanity-checked in tests.
#[allow(clippy::too_many_arguments)]
pub fn degree_bound_3eq_1764(
    m: u32,
    mp: u32,
    mpp: u32,
    p: u32,
    pp: u32,
    ppp: u32,
    npp: u32,
) -> Result<i64, CountingError> {
    let (m, mp, mpp) = (m as i64, mp as i64, mpp as i64);
    let (p, pp, ppp) = (p as i64, pp as i64, ppp as i64);
    let npp = npp as i64;
    // n = m' - n'' - 2 must stay non-negative, and m + n >= m'' + n''.
    if mp - 2 < npp {
        return Err(CountingError::InfeasibleMultiplierDegree(format!(
            "n'' = {npp} exceeds m' - 2 = {}",
            mp - 2
        )));
    }
    let n = mp - npp - 2;
    if m + n < mpp + npp {
        return Err(CountingError::InfeasibleMultiplierDegree(format!(
            "m + n = {} falls below m'' + n'' = {}",
            m + n,
            mpp + npp
        )));
    }
    Ok(m * mp + p * mp + pp * m - m - mp + mpp - p - pp + ppp + 1
        - (p + pp - ppp + m + mp - mpp - npp - 2) * npp)
}

/// Unconstrained optimizer of the bound over n'':
/// (m + m' + m'' + p + p' + p'')/2 - m'' - p'' - 1. May be fractional;
/// the feasible sweep picks the attainable minimum.
pub fn optimal_multiplier_degree_3eq(m: u32, mp: u32, mpp: u32, p: u32, pp: u32, ppp: u32) -> Rational {
    let total = (m + mp + mpp + p + pp + ppp) as i64;
    Rational::new(BigInt::from(total), BigInt::from(2))
        - Rational::from_integer(BigInt::from(mpp as i64 + ppp as i64 + 1))
}
