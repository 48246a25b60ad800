//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms live in a BTreeMap keyed by exponent vectors under graded-lex
//! order. The map order is canonical-form plumbing only; no result may
//! depend on it. All values are immutable after construction.

mod uni;

pub use uni::{collect_wrt, substitute_power, PowerReduction, UniView};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::rational::{format_plain, Rational};

/// Index of a variable inside its [`VarTable`].
pub type VarIndex = usize;

/// Ordered list of distinct variable names. The order is fixed for the
/// lifetime of a computation: it defines exponent positions and the row
/// order of every determinant built downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
}

impl VarTable {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Arc<Self>, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(VarTable { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: VarIndex) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<VarIndex> {
        self.names.iter().position(|n| n == name)
    }

    /// A new table with `extra` names appended.
    pub fn extended<S: Into<String>>(
        &self,
        extra: Vec<S>,
    ) -> Result<Arc<Self>, PolyError> {
        let mut names = self.names.clone();
        for e in extra {
            names.push(e.into());
        }
        VarTable::new(names)
    }
}

/// Exponent vector, one entry per table variable. Ordered graded-lex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, v: VarIndex, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[v] = exp;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, v: VarIndex) -> u32 {
        self.0[v]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Quotient exponents; caller must have checked divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Operands built over different variable tables.
    VarTableMismatch,
    DuplicateVariable(String),
    UnknownVariable(String),
    /// The zero polynomial where a nonzero one is required.
    ZeroPolynomial,
    /// `eval` point missing a binding for a variable that occurs.
    UnboundVariable(String),
    /// Power-substitution relation must have positive degree.
    RelationDegreeZero,
    /// Exact division requested for a non-divisible pair.
    NotDivisible,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::VarTableMismatch => write!(f, "operands use different variable tables"),
            PolyError::DuplicateVariable(n) => write!(f, "duplicate variable `{n}`"),
            PolyError::UnknownVariable(n) => write!(f, "unknown variable `{n}`"),
            PolyError::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            PolyError::UnboundVariable(n) => write!(f, "no value bound for variable `{n}`"),
            PolyError::RelationDegreeZero => {
                write!(f, "substitution relation must have degree >= 1")
            }
            PolyError::NotDivisible => write!(f, "exact division failed: not a multiple"),
        }
    }
}

impl std::error::Error for PolyError {}

/// Sparse multivariate polynomial over Q. No stored coefficient is zero;
/// the zero polynomial has an empty term map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<VarTable>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &Arc<VarTable>) -> Self {
        MultiPoly {
            vars: Arc::clone(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<VarTable>) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Arc<VarTable>, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(vars.len()), c);
        }
        MultiPoly {
            vars: Arc::clone(vars),
            terms,
        }
    }

    /// The monomial `v^exp` with coefficient 1.
    pub fn var_power(vars: &Arc<VarTable>, v: VarIndex, exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(vars.len(), v, exp), Rational::one());
        MultiPoly {
            vars: Arc::clone(vars),
            terms,
        }
    }

    pub fn var(vars: &Arc<VarTable>, v: VarIndex) -> Self {
        Self::var_power(vars, v, 1)
    }

    pub fn from_terms(
        vars: &Arc<VarTable>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.0.len(), vars.len());
            let entry = map.entry(m).or_insert_with(Rational::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        MultiPoly {
            vars: Arc::clone(vars),
            terms: map,
        }
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` marks the zero polynomial, so that callers
    /// relying on a degree fail loudly instead of seeing -1.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Degree in a single variable; `None` for the zero polynomial.
    pub fn degree_in(&self, v: VarIndex) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    /// Total degree ignoring the exponents of `skip` variables.
    pub fn total_degree_excluding(&self, skip: &[VarIndex]) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| {
                m.0.iter()
                    .enumerate()
                    .filter(|(i, _)| !skip.contains(i))
                    .map(|(_, e)| *e)
                    .sum()
            })
            .max()
    }

    /// Total degree restricted to the listed variables.
    pub fn total_degree_in(&self, keep: &[VarIndex]) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| keep.iter().map(|&v| m.exponent(v)).sum())
            .max()
    }

    pub fn contains_var(&self, v: VarIndex) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// The constant term as a rational.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::unit(self.vars.len()))
    }

    /// True if the polynomial is a constant (possibly zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() == 0)
    }

    /// Leading term under graded-lex (largest monomial).
    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn check_same_table(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VarTableMismatch)
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_same_table(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(MultiPoly {
            vars: Arc::clone(&self.vars),
            terms,
        })
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_same_table(other)?;
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let entry = terms.entry(m).or_insert_with(Rational::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(MultiPoly {
            vars: Arc::clone(&self.vars),
            terms,
        })
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.vars);
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same table");
        }
        acc
    }

    /// Exact evaluation. Every variable occurring in the polynomial must
    /// be bound; `point[i]` binds variable `i`, `None` leaves it unbound.
    pub fn eval(&self, point: &[Option<Rational>]) -> Result<Rational, PolyError> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &point[v] {
                    Some(val) => {
                        let mut p = Rational::one();
                        for _ in 0..e {
                            p *= val;
                        }
                        term *= p;
                    }
                    None => {
                        return Err(PolyError::UnboundVariable(
                            self.vars.name(v).to_string(),
                        ))
                    }
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Evaluate with every variable bound, positionally.
    pub fn eval_full(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        let opts: Vec<Option<Rational>> = point.iter().cloned().map(Some).collect();
        self.eval(&opts)
    }

    /// Replace variable `v` by an arbitrary polynomial over the same table.
    pub fn substitute(&self, v: VarIndex, replacement: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_same_table(replacement)?;
        // Cache powers of the replacement.
        let max_e = self.degree_in(v).unwrap_or(0);
        let mut powers: Vec<MultiPoly> = Vec::with_capacity(max_e as usize + 1);
        powers.push(MultiPoly::one(&self.vars));
        for _ in 0..max_e {
            let next = powers.last().unwrap().try_mul(replacement)?;
            powers.push(next);
        }
        let mut acc = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let mut rest = m.clone();
            rest.0[v] = 0;
            let part = powers[e as usize].mul_monomial(&rest).scale(c);
            acc = acc.try_add(&part)?;
        }
        Ok(acc)
    }

    /// Specialize variable `v` to a rational, dropping it from the terms
    /// (the exponent becomes zero; the table is unchanged).
    pub fn specialize(&self, v: VarIndex, value: &Rational) -> MultiPoly {
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let mut k = c.clone();
            for _ in 0..e {
                k *= value;
            }
            let mut rest = m.clone();
            rest.0[v] = 0;
            if !k.is_zero() {
                let entry = terms.entry(rest).or_insert_with(Rational::zero);
                *entry += k;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly {
            vars: Arc::clone(&self.vars),
            terms,
        }
    }

    /// Exact division. Errors with `NotDivisible` if `self` is not a
    /// polynomial multiple of `divisor`.
    pub fn divexact(&self, divisor: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_same_table(divisor)?;
        if divisor.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let (dm, dc) = divisor.leading().expect("nonzero divisor");
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quo: BTreeMap<Monomial, Rational> = BTreeMap::new();
        while let Some((lm, lc)) = rem.leading() {
            if !dm.divides(lm) {
                return Err(PolyError::NotDivisible);
            }
            let qm = lm.div(&dm);
            let qc = lc / &dc;
            quo.insert(qm.clone(), qc.clone());
            let t = MultiPoly::from_terms(&self.vars, [(qm, qc)]);
            rem = rem.try_sub(&t.try_mul(divisor)?)?;
        }
        Ok(MultiPoly {
            vars: Arc::clone(&self.vars),
            terms: quo,
        })
    }

    /// Rational content: gcd of coefficient numerators over lcm of
    /// denominators, signed so the graded-lex leading coefficient of the
    /// primitive part is positive. Zero polynomial has content 0.
    pub fn content(&self) -> Rational {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return Rational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        let (_, lead) = self.leading().expect("nonzero");
        if (lead / &content) < Rational::zero() {
            content = -content;
        }
        content
    }

    /// `self / content()`: integer-primitive with positive leading
    /// coefficient. Canonical representative up to nonzero rational scale.
    pub fn primitive_part(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Map this polynomial onto a larger table; `mapping[i]` gives the
    /// new index of old variable `i`.
    pub fn relabel(&self, new_vars: &Arc<VarTable>, mapping: &[VarIndex]) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; new_vars.len()];
                for (old, &new) in mapping.iter().enumerate() {
                    e[new] = m.0[old];
                }
                (Monomial(e), c.clone())
            })
            .collect();
        MultiPoly {
            vars: Arc::clone(new_vars),
            terms,
        }
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical text form, re-parseable by the system grammar: explicit
    /// `*`, `^` powers, terms in descending graded-lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = *c < Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || m.total_degree() == 0 {
                parts.push(format_plain(&abs));
            }
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    parts.push(self.vars.name(v).to_string());
                } else {
                    parts.push(format!("{}^{}", self.vars.name(v), e));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
