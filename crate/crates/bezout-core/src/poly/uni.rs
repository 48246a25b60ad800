//! A polynomial reorganized by the powers of one main variable.

use std::sync::Arc;

use super::{Monomial, MultiPoly, PolyError, VarIndex};

/// `A*x^m + B*x^(m-1) + ... + V` with the main variable factored out.
/// `coeffs[0]` is the leading coefficient and is always nonzero; the
/// others may be zero. Coefficients never contain the main variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniView {
    main: VarIndex,
    coeffs: Vec<MultiPoly>,
    /// Total degree of each coefficient in the remaining variables;
    /// `None` for interior zero coefficients. These are actual degrees,
    /// not an assumed arithmetic progression.
    p_offsets: Vec<Option<u32>>,
}

impl UniView {
    pub fn main(&self) -> VarIndex {
        self.main
    }

    /// Degree in the main variable.
    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    /// Coefficients by descending power; index 0 is the leading one.
    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn leading(&self) -> &MultiPoly {
        &self.coeffs[0]
    }

    pub fn p_offsets(&self) -> &[Option<u32>] {
        &self.p_offsets
    }

    /// Smallest `p` such that coefficient of `x^(m-i)` has degree <= p+i
    /// for every i: the start of the dominating arithmetic progression.
    pub fn progression_offset(&self) -> u32 {
        self.p_offsets
            .iter()
            .enumerate()
            .filter_map(|(i, d)| d.map(|d| d.saturating_sub(i as u32)))
            .max()
            .unwrap_or(0)
    }

    /// Build directly from descending coefficients. The leading entry
    /// must be nonzero and no coefficient may contain the main variable.
    pub fn from_coeffs(
        main: VarIndex,
        coeffs: Vec<MultiPoly>,
    ) -> Result<UniView, PolyError> {
        if coeffs.is_empty() || coeffs[0].is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        debug_assert!(coeffs.iter().all(|c| !c.contains_var(main)));
        let p_offsets = coeffs.iter().map(|c| c.total_degree()).collect();
        Ok(UniView {
            main,
            coeffs,
            p_offsets,
        })
    }

    /// Reassemble the source polynomial exactly.
    pub fn assemble(&self) -> MultiPoly {
        let vars = self.coeffs[0].vars();
        let m = self.degree();
        let mut acc = MultiPoly::zero(vars);
        for (i, c) in self.coeffs.iter().enumerate() {
            let power = Monomial::var(vars.len(), self.main, m - i as u32);
            acc = acc.try_add(&c.mul_monomial(&power)).expect("same table");
        }
        acc
    }

    /// Coefficient of `main^k`.
    pub fn coeff_of_power(&self, k: u32) -> MultiPoly {
        let m = self.degree();
        if k > m {
            MultiPoly::zero(self.coeffs[0].vars())
        } else {
            self.coeffs[(m - k) as usize].clone()
        }
    }
}

/// Regroup `p` by descending powers of `main`. Errors on the zero
/// polynomial, whose view would have no leading coefficient.
pub fn collect_wrt(p: &MultiPoly, main: VarIndex) -> Result<UniView, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let vars = Arc::clone(p.vars());
    let m = p.degree_in(main).unwrap();
    let mut coeffs = vec![MultiPoly::zero(&vars); m as usize + 1];
    for (mono, c) in p.terms() {
        let e = mono.exponent(main);
        let mut rest = mono.clone();
        rest.0[main] = 0;
        let slot = (m - e) as usize;
        let t = MultiPoly::from_terms(&vars, [(rest, c.clone())]);
        coeffs[slot] = coeffs[slot].try_add(&t).expect("same table");
    }
    UniView::from_coeffs(main, coeffs)
}

/// Result of eliminating high powers of the main variable through a
/// relation: `multiplier * p = quotient * relation + reduced`, so the
/// reduced view agrees with a polynomial multiple of `p` modulo the
/// relation. The multiplier is the relation's leading coefficient raised
/// to the number of reduction steps.
#[derive(Debug, Clone)]
pub struct PowerReduction {
    pub reduced: Vec<MultiPoly>,
    pub multiplier: MultiPoly,
    pub steps: u32,
}

impl PowerReduction {
    /// The reduced polynomial as a plain MultiPoly (may be zero).
    pub fn reduced_poly(&self, main: VarIndex) -> MultiPoly {
        let vars = self.multiplier.vars();
        let mut acc = MultiPoly::zero(vars);
        let top = self.reduced.len() as u32 - 1;
        for (i, c) in self.reduced.iter().enumerate() {
            let power = Monomial::var(vars.len(), main, top - i as u32);
            acc = acc.try_add(&c.mul_monomial(&power)).expect("same table");
        }
        acc
    }
}

/// Divide out every power of the main variable at or above the
/// relation's degree: repeatedly replaces the leading term of `p` using
/// `relation = 0`, multiplying through by the relation's leading
/// coefficient so the arithmetic stays polynomial.
pub fn substitute_power(p: &UniView, relation: &UniView) -> Result<PowerReduction, PolyError> {
    if p.main() != relation.main() {
        return Err(PolyError::VarTableMismatch);
    }
    let d = relation.degree();
    if d == 0 {
        return Err(PolyError::RelationDegreeZero);
    }
    let vars = p.coeffs()[0].vars();
    let lead = relation.leading().clone();
    // Dense descending coefficient list of the working polynomial.
    let mut work: Vec<MultiPoly> = p.coeffs().to_vec();
    let mut multiplier = MultiPoly::one(vars);
    let mut steps = 0u32;
    // Degree of work[0] in main is work.len()-1.
    while work.len() as u32 > d {
        let top = work[0].clone();
        if top.is_zero() {
            work.remove(0);
            continue;
        }
        // lead * work - top * x^(deg-d) * relation
        let mut next: Vec<MultiPoly> = work
            .iter()
            .map(|c| c.try_mul(&lead).expect("same table"))
            .collect();
        for (j, rc) in relation.coeffs().iter().enumerate() {
            let t = top.try_mul(rc).expect("same table");
            next[j] = next[j].try_sub(&t).expect("same table");
        }
        debug_assert!(next[0].is_zero());
        next.remove(0);
        work = next;
        multiplier = multiplier.try_mul(&lead).expect("same table");
        steps += 1;
    }
    // Pad to exactly d slots (degree d-1 view) for a stable shape.
    while (work.len() as u32) < d {
        work.insert(0, MultiPoly::zero(vars));
    }
    Ok(PowerReduction {
        reduced: work,
        multiplier,
        steps,
    })
}
