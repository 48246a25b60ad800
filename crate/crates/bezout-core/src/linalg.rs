//! Exact linear algebra over the polynomial ring.
//!
//! Two determinant routes: the 1764 inductive permutation rule (the
//! reference construction, exponential) and a fraction-free Bareiss
//! elimination (the fast path). They must agree on every input. Linear
//! systems are solved by the lines rule: adjoin the constant column as
//! the coefficient of a fictitious unknown t, then each unknown is the
//! ratio of its cofactor to the cofactor of t.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::poly::{MultiPoly, PolyError, VarTable};
use crate::rational::Rational;

/// Hard ceiling for the permutation-rule determinant; it exists to state
/// the rule and cross-validate the fast path, not to be fast.
pub const PERMUTATION_RULE_MAX: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    NonSquare { rows: usize, cols: usize },
    /// Permutation-rule determinant refused above PERMUTATION_RULE_MAX.
    TooLargeForPermutationRule(usize),
    ShapeMismatch(String),
    /// A wide matrix whose kernel could not be produced.
    NoNontrivialKernel,
    Poly(PolyError),
}

impl fmt::Display for LinAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinAlgError::NonSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            LinAlgError::TooLargeForPermutationRule(n) => write!(
                f,
                "permutation rule is reference-grade and capped at {PERMUTATION_RULE_MAX}; \
                 got {n}. Use det_fraction_free."
            ),
            LinAlgError::ShapeMismatch(s) => write!(f, "{s}"),
            LinAlgError::NoNontrivialKernel => write!(f, "matrix has no nontrivial kernel"),
            LinAlgError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for LinAlgError {}

impl From<PolyError> for LinAlgError {
    fn from(e: PolyError) -> Self {
        LinAlgError::Poly(e)
    }
}

/// Dense matrix with polynomial entries, row-major. Rows are equations
/// in input order, columns are unknowns in table order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl RingMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<MultiPoly>) -> Result<Self, LinAlgError> {
        if entries.len() != rows * cols {
            return Err(LinAlgError::ShapeMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if let Some(first) = entries.first() {
            let vt = first.vars();
            if entries.iter().any(|e| e.vars() != vt) {
                return Err(LinAlgError::Poly(PolyError::VarTableMismatch));
            }
        }
        Ok(RingMatrix { rows, cols, entries })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        vars: &Arc<VarTable>,
        mut f: impl FnMut(usize, usize) -> MultiPoly,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        let _ = vars;
        RingMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize, vars: &Arc<VarTable>) -> Self {
        RingMatrix {
            rows,
            cols,
            entries: vec![MultiPoly::zero(vars); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &MultiPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: MultiPoly) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn vars(&self) -> &Arc<VarTable> {
        self.entries[0].vars()
    }

    /// Matrix with column `c` removed.
    pub fn without_col(&self, c: usize) -> RingMatrix {
        let mut entries = Vec::with_capacity(self.rows * (self.cols - 1));
        for r in 0..self.rows {
            for j in 0..self.cols {
                if j != c {
                    entries.push(self.at(r, j).clone());
                }
            }
        }
        RingMatrix {
            rows: self.rows,
            cols: self.cols - 1,
            entries,
        }
    }

    /// Matrix with row `r` and column `c` removed.
    fn minor(&self, r: usize, c: usize) -> RingMatrix {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in 0..self.rows {
            if i == r {
                continue;
            }
            for j in 0..self.cols {
                if j != c {
                    entries.push(self.at(i, j).clone());
                }
            }
        }
        RingMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }

    /// True when every entry is a constant polynomial.
    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(|e| e.is_constant())
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// The 1764 determinant formation rule. Starting from ab - ba, each new
/// letter of the first row is inserted at every position of every word,
/// the sign flipping at each displacement; the letter at position k then
/// takes its value from row k. Exponential by construction; capped.
pub fn det_permutation_rule(m: &RingMatrix) -> Result<MultiPoly, LinAlgError> {
    if !m.is_square() {
        return Err(LinAlgError::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n > PERMUTATION_RULE_MAX {
        return Err(LinAlgError::TooLargeForPermutationRule(n));
    }
    let vars = m.vars();
    if n == 0 {
        return Ok(MultiPoly::one(vars));
    }
    // Words are permutations of column letters; position = row.
    let mut words: Vec<(bool, Vec<usize>)> = vec![(false, vec![0])];
    for letter in 1..n {
        let mut next = Vec::with_capacity(words.len() * (letter + 1));
        for (neg, w) in &words {
            // Insert the new letter at the last position first (no
            // displacement), then walk it left, flipping the sign per move.
            for pos in (0..=w.len()).rev() {
                let mut nw = w.clone();
                nw.insert(pos, letter);
                let moves = w.len() - pos;
                let flip = moves % 2 == 1;
                next.push((neg ^ flip, nw));
            }
        }
        words = next;
    }
    let mut det = MultiPoly::zero(vars);
    for (neg, w) in &words {
        let mut term = MultiPoly::one(vars);
        for (row, &col) in w.iter().enumerate() {
            term = term.try_mul(m.at(row, col))?;
        }
        if *neg {
            term = term.neg();
        }
        det = det.try_add(&term)?;
    }
    Ok(det)
}

/// Fraction-free determinant (Bareiss single-step elimination). The
/// divisions are exact in the polynomial ring, so the value is identical
/// to the permutation rule's.
pub fn det_fraction_free(m: &RingMatrix) -> Result<MultiPoly, LinAlgError> {
    if !m.is_square() {
        return Err(LinAlgError::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let vars = m.vars();
    if n == 0 {
        return Ok(MultiPoly::one(vars));
    }
    let mut a = m.clone();
    let mut sign_flip = false;
    let mut prev_pivot = MultiPoly::one(vars);
    for k in 0..n - 1 {
        if a.at(k, k).is_zero() {
            let swap = (k + 1..n).find(|&r| !a.at(r, k).is_zero());
            match swap {
                Some(r) => {
                    for c in 0..n {
                        let tmp = a.at(k, c).clone();
                        a.set(k, c, a.at(r, c).clone());
                        a.set(r, c, tmp);
                    }
                    sign_flip = !sign_flip;
                }
                None => return Ok(MultiPoly::zero(vars)),
            }
        }
        let pivot = a.at(k, k).clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a
                    .at(i, j)
                    .try_mul(&pivot)?
                    .try_sub(&a.at(i, k).try_mul(a.at(k, j))?)?;
                let val = num.divexact(&prev_pivot)?;
                a.set(i, j, val);
            }
            a.set(i, k, MultiPoly::zero(vars));
        }
        prev_pivot = pivot;
    }
    let det = a.at(n - 1, n - 1).clone();
    Ok(if sign_flip { det.neg() } else { det })
}

/// Solution of a square linear system read off the lines rule.
#[derive(Debug, Clone)]
pub struct LinearSolveResult {
    /// Numerator of each unknown: its coefficient in the final line.
    pub values: Vec<MultiPoly>,
    /// Common denominator: the coefficient of the fictitious unknown t.
    pub denominator: MultiPoly,
    /// False when the denominator is identically zero. Elimination
    /// deliberately seeks singular systems, so this is a flag, not an
    /// error.
    pub solvable: bool,
}

/// Signed cofactor vector of a wide matrix `b` with one more column than
/// its rank can fill: v[i] = (-1)^(n+1+i) det(b without column i), the
/// expansion pattern of the lines rule's final line. Satisfies B v = 0.
fn cofactor_kernel(b: &RingMatrix) -> Result<Vec<MultiPoly>, LinAlgError> {
    let n = b.rows;
    let mut v = Vec::with_capacity(b.cols);
    for c in 0..b.cols {
        let d = det_fraction_free(&b.without_col(c))?;
        // Sign of the cofactor for an appended row at index n (0-based).
        let neg = (n + c) % 2 == 1;
        v.push(if neg { d.neg() } else { d });
    }
    Ok(v)
}

/// Solve `coeffs * x = constants` by the lines rule. The constant column
/// joins the matrix as the coefficient of the fictitious unknown t (last
/// column); unknown i is values[i] / denominator.
pub fn lines_rule_solve(
    coeffs: &RingMatrix,
    constants: &[MultiPoly],
) -> Result<LinearSolveResult, LinAlgError> {
    if !coeffs.is_square() {
        return Err(LinAlgError::NonSquare {
            rows: coeffs.rows,
            cols: coeffs.cols,
        });
    }
    if constants.len() != coeffs.rows {
        return Err(LinAlgError::ShapeMismatch(format!(
            "{} constants for {} equations",
            constants.len(),
            coeffs.rows
        )));
    }
    let n = coeffs.rows;
    let vars = coeffs.vars();
    // Equations are coeffs*x - constants = 0, so t's column is -constants.
    let mut b = RingMatrix::zero(n, n + 1, vars);
    for r in 0..n {
        for c in 0..n {
            b.set(r, c, coeffs.at(r, c).clone());
        }
        b.set(r, n, constants[r].neg());
    }
    let mut v = cofactor_kernel(&b)?;
    let denominator = v.pop().expect("t column");
    let solvable = !denominator.is_zero();
    Ok(LinearSolveResult {
        values: v,
        denominator,
        solvable,
    })
}

/// The equation of condition for a homogeneous square system: its
/// determinant. The system admits a nontrivial solution exactly where
/// this polynomial vanishes.
pub fn homogeneous_condition(coeffs: &RingMatrix) -> Result<MultiPoly, LinAlgError> {
    if !coeffs.is_square() {
        return Err(LinAlgError::NonSquare {
            rows: coeffs.rows,
            cols: coeffs.cols,
        });
    }
    det_fraction_free(coeffs)
}

/// A nonzero exact kernel vector of a wide constant matrix (rows < cols,
/// entries degree-0). For the lines-rule shape rows = cols-1 the vector
/// is the signed cofactor pattern whenever that pattern is nonzero;
/// otherwise (and for wider matrices) it falls back to row reduction.
pub fn nullspace_vector(coeffs: &RingMatrix) -> Result<Vec<Rational>, LinAlgError> {
    if coeffs.rows >= coeffs.cols {
        return Err(LinAlgError::ShapeMismatch(format!(
            "need a wide matrix, got {}x{}",
            coeffs.rows, coeffs.cols
        )));
    }
    if !coeffs.is_constant() {
        return Err(LinAlgError::ShapeMismatch(
            "nullspace_vector expects constant entries".into(),
        ));
    }
    let rat = |r: usize, c: usize| coeffs.at(r, c).constant_term();
    if coeffs.rows + 1 == coeffs.cols && coeffs.cols <= 12 {
        let v = cofactor_kernel(coeffs)?;
        if v.iter().any(|p| !p.is_zero()) {
            return Ok(v.into_iter().map(|p| p.constant_term()).collect());
        }
    }
    let rows: Vec<Vec<Rational>> = (0..coeffs.rows)
        .map(|r| (0..coeffs.cols).map(|c| rat(r, c)).collect())
        .collect();
    rational_kernel_vector(&rows).ok_or(LinAlgError::NoNontrivialKernel)
}

/// One nonzero kernel vector of a rational matrix via Gaussian
/// elimination, or None when the kernel is trivial.
pub fn rational_kernel_vector(rows: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    if rows.is_empty() {
        return None;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        let pivot_row = (r..m.len()).find(|&i| !m[i][c].is_zero());
        let Some(p) = pivot_row else { continue };
        m.swap(r, p);
        let inv = m[r][c].clone().recip();
        for j in c..ncols {
            let v = &m[r][j] * &inv;
            m[r][j] = v;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..ncols {
                    let v = &m[i][j] - &factor * &m[r][j];
                    m[i][j] = v;
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let free_col = (0..ncols).find(|c| !pivot_cols.contains(c))?;
    let mut v = vec![Rational::zero(); ncols];
    v[free_col] = Rational::from_integer(1.into());
    for (row, &pc) in pivot_col_of_row.iter().enumerate() {
        v[pc] = -m[row][free_col].clone();
    }
    Some(v)
}

/// Exact solution of a rational square system `a x = b`, or None if
/// singular. Plain Gaussian elimination over Q.
pub fn solve_rational_system(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, pivot);
        let inv = m[k][k].clone().recip();
        for j in k..=n {
            let v = &m[k][j] * &inv;
            m[k][j] = v;
        }
        for i in 0..n {
            if i != k && !m[i][k].is_zero() {
                let f = m[i][k].clone();
                for j in k..=n {
                    let v = &m[i][j] - &f * &m[k][j];
                    m[i][j] = v;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}
