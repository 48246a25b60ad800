//! Exact elimination theory over arbitrary-precision rationals.
//!
//! The crate builds resultants of polynomial systems the classical way:
//! reduce elimination to the solvability of linear systems over a
//! polynomial ring, then read the resultant off a determinant. It covers
//! the Sylvester matrix, the Bezout matrix (equal and unequal degrees),
//! the Bezout identity, the term-counting and finite-difference
//! machinery behind the degree theorem D = t * t1 * ... * t_{n-1}, the
//! equation-somme elimination methods for n equations in n unknowns with
//! superfluous-factor stripping, and the 1762 solvable classes with
//! radical-sum roots.
//!
//! Everything except radical evaluation is exact rational arithmetic.

pub mod counting;
pub mod eliminate;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod resolvent;
pub mod resultant;
pub mod sysio;

pub use linalg::{LinAlgError, LinearSolveResult, RingMatrix};
pub use poly::{collect_wrt, substitute_power, Monomial, MultiPoly, PolyError, UniView, VarIndex, VarTable};
pub use rational::Rational;
