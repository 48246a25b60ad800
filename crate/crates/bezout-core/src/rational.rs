//! Exact scalar arithmetic: arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The coefficient field. `BigRational` already keeps the invariants we
/// need: reduced fraction, positive denominator, zero stored as 0/1.
pub type Rational = BigRational;

/// Shorthand for a rational from two machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer rational.
pub fn int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Renders `n/d` with the denominator always present ("3/1", "-1/2").
pub fn format_exact(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Renders a rational the way it appears in polynomial text: "3", "-1/2".
pub fn format_plain(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient as a rational scalar.
pub fn binomial_rat(n: u64, k: u64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// True if `r` is a non-negative integer.
pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.denom().is_one() && !r.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(12, 4), BigInt::from(495));
    }

    #[test]
    fn exact_format_keeps_denominator() {
        assert_eq!(format_exact(&rat(2, 1)), "2/1");
        assert_eq!(format_exact(&rat(-1, 2)), "-1/2");
        assert_eq!(format_plain(&rat(-1, 2)), "-1/2");
        assert_eq!(format_plain(&int(7)), "7");
    }
}
