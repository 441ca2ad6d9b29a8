//! Exact rational arithmetic and dense linear algebra.
//!
//! Every homology computation in the crate bottoms out here. Nothing is ever
//! rounded: entries are arbitrary-precision rationals kept in lowest terms.

mod matrix;

pub use matrix::{DimensionError, RationalMatrix, Rref};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number in canonical form
/// (positive denominator, numerator and denominator coprime).
pub type Rational = num_rational::BigRational;

/// Dense column vector of rationals.
pub type RationalVector = Vec<Rational>;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `(-1)^exponent` as a rational.
pub fn sign(exponent: usize) -> Rational {
    if exponent.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Scales `v` so that its first nonzero entry is 1. Returns `None` for the zero vector.
pub fn normalize_direction(v: &[Rational]) -> Option<RationalVector> {
    let lead = v.iter().find(|x| !x.is_zero())?;
    let inv = lead.recip();
    Some(v.iter().map(|x| x * &inv).collect())
}

/// Canonical `numerator/denominator` rendering used in reports.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn is_canonical(q: &Rational) -> bool {
    use num_integer::Integer;
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_canonical() {
        let q = rational(6, -4);
        assert_eq!(format_rational(&q), "-3/2");
        assert!(is_canonical(&q));
        assert!(is_canonical(&(q.clone() + rational(3, 2))));
        assert_eq!(parse_rational("-6/4"), Some(q));
        assert_eq!(parse_rational("5"), Some(int(5)));
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn direction_normalization() {
        let v = vec![int(0), int(-2), int(4)];
        assert_eq!(normalize_direction(&v), Some(vec![int(0), int(1), int(-2)]));
        assert_eq!(normalize_direction(&[int(0)]), None);
    }
}
