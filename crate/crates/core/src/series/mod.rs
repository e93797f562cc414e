//! Exact arithmetic substrate: rationals, truncated power series, symmetric
//! Laurent polynomials, multivariate polynomials and integer partitions.

mod laurent;
mod multipoly;
mod partition;
mod truncated;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use laurent::SymmetricLaurent;
pub use multipoly::{Monomial, MultiPoly};
pub use partition::Partition;
pub use truncated::{sinh_kernel_b, SeriesComparison, TruncatedSeries};
pub(crate) use truncated::truncated_kernel_squared;

use crate::error::{Error, Result};

/// Arbitrary precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Commutative ring of exact coefficients: plain rationals or polynomials in
/// named indeterminates.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: Rational) -> Self;

    fn scale(&self, r: &Rational) -> Self {
        self.clone() * Self::from_rational(r.clone())
    }

    fn power(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Ring for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Parses `"-3"`, `"5/12"` or `" 7 / -2 "`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_in_lowest_terms() {
        assert_eq!(parse_rational("6/-4").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn ring_pow() {
        assert_eq!(frac(2, 3).power(3), frac(8, 27));
        assert_eq!(int(5).power(0), int(1));
    }
}
