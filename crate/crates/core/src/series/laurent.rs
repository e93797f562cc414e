use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{factorial, Rational, TruncatedSeries};
use crate::error::{Error, Result};

/// Laurent polynomial `Σ_{k=-d}^{d} a_k t^k` with `a_k = a_{-k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricLaurent {
    // a_0, a_1, …, a_d; the negative half is implied.
    half: Vec<Rational>,
}

impl SymmetricLaurent {
    /// From the full coefficient list `a_{-d}, …, a_d`. Asymmetric input is
    /// rejected, never symmetrized.
    pub fn from_full(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len().is_multiple_of(2) {
            return Err(Error::Asymmetric);
        }
        let d = coeffs.len() / 2;
        if (1..=d).any(|k| coeffs[d + k] != coeffs[d - k]) {
            return Err(Error::Asymmetric);
        }
        Ok(Self::from_nonnegative(coeffs[d..].to_vec()))
    }

    /// From `a_0, …, a_d`, mirroring to negative powers.
    pub fn from_nonnegative(mut half: Vec<Rational>) -> Self {
        while half.len() > 1 && half.last().is_some_and(Zero::is_zero) {
            half.pop();
        }
        if half.is_empty() {
            half.push(Rational::zero());
        }
        Self { half }
    }

    pub fn one() -> Self {
        Self::from_nonnegative(vec![Rational::one()])
    }

    pub fn degree(&self) -> usize {
        self.half.len() - 1
    }

    pub fn coeff(&self, k: i64) -> Rational {
        self.half.get(k.unsigned_abs() as usize).cloned().unwrap_or_else(Rational::zero)
    }

    /// `a_0, …, a_d`.
    pub fn nonnegative_coeffs(&self) -> &[Rational] {
        &self.half
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (d1, d2) = (self.degree() as i64, other.degree() as i64);
        let half = (0..=d1 + d2)
            .map(|k| {
                (-d1..=d1)
                    .filter(|i| (k - i).abs() <= d2)
                    .map(|i| self.coeff(i) * other.coeff(k - i))
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect();
        Self::from_nonnegative(half)
    }

    pub fn eval_at_one(&self) -> Rational {
        self.half
            .iter()
            .enumerate()
            .map(|(k, a)| if k == 0 { a.clone() } else { a * Rational::from_integer(2.into()) })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// `Δ(e^x)` as a series in `x` through `x^order`:
    /// `a_0 + Σ_k a_k · 2cosh(kx)`, so odd coefficients vanish.
    pub fn substitute_exp(&self, order: usize) -> TruncatedSeries {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = self.eval_at_one();
        for j in (2..=order).step_by(2) {
            let mut acc = Rational::zero();
            for (k, a) in self.half.iter().enumerate().skip(1) {
                if !a.is_zero() {
                    acc += a * Rational::from_integer(BigInt::from(k).pow(j as u32) * 2);
                }
            }
            coeffs[j] = acc / Rational::from_integer(factorial(j as u32));
        }
        TruncatedSeries::new("x", coeffs, order)
    }
}

impl fmt::Display for SymmetricLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree() as i64;
        let mut first = true;
        for k in (-d..=d).rev() {
            let c = self.coeff(k);
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}·")?;
            }
            match k {
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
