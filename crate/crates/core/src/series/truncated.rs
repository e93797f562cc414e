use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{factorial, Rational};
use crate::error::{Error, Result};

/// Power series `c_0 + c_1 x + … + c_N x^N` known exactly up to and including
/// order `N`.
///
/// Arithmetic between series of different orders truncates to the smaller
/// order; nothing beyond a series' order is ever reported.
#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    var: String,
    coeffs: Vec<Rational>,
}

/// Outcome of comparing two series on their common range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesComparison {
    pub order: usize,
    pub equal: bool,
}

impl TruncatedSeries {
    /// Builds a series of the given order; missing coefficients are zero and
    /// surplus ones are dropped.
    pub fn new(var: impl Into<String>, mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { var: var.into(), coeffs }
    }

    pub fn zero(var: impl Into<String>, order: usize) -> Self {
        Self::new(var, Vec::new(), order)
    }

    pub fn one(var: impl Into<String>, order: usize) -> Self {
        Self::constant(var, Rational::one(), order)
    }

    pub fn constant(var: impl Into<String>, c: Rational, order: usize) -> Self {
        Self::new(var, vec![c], order)
    }

    /// `c · x^k`.
    pub fn monomial(var: impl Into<String>, k: usize, c: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        Self { var: var.into(), coeffs }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`, or `None` past the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&Rational> {
        self.coeffs.get(k)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self { var: self.var.clone(), coeffs: self.coeffs[..=order].to_vec() }
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VariableMismatch { left: self.var.clone(), right: other.var.clone() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        Ok(Self { var: self.var.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let n = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self { var: self.var.clone(), coeffs })
    }

    pub fn neg(&self) -> Self {
        Self { var: self.var.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { var: self.var.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// `exp(f)` for `f(0) = 0`, via `n g_n = Σ_k k f_k g_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpConstantTerm(self.coeffs[0].to_string()));
        }
        let n = self.order();
        let mut g = vec![Rational::zero(); n + 1];
        g[0] = Rational::one();
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += Rational::from_integer(BigInt::from(k)) * &self.coeffs[k] * &g[m - k];
                }
            }
            g[m] = acc / Rational::from_integer(BigInt::from(m));
        }
        Ok(Self { var: self.var.clone(), coeffs: g })
    }

    /// `log(f)` for `f(0) = 1`, by Newton iteration `g ← g − 1 + f·exp(−g)`
    /// against [`TruncatedSeries::exp`].
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogConstantTerm(self.coeffs[0].to_string()));
        }
        let one = Self::one(self.var.clone(), self.order());
        let mut g = Self::zero(self.var.clone(), self.order());
        // Each step doubles the number of correct coefficients.
        for _ in 0..=usize::BITS - self.order().leading_zeros() + 1 {
            let next = g.sub(&one)?.add(&self.mul(&g.neg().exp()?)?)?;
            if next.coeffs == g.coeffs {
                break;
            }
            g = next;
        }
        Ok(g)
    }

    /// Compares on `0..=min(order)`.
    pub fn compare(&self, other: &Self) -> SeriesComparison {
        let order = self.order().min(other.order());
        let equal = self.var == other.var && self.coeffs[..=order] == other.coeffs[..=order];
        SeriesComparison { order, equal }
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other).equal
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
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
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}·")?;
                    }
                    write!(f, "{}", self.var)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order() + 1)
    }
}

/// `sinh(x/2)/(x/2) = Σ_k x^{2k} / (4^k (2k+1)!)`.
fn sinh_ratio(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|j| {
            if j % 2 == 1 {
                return Rational::zero();
            }
            let k = (j / 2) as u32;
            let den = BigInt::from(4).pow(k) * factorial(2 * k + 1);
            Rational::new(BigInt::one(), den)
        })
        .collect();
    TruncatedSeries::new("x", coeffs, order)
}

/// Coefficients `b_{2m}` (keyed by `m`, `2m ≤ order`) of
/// `−log((x/2)/sinh(x/2)) = Σ_m 2 b_{2m} x^{2m}`.
pub fn sinh_kernel_b(order: usize) -> BTreeMap<u32, Rational> {
    let log = sinh_ratio(order).log().expect("constant term is 1");
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    (1..=order / 2).map(|m| (m as u32, &log.coeffs[2 * m] * &half)).collect()
}

/// Square of the kernel `(x/2)/sinh(x/2)` up to `order`.
pub(crate) fn truncated_kernel_squared(order: usize) -> TruncatedSeries {
    sinh_ratio(order).log().and_then(|l| l.scale(&Rational::from_integer((-2).into())).exp()).expect("valid kernel")
}
