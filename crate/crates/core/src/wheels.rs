//! Alexander polynomial processing: the wheel coefficients `a'_{2m}`, the
//! wheel vector `α(M)`, its disjoint-union exponential and the regularized
//! torsion series.
//!
//! Wheels are indexed by `m`, the wheel `ω_{2m}` having `2m` legs and
//! diagram degree `m`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::truncated_kernel_squared;
use crate::series::{sinh_kernel_b, Partition, Rational, SymmetricLaurent, TruncatedSeries};

/// Alexander polynomial, symmetric in `t ↔ 1/t` and normalized by `Δ(1) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderPolynomial(SymmetricLaurent);

impl AlexanderPolynomial {
    pub fn new(body: SymmetricLaurent) -> Result<Self> {
        let at_one = body.eval_at_one();
        if !at_one.is_one() {
            return Err(Error::NotNormalized(at_one.to_string()));
        }
        Ok(Self(body))
    }

    /// `Δ = 1`, e.g. for `S² × S¹`.
    pub fn trivial() -> Self {
        Self(SymmetricLaurent::one())
    }

    /// From `a_0, …, a_d`, the coefficients of `t^0 … t^d`.
    pub fn from_nonnegative(coeffs: Vec<Rational>) -> Result<Self> {
        Self::new(SymmetricLaurent::from_nonnegative(coeffs))
    }

    pub fn body(&self) -> &SymmetricLaurent {
        &self.0
    }
}

impl fmt::Display for AlexanderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Coefficients of the wheels `ω_{2m}`, keyed by `m ≥ 1`, known for
/// `2m ≤ x_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelVector {
    x_order: usize,
    coeffs: BTreeMap<u32, Rational>,
}

impl WheelVector {
    pub fn new(x_order: usize, coeffs: BTreeMap<u32, Rational>) -> Result<Self> {
        if coeffs.keys().any(|&m| m == 0 || 2 * m as usize > x_order) {
            return Err(Error::Invalid(format!("wheel indices must satisfy 1 <= m <= {}", x_order / 2)));
        }
        Ok(Self { x_order, coeffs })
    }

    pub fn x_order(&self) -> usize {
        self.x_order
    }

    pub fn coeff(&self, m: u32) -> Rational {
        self.coeffs.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(&m, c)| (m, c))
    }
}

/// Formal exponential of a wheel vector under disjoint union: a coefficient
/// for each multiset of wheel indices, graded by total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelExponential {
    order: u32,
    terms: BTreeMap<Partition, Rational>,
}

impl WheelExponential {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, wheels: &Partition) -> Rational {
        self.terms.get(wheels).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }
}

/// `a'_{2m}` for `2m ≤ order`, from `−½ log Δ(e^x) = Σ a'_{2m} x^{2m}`.
pub fn a_coeffs(delta: &AlexanderPolynomial, order: usize) -> BTreeMap<u32, Rational> {
    let log = delta.0.substitute_exp(order).log().expect("Δ(1) = 1 is enforced at construction");
    let minus_half = Rational::new(BigInt::from(-1), BigInt::from(2));
    (1..=order / 2).map(|m| (m as u32, &log.coeffs()[2 * m] * &minus_half)).collect()
}

/// `α(M) = Σ_m (2b_{2m} + a'_{2m}) ω_{2m}` for `2m ≤ order`.
pub fn alpha(delta: &AlexanderPolynomial, order: usize) -> WheelVector {
    let b = sinh_kernel_b(order);
    let a = a_coeffs(delta, order);
    let two = Rational::from_integer(2.into());
    let coeffs = a.into_iter().map(|(m, a)| (m, &two * &b[&m] + a)).collect();
    WheelVector { x_order: order, coeffs }
}

/// `exp_⊔(α)` through total degree `order`: the coefficient of
/// `{m_1, …, m_r}` is `Π α_{m_i} / Π mult_j!`. Zero terms are dropped.
pub fn wheel_exp(alpha: &WheelVector, order: u32) -> WheelExponential {
    let mut terms = BTreeMap::new();
    for wheels in Partition::up_to(order) {
        let mut c = Rational::one();
        for &m in wheels.parts() {
            c *= alpha.coeff(m);
        }
        if c.is_zero() {
            continue;
        }
        c /= Rational::from_integer(wheels.automorphisms());
        terms.insert(wheels, c);
    }
    WheelExponential { order, terms }
}

/// The regularized torsion `x² τ(M; e^x) = ((x/2)/sinh(x/2))² Δ(e^x)`.
pub fn torsion_series(delta: &AlexanderPolynomial, order: usize) -> TruncatedSeries {
    truncated_kernel_squared(order).mul(&delta.0.substitute_exp(order)).expect("both series are in x")
}
