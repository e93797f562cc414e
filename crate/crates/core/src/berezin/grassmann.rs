use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::series::{Rational, Ring};

/// Most generators a [`GrassmannElement`] can carry.
pub const MAX_GENERATORS: usize = 64;

/// Element of the exterior algebra on `m` generators `θ_0, …, θ_{m−1}`.
///
/// Each basis monomial is a generator subset, stored as a bit mask and read
/// in increasing generator order.
#[derive(Debug, Clone, PartialEq)]
pub struct GrassmannElement<C: Ring = Rational> {
    generators: usize,
    terms: BTreeMap<u64, C>,
}

/// Sign of `θ_A θ_B` relative to the ordered monomial `θ_{A∪B}`, or `None`
/// if the sets overlap.
fn merge_sign(a: u64, b: u64) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if j >= 63 { 0 } else { a >> (j + 1) };
        swaps += above.count_ones();
    }
    Some(swaps % 2 == 1)
}

impl<C: Ring> GrassmannElement<C> {
    pub fn zero(generators: usize) -> Self {
        assert!(generators <= MAX_GENERATORS, "at most {MAX_GENERATORS} generators");
        Self { generators, terms: BTreeMap::new() }
    }

    pub fn scalar(generators: usize, c: C) -> Self {
        let mut e = Self::zero(generators);
        e.add_term(0, c);
        e
    }

    /// `θ_i`.
    pub fn generator(generators: usize, i: usize) -> Self {
        assert!(i < generators, "generator {i} out of range");
        let mut e = Self::zero(generators);
        e.add_term(1 << i, C::one());
        e
    }

    /// `c · θ_{i_1} θ_{i_2} ⋯` in the given order (zero on repeats).
    pub fn monomial(generators: usize, indices: &[usize], c: C) -> Self {
        indices.iter().fold(Self::scalar(generators, c), |acc, &i| acc.mul(&Self::generator(generators, i)))
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &C)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: u64) -> C {
        self.terms.get(&mask).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, mask: u64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(slot) => {
                *slot = slot.clone() + c;
                if slot.is_zero() {
                    self.terms.remove(&mask);
                }
            }
            None => {
                self.terms.insert(mask, c);
            }
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.generators, other.generators, "Grassmann elements over different generator sets");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { generators: self.generators, terms: self.terms.iter().map(|(&m, c)| (m, -c.clone())).collect() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero(self.generators);
        for (&m, c) in &self.terms {
            out.add_term(m, c.scale(r));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = Self::zero(self.generators);
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                if let Some(negative) = merge_sign(a, b) {
                    let c = ca.clone() * cb.clone();
                    out.add_term(a | b, if negative { -c } else { c });
                }
            }
        }
        out
    }

    /// `exp(A) = Σ_k A^k / k!` for `A` without a scalar part; the sum is
    /// finite since such `A` is nilpotent.
    pub fn exp(&self) -> Result<Self> {
        if self.terms.contains_key(&0) {
            return Err(Error::ExpConstantTerm(self.coeff(0).to_string()));
        }
        let mut out = Self::scalar(self.generators, C::one());
        let mut power = out.clone();
        let mut k = 0u32;
        loop {
            k += 1;
            power = power.mul(self).scale(&Rational::new(BigInt::one(), BigInt::from(k)));
            if power.is_zero() {
                return Ok(out);
            }
            out = out.add(&power);
        }
    }

    /// Berezin integral `∫ d^mθ`: the coefficient of `θ_0 θ_1 ⋯ θ_{m−1}`.
    pub fn berezin_integral(&self) -> C {
        let top = if self.generators == 64 { u64::MAX } else { (1u64 << self.generators) - 1 };
        self.coeff(top)
    }

    /// Algebra homomorphism sending `θ_i` to `images[i]`.
    pub fn substitute(&self, images: &[GrassmannElement<C>]) -> Result<Self> {
        if images.len() != self.generators {
            return Err(Error::LengthMismatch { expected: self.generators, found: images.len() });
        }
        let target = images.first().map_or(self.generators, |e| e.generators);
        let mut out = GrassmannElement::zero(target);
        for (&mask, c) in &self.terms {
            let mut term = GrassmannElement::scalar(target, c.clone());
            let mut rest = mask;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                term = term.mul(&images[i]);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Image under the linear change `θ_i ↦ Σ_j m[i][j] θ_j`.
    pub fn linear_transform(&self, m: &[Vec<C>]) -> Result<Self> {
        let images: Vec<Self> = m
            .iter()
            .map(|row| {
                row.iter().enumerate().fold(Self::zero(self.generators), |acc, (j, c)| {
                    acc.add(&Self::monomial(self.generators, &[j], c.clone()))
                })
            })
            .collect();
        self.substitute(&images)
    }
}

impl<C: Ring> fmt::Display for GrassmannElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&mask, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for g in 0..self.generators {
                if mask >> g & 1 == 1 {
                    write!(f, "·θ{g}")?;
                }
            }
        }
        Ok(())
    }
}
