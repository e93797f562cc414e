//! Classical invariants of a closed oriented 3-manifold.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::series::Rational;
use crate::wheels::AlexanderPolynomial;

/// The Betti-number specific piece of classical data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    /// No extra data: `b1 = 0` or `b1 ≥ 4`.
    None,
    /// `b1 = 1`: the normalized Alexander polynomial.
    Alexander(AlexanderPolynomial),
    /// `b1 = 2`: the linking invariant `μ(M) = ∫ g dg`.
    Linking(Rational),
    /// `b1 = 3`: the cup-product integer `μ` (the triple Milnor invariant of
    /// a surgery presentation).
    CupTriple(i64),
}

/// Classical data of a 3-manifold: first Betti number, order of the torsion
/// subgroup of `H_1(M; Z)` and the structure field matching `b1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalData {
    b1: u32,
    tor_order: u64,
    structure: Structure,
}

/// `|H_1(M; Z)|`, with `0` standing for an infinite group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct H1Order(pub u64);

impl H1Order {
    pub fn value(self) -> u64 {
        self.0
    }

    pub fn to_rational(self) -> Rational {
        Rational::from_integer(BigInt::from(self.0))
    }
}

impl ClassicalData {
    pub fn new(b1: u32, tor_order: u64, structure: Structure) -> Result<Self> {
        if tor_order == 0 {
            return Err(Error::Invalid("torsion order must be at least 1".into()));
        }
        let ok = matches!(
            (b1, &structure),
            (0, Structure::None)
                | (1, Structure::Alexander(_))
                | (2, Structure::Linking(_))
                | (3, Structure::CupTriple(_))
        ) || (b1 >= 4 && structure == Structure::None);
        if !ok {
            return Err(Error::Invalid(format!("structure data {structure:?} does not match b1 = {b1}")));
        }
        Ok(Self { b1, tor_order, structure })
    }

    /// Rational homology sphere with `|H_1| = tor_order`.
    pub fn homology_sphere(tor_order: u64) -> Result<Self> {
        Self::new(0, tor_order, Structure::None)
    }

    pub fn rank_one(tor_order: u64, delta: AlexanderPolynomial) -> Result<Self> {
        Self::new(1, tor_order, Structure::Alexander(delta))
    }

    pub fn rank_two(tor_order: u64, linking_mu: Rational) -> Result<Self> {
        Self::new(2, tor_order, Structure::Linking(linking_mu))
    }

    pub fn rank_three(tor_order: u64, cup_triple: i64) -> Result<Self> {
        Self::new(3, tor_order, Structure::CupTriple(cup_triple))
    }

    pub fn high_rank(b1: u32, tor_order: u64) -> Result<Self> {
        if b1 < 4 {
            return Err(Error::Invalid(format!("high_rank needs b1 >= 4, got {b1}")));
        }
        Self::new(b1, tor_order, Structure::None)
    }

    pub fn b1(&self) -> u32 {
        self.b1
    }

    pub fn tor_order(&self) -> u64 {
        self.tor_order
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn alexander(&self) -> Option<&AlexanderPolynomial> {
        match &self.structure {
            Structure::Alexander(d) => Some(d),
            _ => None,
        }
    }

    pub fn linking_mu(&self) -> Option<&Rational> {
        match &self.structure {
            Structure::Linking(mu) => Some(mu),
            _ => None,
        }
    }

    pub fn cup_triple(&self) -> Option<i64> {
        match self.structure {
            Structure::CupTriple(mu) => Some(mu),
            _ => None,
        }
    }

    pub fn h1_order(&self) -> H1Order {
        H1Order(if self.b1 == 0 { self.tor_order } else { 0 })
    }

    pub(crate) fn tor_rational(&self) -> Rational {
        Rational::from_integer(BigInt::from(self.tor_order))
    }
}

/// Lescop's invariant for `b1 ∈ {2, 3}`: `|Tor H_1|·μ²` when `b1 = 3` and
/// `|Tor H_1|·μ(M)` when `b1 = 2` (positive sign convention for `b1 = 2`).
pub fn lescop(d: &ClassicalData) -> Result<Rational> {
    match d.structure() {
        Structure::CupTriple(mu) => {
            let mu = BigInt::from(*mu);
            Ok(d.tor_rational() * Rational::from_integer(&mu * &mu))
        }
        Structure::Linking(mu) => Ok(d.tor_rational() * mu),
        _ => Err(Error::UnsupportedBetti { operation: "Lescop invariant", b1: d.b1() }),
    }
}

/// Classical data of `M1 # M2` when at least one summand is a rational
/// homology sphere.
pub fn connected_sum_data(d1: &ClassicalData, d2: &ClassicalData) -> Result<ClassicalData> {
    let (main, qhs) = match (d1.b1(), d2.b1()) {
        (_, 0) => (d1, d2),
        (0, _) => (d2, d1),
        _ => {
            return Err(Error::UnsupportedBetti { operation: "connected sum of two positive-rank manifolds", b1: d1.b1() })
        }
    };
    let tor = main.tor_order().checked_mul(qhs.tor_order()).ok_or(Error::Overflow("torsion order"))?;
    ClassicalData::new(main.b1(), tor, main.structure().clone())
}
