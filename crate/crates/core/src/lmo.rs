//! The LMO invariant as a truncated formal series of diagram classes, and the
//! rescaling and connected-sum laws of the `Ω_n^{(k)}` coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::manifold::{lescop, ClassicalData, H1Order, Structure};
use crate::series::{Partition, Rational, Ring};
use crate::wheels::{alpha, wheel_exp};

/// Basis symbols of the diagram space. `Gamma` and `H` are opaque degree-`n`
/// classes; `Wheels` is a disjoint union of wheels `ω_{2m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DiagramSymbol {
    Empty,
    Gamma(u32),
    H(u32),
    Wheels(Partition),
}

impl DiagramSymbol {
    pub fn degree(&self) -> u32 {
        match self {
            DiagramSymbol::Empty => 0,
            DiagramSymbol::Gamma(n) | DiagramSymbol::H(n) => *n,
            DiagramSymbol::Wheels(p) => p.size(),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            DiagramSymbol::Empty => 0,
            DiagramSymbol::Gamma(_) => 1,
            DiagramSymbol::H(_) => 2,
            DiagramSymbol::Wheels(_) => 3,
        }
    }
}

impl Ord for DiagramSymbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(self.rank().cmp(&other.rank())).then_with(|| match (self, other) {
            (DiagramSymbol::Wheels(a), DiagramSymbol::Wheels(b)) => a.cmp(b),
            _ => Ordering::Equal,
        })
    }
}

impl PartialOrd for DiagramSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DiagramSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramSymbol::Empty => write!(f, "1"),
            DiagramSymbol::Gamma(n) => write!(f, "γ{n}"),
            DiagramSymbol::H(n) => write!(f, "H{n}"),
            DiagramSymbol::Wheels(p) => {
                let parts: Vec<String> = p.parts().iter().map(u32::to_string).collect();
                write!(f, "w[{}]", parts.join(","))
            }
        }
    }
}

/// Rational combination of diagram symbols of degree at most `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalDiagramSeries {
    order: u32,
    terms: BTreeMap<DiagramSymbol, Rational>,
}

#[derive(Serialize)]
struct MachineTerm {
    symbol: String,
    degree: u32,
    coefficient: String,
}

impl FormalDiagramSeries {
    pub fn new(order: u32) -> Self {
        Self { order, terms: BTreeMap::new() }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Adds `c·symbol`; symbols above the order are rejected.
    pub fn insert(&mut self, symbol: DiagramSymbol, c: Rational) -> Result<()> {
        if symbol.degree() > self.order {
            return Err(Error::Invalid(format!("{symbol} exceeds truncation order {}", self.order)));
        }
        let slot = self.terms.entry(symbol.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&symbol);
        }
        Ok(())
    }

    pub fn coeff(&self, symbol: &DiagramSymbol) -> Rational {
        self.terms.get(symbol).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DiagramSymbol, &Rational)> {
        self.terms.iter()
    }

    /// Terms of exactly the given degree.
    pub fn degree_part(&self, n: u32) -> impl Iterator<Item = (&DiagramSymbol, &Rational)> {
        self.terms.iter().filter(move |(s, _)| s.degree() == n)
    }

    /// JSON list of `{symbol, degree, coefficient}` in canonical order.
    pub fn to_machine(&self) -> String {
        let terms: Vec<MachineTerm> = self
            .terms
            .iter()
            .map(|(s, c)| MachineTerm { symbol: s.to_string(), degree: s.degree(), coefficient: c.to_string() })
            .collect();
        serde_json::to_string(&serde_json::json!({ "order": self.order, "terms": terms })).expect("plain data")
    }
}

/// Canonical rendering: symbols sorted by degree, exact fractions, e.g.
/// `1 + 4·γ1 + 16·γ2` or `1 - 11/24·w[1]`.
impl fmt::Display for FormalDiagramSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match s {
                DiagramSymbol::Empty => write!(f, "{mag}")?,
                _ => write!(f, "{mag}·{s}")?,
            }
        }
        Ok(())
    }
}

/// The LMO invariant through diagram degree `order`.
///
/// - `b1 > 3`: the empty diagram alone.
/// - `b1 = 3`: `Σ λ^n γ_n` with `λ` Lescop's invariant.
/// - `b1 = 2`: `Σ λ^n H_n`.
/// - `b1 = 1` (torsion-free `H_1`): the disjoint-union exponential of `α(M)`,
///   left uncontracted.
///
/// `b1 = 0` has no closed form here; use [`crate::lambda`].
pub fn z_lmo(d: &ClassicalData, order: u32) -> Result<FormalDiagramSeries> {
    let mut out = FormalDiagramSeries::new(order);
    match d.structure() {
        Structure::None if d.b1() >= 4 => out.insert(DiagramSymbol::Empty, Rational::one())?,
        Structure::None => return Err(Error::UnsupportedBetti { operation: "z_lmo", b1: d.b1() }),
        Structure::CupTriple(_) | Structure::Linking(_) => {
            let lambda = lescop(d)?;
            out.insert(DiagramSymbol::Empty, Rational::one())?;
            for n in 1..=order {
                let sym = if d.b1() == 3 { DiagramSymbol::Gamma(n) } else { DiagramSymbol::H(n) };
                out.insert(sym, lambda.power(n))?;
            }
        }
        Structure::Alexander(delta) => {
            if d.tor_order() != 1 {
                return Err(Error::TorsionUnsupported(d.tor_order()));
            }
            let wheels = wheel_exp(&alpha(delta, 2 * order as usize), order);
            for (p, c) in wheels.terms() {
                let sym = if p.is_empty() { DiagramSymbol::Empty } else { DiagramSymbol::Wheels(p.clone()) };
                out.insert(sym, c.clone())?;
            }
        }
    }
    Ok(out)
}

/// `Ω_n^{(k)} = m^{n-k} Ω_k^{(k)}` with `m = |H_1|` (zero for `b1 > 0`).
pub fn omega_rescale<C: Ring>(lam_kk: &C, m: H1Order, n: u32, k: u32) -> Result<C> {
    if k > n {
        return Err(Error::Invalid(format!("need k <= n, got k = {k}, n = {n}")));
    }
    Ok(C::from_rational(m.to_rational().power(n - k)) * lam_kk.clone())
}

/// Degree-`n` coefficient under connected sum:
/// `Ω(M1 # M2)^{(n)} = Σ_{d1+d2=n} Ω(M1)^{(d1)} Ω(M2)^{(d2)}`, with
/// `n = len − 1`.
pub fn connected_sum_omega<C: Ring>(v1: &[C], v2: &[C]) -> Result<C> {
    if v1.len() != v2.len() {
        return Err(Error::LengthMismatch { expected: v1.len(), found: v2.len() });
    }
    if v1.is_empty() {
        return Err(Error::Invalid("Ω vectors must have length n + 1 >= 1".into()));
    }
    let n = v1.len() - 1;
    Ok((0..=n).fold(C::zero(), |acc, d1| acc + v1[d1].clone() * v2[n - d1].clone()))
}
