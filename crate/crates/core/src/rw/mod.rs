//! Rozansky-Witten invariants for a hyper-Kähler target given by its weight
//! data, the weight-system pairing on diagram series, and the vertex-count
//! and orientation combinatorics.
//!
//! A target `X` of real dimension `4n` enters only through its Euler number
//! and the characteristic numbers `⟨P_{m_1} ⋯ P_{m_r}⟩` for partitions of
//! `n`, where `P_m = Σ_{i=1}^{n} x_i^{2m}` is the power sum in the Cartan
//! eigenvalues. With this normalization `⟨P_1⟩_{K3} = −24`.
//!
//! The `b1 = 1` evaluation carries the sign `(−1)^n`, which is `−1` for
//! four-dimensional targets and keeps the invariant multiplicative under
//! products of targets.

mod euler;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use euler::{euler_hilb, euler_kummer};

use crate::error::{Error, Result};
use crate::lmo::{DiagramSymbol, FormalDiagramSeries};
use crate::manifold::{lescop, ClassicalData, H1Order, Structure};
use crate::series::{Partition, Rational, Ring};
use crate::wheels::alpha;

/// Weight data of a hyper-Kähler manifold of real dimension `4n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperKahlerWeightData {
    name: String,
    n: u32,
    euler_char: Rational,
    pairing: BTreeMap<Partition, Rational>,
}

impl HyperKahlerWeightData {
    /// The pairing must be keyed by exactly the partitions of `n`.
    pub fn new(
        name: impl Into<String>,
        n: u32,
        euler_char: Rational,
        pairing: BTreeMap<Partition, Rational>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("quaternionic dimension must be positive".into()));
        }
        let expected: BTreeSet<Partition> = Partition::all_of(n).into_iter().collect();
        let given: BTreeSet<Partition> = pairing.keys().cloned().collect();
        if expected != given {
            let missing: Vec<String> = expected.difference(&given).map(|p| p.to_string()).collect();
            let extra: Vec<String> = given.difference(&expected).map(|p| p.to_string()).collect();
            return Err(Error::Invalid(format!(
                "pairing for n = {n} must be keyed by the partitions of n (missing [{}], unexpected [{}])",
                missing.join(", "),
                extra.join(", ")
            )));
        }
        Ok(Self { name: name.into(), n, euler_char, pairing })
    }

    /// K3 surface: `n = 1`, `e = 24`, `⟨P_1⟩ = −24`.
    pub fn k3() -> Self {
        let p1 = Partition::from_parts(vec![1]).expect("positive part");
        Self::new("k3", 1, Rational::from_integer(24.into()), [(p1, Rational::from_integer((-24).into()))].into())
            .expect("valid preset")
    }

    /// Four-torus: flat, so every characteristic number vanishes.
    pub fn t4() -> Self {
        let p1 = Partition::from_parts(vec![1]).expect("positive part");
        Self::new("t4", 1, Rational::zero(), [(p1, Rational::zero())].into()).expect("valid preset")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn euler_char(&self) -> &Rational {
        &self.euler_char
    }

    pub fn pairing(&self, p: &Partition) -> Rational {
        self.pairing.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn pairings(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.pairing.iter()
    }
}

/// Weight data of `X1 × X2`. Power sums add over the two factors, so
/// `⟨P_λ⟩` expands over the ways of distributing the parts of `λ`.
pub fn product_x(x1: &HyperKahlerWeightData, x2: &HyperKahlerWeightData) -> HyperKahlerWeightData {
    let n = x1.n + x2.n;
    let pairing = Partition::all_of(n)
        .into_iter()
        .map(|lambda| {
            let value = lambda
                .splits()
                .into_iter()
                .filter(|(l1, l2, _)| l1.size() == x1.n && l2.size() == x2.n)
                .map(|(l1, l2, ways)| Rational::from_integer(ways) * x1.pairing(&l1) * x2.pairing(&l2))
                .fold(Rational::zero(), |a, b| a + b);
            (lambda, value)
        })
        .collect();
    HyperKahlerWeightData {
        name: format!("{}x{}", x1.name, x2.name),
        n,
        euler_char: &x1.euler_char * &x2.euler_char,
        pairing,
    }
}

/// Vertex counts `(p, q)` of `V_1` and `V_2` vertices that can contribute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibleCounts(BTreeSet<(u32, u32)>);

impl FeasibleCounts {
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: u32, q: u32) -> bool {
        self.0.contains(&(p, q))
    }

    pub fn iter(&self) -> impl Iterator<Item = &(u32, u32)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}

/// Pairs with `p + q = 2n` and `p ≥ n(b1 − 1)`, refined by the number of
/// harmonic `χ` legs a vertex can carry: nothing survives for `b1 ≥ 4`, and
/// only `(2n, 0)` for `b1 ∈ {2, 3}`.
pub fn feasible_vertex_counts(n: u32, b1: u32) -> FeasibleCounts {
    let total = 2 * n;
    let set = match b1 {
        0 | 1 => (0..=total).map(|p| (p, total - p)).collect(),
        2 | 3 => [(total, 0)].into(),
        _ => BTreeSet::new(),
    };
    FeasibleCounts(set)
}

/// How to treat torsion in `H_1` for `b1 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TorsionPolicy {
    /// Only `H_1 = Z` is accepted.
    #[default]
    RequireTrivial,
    /// Multiply by `|Tor H_1|^n`.
    Multiply,
}

fn b1_one_sign(n: u32) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `Z^RW_X[M]` for `b1 ≥ 1`, with the default torsion policy.
pub fn z_rw(d: &ClassicalData, x: &HyperKahlerWeightData) -> Result<Rational> {
    z_rw_with(d, x, TorsionPolicy::default())
}

/// `Z^RW_X[M]` for `b1 ≥ 1`:
///
/// - `b1 ≥ 4`: `0`,
/// - `b1 ∈ {2, 3}`: `e(X) λ^n` with `λ` Lescop's invariant,
/// - `b1 = 1`: `(−1)^n ∫_X exp(−2 Σ_m (2b_{2m} + a'_{2m}) P_m)`, the
///   integral picking out the partitions of `n`.
pub fn z_rw_with(d: &ClassicalData, x: &HyperKahlerWeightData, torsion: TorsionPolicy) -> Result<Rational> {
    let n = x.n;
    if feasible_vertex_counts(n, d.b1()).is_empty() {
        return Ok(Rational::zero());
    }
    match d.structure() {
        Structure::CupTriple(_) | Structure::Linking(_) => Ok(x.euler_char.clone() * lescop(d)?.power(n)),
        Structure::Alexander(delta) => {
            let tor_factor = match (torsion, d.tor_order()) {
                (_, 1) => Rational::one(),
                (TorsionPolicy::Multiply, t) => Rational::from_integer(BigInt::from(t)).power(n),
                (TorsionPolicy::RequireTrivial, t) => return Err(Error::TorsionUnsupported(t)),
            };
            let a = alpha(delta, 2 * n as usize);
            let minus_two = Rational::from_integer((-2).into());
            let mut integral = Rational::zero();
            for lambda in Partition::all_of(n) {
                let mut c = Rational::one();
                for &m in lambda.parts() {
                    c *= &minus_two * a.coeff(m);
                }
                c /= Rational::from_integer(lambda.automorphisms());
                integral += c * x.pairing(&lambda);
            }
            Ok(b1_one_sign(n) * integral * tor_factor)
        }
        Structure::None => Err(Error::UnsupportedBetti { operation: "z_rw", b1: d.b1() }),
    }
}

/// Rozansky-Witten weight of the degree-`n` part of a diagram series:
/// `γ_n, H_n ↦ e(X)` and a wheel monomial `ω_{2m_1} ⊔ ⋯ ⊔ ω_{2m_r}` ↦
/// `(−1)^n (−2)^r ⟨P_{m_1} ⋯ P_{m_r}⟩`.
///
/// Fails if the series is truncated below degree `n`.
pub fn w_pair(s: &FormalDiagramSeries, x: &HyperKahlerWeightData) -> Result<Rational> {
    let n = x.n;
    if s.order() < n {
        return Err(Error::Invalid(format!("series truncated at degree {} cannot be paired in degree {n}", s.order())));
    }
    let mut total = Rational::zero();
    for (sym, c) in s.degree_part(n) {
        let weight = match sym {
            DiagramSymbol::Empty => unreachable!("degree 0 < n"),
            DiagramSymbol::Gamma(_) | DiagramSymbol::H(_) => x.euler_char.clone(),
            DiagramSymbol::Wheels(p) => {
                b1_one_sign(n) * Rational::from_integer((-2).into()).power(p.len() as u32) * x.pairing(p)
            }
        };
        total += c * weight;
    }
    Ok(total)
}

/// `Z_n[M, O(n−k)] = |H_1|^{n−k} Z_k[M]`.
pub fn z_rw_observable<C: Ring>(n: u32, k: u32, h1: H1Order, z_k: &C) -> Result<C> {
    if k > n {
        return Err(Error::Invalid(format!("need k <= n, got k = {k}, n = {n}")));
    }
    Ok(C::from_rational(h1.to_rational().power(n - k)) * z_k.clone())
}

/// `(−1)^{(n−k)(1+b1)}`, the sign of `Z[M, O(k)]` under orientation reversal.
pub fn orev_sign(n: u32, k: u32, b1: u32) -> Result<i32> {
    if k > n {
        return Err(Error::Invalid(format!("need k <= n, got k = {k}, n = {n}")));
    }
    Ok(if ((n - k) * (1 + b1)).is_multiple_of(2) { 1 } else { -1 })
}
