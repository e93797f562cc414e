//! The `λ^k` invariants of a rational homology sphere: recursion from the
//! values `Z[M, O(p)]` through the `S³` pairing matrix `G`, the connected-sum
//! law, orientation reversal and the `SU(3)`-type Casson normalization.
//!
//! Entries are [`MultiPoly`] so that the undetermined `S³` constants
//! `Z[S³, O(s)]` can stay symbolic; numeric data are constant polynomials.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::manifold::H1Order;
use crate::series::{MultiPoly, Ring};

/// The values `g_s = Z[S³, O(s)]`, `s = 0..=n`, defining the anti-triangular
/// pairing `G_{k,l} = g_{k+l}` (zero when `k + l > n`). `g_n = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct GData {
    g: Vec<MultiPoly>,
}

impl GData {
    pub fn new(g: Vec<MultiPoly>) -> Result<Self> {
        match g.last() {
            Some(last) if last.is_one() => Ok(Self { g }),
            Some(last) => Err(Error::Invalid(format!("G must have unit anti-diagonal, found g_n = {last}"))),
            None => Err(Error::Invalid("G data needs at least g_0".into())),
        }
    }

    /// `g_s` a free indeterminate `g_s` for `s < n`.
    pub fn symbolic(n: usize) -> Self {
        let mut g: Vec<MultiPoly> = (0..n).map(|s| MultiPoly::var(format!("g_{s}"))).collect();
        g.push(MultiPoly::one());
        Self { g }
    }

    pub fn n(&self) -> usize {
        self.g.len() - 1
    }

    pub fn values(&self) -> &[MultiPoly] {
        &self.g
    }

    /// `g_s`, zero past `n`.
    pub fn g(&self, s: usize) -> MultiPoly {
        self.g.get(s).cloned().unwrap_or_else(MultiPoly::zero)
    }

    pub fn entry(&self, k: usize, l: usize) -> MultiPoly {
        self.g(k + l)
    }

    pub fn matrix(&self) -> Vec<Vec<MultiPoly>> {
        let n = self.n();
        (0..=n).map(|k| (0..=n).map(|l| self.entry(k, l)).collect()).collect()
    }

    /// Exact determinant of `G` by cofactor expansion; `±1` for any data.
    pub fn determinant(&self) -> MultiPoly {
        let m = self.matrix();
        let cols: Vec<usize> = (0..m.len()).collect();
        cofactor_det(&m, 0, &cols)
    }
}

fn cofactor_det(m: &[Vec<MultiPoly>], row: usize, cols: &[usize]) -> MultiPoly {
    if cols.is_empty() {
        return MultiPoly::one();
    }
    let mut acc = MultiPoly::zero();
    for (i, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = m[row][c].clone() * cofactor_det(m, row + 1, &rest);
        acc = if i % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// `z_p = Z[M, O(p)]` for `p = 0..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZVector(pub Vec<MultiPoly>);

/// Coordinates `λ^0, …, λ^n` of the state of `M \ B³` in the basis
/// `|B³, O(k)⟩`, together with `b1(M)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaVector {
    pub b1: u32,
    pub values: Vec<MultiPoly>,
}

impl LambdaVector {
    pub fn new(b1: u32, values: Vec<MultiPoly>) -> Self {
        Self { b1, values }
    }

    /// `S³`: `(1, 0, …, 0)`.
    pub fn s3(n: usize) -> Self {
        let mut values = vec![MultiPoly::zero(); n + 1];
        values[0] = MultiPoly::one();
        Self { b1: 0, values }
    }

    /// Fully symbolic vector with entries `{prefix}_k`.
    pub fn symbolic(prefix: &str, n: usize) -> Self {
        Self { b1: 0, values: (0..=n).map(|k| MultiPoly::var(format!("{prefix}_{k}"))).collect() }
    }

    pub fn n(&self) -> usize {
        self.values.len() - 1
    }
}

impl fmt::Display for LambdaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "λ^{k} = {v}")?;
        }
        Ok(())
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::LengthMismatch { expected, found });
    }
    Ok(())
}

/// Solves `z_p = Σ_k λ^k g_{k+p}` from `p = n` downwards:
/// `λ^{n−p} = z_p − Σ_{k<n−p} λ^k g_{k+p}`.
pub fn lambda_from_z(z: &ZVector, g: &GData) -> Result<LambdaVector> {
    let n = g.n();
    check_len(n + 1, z.0.len())?;
    let mut lambda: Vec<MultiPoly> = Vec::with_capacity(n + 1);
    for p in (0..=n).rev() {
        let mut v = z.0[p].clone();
        for (k, l) in lambda.iter().enumerate() {
            v = v - l.clone() * g.g(k + p);
        }
        lambda.push(v);
    }
    Ok(LambdaVector::new(0, lambda))
}

/// `z_p = Σ_k λ^k g_{k+p}`.
pub fn z_from_lambda(l: &LambdaVector, g: &GData) -> Result<ZVector> {
    let n = g.n();
    check_len(n + 1, l.values.len())?;
    Ok(ZVector(
        (0..=n)
            .map(|p| l.values.iter().enumerate().fold(MultiPoly::zero(), |acc, (k, v)| acc + v.clone() * g.g(k + p)))
            .collect(),
    ))
}

/// `Z[M1 # M2, O(s)] = Σ_{k,l} λ^k(M1) λ^l(M2) G_{k, l+s}`.
pub fn z_heegaard_pair(l1: &LambdaVector, l2: &LambdaVector, g: &GData, s: usize) -> Result<MultiPoly> {
    let n = g.n();
    check_len(n + 1, l1.values.len())?;
    check_len(n + 1, l2.values.len())?;
    if s > n {
        return Err(Error::Invalid(format!("observable degree {s} exceeds n = {n}")));
    }
    let mut acc = MultiPoly::zero();
    for (k, a) in l1.values.iter().enumerate() {
        for (l, b) in l2.values.iter().enumerate() {
            let gkl = g.entry(k, l + s);
            if !gkl.is_zero() {
                acc = acc + a.clone() * b.clone() * gkl;
            }
        }
    }
    Ok(acc)
}

/// `λ^p(M1 # M2) = Σ_{k+l=p} λ^k(M1) λ^l(M2)`.
pub fn connected_sum_lambda(l1: &LambdaVector, l2: &LambdaVector) -> Result<LambdaVector> {
    check_len(l1.values.len(), l2.values.len())?;
    let n = l1.n();
    let values = (0..=n)
        .map(|p| (0..=p).fold(MultiPoly::zero(), |acc, k| acc + l1.values[k].clone() * l2.values[p - k].clone()))
        .collect();
    Ok(LambdaVector::new(l1.b1 + l2.b1, values))
}

/// `λ^k ↦ (−1)^{k(b1+1)} λ^k`.
pub fn reverse_lambda(l: &LambdaVector) -> LambdaVector {
    let values = l
        .values
        .iter()
        .enumerate()
        .map(|(k, v)| if (k as u32 * (l.b1 + 1)) % 2 == 1 { -v.clone() } else { v.clone() })
        .collect();
    LambdaVector::new(l.b1, values)
}

/// `λ_G(M) = Z[M] − |H_1(M)| Z[S³]`, vanishing on `S³`.
pub fn casson_g<C: Ring>(z_m: &C, z_s3: &C, h1: H1Order) -> C {
    z_m.clone() - C::from_rational(h1.to_rational()) * z_s3.clone()
}

/// Outcome of the symbolic connected-sum check at a given `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConsumReport {
    pub n: usize,
    pub holds: bool,
    /// `λ^p(M1 # M2)` recovered from the paired `Z` values, for each `p`.
    pub identities: Vec<MultiPoly>,
}

impl fmt::Display for ConsumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}: {}", self.n, if self.holds { "identity verified" } else { "identity FAILED" })?;
        for (p, id) in self.identities.iter().enumerate() {
            writeln!(f, "λ^{p}(M1#M2) = {id}")?;
        }
        Ok(())
    }
}

/// Checks, as a polynomial identity in free symbols `l1_k`, `l2_k`, `g_s`,
/// that recovering `λ` from the `Z` values of `M1 # M2` gives the Cauchy
/// product of `λ(M1)` and `λ(M2)`.
pub fn verify_consum(n: usize) -> ConsumReport {
    let g = GData::symbolic(n);
    let l1 = LambdaVector::symbolic("l1", n);
    let l2 = LambdaVector::symbolic("l2", n);
    let z = ZVector((0..=n).map(|s| z_heegaard_pair(&l1, &l2, &g, s).expect("lengths agree")).collect());
    let recovered = lambda_from_z(&z, &g).expect("lengths agree");
    let expected = connected_sum_lambda(&l1, &l2).expect("lengths agree");
    ConsumReport { n, holds: recovered.values == expected.values, identities: recovered.values }
}
