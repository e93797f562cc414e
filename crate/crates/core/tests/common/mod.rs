//! Independent reference implementations used as test oracles. Nothing here
//! calls into the library's own algorithms.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small random rational with numerator in `-9..=9` and denominator `1..=4`.
pub fn small_q(r: &mut impl Rng) -> Q {
    qf(r.gen_range(-9..=9), r.gen_range(1..=4))
}

// ---------------------------------------------------------------- series

/// Plain coefficient vectors, every operation truncated to `len`.
pub fn s_mul(a: &[Q], b: &[Q], len: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `log(1 + u) = Σ (−1)^{k+1} u^k / k` for `a = 1 + u`.
pub fn s_log(a: &[Q], len: usize) -> Vec<Q> {
    assert_eq!(a[0], Q::one());
    let mut u = a.to_vec();
    u.resize(len, Q::zero());
    u[0] = Q::zero();
    let mut out = vec![Q::zero(); len];
    let mut power = u.clone();
    for k in 1..len {
        let sign = if k % 2 == 1 { q(1) } else { q(-1) };
        for (o, p) in out.iter_mut().zip(&power) {
            *o += &sign * p / q(k as i64);
        }
        power = s_mul(&power, &u, len);
    }
    out
}

/// `exp(u) = Σ u^k / k!` for `u` with zero constant term.
pub fn s_exp(u: &[Q], len: usize) -> Vec<Q> {
    assert!(u[0].is_zero());
    let mut out = vec![Q::zero(); len];
    out[0] = q(1);
    let mut power = vec![Q::zero(); len];
    power[0] = q(1);
    let mut fact = q(1);
    for k in 1..len {
        power = s_mul(&power, u, len);
        fact *= q(k as i64);
        for (o, p) in out.iter_mut().zip(&power) {
            *o += p / &fact;
        }
    }
    out
}

fn fact(n: usize) -> Q {
    (1..=n).fold(q(1), |acc, k| acc * q(k as i64))
}

/// `Δ(e^x)` for `Δ = a_0 + Σ_k a_k (t^k + t^{−k})`, via `cosh` Taylor terms.
pub fn delta_at_exp(half: &[Q], len: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); len];
    out[0] = half[0].clone();
    for (k, a) in half.iter().enumerate().skip(1) {
        for j in (0..len).step_by(2) {
            out[j] += q(2) * a * q(k as i64).pow(j as i32) / fact(j);
        }
    }
    out
}

/// `sinh(x/2) / (x/2)`.
pub fn sinh_ratio(len: usize) -> Vec<Q> {
    (0..len).map(|j| if j % 2 == 0 { qf(1, 2).pow(j as i32) / fact(j + 1) } else { Q::zero() }).collect()
}

/// `a'_{2m}`, `2b_{2m}` and `α_{2m} = 2b_{2m} + a'_{2m}` for `m ≥ 1`.
pub fn wheel_oracle(half: &[Q], order: usize) -> (Vec<Q>, Vec<Q>, Vec<Q>) {
    let len = order + 1;
    let la = s_log(&delta_at_exp(half, len), len);
    let ls = s_log(&sinh_ratio(len), len);
    let mut a_prime = Vec::new();
    let mut two_b = Vec::new();
    let mut alpha = Vec::new();
    for m in 1..=order / 2 {
        let a = -&la[2 * m] / q(2);
        let b = ls[2 * m].clone();
        alpha.push(&a + &b);
        a_prime.push(a);
        two_b.push(b);
    }
    (a_prime, two_b, alpha)
}

// ---------------------------------------------------------------- linear algebra

/// Gaussian elimination with pivoting.
pub fn det(m: &[Vec<Q>]) -> Q {
    let mut a = m.to_vec();
    let n = a.len();
    let mut d = q(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let v = &f * &a[c][k];
                a[r][k] -= v;
            }
        }
    }
    d
}

pub fn random_antisymmetric(r: &mut impl Rng, size: usize) -> Vec<Vec<Q>> {
    let mut m = vec![vec![Q::zero(); size]; size];
    for i in 0..size {
        for j in i + 1..size {
            let v = small_q(r);
            m[j][i] = -v.clone();
            m[i][j] = v;
        }
    }
    m
}

/// Random totally symmetric rank-4 tensor on `d` indices, flattened.
pub fn random_symmetric_tensor(r: &mut impl Rng, d: usize) -> Vec<Q> {
    let mut by_sorted: BTreeMap<[usize; 4], Q> = BTreeMap::new();
    let mut flat = Vec::with_capacity(d.pow(4));
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let mut key = [i, j, k, l];
                    key.sort_unstable();
                    flat.push(by_sorted.entry(key).or_insert_with(|| small_q(r)).clone());
                }
            }
        }
    }
    flat
}

// ---------------------------------------------------------------- Grassmann

/// Grassmann algebra on sorted index lists; products sort by adjacent swaps.
#[derive(Clone, Debug, Default)]
pub struct Odd(pub BTreeMap<Vec<usize>, Q>);

impl Odd {
    pub fn scalar(c: Q) -> Self {
        Odd([(vec![], c)].into())
    }

    /// `c · θ_{i_1} ⋯ θ_{i_k}` in the given (unsorted) order.
    pub fn word(idx: &[usize], c: Q) -> Self {
        Odd::scalar(c).mul(&Odd::from_sorted_word(idx))
    }

    fn from_sorted_word(idx: &[usize]) -> Self {
        let mut acc = Odd::scalar(q(1));
        for &i in idx {
            acc = acc.mul(&Odd([(vec![i], q(1))].into()));
        }
        acc
    }

    pub fn add(&self, o: &Odd) -> Odd {
        let mut t = self.0.clone();
        for (k, v) in &o.0 {
            *t.entry(k.clone()).or_insert_with(Q::zero) += v;
        }
        t.retain(|_, v| !v.is_zero());
        Odd(t)
    }

    pub fn scale(&self, c: &Q) -> Odd {
        Odd(self.0.iter().map(|(k, v)| (k.clone(), v * c)).filter(|(_, v)| !v.is_zero()).collect())
    }

    pub fn mul(&self, o: &Odd) -> Odd {
        let mut t: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
        for (ka, va) in &self.0 {
            for (kb, vb) in &o.0 {
                let mut w: Vec<usize> = ka.iter().chain(kb).copied().collect();
                let mut swaps = 0usize;
                for end in (1..w.len()).rev() {
                    for i in 0..end {
                        if w[i] > w[i + 1] {
                            w.swap(i, i + 1);
                            swaps += 1;
                        }
                    }
                }
                if w.windows(2).any(|p| p[0] == p[1]) {
                    continue;
                }
                let c = if swaps.is_multiple_of(2) { va * vb } else { -(va * vb) };
                *t.entry(w).or_insert_with(Q::zero) += c;
            }
        }
        t.retain(|_, v| !v.is_zero());
        Odd(t)
    }

    /// Power series of an element with no scalar part.
    pub fn exp(&self) -> Odd {
        assert!(!self.0.contains_key(&vec![]));
        let mut out = Odd::scalar(q(1));
        let mut term = Odd::scalar(q(1));
        for k in 1.. {
            term = term.mul(self).scale(&qf(1, k));
            if term.0.is_empty() {
                break;
            }
            out = out.add(&term);
        }
        out
    }

    /// Coefficient of `θ_0 θ_1 ⋯ θ_{n−1}`.
    pub fn top(&self, n: usize) -> Q {
        self.0.get(&(0..n).collect::<Vec<_>>()).cloned().unwrap_or_else(Q::zero)
    }
}

/// `∫ d^{2n}θ exp(−½ Σ_{ij} ε_ij θ_i θ_j)`.
pub fn gaussian_top(eps: &[Vec<Q>]) -> Q {
    let d = eps.len();
    let mut s = Odd::default();
    for i in 0..d {
        for j in 0..d {
            s = s.add(&Odd::word(&[i, j], -&eps[i][j] / q(2)));
        }
    }
    s.exp().top(d)
}

/// Literal `b1 = 3` vertex: exponent `I · (1/6) Ω_{IJKL} χ_α^I χ_β^J χ_γ^K η^L ε^{αβγ}`,
/// summed over all six flavor orderings, integrated with the normalized
/// measure on `η, χ_1, χ_2, χ_3`.
pub fn b3_oracle(n: usize, omega: &[Q], eps: &[Vec<Q>], coupling: &Q) -> Q {
    let d = 2 * n;
    let at = |i: usize, j: usize, k: usize, l: usize| &omega[((i * d + j) * d + k) * d + l];
    let gen = |flavor: usize, i: usize| flavor * d + i;
    let perms: [([usize; 3], i64); 6] =
        [([1, 2, 3], 1), ([2, 3, 1], 1), ([3, 1, 2], 1), ([2, 1, 3], -1), ([1, 3, 2], -1), ([3, 2, 1], -1)];
    let mut v = Odd::default();
    for (p, sign) in perms {
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let w = at(i, j, k, l);
                        if w.is_zero() {
                            continue;
                        }
                        let c = w * coupling * qf(sign, 6);
                        v = v.add(&Odd::word(&[gen(p[0], i), gen(p[1], j), gen(p[2], k), gen(0, l)], c));
                    }
                }
            }
        }
    }
    let pf = gaussian_top(eps);
    v.exp().top(4 * d) / pf.pow(4)
}

pub fn is_positive(x: &BigInt) -> bool {
    x.is_positive()
}
