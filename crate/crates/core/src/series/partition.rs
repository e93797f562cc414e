use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use super::factorial;
use crate::error::{Error, Result};

/// Multiset of positive parts, stored in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn from_parts(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid("partition parts must be positive".into()));
        }
        parts.sort_unstable();
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `Π_j mult_j!`, the order of the symmetry group permuting equal parts.
    pub fn automorphisms(&self) -> BigInt {
        self.multiplicities().values().map(|&k| factorial(k)).product()
    }

    /// All partitions of `n`, in ascending order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, 1, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All partitions with size at most `n`, including the empty one.
    pub fn up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of).collect()
    }

    /// Ways of splitting this multiset into two sub-multisets, with the number
    /// of ways to pick the first from the parts: `Π_j C(mult_j, k_j)`.
    pub fn splits(&self) -> Vec<(Partition, Partition, BigInt)> {
        let mults: Vec<(u32, u32)> = self.multiplicities().into_iter().collect();
        let mut out = Vec::new();
        let mut choice = vec![0u32; mults.len()];
        loop {
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut ways = BigInt::one();
            for (&(part, m), &k) in mults.iter().zip(&choice) {
                left.extend(std::iter::repeat_n(part, k as usize));
                right.extend(std::iter::repeat_n(part, (m - k) as usize));
                ways *= binomial(BigInt::from(m), BigInt::from(k));
            }
            out.push((Partition(left), Partition(right), ways));
            // odometer over 0..=mult_j
            let mut i = 0;
            loop {
                if i == choice.len() {
                    return out;
                }
                if choice[i] < mults[i].1 {
                    choice[i] += 1;
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }
}

fn fill(remaining: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in min..=remaining {
        cur.push(p);
        fill(remaining - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split('+')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}
