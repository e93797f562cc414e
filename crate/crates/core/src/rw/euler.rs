use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `e(S^[n])`: the `t^n` coefficient of `Π_{k≥1} (1 − t^k)^{−24}`.
pub fn euler_hilb(n: u32) -> BigInt {
    let n = n as usize;
    // Π (1 − t^k)^{−1}: partition numbers up to n.
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for k in 1..=n {
        for j in k..=n {
            let prev = p[j - k].clone();
            p[j] += prev;
        }
    }
    let mut acc = vec![BigInt::zero(); n + 1];
    acc[0] = BigInt::one();
    for _ in 0..24 {
        let mut next = vec![BigInt::zero(); n + 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in p.iter().enumerate().take(n + 1 - i) {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc.swap_remove(n)
}

/// `e(K_n) = (n+1)^3 σ_1(n+1)` for the generalized Kummer varieties, `n ≥ 1`.
pub fn euler_kummer(n: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Invalid("generalized Kummer varieties start at n = 1".into()));
    }
    let m = u64::from(n) + 1;
    let sigma: u64 = (1..=m).filter(|d| m % d == 0).sum();
    Ok(BigInt::from(m).pow(3) * BigInt::from(sigma))
}
