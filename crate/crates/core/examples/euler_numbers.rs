// Euler characteristics of the two compact hyper-Kähler series.

use num_bigint::BigInt;
use qinv::rw::{euler_hilb, euler_kummer};
use qinv::Result;

pub fn run_example() -> Result<Vec<(BigInt, Option<BigInt>)>> {
    let mut rows = Vec::new();
    for n in 0..=7 {
        let hilb = euler_hilb(n);
        let kummer = euler_kummer(n).ok();
        match &kummer {
            Some(k) => println!("n = {n}: e(S^[n]) = {hilb}, e(K_n) = {k}"),
            None => println!("n = {n}: e(S^[n]) = {hilb}"),
        }
        rows.push((hilb, kummer));
    }
    Ok(rows)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example().map(|_| ())
}
