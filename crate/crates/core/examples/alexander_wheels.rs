// Wheel coefficients of a b1 = 1 manifold from its Alexander polynomial.

use qinv::series::int;
use qinv::wheels::{alpha, torsion_series, wheel_exp, AlexanderPolynomial, WheelExponential};
use qinv::Result;

pub fn run_example() -> Result<WheelExponential> {
    // 0-surgery on the trefoil: Δ = t - 1 + 1/t.
    let delta = AlexanderPolynomial::from_nonnegative(vec![int(-1), int(1)])?;
    println!("Δ = {}", delta.body());
    println!("Δ(e^x) / (2 sinh(x/2)/x)^2 = {}", torsion_series(&delta, 6));

    let a = alpha(&delta, 6);
    for (m, c) in a.iter() {
        println!("α_{} = {c}", 2 * m);
    }

    let w = wheel_exp(&a, 3);
    for (p, c) in w.terms() {
        println!("{p:>7}  {c}");
    }
    Ok(w)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example().map(|_| ())
}
