// Exact truncated power series and polynomials in named variables.

use qinv::series::{frac, int};
use qinv::{MultiPoly, Result, SymmetricLaurent, TruncatedSeries};

pub fn run_example() -> Result<(TruncatedSeries, MultiPoly)> {
    // exp(x) through x^5, then back.
    let x = TruncatedSeries::monomial("x", 1, int(1), 5);
    let e = x.exp()?;
    println!("exp(x) = {e}");
    assert_eq!(e.log()?, x);

    // Mixed orders truncate to the smaller one.
    let short = TruncatedSeries::new("x", vec![int(1), frac(1, 2)], 2);
    println!("(exp x)(1 + x/2) = {}", e.mul(&short)?);

    // Δ(e^x) for Δ = t - 1 + 1/t is an even series.
    let delta = SymmetricLaurent::from_nonnegative(vec![int(-1), int(1)]);
    let series = delta.substitute_exp(6);
    println!("Δ(e^x) = {series}");

    let p = MultiPoly::parse("(a + b)^2 - 2*a*b")?;
    println!("(a + b)^2 - 2ab = {p}");
    Ok((series, p))
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example().map(|_| ())
}
