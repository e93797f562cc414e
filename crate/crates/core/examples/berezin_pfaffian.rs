// Grassmann algebra, Berezin integrals and Pfaffians.

use qinv::berezin::{
    change_of_variables_sides, determinant, gaussian_norm_check, pfaffian, AntisymMatrix, GrassmannElement,
    PfaffianMethod,
};
use qinv::series::{frac, int};
use qinv::{Rational, Result};

pub fn run_example() -> Result<Rational> {
    let a = AntisymMatrix::from_upper(4, &[int(1), frac(-2, 3), int(4), int(5), frac(1, 2), int(-3)])?;
    let by_integral = pfaffian(&a, PfaffianMethod::Berezin)?;
    let by_matchings = pfaffian(&a, PfaffianMethod::Combinatorial)?;
    println!("Pf = {by_integral} (matchings: {by_matchings}), det = {}", determinant(a.rows()));
    assert_eq!(by_integral, by_matchings);
    assert_eq!(&by_integral * &by_integral, determinant(a.rows()));

    println!("∫dμ exp(-½ηεη) = {}", gaussian_norm_check(&a)?);

    // f = 2 + θ0θ1 - 3 θ0θ1θ2θ3
    let f = GrassmannElement::scalar(4, int(2))
        .add(&GrassmannElement::monomial(4, &[0, 1], int(1)))
        .add(&GrassmannElement::monomial(4, &[0, 1, 2, 3], int(-3)));
    let (lhs, rhs) = change_of_variables_sides(&f, &a)?;
    println!("f = {f}\n∫dμ f(εη) = {lhs}, Pf ∫ f = {rhs}");
    Ok(by_integral)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example().map(|_| ())
}
