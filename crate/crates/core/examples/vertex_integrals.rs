// Finite-dimensional zero-mode integrals for b1 = 2 and b1 = 3.

use qinv::berezin::{
    tadpole_contract, vertex_integral_b2, vertex_integral_b2_auxiliary, vertex_integral_b3, AntisymMatrix,
    SyntheticCurvature,
};
use qinv::series::int;
use qinv::{Rational, Result};

pub fn run_example() -> Result<Rational> {
    let eps = AntisymMatrix::from_upper(2, &[int(1)])?;
    // Ω on sorted index quadruples; the rest follows by symmetry.
    let c = SyntheticCurvature::from_symmetric(1, eps, |[i, j, k, l]| int((1 + i + 2 * j + 3 * k + 4 * l) as i64))?;

    let b3 = vertex_integral_b3(&c, &int(1))?;
    let b3_scaled = vertex_integral_b3(&c, &int(2))?;
    let b2 = vertex_integral_b2(&c)?;
    let b2_aux = vertex_integral_b2_auxiliary(&c)?;
    println!("b3: {b3}  (I = 2: {b3_scaled})");
    println!("b2: {b2}  via ψ: {b2_aux}");
    assert_eq!(b2, b3);
    assert_eq!(b2_aux, b3);

    println!("tadpole: {:?}", tadpole_contract(&c).iter().flatten().map(|v| v.to_string()).collect::<Vec<_>>());
    Ok(b3)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example().map(|_| ())
}
