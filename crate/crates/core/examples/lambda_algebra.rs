// The λ invariants: recovery from Z values, connected sums, reversal.

use qinv::lambda::{
    casson_g, connected_sum_lambda, lambda_from_z, reverse_lambda, verify_consum, z_from_lambda, GData, LambdaVector,
};
use qinv::manifold::H1Order;
use qinv::{MultiPoly, Result};

pub fn run_example() -> Result<LambdaVector> {
    let n = 2;
    let g = GData::symbolic(n);
    println!("det G = {}", g.determinant());

    // Round trip through Z for a symbolic manifold.
    let l = LambdaVector::symbolic("l", n);
    let z = z_from_lambda(&l, &g)?;
    for (p, zp) in z.0.iter().enumerate() {
        println!("z_{p} = {zp}");
    }
    assert_eq!(lambda_from_z(&z, &g)?, l);

    // S^3 is the unit for connected sum.
    let sum = connected_sum_lambda(&l, &LambdaVector::s3(n))?;
    assert_eq!(sum.values, l.values);

    let reversed = reverse_lambda(&LambdaVector::new(2, l.values.clone()));
    println!("reversed, b1 = 2:\n{reversed}");

    let z_m = MultiPoly::parse("z")?;
    let z_s3 = MultiPoly::parse("a")?;
    println!("λ_G with |H1| = 3: {}", casson_g(&z_m, &z_s3, H1Order(3)));

    for k in 1..=3 {
        print!("{}", verify_consum(k));
    }
    Ok(sum)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example().map(|_| ())
}
