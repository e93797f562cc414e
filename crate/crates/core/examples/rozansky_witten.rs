// Rozansky-Witten invariants, checked against the weight of the LMO series.

use qinv::lmo::z_lmo;
use qinv::manifold::ClassicalData;
use qinv::rw::{feasible_vertex_counts, product_x, w_pair, z_rw, HyperKahlerWeightData};
use qinv::series::int;
use qinv::wheels::AlexanderPolynomial;
use qinv::{Rational, Result};

pub fn run_example() -> Result<Vec<(String, String, Rational)>> {
    let k3 = HyperKahlerWeightData::k3();
    let k3xk3 = product_x(&k3, &k3);
    let spaces = [k3.clone(), HyperKahlerWeightData::t4(), k3xk3];

    let trefoil = AlexanderPolynomial::from_nonnegative(vec![int(-1), int(1)])?;
    let manifolds = [
        ("s2xs1", ClassicalData::rank_one(1, AlexanderPolynomial::trivial())?),
        ("trefoil-surgery", ClassicalData::rank_one(1, trefoil)?),
        ("b1-2", ClassicalData::rank_two(3, int(2))?),
        ("t3", ClassicalData::rank_three(1, 1)?),
        ("b1-4", ClassicalData::high_rank(4, 1)?),
    ];

    let mut table = Vec::new();
    for x in &spaces {
        for (name, d) in &manifolds {
            let z = z_rw(d, x)?;
            // Same number through the weight system on Z^LMO.
            if d.b1() <= 3 {
                assert_eq!(w_pair(&z_lmo(d, x.n())?, x)?, z);
            }
            println!("Z[{name}, {}] = {z}", x.name());
            table.push((name.to_string(), x.name().to_string(), z));
        }
    }
    println!("vertex counts, n = 2, b1 = 1: {:?}", feasible_vertex_counts(2, 1).iter().collect::<Vec<_>>());
    Ok(table)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example().map(|_| ())
}
