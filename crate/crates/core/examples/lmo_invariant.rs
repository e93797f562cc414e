// The LMO invariant of manifolds with b1 >= 1, from classical data.

use qinv::lmo::{z_lmo, FormalDiagramSeries};
use qinv::manifold::{lescop, ClassicalData};
use qinv::series::int;
use qinv::wheels::AlexanderPolynomial;
use qinv::Result;

pub fn run_example() -> Result<Vec<FormalDiagramSeries>> {
    let manifolds = [
        ("T^3", ClassicalData::rank_three(1, 1)?),
        ("cup triple 2, |Tor| = 3", ClassicalData::rank_three(3, 2)?),
        ("linking 2, |Tor| = 3", ClassicalData::rank_two(3, int(2))?),
        ("S^2 x S^1", ClassicalData::rank_one(1, AlexanderPolynomial::trivial())?),
        ("trefoil 0-surgery", ClassicalData::rank_one(1, AlexanderPolynomial::from_nonnegative(vec![int(-1), int(1)])?)?),
        ("b1 = 5", ClassicalData::high_rank(5, 1)?),
    ];
    let mut out = Vec::new();
    for (name, d) in &manifolds {
        if d.b1() == 2 || d.b1() == 3 {
            println!("{name}: Lescop λ = {}", lescop(d)?);
        }
        let z = z_lmo(d, 3)?;
        println!("{name}: {z}");
        out.push(z);
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example().map(|_| ())
}
