// Reading manifold and space files, and driving the `qi` tool in-process.

use qinv::cli::{resolve, run};
use qinv::io::{read_json, ManifoldSpec, SpaceSpec};
use qinv::rw::z_rw;
use qinv::{Rational, Result};

pub fn run_example() -> Result<Rational> {
    let m: ManifoldSpec = read_json(&resolve("trefoil-surgery"))?;
    let x: SpaceSpec = read_json(&resolve("k3"))?;
    let z = z_rw(&m.to_data()?, &x.to_data()?)?;
    println!("{} on {}: {z}", m.name, x.name);

    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(["qi", "lmo", "presets/t3", "--order", "3"], &mut out, &mut err);
    print!("qi lmo t3 -> exit {code}: {}", String::from_utf8_lossy(&out));
    Ok(z)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example().map(|_| ())
}
