#[allow(dead_code)]
mod series_arithmetic {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/series_arithmetic.rs"));
}

#[allow(dead_code)]
mod alexander_wheels {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/alexander_wheels.rs"));
}

#[allow(dead_code)]
mod lmo_invariant {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lmo_invariant.rs"));
}

#[allow(dead_code)]
mod rozansky_witten {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/rozansky_witten.rs"));
}

#[allow(dead_code)]
mod euler_numbers {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/euler_numbers.rs"));
}

#[allow(dead_code)]
mod lambda_algebra {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lambda_algebra.rs"));
}

#[allow(dead_code)]
mod berezin_pfaffian {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/berezin_pfaffian.rs"));
}

#[allow(dead_code)]
mod vertex_integrals {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/vertex_integrals.rs"));
}

#[allow(dead_code)]
mod spec_files {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/spec_files.rs"));
}

use qinv::series::{frac, int};

#[test]
fn series_arithmetic_runs() {
    let (series, p) = series_arithmetic::run_example().unwrap();
    assert!(series.is_even());
    assert_eq!(p.to_string(), "a^2 + b^2");
}

#[test]
fn alexander_wheels_runs() {
    let w = alexander_wheels::run_example().unwrap();
    assert_eq!(w.coeff(&"1".parse().unwrap()), frac(-11, 24));
    assert_eq!(w.coeff(&"1+1".parse().unwrap()), frac(121, 1152));
}

#[test]
fn lmo_invariant_runs() {
    let all = lmo_invariant::run_example().unwrap();
    assert_eq!(all[0].to_string(), "1 + 1·γ1 + 1·γ2 + 1·γ3");
    assert_eq!(all[2].to_string(), "1 + 6·H1 + 36·H2 + 216·H3");
    assert_eq!(all[5].to_string(), "1");
}

#[test]
fn rozansky_witten_runs() {
    let table = rozansky_witten::run_example().unwrap();
    let get = |m: &str, x: &str| table.iter().find(|r| r.0 == m && r.1 == x).unwrap().2.clone();
    assert_eq!(get("s2xs1", "k3"), int(-2));
    assert_eq!(get("s2xs1", "k3xk3"), int(4));
    assert_eq!(get("trefoil-surgery", "k3"), int(22));
    assert_eq!(get("t3", "k3"), int(24));
    assert_eq!(get("b1-4", "k3xk3"), int(0));
}

#[test]
fn euler_numbers_runs() {
    let rows = euler_numbers::run_example().unwrap();
    assert_eq!(rows[2].0, 324.into());
    assert_eq!(rows[1].1, Some(24.into()));
    assert_eq!(rows[0].1, None);
}

#[test]
fn lambda_algebra_runs() {
    let l = lambda_algebra::run_example().unwrap();
    assert_eq!(l.values.len(), 3);
}

#[test]
fn berezin_pfaffian_runs() {
    assert_eq!(berezin_pfaffian::run_example().unwrap(), frac(52, 3));
}

#[test]
fn vertex_integrals_runs() {
    assert_eq!(vertex_integrals::run_example().unwrap(), int(3));
}

#[test]
fn spec_files_runs() {
    assert_eq!(spec_files::run_example().unwrap(), int(22));
}
