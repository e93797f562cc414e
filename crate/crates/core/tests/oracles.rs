mod common;

use common::*;
use num_bigint::BigInt;
use qinv::berezin::{vertex_integral_b2, vertex_integral_b2_auxiliary, vertex_integral_b3, AntisymMatrix, SyntheticCurvature};
use qinv::rw::{euler_hilb, euler_kummer, z_rw, HyperKahlerWeightData};
use qinv::manifold::ClassicalData;
use qinv::series::Partition;
use qinv::wheels::{a_coeffs, alpha, torsion_series, AlexanderPolynomial};

fn figure_eight_like() -> (Vec<Q>, AlexanderPolynomial) {
    let half = vec![q(1), q(-1), q(1)];
    (half.clone(), AlexanderPolynomial::from_nonnegative(half).unwrap())
}

#[test]
fn wheel_coefficients_match_series_oracle() {
    for half in [vec![q(1)], vec![q(-1), q(1)], vec![q(1), q(-1), q(1)], vec![q(2), q(-1), qf(1, 2)]] {
        let delta = AlexanderPolynomial::from_nonnegative(half.clone()).unwrap();
        let (a_prime, _, alpha_ref) = wheel_oracle(&half, 10);
        let a = a_coeffs(&delta, 10);
        let al = alpha(&delta, 10);
        for m in 1..=5u32 {
            assert_eq!(a.get(&m).cloned().unwrap_or_default(), a_prime[m as usize - 1], "a' m={m}");
            assert_eq!(al.coeff(m), alpha_ref[m as usize - 1], "α m={m}");
        }
    }
}

#[test]
fn figure_eight_like_is_even_and_matches() {
    let (half, delta) = figure_eight_like();
    let len = 11;
    let d = delta_at_exp(&half, len);
    assert!(d.iter().skip(1).step_by(2).all(|c| c == &q(0)));
    // log Δ(e^x) = 3x^2 + … so a'_2 = −3/2.
    assert_eq!(a_coeffs(&delta, 2)[&1], qf(-3, 2));

    let s2 = s_mul(&sinh_ratio(len), &sinh_ratio(len), len);
    let t = torsion_series(&delta, 10);
    // torsion · (sinh ratio)^2 = Δ(e^x)
    let back = s_mul(t.coeffs(), &s2, len);
    assert_eq!(back, d);
}

#[test]
fn kernel_constants() {
    let (_, two_b, _) = wheel_oracle(&[q(1)], 4);
    assert_eq!(two_b[0], qf(1, 24));
    assert_eq!(two_b[1], qf(-1, 2880));
}

/// `n a_n = 24 Σ_{k=1}^n σ_1(k) a_{n−k}` for the coefficients of `Π (1 − t^k)^{−24}`.
#[test]
fn hilbert_scheme_euler_numbers_follow_divisor_recurrence() {
    let sigma = |k: u64| -> BigInt { (1..=k).filter(|d| k.is_multiple_of(*d)).sum::<u64>().into() };
    let mut a = vec![BigInt::from(1)];
    for n in 1..=12u64 {
        let s: BigInt = (1..=n).map(|k| sigma(k) * &a[(n - k) as usize]).sum();
        a.push(s * 24 / n);
    }
    for (n, v) in a.iter().enumerate() {
        assert_eq!(&euler_hilb(n as u32), v, "n = {n}");
    }
}

#[test]
fn kummer_euler_numbers() {
    for (n, e) in [(1, 24), (2, 108), (3, 448), (4, 750)] {
        assert_eq!(euler_kummer(n).unwrap(), BigInt::from(e));
    }
}

fn standard_eps() -> Vec<Vec<Q>> {
    vec![vec![q(0), q(1)], vec![q(-1), q(0)]]
}

fn lib_curvature(n: usize, omega: &[Q], eps: &[Vec<Q>]) -> SyntheticCurvature {
    SyntheticCurvature::new(n, omega.to_vec(), AntisymMatrix::new(eps.to_vec()).unwrap()).unwrap()
}

/// `Ω_{0011}` and permutations equal to `s`, all else zero.
fn one_parameter(s: &Q) -> Vec<Q> {
    (0..16)
        .map(|flat| {
            let mut idx = [flat / 8, flat / 4 % 2, flat / 2 % 2, flat % 2];
            idx.sort_unstable();
            if idx == [0, 0, 1, 1] {
                s.clone()
            } else {
                q(0)
            }
        })
        .collect()
}

#[test]
fn b3_vertex_one_parameter_family() {
    for s in [q(1), q(2), qf(-3, 5)] {
        let omega = one_parameter(&s);
        let c = lib_curvature(1, &omega, &standard_eps());
        let reference = b3_oracle(1, &omega, &standard_eps(), &q(1));
        assert_eq!(vertex_integral_b3(&c, &q(1)).unwrap(), reference);
        assert_eq!(vertex_integral_b2(&c).unwrap(), reference);
        assert_eq!(vertex_integral_b2_auxiliary(&c).unwrap(), reference);
        // Quadratic in s, frozen at s = 1.
        assert_eq!(reference, q(3) * &s * &s);
    }
}

#[test]
fn b3_vertex_random_against_oracle() {
    let mut r = rng(11);
    for _ in 0..5 {
        let omega = random_symmetric_tensor(&mut r, 2);
        let eps = random_antisymmetric(&mut r, 2);
        if eps[0][1] == q(0) {
            continue;
        }
        let coupling = small_q(&mut r);
        let c = lib_curvature(1, &omega, &eps);
        assert_eq!(vertex_integral_b3(&c, &coupling).unwrap(), b3_oracle(1, &omega, &eps, &coupling));
    }
}

#[test]
fn b1_one_rw_matches_oracle_for_k3_products() {
    for half in [vec![q(1)], vec![q(-1), q(1)], vec![q(1), q(-1), q(1)]] {
        let (_, _, al) = wheel_oracle(&half, 4);
        let d = ClassicalData::rank_one(1, AlexanderPolynomial::from_nonnegative(half).unwrap()).unwrap();
        let k3 = HyperKahlerWeightData::k3();
        // n = 1: (−1)(−2α_2)⟨P_1⟩
        assert_eq!(z_rw(&d, &k3).unwrap(), q(2) * &al[0] * q(-24));
        // n = 2 on K3×K3: ⟨P_1^2⟩ = 2·24^2, ⟨P_2⟩ = 0.
        let k3xk3 = qinv::rw::product_x(&k3, &k3);
        assert_eq!(k3xk3.pairing(&"1+1".parse::<Partition>().unwrap()), q(1152));
        assert_eq!(z_rw(&d, &k3xk3).unwrap(), q(2) * &al[0] * &al[0] * q(1152));
    }
}
