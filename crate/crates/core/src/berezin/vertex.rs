use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::{inverse, pfaffian, AntisymMatrix, PfaffianMethod};
use super::GrassmannElement;
use crate::error::{Error, Result};
use crate::series::{Rational, Ring};

/// A totally symmetric rank-4 tensor `Ω_{IJKL}` on `2n` indices together
/// with a nondegenerate antisymmetric `ε_{IJ}`: the curvature data a
/// hyper-Kähler target supplies at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticCurvature {
    n: usize,
    omega: Vec<Rational>,
    eps: AntisymMatrix,
    eps_inv: Vec<Vec<Rational>>,
    pf: Rational,
}

impl SyntheticCurvature {
    /// `omega` is flattened as `((i·d + j)·d + k)·d + l` with `d = 2n`.
    pub fn new(n: usize, omega: Vec<Rational>, eps: AntisymMatrix) -> Result<Self> {
        let d = 2 * n;
        if n == 0 || eps.size() != d {
            return Err(Error::Invalid(format!("ε must be {d}x{d} with n >= 1")));
        }
        if omega.len() != d.pow(4) {
            return Err(Error::LengthMismatch { expected: d.pow(4), found: omega.len() });
        }
        for (flat, v) in omega.iter().enumerate() {
            let mut idx = [flat / d.pow(3), flat / d.pow(2) % d, flat / d % d, flat % d];
            idx.sort_unstable();
            if *v != omega[((idx[0] * d + idx[1]) * d + idx[2]) * d + idx[3]] {
                return Err(Error::NotSymmetric);
            }
        }
        let eps_inv = inverse(eps.rows())?;
        let pf = pfaffian(&eps, PfaffianMethod::Combinatorial)?;
        Ok(Self { n, omega, eps, eps_inv, pf })
    }

    /// Builds `Ω` from its values on sorted index quadruples.
    pub fn from_symmetric(n: usize, eps: AntisymMatrix, f: impl Fn([usize; 4]) -> Rational) -> Result<Self> {
        let d = 2 * n;
        let omega = (0..d.pow(4))
            .map(|flat| {
                let mut idx = [flat / d.pow(3), flat / d.pow(2) % d, flat / d % d, flat % d];
                idx.sort_unstable();
                f(idx)
            })
            .collect();
        Self::new(n, omega, eps)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn omega(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        let d = self.dim();
        &self.omega[((i * d + j) * d + k) * d + l]
    }

    pub fn eps(&self) -> &AntisymMatrix {
        &self.eps
    }

    /// `ε^{IJ}`, the inverse matrix: `ε^{IK} ε_{KJ} = δ^I_J`.
    pub fn eps_inverse(&self) -> &[Vec<Rational>] {
        &self.eps_inv
    }

    /// Pfaffian of `ε` in the Berezin convention.
    pub fn pfaffian(&self) -> &Rational {
        &self.pf
    }

    fn gen(&self, flavor: usize, index: usize) -> usize {
        flavor * self.dim() + index
    }

    /// `Λ_I = Ω_{IJKL} χ_1^J χ_2^K η^L` on generators `η, χ_1, χ_2, …`.
    fn lambda_vector(&self, generators: usize) -> Vec<GrassmannElement> {
        let d = self.dim();
        (0..d)
            .map(|i| {
                let mut acc = GrassmannElement::zero(generators);
                for j in 0..d {
                    for k in 0..d {
                        for l in 0..d {
                            let w = self.omega(i, j, k, l);
                            if !w.is_zero() {
                                let gens = [self.gen(1, j), self.gen(2, k), self.gen(0, l)];
                                acc = acc.add(&GrassmannElement::monomial(generators, &gens, w.clone()));
                            }
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// `1 / Pfaff(ε)^flavors`, the normalized measure on that many copies.
    fn measure(&self, flavors: u32) -> Rational {
        Rational::from_integer(BigInt::from(1)) / self.pf.power(flavors)
    }
}

/// Zero-mode integral for `b1 = 3`:
/// `∫ dμ(η) Π_α dμ(χ_α) exp(I · (1/6) Ω_{IJKL} χ_α^I χ_β^J χ_γ^K η^L ε^{αβγ})`
/// over `η` and three flavors `χ_1, χ_2, χ_3`, each with the normalized
/// measure `d^{2n}/Pfaff(ε)`. Homogeneous of degree `2n` in `I`.
pub fn vertex_integral_b3(c: &SyntheticCurvature, i_m: &Rational) -> Result<Rational> {
    let d = c.dim();
    let generators = 4 * d;
    // The ε^{αβγ} sum collapses to 6 copies of the (1,2,3) ordering.
    let mut v = GrassmannElement::zero(generators);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let w = c.omega(i, j, k, l);
                    if !w.is_zero() {
                        let gens = [c.gen(1, i), c.gen(2, j), c.gen(3, k), c.gen(0, l)];
                        v = v.add(&GrassmannElement::monomial(generators, &gens, w * i_m));
                    }
                }
            }
        }
    }
    Ok(v.exp()?.berezin_integral() * c.measure(4))
}

/// Zero-mode integral for `b1 = 2` through the `H` vertex:
/// `∫ dμ(η) dμ(χ_1) dμ(χ_2) exp(−½ Λ_I ε^{IJ} Λ_J)` with
/// `Λ_I = ½ Ω_{IJKL} ε^{αβ} χ_α^J χ_β^K η^L`.
pub fn vertex_integral_b2(c: &SyntheticCurvature) -> Result<Rational> {
    let d = c.dim();
    let generators = 3 * d;
    let lambda = c.lambda_vector(generators);
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let mut h = GrassmannElement::zero(generators);
    for i in 0..d {
        for j in 0..d {
            let e = &c.eps_inverse()[i][j];
            if !e.is_zero() {
                h = h.add(&lambda[i].mul(&lambda[j]).scale(&(e * &half)));
            }
        }
    }
    Ok(h.neg().exp()?.berezin_integral() * c.measure(3))
}

/// The same `b1 = 2` integral with the `H` vertex split by an auxiliary odd
/// field `ψ`: `∫ dμ(η) dμ(χ_1) dμ(χ_2) dμ(ψ) exp(−½ ψ ε ψ + Λ_I ψ^I)`.
pub fn vertex_integral_b2_auxiliary(c: &SyntheticCurvature) -> Result<Rational> {
    let d = c.dim();
    let generators = 4 * d;
    let lambda = c.lambda_vector(generators);
    let mut exponent = GrassmannElement::zero(generators);
    for i in 0..d {
        for j in i + 1..d {
            let e = c.eps().get(i, j);
            if !e.is_zero() {
                exponent = exponent
                    .add(&GrassmannElement::monomial(generators, &[c.gen(3, i), c.gen(3, j)], -e.clone()));
            }
        }
        exponent = exponent.add(&lambda[i].mul(&GrassmannElement::generator(generators, c.gen(3, i))));
    }
    Ok(exponent.exp()?.berezin_integral() * c.measure(4))
}

/// `T_{KL} = Σ_{I,J} Ω_{IJKL} ε^{IJ}`: a symmetric tensor contracted with
/// an antisymmetric one, so every entry is zero.
pub fn tadpole_contract(c: &SyntheticCurvature) -> Vec<Vec<Rational>> {
    let d = c.dim();
    (0..d)
        .map(|k| {
            (0..d)
                .map(|l| {
                    let mut acc = Rational::zero();
                    for i in 0..d {
                        for j in 0..d {
                            acc += c.omega(i, j, k, l) * &c.eps_inverse()[i][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::int;

    fn standard_eps(n: usize) -> AntisymMatrix {
        let d = 2 * n;
        let mut upper = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                upper.push(if j == i + 1 && i % 2 == 0 { int(1) } else { int(0) });
            }
        }
        AntisymMatrix::from_upper(d, &upper).unwrap()
    }

    #[test]
    fn zero_curvature_integrates_to_zero() {
        let c = SyntheticCurvature::from_symmetric(1, standard_eps(1), |_| int(0)).unwrap();
        assert_eq!(vertex_integral_b3(&c, &int(1)).unwrap(), int(0));
        assert_eq!(vertex_integral_b2(&c).unwrap(), int(0));
        assert_eq!(vertex_integral_b2_auxiliary(&c).unwrap(), int(0));
    }

    #[test]
    fn rejects_non_symmetric_tensor() {
        let mut omega = vec![int(0); 16];
        omega[1] = int(1); // Ω_{0001} only
        assert_eq!(SyntheticCurvature::new(1, omega, standard_eps(1)), Err(Error::NotSymmetric));
    }

    #[test]
    fn rejects_singular_eps() {
        let eps = AntisymMatrix::from_upper(2, &[int(0)]).unwrap();
        assert_eq!(SyntheticCurvature::from_symmetric(1, eps, |_| int(1)), Err(Error::Singular));
    }

    #[test]
    fn tadpole_vanishes() {
        let c = SyntheticCurvature::from_symmetric(1, standard_eps(1), |i| int((i.iter().sum::<usize>() + 1) as i64))
            .unwrap();
        assert!(tadpole_contract(&c).iter().flatten().all(Zero::is_zero));
    }
}
