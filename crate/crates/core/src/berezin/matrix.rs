use num_traits::{One, Zero};

use super::GrassmannElement;
use crate::error::{Error, Result};
use crate::series::{Rational, Ring};

/// Square matrix with `A = −Aᵀ`.
#[derive(Debug, Clone, PartialEq)]
pub struct AntisymMatrix<C: Ring = Rational> {
    rows: Vec<Vec<C>>,
}

impl<C: Ring> AntisymMatrix<C> {
    pub fn new(rows: Vec<Vec<C>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("matrix must be square".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if rows[i][j] != -rows[j][i].clone() {
                    return Err(Error::NotAntisymmetric);
                }
            }
        }
        Ok(Self { rows })
    }

    /// From the strict upper triangle, row by row.
    pub fn from_upper(size: usize, upper: &[C]) -> Result<Self> {
        if upper.len() != size * size.saturating_sub(1) / 2 {
            return Err(Error::LengthMismatch { expected: size * size.saturating_sub(1) / 2, found: upper.len() });
        }
        let mut rows = vec![vec![C::zero(); size]; size];
        let mut it = upper.iter();
        for i in 0..size {
            for j in i + 1..size {
                let v = it.next().expect("length checked").clone();
                rows[j][i] = -v.clone();
                rows[i][j] = v;
            }
        }
        Ok(Self { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    fn even_half(&self) -> Result<usize> {
        if self.size() % 2 == 1 {
            return Err(Error::OddSize(self.size()));
        }
        Ok(self.size() / 2)
    }

    /// `−½ θ^i A_ij θ^j` on `size` generators.
    pub fn quadratic_form(&self) -> GrassmannElement<C> {
        let m = self.size();
        let mut q = GrassmannElement::zero(m);
        // −½ (A_ij θ_i θ_j + A_ji θ_j θ_i) = −A_ij θ_i θ_j for i < j
        for i in 0..m {
            for j in i + 1..m {
                q = q.add(&GrassmannElement::monomial(m, &[i, j], -self.rows[i][j].clone()));
            }
        }
        q
    }
}

/// How to evaluate a Pfaffian.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PfaffianMethod {
    /// `∫ d^{2k}θ exp(−½ θ A θ)`.
    Berezin,
    /// `(−1)^k / (2^k k!) Σ_σ sgn(σ) A_{σ1σ2} ⋯`, summed as perfect matchings.
    Combinatorial,
}

/// Pfaffian in the convention `∫ d^{2k}θ exp(−½ θ A θ)`, so that the
/// `2 × 2` block with `A_12 = a` gives `−a` (the usual Pfaffian times
/// `(−1)^k`).
pub fn pfaffian<C: Ring>(a: &AntisymMatrix<C>, method: PfaffianMethod) -> Result<C> {
    let k = a.even_half()?;
    Ok(match method {
        PfaffianMethod::Berezin => a.quadratic_form().exp()?.berezin_integral(),
        PfaffianMethod::Combinatorial => {
            let indices: Vec<usize> = (0..a.size()).collect();
            let s = matchings(a, &indices);
            if k % 2 == 1 {
                -s
            } else {
                s
            }
        }
    })
}

/// Signed sum over perfect matchings: pair the first index with each other
/// index in turn, sign alternating with its position.
fn matchings<C: Ring>(a: &AntisymMatrix<C>, idx: &[usize]) -> C {
    if idx.is_empty() {
        return C::one();
    }
    let first = idx[0];
    let mut acc = C::zero();
    for pos in 1..idx.len() {
        let entry = a.get(first, idx[pos]);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().enumerate().filter(|&(p, _)| p + 1 != pos).map(|(_, &v)| v).collect();
        let term = entry.clone() * matchings(a, &rest);
        acc = if pos % 2 == 1 { acc + term } else { acc - term };
    }
    acc
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let v = &f * &m[col][c];
                m[r][c] -= v;
            }
        }
    }
    det
}

/// Exact inverse by Gauss-Jordan elimination.
pub fn inverse(rows: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = rows.len();
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::Singular)?;
        m.swap(pivot, col);
        let p = m[col][col].clone();
        for v in m[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in 0..2 * n {
                let v = &f * &m[col][c];
                m[r][c] -= v;
            }
        }
    }
    Ok(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `∫ dμ(η) exp(−½ η ε η)` with the normalized measure
/// `dμ(η) = d^{2n}η / Pfaff(ε)`; equals `1` for every invertible `ε`.
pub fn gaussian_norm_check(eps: &AntisymMatrix) -> Result<Rational> {
    let pf = pfaffian(eps, PfaffianMethod::Combinatorial)?;
    if pf.is_zero() {
        return Err(Error::Singular);
    }
    let raw = eps.quadratic_form().exp()?.berezin_integral();
    Ok(raw / pf)
}

/// `∫ dμ(η) f(η)` with `dμ(η) = d^{2n}η / Pfaff(ε)`.
pub fn normalized_integral(f: &GrassmannElement, eps: &AntisymMatrix) -> Result<Rational> {
    if f.generators() != eps.size() {
        return Err(Error::LengthMismatch { expected: eps.size(), found: f.generators() });
    }
    let pf = pfaffian(eps, PfaffianMethod::Combinatorial)?;
    if pf.is_zero() {
        return Err(Error::Singular);
    }
    Ok(f.berezin_integral() / pf)
}

/// Both sides of `∫ dμ(η) f(ε η) = Pfaff(ε) ∫ d^{2n}η f(η)`.
pub fn change_of_variables_sides(f: &GrassmannElement, eps: &AntisymMatrix) -> Result<(Rational, Rational)> {
    let lhs = normalized_integral(&f.linear_transform(eps.rows())?, eps)?;
    let rhs = pfaffian(eps, PfaffianMethod::Combinatorial)? * f.berezin_integral();
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, MultiPoly};
    use num_bigint::BigInt;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| Rational::from_integer(BigInt::from(v))).collect()).collect()
    }

    #[test]
    fn two_by_two_convention() {
        let a = AntisymMatrix::from_upper(2, &[int(3)]).unwrap();
        assert_eq!(pfaffian(&a, PfaffianMethod::Berezin).unwrap(), int(-3));
        assert_eq!(pfaffian(&a, PfaffianMethod::Combinatorial).unwrap(), int(-3));
    }

    #[test]
    fn symbolic_two_by_two() {
        let a = MultiPoly::var("a");
        let m = AntisymMatrix::from_upper(2, std::slice::from_ref(&a)).unwrap();
        assert_eq!(pfaffian(&m, PfaffianMethod::Berezin).unwrap(), -a.clone());
        assert_eq!(pfaffian(&m, PfaffianMethod::Combinatorial).unwrap(), -a);
    }

    #[test]
    fn block_diagonal() {
        // blocks a = 2, b = 5
        let m = AntisymMatrix::from_upper(4, &[int(2), int(0), int(0), int(0), int(0), int(5)]).unwrap();
        assert_eq!(pfaffian(&m, PfaffianMethod::Berezin).unwrap(), int(10));
        assert_eq!(pfaffian(&m, PfaffianMethod::Combinatorial).unwrap(), int(10));
    }

    #[test]
    fn odd_size_and_validation() {
        let m = AntisymMatrix::from_upper(3, &[int(1), int(2), int(3)]).unwrap();
        assert_eq!(pfaffian(&m, PfaffianMethod::Berezin), Err(Error::OddSize(3)));
        assert_eq!(AntisymMatrix::new(int_matrix(&[&[0, 1], &[1, 0]])), Err(Error::NotAntisymmetric));
        assert_eq!(AntisymMatrix::new(int_matrix(&[&[1, 1], &[-1, 0]])), Err(Error::NotAntisymmetric));
    }

    #[test]
    fn determinant_and_inverse() {
        let m = int_matrix(&[&[2, 1], &[7, 4]]);
        assert_eq!(determinant(&m), int(1));
        assert_eq!(inverse(&m).unwrap(), int_matrix(&[&[4, -1], &[-7, 2]]));
        assert_eq!(inverse(&int_matrix(&[&[1, 2], &[2, 4]])), Err(Error::Singular));
        assert_eq!(determinant(&int_matrix(&[&[0, 1], &[1, 0]])), int(-1));
    }

    #[test]
    fn gaussian_normalization() {
        let std = AntisymMatrix::from_upper(2, &[int(1)]).unwrap();
        assert_eq!(gaussian_norm_check(&std).unwrap(), int(1));
        let scaled = AntisymMatrix::from_upper(2, &[int(-7)]).unwrap();
        assert_eq!(gaussian_norm_check(&scaled).unwrap(), int(1));
        let singular = AntisymMatrix::from_upper(2, &[int(0)]).unwrap();
        assert_eq!(gaussian_norm_check(&singular), Err(Error::Singular));
    }
}
