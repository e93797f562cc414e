//! JSON spec files read by the `qi` command-line tool.
//!
//! Rationals may be written as JSON integers or as strings such as `"-3/4"`.
//! Polynomial entries (z- and g-files) are strings in the
//! [`MultiPoly::parse`] syntax, or plain numbers.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::berezin::{AntisymMatrix, SyntheticCurvature};
use crate::error::{Error, Result};
use crate::lambda::{GData, LambdaVector, ZVector};
use crate::manifold::{ClassicalData, Structure};
use crate::rw::HyperKahlerWeightData;
use crate::series::{parse_rational, MultiPoly, Partition, Rational};
use crate::wheels::AlexanderPolynomial;

/// Manifold file: `{"name", "b1", "torOrder", and one of "cupTriple",
/// "linkingMu", "alexander"}`. `alexander` lists the coefficients of
/// `t^0 … t^d`; negative powers follow by symmetry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ManifoldSpec {
    pub name: String,
    pub b1: u32,
    #[serde(default = "one")]
    pub tor_order: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cup_triple: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linking_mu: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alexander: Option<Vec<Value>>,
}

fn one() -> u64 {
    1
}

impl ManifoldSpec {
    pub fn to_data(&self) -> Result<ClassicalData> {
        let structure = match (self.cup_triple, &self.linking_mu, &self.alexander) {
            (None, None, None) => Structure::None,
            (Some(mu), None, None) => Structure::CupTriple(mu),
            (None, Some(mu), None) => Structure::Linking(rational(mu)?),
            (None, None, Some(coeffs)) => {
                let coeffs = coeffs.iter().map(rational).collect::<Result<Vec<_>>>()?;
                Structure::Alexander(AlexanderPolynomial::from_nonnegative(coeffs)?)
            }
            _ => {
                return Err(Error::Invalid(format!(
                    "manifold `{}`: give at most one of cupTriple, linkingMu, alexander",
                    self.name
                )))
            }
        };
        ClassicalData::new(self.b1, self.tor_order, structure)
    }
}

/// Space file: `{"name", "n", "eulerChar", "pairing": {"1+1": …, "2": …}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SpaceSpec {
    pub name: String,
    pub n: u32,
    pub euler_char: Value,
    pub pairing: BTreeMap<String, Value>,
}

impl SpaceSpec {
    pub fn to_data(&self) -> Result<HyperKahlerWeightData> {
        let pairing = self
            .pairing
            .iter()
            .map(|(k, v)| Ok((k.parse::<Partition>()?, rational(v)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        HyperKahlerWeightData::new(self.name.clone(), self.n, rational(&self.euler_char)?, pairing)
    }

    pub fn from_data(x: &HyperKahlerWeightData) -> Self {
        Self {
            name: x.name().to_string(),
            n: x.n(),
            euler_char: Value::String(x.euler_char().to_string()),
            pairing: x.pairings().map(|(p, v)| (p.to_string(), Value::String(v.to_string()))).collect(),
        }
    }
}

/// `{"n": n, "z": [z_0, …, z_n]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZSpec {
    pub n: usize,
    pub z: Vec<Value>,
}

impl ZSpec {
    pub fn to_data(&self) -> Result<ZVector> {
        Ok(ZVector(poly_list(self.n, &self.z)?))
    }
}

/// `{"n": n, "g": [g_0, …, g_n]}` with `g_n = 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GSpec {
    pub n: usize,
    pub g: Vec<Value>,
}

impl GSpec {
    pub fn to_data(&self) -> Result<GData> {
        GData::new(poly_list(self.n, &self.g)?)
    }
}

/// `{"matrix": [[…], …]}`, antisymmetric.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSpec {
    pub matrix: Vec<Vec<Value>>,
}

impl MatrixSpec {
    pub fn to_data(&self) -> Result<AntisymMatrix> {
        AntisymMatrix::new(rational_rows(&self.matrix)?)
    }
}

/// Curvature file: `{"n", "eps": [[…]], "omega": {"0,0,0,1": "3", …}}`.
/// `omega` keys are index quadruples; each value is copied to every
/// permutation, and unlisted quadruples are zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurvatureSpec {
    pub n: usize,
    pub eps: Vec<Vec<Value>>,
    pub omega: BTreeMap<String, Value>,
}

impl CurvatureSpec {
    pub fn to_data(&self) -> Result<SyntheticCurvature> {
        let eps = AntisymMatrix::new(rational_rows(&self.eps)?)?;
        let d = 2 * self.n;
        let mut entries: BTreeMap<[usize; 4], Rational> = BTreeMap::new();
        for (key, v) in &self.omega {
            let idx: Vec<usize> = key
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index quadruple `{key}`"))))
                .collect::<Result<_>>()?;
            let mut idx: [usize; 4] =
                idx.try_into().map_err(|_| Error::Parse(format!("`{key}` needs four indices")))?;
            if idx.iter().any(|&i| i >= d) {
                return Err(Error::Invalid(format!("index in `{key}` out of range for dimension {d}")));
            }
            idx.sort_unstable();
            let value = rational(v)?;
            if let Some(prev) = entries.insert(idx, value.clone()) {
                if prev != value {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        SyntheticCurvature::from_symmetric(self.n, eps, |idx| entries.get(&idx).cloned().unwrap_or_default())
    }
}

/// Machine-readable form of a `λ` vector: `{"b1", "lambda": ["…", …]}`.
pub fn lambda_to_json(l: &LambdaVector) -> Value {
    serde_json::json!({
        "b1": l.b1,
        "lambda": l.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_json(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// A rational from a JSON integer or string.
pub fn rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        _ => Err(Error::Parse(format!("expected an integer or a fraction string, found {v}"))),
    }
}

fn rational_rows(rows: &[Vec<Value>]) -> Result<Vec<Vec<Rational>>> {
    rows.iter().map(|r| r.iter().map(rational).collect()).collect()
}

fn poly(v: &Value) -> Result<MultiPoly> {
    match v {
        Value::String(s) => MultiPoly::parse(s),
        _ => Ok(MultiPoly::constant(rational(v)?)),
    }
}

fn poly_list(n: usize, values: &[Value]) -> Result<Vec<MultiPoly>> {
    if values.len() != n + 1 {
        return Err(Error::LengthMismatch { expected: n + 1, found: values.len() });
    }
    values.iter().map(poly).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::int;

    #[test]
    fn manifold_files() {
        let t3: ManifoldSpec = parse_json(r#"{"name":"t3","b1":3,"torOrder":1,"cupTriple":1}"#).unwrap();
        assert_eq!(t3.to_data().unwrap(), ClassicalData::rank_three(1, 1).unwrap());

        let tre: ManifoldSpec = parse_json(r#"{"name":"tre","b1":1,"alexander":[-1,1]}"#).unwrap();
        let d = tre.to_data().unwrap();
        assert_eq!(d.alexander().unwrap().body().to_string(), "t - 1 + t^-1");

        let mu: ManifoldSpec = parse_json(r#"{"name":"x","b1":2,"torOrder":3,"linkingMu":"-2/5"}"#).unwrap();
        assert_eq!(mu.to_data().unwrap().linking_mu(), Some(&Rational::new((-2).into(), 5.into())));
    }

    #[test]
    fn bad_manifold_files() {
        assert!(matches!(parse_json::<ManifoldSpec>("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_json::<ManifoldSpec>(r#"{"name":"x","b1":1,"bogus":1}"#), Err(Error::Parse(_))));
        let wrong: ManifoldSpec = parse_json(r#"{"name":"x","b1":1,"cupTriple":1}"#).unwrap();
        assert!(matches!(wrong.to_data(), Err(Error::Invalid(_))));
        let unnormalized: ManifoldSpec = parse_json(r#"{"name":"x","b1":1,"alexander":[2]}"#).unwrap();
        assert!(matches!(unnormalized.to_data(), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn space_round_trip() {
        let spec = SpaceSpec::from_data(&HyperKahlerWeightData::k3());
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(parse_json::<SpaceSpec>(&text).unwrap().to_data().unwrap(), HyperKahlerWeightData::k3());
    }

    #[test]
    fn space_rejects_wrong_keys() {
        let s: SpaceSpec = parse_json(r#"{"name":"x","n":2,"eulerChar":1,"pairing":{"2":0}}"#).unwrap();
        assert!(matches!(s.to_data(), Err(Error::Invalid(_))));
    }

    #[test]
    fn polynomial_lists() {
        let z: ZSpec = parse_json(r#"{"n":2,"z":["a + 1", 0, "1/2"]}"#).unwrap();
        let v = z.to_data().unwrap().0;
        assert_eq!(v[0], MultiPoly::parse("1 + a").unwrap());
        assert_eq!(v[2], MultiPoly::constant(Rational::new(1.into(), 2.into())));
        let short: ZSpec = parse_json(r#"{"n":2,"z":[1]}"#).unwrap();
        assert_eq!(short.to_data(), Err(Error::LengthMismatch { expected: 3, found: 1 }));
    }

    #[test]
    fn curvature_file_fills_permutations() {
        let c: CurvatureSpec =
            parse_json(r#"{"n":1,"eps":[[0,1],[-1,0]],"omega":{"1,0,0,0":2,"0,1,1,1":"-1/3"}}"#).unwrap();
        let c = c.to_data().unwrap();
        assert_eq!(c.omega(0, 0, 1, 0), &int(2));
        assert_eq!(c.omega(1, 1, 0, 1), &Rational::new((-1).into(), 3.into()));
        assert_eq!(c.omega(1, 1, 1, 1), &int(0));
    }
}
