//! Text and JSON forms of the library's objects.
//!
//! Fields are written `p:n`, Galois rings `p:m:n`, the integers `Z`.
//! Elements use the literal grammar of [`crate::parse`] with `u` for the
//! generator, e.g. `2*u+1`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::contravariant::FiniteAlgebra;
use crate::covariant::{EtaleAlgebra, GaloisRep};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::frobenius_module::FrobModule;
use crate::galois_ring::{GaloisElement, GaloisRing};
use crate::linalg::{FpMatrix, Matrix};
use crate::parse::{parse_with, PolyAlgebra, RingAlgebra};
use crate::poly::DensePoly;
use crate::ring::{FrobeniusRing, Ring};
use crate::skew::{parse_skew, SkewPoly};

fn numbers(text: &str, parts: usize) -> Result<Vec<u64>> {
    let fields: Vec<&str> = text.trim().split(':').collect();
    if fields.len() != parts {
        return Err(Error::Invalid(format!(
            "expected {parts} ':'-separated numbers, got '{text}'"
        )));
    }
    fields
        .iter()
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::Invalid(format!("'{s}' is not a number in '{text}'")))
        })
        .collect()
}

/// `p:n`.
pub fn parse_field(text: &str) -> Result<Field> {
    let v = numbers(text, 2)?;
    Field::new(v[0], v[1] as usize)
}

/// Coefficient rings accepted on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Field(Field),
    Galois(GaloisRing),
    Integers,
}

impl FromStr for RingSpec {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "Z" || t == "ZZ" {
            return Ok(RingSpec::Integers);
        }
        match t.matches(':').count() {
            1 => Ok(RingSpec::Field(parse_field(t)?)),
            2 => {
                let v = numbers(t, 3)?;
                Ok(RingSpec::Galois(GaloisRing::new(
                    v[0],
                    v[1] as u32,
                    v[2] as usize,
                )?))
            }
            _ => Err(Error::Invalid(format!(
                "unknown ring '{text}'; use p:n, p:m:n or Z"
            ))),
        }
    }
}

impl RingSpec {
    pub fn literal(&self) -> String {
        match self {
            RingSpec::Field(k) => k.literal(),
            RingSpec::Galois(r) => r.literal(),
            RingSpec::Integers => "Z".into(),
        }
    }
}

/// An element of any ring with a named generator `u`.
pub fn parse_ring_element<R: FrobeniusRing>(parent: &R::Parent, text: &str) -> Result<R> {
    let alg = RingAlgebra::<R> {
        parent: parent.clone(),
        generator: Some(('u', R::generator(parent))),
    };
    Ok(parse_with(&alg, text)?)
}

pub fn parse_element(field: &Field, text: &str) -> Result<FieldElement> {
    parse_ring_element::<FieldElement>(field, text)
}

pub fn parse_galois_element(ring: &GaloisRing, text: &str) -> Result<GaloisElement> {
    parse_ring_element::<GaloisElement>(ring, text)
}

/// Degree bound for parsed series.
pub const SERIES_MAX_DEGREE: usize = 4096;

/// A polynomial in `t`; `u` names the ring generator when there is one.
pub fn parse_series<R: Ring>(
    parent: &R::Parent,
    generator: Option<R>,
    text: &str,
) -> Result<DensePoly<R>> {
    let alg = PolyAlgebra::<R> {
        parent: parent.clone(),
        var: 't',
        generator: generator.map(|g| ('u', g)),
        max_degree: SERIES_MAX_DEGREE,
    };
    Ok(parse_with(&alg, text)?)
}

pub fn parse_skew_poly(field: &Field, text: &str) -> Result<SkewPoly<FieldElement>> {
    Ok(parse_skew(field, text)?)
}

fn parse_matrix(field: &Field, rows: &[Vec<String>]) -> Result<Vec<Vec<FieldElement>>> {
    rows.iter()
        .map(|r| r.iter().map(|s| parse_element(field, s)).collect())
        .collect()
}

fn render_matrix(m: &Matrix<FieldElement>) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect()
}

/// `{ "field": "p:n", "matrix": [[elem, …], …] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub field: String,
    pub matrix: Vec<Vec<String>>,
}

impl ModuleJson {
    pub fn to_module(&self) -> Result<FrobModule> {
        let k = parse_field(&self.field)?;
        FrobModule::from_rows(&k, parse_matrix(&k, &self.matrix)?)
    }

    pub fn from_module(m: &FrobModule) -> Self {
        ModuleJson {
            field: m.base().literal(),
            matrix: render_matrix(m.matrix()),
        }
    }
}

/// A base-field matrix of any shape: `{ "field": "p:n", "matrix": … }`.
pub fn parse_field_matrix(m: &ModuleJson) -> Result<Matrix<FieldElement>> {
    let k = parse_field(&m.field)?;
    let rows = parse_matrix(&k, &m.matrix)?;
    let cols = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension("ragged matrix".into()));
    }
    if rows.is_empty() {
        return Ok(Matrix::zeros(&k, 0, 0));
    }
    Ok(Matrix::from_rows(&k, rows))
}

pub fn render_field_matrix(m: &Matrix<FieldElement>) -> Vec<Vec<String>> {
    render_matrix(m)
}

/// `{ "dim": d, "frobenius": [[0|1, …], …], "base": "p:n" }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisRepJson {
    pub dim: usize,
    pub frobenius: Vec<Vec<u32>>,
    pub base: String,
}

impl GaloisRepJson {
    pub fn to_rep(&self) -> Result<GaloisRep> {
        let k = parse_field(&self.base)?;
        if self.frobenius.len() != self.dim || self.frobenius.iter().any(|r| r.len() != self.dim) {
            return Err(Error::Dimension(format!(
                "Frobenius matrix must be {0}x{0}",
                self.dim
            )));
        }
        if let Some(&c) = self.frobenius.iter().flatten().find(|&&c| c >= k.p()) {
            return Err(Error::Invalid(format!(
                "entry {c} is not a residue mod {}",
                k.p()
            )));
        }
        let m = if self.dim == 0 {
            FpMatrix::zeros(k.p(), 0, 0)
        } else {
            FpMatrix::from_rows(k.p(), &self.frobenius)
        };
        GaloisRep::new(&k, m)
    }

    pub fn from_rep(v: &GaloisRep) -> Self {
        GaloisRepJson {
            dim: v.dim(),
            frobenius: v.frobenius().to_rows(),
            base: v.base().literal(),
        }
    }
}

/// `{ "base": "p:n", "factors": [d₁, …] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaleAlgebraJson {
    pub base: String,
    pub factors: Vec<usize>,
}

impl EtaleAlgebraJson {
    pub fn to_algebra(&self) -> Result<EtaleAlgebra> {
        EtaleAlgebra::new(&parse_field(&self.base)?, self.factors.clone())
    }
}

/// `{ "base": "p:n", "dim": d, "mul": c[i][j][k] }` with `b_i·b_j = Σ c_ijk b_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub base: String,
    pub dim: usize,
    pub mul: Vec<Vec<Vec<String>>>,
}

impl AlgebraJson {
    pub fn to_algebra(&self) -> Result<FiniteAlgebra> {
        let k = parse_field(&self.base)?;
        if self.mul.len() != self.dim {
            return Err(Error::InvalidAlgebra(format!(
                "dim is {} but {} rows of constants were given",
                self.dim,
                self.mul.len()
            )));
        }
        let mul = self
            .mul
            .iter()
            .map(|m| parse_matrix(&k, m))
            .collect::<Result<Vec<_>>>()?;
        FiniteAlgebra::new(&k, mul)
    }

    pub fn from_algebra(a: &FiniteAlgebra) -> Self {
        AlgebraJson {
            base: a.base().literal(),
            dim: a.dim(),
            mul: a
                .structure_constants()
                .iter()
                .map(|m| {
                    m.iter()
                        .map(|r| r.iter().map(|x| x.to_string()).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_specs() {
        assert_eq!("Z".parse::<RingSpec>().unwrap(), RingSpec::Integers);
        assert_eq!("2:3".parse::<RingSpec>().unwrap().literal(), "2:3");
        assert_eq!("2:2:3".parse::<RingSpec>().unwrap().literal(), "2:2:3");
        assert!("2".parse::<RingSpec>().is_err());
        assert!(matches!(parse_field("4:1"), Err(Error::NotPrime(4))));
        assert!(parse_field("2:x").is_err());
    }

    #[test]
    fn element_round_trip() {
        let k = Field::new(3, 3).unwrap();
        for x in k.elements() {
            assert_eq!(parse_element(&k, &x.to_string()).unwrap(), x);
        }
        let r = GaloisRing::new(2, 3, 2).unwrap();
        for x in r.elements() {
            assert_eq!(parse_galois_element(&r, &x.to_string()).unwrap(), x);
        }
    }

    #[test]
    fn module_json_round_trip() {
        let j: ModuleJson = serde_json::from_str(r#"{"field":"2:2","matrix":[["u"]]}"#).unwrap();
        let m = j.to_module().unwrap();
        assert_eq!(ModuleJson::from_module(&m), j);
        let bad: ModuleJson =
            serde_json::from_str(r#"{"field":"2:2","matrix":[["u","1"]]}"#).unwrap();
        assert!(bad.to_module().is_err());
    }

    #[test]
    fn algebra_json() {
        let j = AlgebraJson {
            base: "2:1".into(),
            dim: 2,
            mul: vec![
                vec![vec!["1".into(), "0".into()], vec!["0".into(), "1".into()]],
                vec![vec!["0".into(), "1".into()], vec!["0".into(), "0".into()]],
            ],
        };
        let a = j.to_algebra().unwrap();
        assert_eq!(AlgebraJson::from_algebra(&a), j);
    }

    #[test]
    fn rep_json() {
        let j = GaloisRepJson {
            dim: 2,
            frobenius: vec![vec![0, 1], vec![1, 0]],
            base: "2:1".into(),
        };
        assert_eq!(GaloisRepJson::from_rep(&j.to_rep().unwrap()), j);
        let singular = GaloisRepJson {
            dim: 1,
            frobenius: vec![vec![0]],
            base: "2:1".into(),
        };
        assert_eq!(singular.to_rep().unwrap_err(), Error::Singular);
    }
}
