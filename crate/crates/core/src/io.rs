//! JSON documents read and written by the command-line tool.
//!
//! Rationals are strings `"p/q"` (or `"p"`). Integer coefficients in result
//! documents are JSON numbers, falling back to decimal strings when they do
//! not fit in 64 bits.

use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::conebox::GeneratorSet;
use crate::ehrhart::{ab_from_hstar, check_inequalities, HStarResult, InequalityReport};
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Int};
use crate::polytope::Polytope;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDocument {
    pub vertices: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl PolytopeDocument {
    pub fn from_polytope(p: &Polytope) -> Self {
        PolytopeDocument {
            vertices: p
                .vertices()
                .iter()
                .map(|v| v.iter().map(format_rational).collect())
                .collect(),
            name: p.name().map(str::to_owned),
        }
    }

    pub fn to_polytope(&self) -> Result<Polytope> {
        let points = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let p = Polytope::from_vertices(points)?;
        Ok(match &self.name {
            Some(n) => p.with_name(n.clone()),
            None => p,
        })
    }
}

pub fn parse_polytope(json: &str) -> Result<Polytope> {
    let doc: PolytopeDocument =
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_polytope()
}

pub fn polytope_to_json(p: &Polytope) -> String {
    serde_json::to_string_pretty(&PolytopeDocument::from_polytope(p))
        .expect("plain data serializes")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDocument {
    pub generators: Vec<Vec<String>>,
}

/// Parses `{"generators": [["1","3"], …]}` with integer entries.
pub fn parse_generators(json: &str) -> Result<GeneratorSet> {
    let doc: GeneratorDocument =
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    let gens = doc
        .generators
        .iter()
        .map(|g| {
            g.iter()
                .map(|x| {
                    x.trim()
                        .parse::<Int>()
                        .map_err(|_| Error::Parse(format!("generator entry {x:?} is not an integer")))
                })
                .collect::<Result<Vec<Int>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let Some(first) = gens.first() else {
        return Err(Error::EmptyInput);
    };
    GeneratorSet::new(first.len(), gens)
}

fn serialize_ints<S: Serializer>(v: &[Int], ser: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = ser.serialize_seq(Some(v.len()))?;
    for x in v {
        match x.to_i64() {
            Some(small) => seq.serialize_element(&small)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

fn deserialize_ints<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Vec<Int>, D::Error> {
    let raw: Vec<serde_json::Value> = Vec::deserialize(de)?;
    raw.into_iter()
        .map(|v| match v {
            serde_json::Value::Number(n) => n
                .to_string()
                .parse::<Int>()
                .map_err(|_| D::Error::custom(format!("{n} is not an integer"))),
            serde_json::Value::String(s) => s
                .parse::<Int>()
                .map_err(|_| D::Error::custom(format!("{s:?} is not an integer"))),
            other => Err(D::Error::custom(format!("expected an integer, got {other}"))),
        })
        .collect()
}

fn serialize_int<S: Serializer>(x: &Int, ser: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(small) => ser.serialize_i64(small),
        None => ser.serialize_str(&x.to_string()),
    }
}

fn deserialize_int<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Int, D::Error> {
    let v = serde_json::Value::deserialize(de)?;
    let text = match v {
        serde_json::Value::Number(n) => n.to_string(),
        serde_json::Value::String(s) => s,
        other => return Err(D::Error::custom(format!("expected an integer, got {other}"))),
    };
    text.parse::<Int>()
        .map_err(|_| D::Error::custom(format!("{text:?} is not an integer")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationDocument {
    pub family: u8,
    pub index: usize,
    #[serde(serialize_with = "serialize_int", deserialize_with = "deserialize_int")]
    pub lhs: Int,
    #[serde(serialize_with = "serialize_int", deserialize_with = "deserialize_int")]
    pub rhs: Int,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityDocument {
    pub passed: bool,
    pub violations: Vec<ViolationDocument>,
}

impl From<&InequalityReport> for InequalityDocument {
    fn from(r: &InequalityReport) -> Self {
        InequalityDocument {
            passed: r.passed,
            violations: r
                .violations
                .iter()
                .map(|v| ViolationDocument {
                    family: v.family,
                    index: v.index,
                    lhs: v.lhs.clone(),
                    rhs: v.rhs.clone(),
                })
                .collect(),
        }
    }
}

/// Result of an h* computation with its a/b split and inequality report.
/// Coefficient lists are in ascending degree; `hstar` has length `q (d + 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub q: u64,
    pub d: usize,
    pub method: String,
    #[serde(serialize_with = "serialize_ints", deserialize_with = "deserialize_ints")]
    pub hstar: Vec<Int>,
    pub s: usize,
    #[serde(serialize_with = "serialize_ints", deserialize_with = "deserialize_ints")]
    pub a: Vec<Int>,
    #[serde(serialize_with = "serialize_ints", deserialize_with = "deserialize_ints")]
    pub b: Vec<Int>,
    pub ell: u64,
    pub inequalities: InequalityDocument,
}

impl ResultDocument {
    pub fn from_hstar(h: &HStarResult) -> Result<Self> {
        let ab = ab_from_hstar(h)?;
        let n = h.window();
        Ok(ResultDocument {
            q: h.q,
            d: h.d,
            method: h.method.as_str().to_owned(),
            hstar: h.vector(),
            s: h.s,
            a: ab.a.padded(n),
            b: ab.b.padded(h.s),
            ell: ab.ell,
            inequalities: (&check_inequalities(h)).into(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}
