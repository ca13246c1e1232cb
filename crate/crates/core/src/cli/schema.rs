//! Request payloads. Every payload is a JSON object; an optional `"op"` key
//! selects the operation and is stripped before the rest is decoded, so schema
//! errors point at the offending field of the original document.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer};
use serde_json::Value;

use crate::characters::Group;
use crate::kernel::rational::serde_str;
use crate::kernel::{Matrix, Rational};
use crate::moments::{BiMeasure, DiscreteMeasure};
use crate::partitions::Partition;
use crate::polybasis::PolyBasis;
use crate::symfun::FlowVector;
use crate::walks::RateSpec;

use super::CliError;

/// A rational given as `"p/q"` or a JSON integer.
#[derive(Clone, Debug)]
pub struct Q(pub Rational);

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        serde_str::deserialize(d).map(Q)
    }
}

pub fn rationals(v: &[Q]) -> Vec<Rational> {
    v.iter().map(|q| q.0.clone()).collect()
}

pub fn matrix(rows: &[Vec<Q>]) -> Result<Matrix, CliError> {
    Ok(Matrix::from_rows(rows.iter().map(|r| rationals(r)).collect())?)
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum BasisKind {
    Monomial,
    Sp,
    SoEven,
    SoOdd,
    Recursion,
    Coeffs,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisSpec {
    pub kind: BasisKind,
    #[serde(rename = "N")]
    pub n: Option<usize>,
    pub data: Option<Vec<Vec<Q>>>,
}

impl BasisSpec {
    /// `pointer` locates this spec in the request, for error reports.
    pub fn build(&self, pointer: &str, truncation: Option<usize>) -> Result<PolyBasis, CliError> {
        let size = self.n.or(truncation);
        let fixed = |f: fn(usize) -> PolyBasis| -> Result<PolyBasis, CliError> {
            if self.data.is_some() {
                return Err(CliError::schema(format!("{pointer}/data"), "this basis kind takes no data"));
            }
            size.map(f)
                .ok_or_else(|| CliError::schema(format!("{pointer}/N"), "missing truncation N (or --truncation)"))
        };
        let data = || {
            self.data
                .as_ref()
                .ok_or_else(|| CliError::schema(format!("{pointer}/data"), "missing rows"))
        };
        match self.kind {
            BasisKind::Monomial => fixed(PolyBasis::monomial),
            BasisKind::Sp => fixed(PolyBasis::sp),
            BasisKind::SoEven => fixed(PolyBasis::so_even),
            BasisKind::SoOdd => fixed(PolyBasis::so_odd),
            BasisKind::Recursion => {
                let b = PolyBasis::from_recursion(&matrix(data()?)?)?;
                Ok(cut(b, size))
            }
            BasisKind::Coeffs => {
                let rows: Vec<Vec<Rational>> = data()?.iter().map(|r| rationals(r)).collect();
                Ok(cut(PolyBasis::from_coeff_rows(&rows)?, size))
            }
        }
    }
}

/// Keeps the first `size` rows when an explicit `N` is smaller than the data.
fn cut(b: PolyBasis, size: Option<usize>) -> PolyBasis {
    match size {
        Some(n) if n < b.truncation() => {
            PolyBasis::from_coeffs(b.coeffs().leading(n)).expect("leading block stays unitriangular")
        }
        _ => b,
    }
}

/// Removes `"op"` from an object payload, returning it with the rest.
pub fn split_op(v: Value) -> Result<(Option<String>, Value), CliError> {
    match v {
        Value::Object(mut m) => {
            let op = match m.remove("op") {
                None => None,
                Some(Value::String(s)) => Some(s),
                Some(_) => return Err(CliError::schema("/op", "op must be a string")),
            };
            Ok((op, Value::Object(m)))
        }
        _ => Err(CliError::schema("", "request must be a JSON object")),
    }
}

/// Decodes with a JSON-pointer path on failure.
pub fn decode<T: DeserializeOwned>(v: Value) -> Result<T, CliError> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let pointer = to_pointer(e.path());
        CliError::schema(pointer, e.into_inner().to_string())
    })
}

fn to_pointer(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut s = String::new();
    for seg in path.iter() {
        match seg {
            Segment::Seq { index } => s.push_str(&format!("/{index}")),
            Segment::Map { key } => {
                s.push('/');
                s.push_str(&key.replace('~', "~0").replace('/', "~1"));
            }
            Segment::Enum { variant } => {
                s.push('/');
                s.push_str(variant);
            }
            Segment::Unknown => s.push_str("/?"),
        }
    }
    s
}

// Payloads, one per operation or group of operations sharing a shape.

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchurReq {
    pub basis: BasisSpec,
    pub lambda: Partition,
    pub x: Vec<Q>,
    pub depth: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpandReq {
    pub basis: BasisSpec,
    pub lambda: Partition,
    pub n: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SumsReq {
    pub x: Vec<Q>,
    #[serde(rename = "K")]
    pub k: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompleteReq {
    pub t: FlowVector,
    pub k: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchurTReq {
    pub lambda: Partition,
    pub t: FlowVector,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisOnlyReq {
    pub basis: BasisSpec,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvaluateReq {
    pub basis: BasisSpec,
    pub i: usize,
    pub x: Q,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowReq {
    pub basis: BasisSpec,
    pub x: Vec<Q>,
    pub k: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SizeReq {
    #[serde(rename = "N")]
    pub n: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JplusReq {
    pub jplus: Vec<Vec<Q>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixReq {
    pub matrix: Vec<Vec<Q>>,
    pub t: Option<Q>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepReq {
    pub basis: BasisSpec,
    pub lambda: Partition,
    pub n: Option<usize>,
    pub points: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyEntry {
    pub mu: Partition,
    pub coeff: Q,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlueckerReq {
    pub family: Vec<FamilyEntry>,
    pub lambda: Partition,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterReq {
    pub group: Group,
    pub lambda: Partition,
    pub x: Vec<Q>,
    pub cutoff: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupExpandReq {
    pub group: Group,
    pub lambda: Partition,
    pub n: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TauReq {
    pub basis: BasisSpec,
    pub theta: Option<BasisSpec>,
    pub n: usize,
    #[serde(default)]
    pub t: FlowVector,
    #[serde(default)]
    pub s: FlowVector,
    pub cutoff: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MomentsReq {
    pub measure: Option<DiscreteMeasure>,
    pub bimeasure: Option<BiMeasure>,
    pub lambda: Option<Partition>,
    pub nu: Option<Partition>,
    pub n: Option<usize>,
    pub size: Option<usize>,
    pub k: Option<usize>,
    #[serde(default)]
    pub t: FlowVector,
    pub cutoff: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WalkReq {
    pub rates: RateSpec,
    pub n: Option<usize>,
    pub mu: Option<Partition>,
    pub lambda: Option<Partition>,
    pub t: Option<Q>,
    pub steps: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionsReq {
    pub lambda: Option<Partition>,
    pub mu: Option<Partition>,
    pub nu: Option<Partition>,
    pub alpha: Option<Partition>,
    pub n: Option<usize>,
    pub len: Option<usize>,
    pub max_weight: Option<usize>,
    pub max_length: Option<usize>,
}

/// A required field that is optional in the payload type.
pub fn need<T: Clone>(v: &Option<T>, pointer: &str) -> Result<T, CliError> {
    v.clone()
        .ok_or_else(|| CliError::schema(pointer, "missing required field"))
}
