//! JSON structure files: exact entries, pinned schema and flattening
//! convention.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactlin::{Field, LinMap};
use crate::factor::FactorizationData;
use crate::hopf::{HopfCoquasigroupData, HopfMaps, HopfQuasigroupData};
use crate::loops::{FiniteGroup, FiniteLoop};
use crate::products::{DistributiveLawData, MatchedPairData};

pub const SCHEMA: &str = "hopfq/v1";
pub const CONVENTION: &str = "row-major-left-major-v1";

/// A map into `X` together with its source object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismData {
    pub source: HopfQuasigroupData,
    pub map: LinMap,
}

/// Everything a structure file can hold.
#[derive(Clone, Debug)]
pub enum Document {
    HopfQuasigroup(HopfQuasigroupData),
    HopfCoquasigroup(HopfCoquasigroupData),
    Loop(FiniteLoop),
    Group(FiniteGroup),
    DistributiveLaw(DistributiveLawData),
    MatchedPair(MatchedPairData),
    Factorization(FactorizationData),
    Morphism(MorphismData),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::HopfQuasigroup(_) => "hopf_quasigroup",
            Document::HopfCoquasigroup(_) => "hopf_coquasigroup",
            Document::Loop(_) => "loop",
            Document::Group(_) => "group",
            Document::DistributiveLaw(_) => "distributive_law",
            Document::MatchedPair(_) => "matched_pair",
            Document::Factorization(_) => "factorization",
            Document::Morphism(_) => "morphism",
        }
    }

    fn field(&self) -> Option<Field> {
        Some(match self {
            Document::HopfQuasigroup(h) => h.field,
            Document::HopfCoquasigroup(h) => h.field,
            Document::Loop(_) | Document::Group(_) => return None,
            Document::DistributiveLaw(d) => d.a.field,
            Document::MatchedPair(m) => m.a.field,
            Document::Factorization(f) => f.x.field,
            Document::Morphism(m) => m.source.field,
        })
    }

    pub fn to_json(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("schema".into(), json!(SCHEMA));
        doc.insert("convention".into(), json!(CONVENTION));
        doc.insert("kind".into(), json!(self.kind()));
        if let Some(f) = self.field() {
            doc.insert("field".into(), field_json(f));
        }
        let body = match self {
            Document::HopfQuasigroup(h) => maps_json(h),
            Document::HopfCoquasigroup(h) => maps_json(h),
            Document::Loop(l) => loop_json(l),
            Document::Group(g) => loop_json(g),
            Document::DistributiveLaw(d) => json!({"h": maps_json(&d.h), "a": maps_json(&d.a), "psi": matrix_json(&d.psi)}),
            Document::MatchedPair(m) => json!({
                "a": maps_json(&m.a),
                "h": maps_json(&m.h),
                "phi_a": matrix_json(&m.phi_a),
                "phi_h": matrix_json(&m.phi_h),
            }),
            Document::Factorization(f) => json!({
                "x": maps_json(&f.x),
                "a": maps_json(&f.a),
                "h": maps_json(&f.h),
                "i_a": matrix_json(&f.i_a),
                "i_h": matrix_json(&f.i_h),
            }),
            Document::Morphism(m) => json!({"source": maps_json(&m.source), "map": matrix_json(&m.map)}),
        };
        if let Value::Object(b) = body {
            doc.extend(b);
        }
        Value::Object(doc)
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("documents serialize")
    }

    pub fn parse(text: &str) -> Result<Document> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Document::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Document> {
        let schema = str_field(v, "schema")?;
        if schema != SCHEMA {
            return Err(Error::Parse(format!("unsupported schema {schema:?}, expected {SCHEMA:?}")));
        }
        let convention = str_field(v, "convention")?;
        if convention != CONVENTION {
            return Err(Error::Parse(format!("unsupported convention {convention:?}, expected {CONVENTION:?}")));
        }
        let kind = str_field(v, "kind")?;
        if kind == "loop" || kind == "group" {
            let l = parse_loop(v)?;
            return Ok(if kind == "group" { Document::Group(FiniteGroup::new(l)?) } else { Document::Loop(l) });
        }
        let field = parse_field(get(v, "field")?)?;
        let maps = |key: &str| parse_maps(get(v, key)?, field);
        let matrix = |key: &str, dom: Vec<usize>, cod: Vec<usize>| parse_matrix(get(v, key)?, field, dom, cod, key);
        Ok(match kind {
            "hopf_quasigroup" => Document::HopfQuasigroup(HopfQuasigroupData(parse_maps(v, field)?)),
            "hopf_coquasigroup" => Document::HopfCoquasigroup(HopfCoquasigroupData(parse_maps(v, field)?)),
            "distributive_law" => {
                let (h, a) = (maps("h")?, maps("a")?);
                let psi = matrix("psi", vec![h.dim, a.dim], vec![a.dim, h.dim])?;
                Document::DistributiveLaw(DistributiveLawData::new(HopfQuasigroupData(h), HopfQuasigroupData(a), psi)?)
            }
            "matched_pair" => {
                let (a, h) = (maps("a")?, maps("h")?);
                let phi_a = matrix("phi_a", vec![h.dim, a.dim], vec![a.dim])?;
                let phi_h = matrix("phi_h", vec![h.dim, a.dim], vec![h.dim])?;
                Document::MatchedPair(MatchedPairData::new(HopfQuasigroupData(a), HopfQuasigroupData(h), phi_a, phi_h)?)
            }
            "factorization" => {
                let (x, a, h) = (maps("x")?, maps("a")?, maps("h")?);
                let i_a = matrix("i_a", vec![a.dim], vec![x.dim])?;
                let i_h = matrix("i_h", vec![h.dim], vec![x.dim])?;
                Document::Factorization(FactorizationData::new(
                    HopfQuasigroupData(x),
                    HopfQuasigroupData(a),
                    HopfQuasigroupData(h),
                    i_a,
                    i_h,
                )?)
            }
            "morphism" => {
                let source = maps("source")?;
                let rows = get(v, "map")?.as_array().map_or(0, Vec::len);
                let map = matrix("map", vec![source.dim], vec![rows])?;
                Document::Morphism(MorphismData { source: HopfQuasigroupData(source), map })
            }
            other => return Err(Error::Parse(format!("unknown kind {other:?}"))),
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

fn field_json(f: Field) -> Value {
    let spec = match f {
        Field::Rational => FieldSpec::Rational,
        Field::Prime { p } => FieldSpec::Prime { p },
    };
    serde_json::to_value(spec).expect("field spec serializes")
}

fn parse_field(v: &Value) -> Result<Field> {
    let spec: FieldSpec = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("field: {e}")))?;
    match spec {
        FieldSpec::Rational => Ok(Field::Rational),
        FieldSpec::Prime { p } => Field::prime(p),
    }
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing key {key:?}")))
}

fn str_field<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    get(v, key)?.as_str().ok_or_else(|| Error::Parse(format!("{key:?} must be a string")))
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    get(v, key)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| Error::Parse(format!("{key:?} must be a non-negative integer")))
}

/// Rows of the matrix, each a list of entries.
pub fn matrix_json(m: &LinMap) -> Value {
    let cols = m.cols();
    Value::Array(
        m.entries()
            .chunks(cols)
            .map(|row| Value::Array(row.iter().map(|s| s.to_json()).collect()))
            .collect(),
    )
}

fn parse_matrix(v: &Value, field: Field, dom: Vec<usize>, cod: Vec<usize>, what: &str) -> Result<LinMap> {
    let rows = v.as_array().ok_or_else(|| Error::Parse(format!("{what}: expected an array of rows")))?;
    let mut entries = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| Error::Parse(format!("{what}: row {r} is not an array")))?;
        for x in row {
            entries.push(match x {
                Value::String(s) => field.parse(s)?,
                Value::Number(n) => match n.as_i64() {
                    Some(i) => field.int(i),
                    None => field.parse(&n.to_string())?,
                },
                other => return Err(Error::Parse(format!("{what}: bad entry {other}"))),
            });
        }
    }
    LinMap::new(field, dom, cod, entries).map_err(|e| Error::Shape(format!("{what}: {e}")))
}

fn maps_json(h: &HopfMaps) -> Value {
    let mut o = Map::new();
    o.insert("dim".into(), json!(h.dim));
    if let Some(l) = &h.labels {
        o.insert("labels".into(), json!(l));
    }
    if let Some(f) = &h.factors {
        o.insert("factors".into(), json!(f));
    }
    o.insert(
        "maps".into(),
        json!({
            "unit": matrix_json(&h.unit),
            "product": matrix_json(&h.product),
            "counit": matrix_json(&h.counit),
            "coproduct": matrix_json(&h.coproduct),
            "antipode": matrix_json(&h.antipode),
        }),
    );
    Value::Object(o)
}

fn parse_maps(v: &Value, field: Field) -> Result<HopfMaps> {
    let n = usize_field(v, "dim")?;
    let maps = get(v, "maps")?;
    let m = |key: &str, dom: Vec<usize>, cod: Vec<usize>| parse_matrix(get(maps, key)?, field, dom, cod, key);
    let mut h = HopfMaps::new(
        n,
        m("unit", vec![1], vec![n])?,
        m("product", vec![n, n], vec![n])?,
        m("counit", vec![n], vec![1])?,
        m("coproduct", vec![n], vec![n, n])?,
        m("antipode", vec![n], vec![n])?,
    )?;
    if let Some(l) = v.get("labels") {
        let labels: Vec<String> = serde_json::from_value(l.clone()).map_err(|e| Error::Parse(format!("labels: {e}")))?;
        h = h.with_labels(labels)?;
    }
    if let Some(f) = v.get("factors") {
        let factors: Vec<usize> = serde_json::from_value(f.clone()).map_err(|e| Error::Parse(format!("factors: {e}")))?;
        h = h.with_factors(factors)?;
    }
    Ok(h)
}

fn loop_json(l: &FiniteLoop) -> Value {
    let n = l.order;
    json!({
        "order": n,
        "identity": l.identity,
        "inverse": l.inverse,
        "labels": l.labels,
        "table": l.table.chunks(n).collect::<Vec<_>>(),
    })
}

fn parse_loop(v: &Value) -> Result<FiniteLoop> {
    let order = usize_field(v, "order")?;
    let identity = usize_field(v, "identity")?;
    let rows: Vec<Vec<usize>> =
        serde_json::from_value(get(v, "table")?.clone()).map_err(|e| Error::Parse(format!("table: {e}")))?;
    if rows.len() != order || rows.iter().any(|r| r.len() != order) {
        return Err(Error::Shape(format!("table must be {order}x{order}")));
    }
    let table: Vec<usize> = rows.concat();
    if let Some(bad) = table.iter().find(|&&x| x >= order) {
        return Err(Error::Shape(format!("table entry {bad} out of range")));
    }
    let inverse: Vec<usize> = match v.get("inverse") {
        Some(i) => serde_json::from_value(i.clone()).map_err(|e| Error::Parse(format!("inverse: {e}")))?,
        // The right inverse read off the table.
        None => (0..order)
            .map(|u| (0..order).find(|&w| table[u * order + w] == identity).unwrap_or(identity))
            .collect(),
    };
    let labels = match v.get("labels") {
        Some(l) => Some(serde_json::from_value(l.clone()).map_err(|e| Error::Parse(format!("labels: {e}")))?),
        None => None,
    };
    FiniteLoop::new(order, table, identity, inverse, labels)
}
