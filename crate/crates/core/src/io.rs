//! Model files: canonical JSON plus OFF and OBJ export.
//!
//! JSON models carry sorted keys. Embeddings look like
//! `{"coordinates": "exact", "dim": 3, "faces": [...], "vertices": [...]}`
//! with rationals written as integers or `"p/q"` strings; float embeddings use
//! `"coordinates": "float"` and plain JSON numbers. Combinatorial maps are
//! `{"faces": [...], "orientable": bool}`.

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Map as JsonMap, Value};
use thiserror::Error;

use crate::geom::{Embedding, GeomError, PointN, Rat, Scalar};
use crate::map::{canonicalize_faces, CombMap, MapError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed model: {0}")]
    Parse(String),
    #[error("invalid map: {0}")]
    Map(#[from] MapError),
    #[error("invalid embedding: {0}")]
    Geom(GeomError),
    #[error("{0} export needs 3-dimensional coordinates, model has dimension {1}")]
    Dimension(&'static str, usize),
    #[error("model has no coordinates")]
    NoCoordinates,
}

impl From<GeomError> for IoError {
    fn from(e: GeomError) -> Self {
        match e {
            GeomError::Map(m) => IoError::Map(m),
            other => IoError::Geom(other),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Model {
    Exact(Embedding<Rat>),
    Float(Embedding<f64>),
    Map(CombMap),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Off,
    Obj,
}

impl Model {
    pub fn map(&self) -> &CombMap {
        match self {
            Model::Exact(e) => e.map(),
            Model::Float(e) => e.map(),
            Model::Map(m) => m,
        }
    }

    pub fn dim(&self) -> Option<usize> {
        match self {
            Model::Exact(e) => Some(e.dim()),
            Model::Float(e) => Some(e.dim()),
            Model::Map(_) => None,
        }
    }

    /// Applies a vertex relabelling `v -> perm[v]`.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Result<Model, IoError> {
        let faces: Vec<Vec<usize>> = face_list(self.map())
            .into_iter()
            .map(|f| f.into_iter().map(|v| perm[v]).collect())
            .collect();
        fn moved<S: Scalar>(e: &Embedding<S>, perm: &[usize]) -> Vec<PointN<S>> {
            let mut out = e.positions().to_vec();
            for (v, p) in e.positions().iter().enumerate() {
                out[perm[v]] = p.clone();
            }
            out
        }
        Ok(match self {
            Model::Exact(e) => Model::Exact(Embedding::from_faces(&faces, moved(e, perm))?),
            Model::Float(e) => Model::Float(Embedding::from_faces(&faces, moved(e, perm))?),
            Model::Map(_) => Model::Map(CombMap::from_face_list(&faces)?),
        })
    }
}

/// Face cycles, coherently oriented when possible, in canonical order.
pub fn face_list(m: &CombMap) -> Vec<Vec<usize>> {
    canonicalize_faces(&m.oriented_face_cycles().unwrap_or_else(|| m.face_cycles()))
}

fn rat_to_json(r: &Rat) -> Value {
    if r.denom().is_one() {
        if let Some(i) = r.numer().to_i64() {
            return json!(i);
        }
        return json!(r.numer().to_string());
    }
    json!(format!("{}/{}", r.numer(), r.denom()))
}

fn rat_from_json(v: &Value) -> Result<Rat, IoError> {
    let bad = || IoError::Parse(format!("not a rational: {v}"));
    match v {
        Value::Number(n) => n.as_i64().map(|i| Rat::from_integer(BigInt::from(i))).ok_or_else(bad),
        Value::String(s) => {
            let (num, den) = s.split_once('/').unwrap_or((s, "1"));
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rat::new(num, den))
        }
        _ => Err(bad()),
    }
}

fn embedding_json<S: Scalar>(e: &Embedding<S>, kind: &str, coord: impl Fn(&S) -> Value) -> Value {
    let vertices: Vec<Value> = e
        .positions()
        .iter()
        .map(|p| Value::Array(p.coords.iter().map(&coord).collect()))
        .collect();
    json!({
        "coordinates": kind,
        "dim": e.dim(),
        "faces": face_list(e.map()),
        "vertices": vertices,
    })
}

pub fn to_json(model: &Model) -> Value {
    match model {
        Model::Exact(e) => embedding_json(e, "exact", rat_to_json),
        Model::Float(e) => embedding_json(e, "float", |x| json!(x)),
        Model::Map(m) => json!({
            "faces": face_list(m),
            "orientable": m.is_orientable(),
        }),
    }
}

/// Pretty-printed canonical JSON. `serde_json` keeps object keys sorted.
pub fn to_json_string(model: &Model) -> String {
    let mut s = serde_json::to_string_pretty(&to_json(model)).expect("serializable");
    s.push('\n');
    s
}

fn field<'a>(obj: &'a JsonMap<String, Value>, key: &str) -> Result<&'a Value, IoError> {
    obj.get(key).ok_or_else(|| IoError::Parse(format!("missing key \"{key}\"")))
}

fn parse_faces(v: &Value) -> Result<Vec<Vec<usize>>, IoError> {
    let bad = || IoError::Parse("faces must be a list of vertex-id lists".into());
    v.as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|f| {
            f.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(bad))
                .collect()
        })
        .collect()
}

fn parse_points<S: Scalar>(v: &Value, dim: usize, coord: impl Fn(&Value) -> Result<S, IoError>) -> Result<Vec<PointN<S>>, IoError> {
    let bad = || IoError::Parse("vertices must be a list of coordinate lists".into());
    v.as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|p| {
            let c = p.as_array().ok_or_else(bad)?;
            if c.len() != dim {
                return Err(IoError::Parse(format!("vertex has {} coordinates, expected {dim}", c.len())));
            }
            Ok(PointN::new(c.iter().map(&coord).collect::<Result<_, _>>()?))
        })
        .collect()
}

pub fn from_json(v: &Value) -> Result<Model, IoError> {
    let obj = v.as_object().ok_or_else(|| IoError::Parse("top level must be an object".into()))?;
    let faces = parse_faces(field(obj, "faces")?)?;
    let Some(kind) = obj.get("coordinates") else {
        let m = CombMap::from_face_list(&faces)?;
        if let Some(o) = obj.get("orientable") {
            if o.as_bool() != Some(m.is_orientable()) {
                return Err(IoError::Parse("orientable flag disagrees with the faces".into()));
            }
        }
        return Ok(Model::Map(m));
    };
    let dim = field(obj, "dim")?
        .as_u64()
        .ok_or_else(|| IoError::Parse("dim must be a non-negative integer".into()))? as usize;
    let vertices = field(obj, "vertices")?;
    match kind.as_str() {
        Some("exact") => {
            let pts = parse_points(vertices, dim, rat_from_json)?;
            Ok(Model::Exact(Embedding::from_faces(&faces, pts)?))
        }
        Some("float") => {
            let pts = parse_points(vertices, dim, |x| x.as_f64().ok_or_else(|| IoError::Parse(format!("not a number: {x}"))))?;
            Ok(Model::Float(Embedding::from_faces(&faces, pts)?))
        }
        _ => Err(IoError::Parse(format!("unknown coordinates kind {kind}"))),
    }
}

pub fn parse_model(text: &str) -> Result<Model, IoError> {
    let v: Value = serde_json::from_str(text).map_err(|e| IoError::Parse(e.to_string()))?;
    from_json(&v)
}

pub fn read_model(path: &Path) -> Result<Model, IoError> {
    parse_model(&std::fs::read_to_string(path)?)
}

pub fn write_model(path: &Path, model: &Model) -> Result<(), IoError> {
    Ok(std::fs::write(path, to_json_string(model))?)
}

fn float_positions(model: &Model, what: &'static str) -> Result<Vec<[f64; 3]>, IoError> {
    let pts: Vec<Vec<f64>> = match model {
        Model::Exact(e) => e.positions().iter().map(PointN::to_f64).collect(),
        Model::Float(e) => e.positions().iter().map(PointN::to_f64).collect(),
        Model::Map(_) => return Err(IoError::NoCoordinates),
    };
    let dim = model.dim().unwrap_or(0);
    if dim != 3 {
        return Err(IoError::Dimension(what, dim));
    }
    Ok(pts.into_iter().map(|p| [p[0], p[1], p[2]]).collect())
}

/// Seventeen significant digits, enough to round-trip any `f64`.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// OFF or OBJ text. Vertex order is preserved.
pub fn export(model: &Model, format: ExportFormat) -> Result<String, IoError> {
    let name = match format {
        ExportFormat::Off => "OFF",
        ExportFormat::Obj => "OBJ",
    };
    let pts = float_positions(model, name)?;
    let faces = face_list(model.map());
    let mut out = String::new();
    match format {
        ExportFormat::Off => {
            let (f0, f1, f2) = model.map().f_vector();
            writeln!(out, "OFF\n{f0} {f2} {f1}").unwrap();
            for p in &pts {
                writeln!(out, "{} {} {}", num(p[0]), num(p[1]), num(p[2])).unwrap();
            }
            for f in &faces {
                let ids: Vec<String> = f.iter().map(usize::to_string).collect();
                writeln!(out, "{} {}", f.len(), ids.join(" ")).unwrap();
            }
        }
        ExportFormat::Obj => {
            for p in &pts {
                writeln!(out, "v {} {} {}", num(p[0]), num(p[1]), num(p[2])).unwrap();
            }
            for f in &faces {
                let ids: Vec<String> = f.iter().map(|v| (v + 1).to_string()).collect();
                writeln!(out, "f {}", ids.join(" ")).unwrap();
            }
        }
    }
    Ok(out)
}
