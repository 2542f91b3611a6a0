//! The workspace file format: a JSON document carrying one field, named
//! objects, subspaces, morphisms and comodules, validated on load and emitted
//! in a canonical byte-stable form.
//!
//! Schema: `{"field": SPEC, "objects": {...}, "subspaces": {...},
//! "morphisms": {...}, "comodules": {...}}`. An object is
//! `{"kind": "coalgebra", "dim": n, "delta": [[k,i,j,SCALAR],...],
//! "counit": [SCALAR,...]}` where a delta entry means
//! `Delta(e_k) += c * e_i (x) e_j`; optional `"mul"` entries
//! (`e_i * e_j += c * e_k`), `"unit"`, and `"antipode"` (dense rows) promote
//! the kind through `algebra`/`bialgebra` to `hopf`. A morphism is
//! `{"from": NAME, "to": NAME, "matrix": [[...],...]}` acting on coordinate
//! columns, with an optional `"kind"`; a comodule is `{"over": NAME,
//! "side": "right", "dim": m, "rho": [[v,w,c,SCALAR],...]}` meaning
//! `rho(e_v) += c * e_w (x) e_c`. Scalars are strings `"a/b"`, integer
//! strings, or coefficient lists for extension fields.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value as Json};

use crate::catalog::CatalogOutput;
use crate::comodules::{Comodule, Side};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Subspace};
use crate::scalars::{Field, Value};
use crate::structures::{
    delta_matrix, mul_matrix, Algebra, Bialgebra, Coalgebra, HopfAlgebra, Morphism, MorphismKind,
    Object, ObjectKind,
};

/// A named morphism inside a workspace, remembering its endpoint names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkspaceMorphism {
    pub from: String,
    pub to: String,
    pub morphism: Morphism,
}

/// An in-memory workspace: everything lives over one field and every name
/// resolves.
#[derive(Debug, Clone)]
pub struct Workspace {
    pub field: Field,
    pub objects: BTreeMap<String, Object>,
    pub subspaces: BTreeMap<String, Subspace>,
    pub morphisms: BTreeMap<String, WorkspaceMorphism>,
    pub comodules: BTreeMap<String, (String, Comodule)>,
}

impl Workspace {
    pub fn new(field: Field) -> Workspace {
        Workspace {
            field,
            objects: BTreeMap::new(),
            subspaces: BTreeMap::new(),
            morphisms: BTreeMap::new(),
            comodules: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn object(&self, name: &str) -> Result<&Object> {
        self.objects
            .get(name)
            .ok_or_else(|| Error::UnknownReference(name.into()))
    }

    pub fn subspace(&self, name: &str) -> Result<&Subspace> {
        self.subspaces
            .get(name)
            .ok_or_else(|| Error::UnknownReference(name.into()))
    }

    pub fn morphism(&self, name: &str) -> Result<&Morphism> {
        self.morphisms
            .get(name)
            .map(|m| &m.morphism)
            .ok_or_else(|| Error::UnknownReference(name.into()))
    }

    pub fn comodule(&self, name: &str) -> Result<&Comodule> {
        self.comodules
            .get(name)
            .map(|(_, c)| c)
            .ok_or_else(|| Error::UnknownReference(name.into()))
    }

    /// Adds a morphism, locating its endpoints among the stored objects.
    pub fn insert_morphism(&mut self, name: &str, m: Morphism) -> Result<()> {
        let from = self.find_object_name(&m.src)?;
        let to = self.find_object_name(&m.dst)?;
        self.morphisms.insert(
            name.into(),
            WorkspaceMorphism {
                from,
                to,
                morphism: m,
            },
        );
        Ok(())
    }

    pub fn insert_comodule(&mut self, name: &str, v: Comodule) -> Result<()> {
        let over = self
            .objects
            .iter()
            .find(|(_, o)| o.coalgebra() == Some(v.over()))
            .map(|(n, _)| n.clone())
            .ok_or_else(|| Error::UnknownReference("comodule base coalgebra".into()))?;
        self.comodules.insert(name.into(), (over, v));
        Ok(())
    }

    fn find_object_name(&self, obj: &Object) -> Result<String> {
        self.objects
            .iter()
            .find(|(_, o)| *o == obj)
            .map(|(n, _)| n.clone())
            .ok_or_else(|| Error::UnknownReference("morphism endpoint".into()))
    }
}

/// Builds a workspace from a catalog output.
pub fn workspace_from_catalog(field: &Field, out: &CatalogOutput) -> Result<Workspace> {
    let mut ws = Workspace::new(field.clone());
    for (name, obj) in &out.objects {
        ws.objects.insert(name.clone(), obj.clone());
    }
    for (name, m) in &out.morphisms {
        ws.insert_morphism(name, m.clone())?;
    }
    Ok(ws)
}

// ---- parsing ----

fn parse_err(path: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.into(),
        message: message.into(),
    }
}

fn as_object<'a>(v: &'a Json, path: &str) -> Result<&'a Map<String, Json>> {
    v.as_object()
        .ok_or_else(|| parse_err(path, "expected a JSON object"))
}

fn as_array<'a>(v: &'a Json, path: &str) -> Result<&'a Vec<Json>> {
    v.as_array()
        .ok_or_else(|| parse_err(path, "expected a JSON array"))
}

fn as_usize(v: &Json, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| parse_err(path, "expected a nonnegative integer"))
}

fn scalar_from_json(field: &Field, v: &Json, path: &str) -> Result<Value> {
    match v {
        Json::String(s) => Ok(field.parse_scalar(s)?.into_value()),
        Json::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| parse_err(path, "scalar numbers must be integers"))?;
            Ok(field.from_i64(i))
        }
        Json::Array(arr) => {
            let (base, _) = field.extension_parts().ok_or_else(|| {
                parse_err(
                    path,
                    "coefficient lists are only valid over extension fields",
                )
            })?;
            let d = field.degree();
            if arr.len() > d {
                return Err(parse_err(
                    path,
                    format!("coefficient list longer than degree {d}"),
                ));
            }
            let mut coeffs = Vec::with_capacity(d);
            for (i, c) in arr.iter().enumerate() {
                coeffs.push(scalar_from_json(base, c, &format!("{path}[{i}]"))?);
            }
            coeffs.resize(d, base.zero());
            Ok(Value::Ext(coeffs))
        }
        _ => Err(parse_err(
            path,
            "expected a scalar string, integer, or coefficient list",
        )),
    }
}

fn sparse_entries(
    field: &Field,
    v: &Json,
    dim: usize,
    path: &str,
) -> Result<Vec<(usize, usize, usize, Value)>> {
    let arr = as_array(v, path)?;
    let mut out = Vec::with_capacity(arr.len());
    for (n, entry) in arr.iter().enumerate() {
        let epath = format!("{path}[{n}]");
        let quad = as_array(entry, &epath)?;
        if quad.len() != 4 {
            return Err(parse_err(&epath, "expected [k, i, j, scalar]"));
        }
        let k = as_usize(&quad[0], &epath)?;
        let i = as_usize(&quad[1], &epath)?;
        let j = as_usize(&quad[2], &epath)?;
        for idx in [k, i, j] {
            if idx >= dim {
                return Err(parse_err(
                    &epath,
                    format!("index {idx} out of range for dim {dim}"),
                ));
            }
        }
        out.push((k, i, j, scalar_from_json(field, &quad[3], &epath)?));
    }
    Ok(out)
}

fn row_vector(field: &Field, v: &Json, dim: usize, path: &str) -> Result<Vec<Value>> {
    let arr = as_array(v, path)?;
    if arr.len() != dim {
        return Err(parse_err(
            path,
            format!("expected {dim} entries, got {}", arr.len()),
        ));
    }
    arr.iter()
        .enumerate()
        .map(|(i, c)| scalar_from_json(field, c, &format!("{path}[{i}]")))
        .collect()
}

fn dense_matrix(
    field: &Field,
    v: &Json,
    rows: usize,
    cols: usize,
    path: &str,
) -> Result<ExactMatrix> {
    let arr = as_array(v, path)?;
    if arr.len() != rows {
        return Err(parse_err(
            path,
            format!("expected {rows} rows, got {}", arr.len()),
        ));
    }
    let mut data = Vec::with_capacity(rows);
    for (i, row) in arr.iter().enumerate() {
        data.push(row_vector(field, row, cols, &format!("{path}[{i}]"))?);
    }
    if rows == 0 {
        return Ok(ExactMatrix::zeros(field, 0, cols));
    }
    Ok(ExactMatrix::from_rows(field, data))
}

fn object_kind(s: &str, path: &str) -> Result<ObjectKind> {
    match s {
        "coalgebra" => Ok(ObjectKind::Coalgebra),
        "algebra" => Ok(ObjectKind::Algebra),
        "bialgebra" => Ok(ObjectKind::Bialgebra),
        "hopf" => Ok(ObjectKind::Hopf),
        other => Err(parse_err(path, format!("unknown object kind `{other}`"))),
    }
}

fn morphism_kind(s: &str, path: &str) -> Result<MorphismKind> {
    match s {
        "coalg" => Ok(MorphismKind::Coalg),
        "alg" => Ok(MorphismKind::Alg),
        "bialg" => Ok(MorphismKind::Bialg),
        "hopf" => Ok(MorphismKind::Hopf),
        "linear" => Ok(MorphismKind::Linear),
        other => Err(parse_err(path, format!("unknown morphism kind `{other}`"))),
    }
}

fn parse_object(field: &Field, name: &str, v: &Json) -> Result<Object> {
    let path = format!("objects.{name}");
    let map = as_object(v, &path)?;
    let dim = as_usize(
        map.get("dim")
            .ok_or_else(|| parse_err(&path, "missing `dim`"))?,
        &format!("{path}.dim"),
    )?;
    let declared = match map.get("kind") {
        Some(Json::String(s)) => Some(object_kind(s, &format!("{path}.kind"))?),
        Some(_) => return Err(parse_err(&format!("{path}.kind"), "expected a string")),
        None => None,
    };
    let coalg = match (map.get("delta"), map.get("counit")) {
        (Some(d), Some(e)) => {
            let entries = sparse_entries(field, d, dim, &format!("{path}.delta"))?;
            let delta = delta_matrix(field, dim, &entries);
            let counit = ExactMatrix::from_rows(
                field,
                vec![row_vector(field, e, dim, &format!("{path}.counit"))?],
            );
            Some(
                Coalgebra::new(field, dim, delta, counit).map_err(|err| match err {
                    Error::AxiomViolations(violations) => Error::Validation {
                        name: name.into(),
                        violations,
                    },
                    other => other,
                })?,
            )
        }
        (None, None) => None,
        _ => {
            return Err(parse_err(
                &path,
                "`delta` and `counit` must appear together",
            ))
        }
    };
    let alg = match (map.get("mul"), map.get("unit")) {
        (Some(m), Some(u)) => {
            let entries = sparse_entries(field, m, dim, &format!("{path}.mul"))?;
            let mul = mul_matrix(field, dim, &entries);
            let unit =
                ExactMatrix::column(field, row_vector(field, u, dim, &format!("{path}.unit"))?);
            Some(
                Algebra::new(field, dim, mul, unit).map_err(|err| match err {
                    Error::AxiomViolations(violations) => Error::Validation {
                        name: name.into(),
                        violations,
                    },
                    other => other,
                })?,
            )
        }
        (None, None) => None,
        _ => return Err(parse_err(&path, "`mul` and `unit` must appear together")),
    };
    let antipode = match map.get("antipode") {
        Some(s) => Some(dense_matrix(
            field,
            s,
            dim,
            dim,
            &format!("{path}.antipode"),
        )?),
        None => None,
    };
    let promote = |err: Error| match err {
        Error::AxiomViolations(violations) => Error::Validation {
            name: name.into(),
            violations,
        },
        other => other,
    };
    let obj = match (coalg, alg, antipode) {
        (Some(c), None, None) => Object::Coalgebra(c),
        (None, Some(a), None) => Object::Algebra(a),
        (Some(c), Some(a), None) => Object::Bialgebra(Bialgebra::new(c, a).map_err(promote)?),
        (Some(c), Some(a), Some(s)) => Object::Hopf(
            HopfAlgebra::new(Bialgebra::new(c, a).map_err(promote)?, s).map_err(promote)?,
        ),
        (_, _, Some(_)) => {
            return Err(parse_err(
                &path,
                "an antipode needs both coalgebra and algebra parts",
            ))
        }
        (None, None, None) => {
            return Err(parse_err(&path, "object carries no structure constants"))
        }
    };
    if let Some(k) = declared {
        let effective = obj.kind();
        let compatible = k == effective
            || matches!(
                (k, effective),
                (
                    ObjectKind::Coalgebra,
                    ObjectKind::Bialgebra | ObjectKind::Hopf
                ) | (
                    ObjectKind::Algebra,
                    ObjectKind::Bialgebra | ObjectKind::Hopf
                ) | (ObjectKind::Bialgebra, ObjectKind::Hopf)
            );
        if !compatible {
            return Err(parse_err(
                &format!("{path}.kind"),
                format!("declared `{k}` but the structure constants present give `{effective}`"),
            ));
        }
    }
    Ok(obj)
}

/// Parses and validates a workspace document.
pub fn parse_workspace(text: &str) -> Result<Workspace> {
    let root: Json =
        serde_json::from_str(text).map_err(|e| parse_err("document", e.to_string()))?;
    let map = as_object(&root, "document")?;
    let field_spec = map
        .get("field")
        .and_then(|f| f.as_str())
        .ok_or_else(|| parse_err("field", "missing or non-string field spec"))?;
    let field = Field::parse(field_spec)?;
    let mut ws = Workspace::new(field.clone());

    if let Some(objs) = map.get("objects") {
        for (name, v) in as_object(objs, "objects")? {
            let obj = parse_object(&field, name, v)?;
            ws.objects.insert(name.clone(), obj);
        }
    }
    if let Some(subs) = map.get("subspaces") {
        for (name, v) in as_object(subs, "subspaces")? {
            let path = format!("subspaces.{name}");
            let m = as_object(v, &path)?;
            let ambient = as_usize(
                m.get("ambient")
                    .ok_or_else(|| parse_err(&path, "missing `ambient`"))?,
                &format!("{path}.ambient"),
            )?;
            let rows = match m.get("basis") {
                Some(b) => {
                    let arr = as_array(b, &format!("{path}.basis"))?;
                    arr.iter()
                        .enumerate()
                        .map(|(i, r)| row_vector(&field, r, ambient, &format!("{path}.basis[{i}]")))
                        .collect::<Result<Vec<_>>>()?
                }
                None => Vec::new(),
            };
            ws.subspaces
                .insert(name.clone(), Subspace::from_rows(&field, ambient, rows));
        }
    }
    if let Some(morphs) = map.get("morphisms") {
        for (name, v) in as_object(morphs, "morphisms")? {
            let path = format!("morphisms.{name}");
            let m = as_object(v, &path)?;
            let from = m
                .get("from")
                .and_then(|x| x.as_str())
                .ok_or_else(|| parse_err(&path, "missing `from`"))?;
            let to = m
                .get("to")
                .and_then(|x| x.as_str())
                .ok_or_else(|| parse_err(&path, "missing `to`"))?;
            let src = ws.object(from)?.clone();
            let dst = ws.object(to)?.clone();
            let kind = match m.get("kind") {
                Some(Json::String(s)) => morphism_kind(s, &format!("{path}.kind"))?,
                Some(_) => return Err(parse_err(&format!("{path}.kind"), "expected a string")),
                None => MorphismKind::strongest(src.kind(), dst.kind()),
            };
            let matrix = dense_matrix(
                &field,
                m.get("matrix")
                    .ok_or_else(|| parse_err(&path, "missing `matrix`"))?,
                dst.dim(),
                src.dim(),
                &format!("{path}.matrix"),
            )?;
            let morphism = Morphism::new(kind, src, dst, matrix).map_err(|err| match err {
                Error::AxiomViolations(violations) => Error::Validation {
                    name: name.clone(),
                    violations,
                },
                other => other,
            })?;
            ws.morphisms.insert(
                name.clone(),
                WorkspaceMorphism {
                    from: from.into(),
                    to: to.into(),
                    morphism,
                },
            );
        }
    }
    if let Some(comods) = map.get("comodules") {
        for (name, v) in as_object(comods, "comodules")? {
            let path = format!("comodules.{name}");
            let m = as_object(v, &path)?;
            let over = m
                .get("over")
                .and_then(|x| x.as_str())
                .ok_or_else(|| parse_err(&path, "missing `over`"))?;
            let base = ws
                .object(over)?
                .coalgebra()
                .ok_or_else(|| parse_err(&path, format!("object `{over}` has no coalgebra part")))?
                .clone();
            let side = match m.get("side").and_then(|x| x.as_str()) {
                Some("right") | None => Side::Right,
                Some("left") => Side::Left,
                Some(other) => {
                    return Err(parse_err(
                        &format!("{path}.side"),
                        format!("unknown side `{other}`"),
                    ))
                }
            };
            let dim = as_usize(
                m.get("dim")
                    .ok_or_else(|| parse_err(&path, "missing `dim`"))?,
                &format!("{path}.dim"),
            )?;
            let n = base.dim();
            let mut rho = ExactMatrix::zeros(&field, dim * n, dim);
            let entries = as_array(
                m.get("rho")
                    .ok_or_else(|| parse_err(&path, "missing `rho`"))?,
                &format!("{path}.rho"),
            )?;
            for (idx, entry) in entries.iter().enumerate() {
                let epath = format!("{path}.rho[{idx}]");
                let quad = as_array(entry, &epath)?;
                if quad.len() != 4 {
                    return Err(parse_err(&epath, "expected [v, w, c, scalar]"));
                }
                let vv = as_usize(&quad[0], &epath)?;
                let w = as_usize(&quad[1], &epath)?;
                let cidx = as_usize(&quad[2], &epath)?;
                if vv >= dim || w >= dim || cidx >= n {
                    return Err(parse_err(&epath, "index out of range"));
                }
                let c = scalar_from_json(&field, &quad[3], &epath)?;
                let row = match side {
                    Side::Right => w * n + cidx,
                    Side::Left => cidx * dim + w,
                };
                let cur = rho.at(row, vv).clone();
                rho.set(row, vv, field.add(&cur, &c));
            }
            let comodule = Comodule::new(&base, side, dim, rho).map_err(|err| match err {
                Error::AxiomViolations(violations) => Error::Validation {
                    name: name.clone(),
                    violations,
                },
                other => other,
            })?;
            ws.comodules.insert(name.clone(), (over.into(), comodule));
        }
    }
    Ok(ws)
}

// ---- emission ----

fn scalar_to_json(field: &Field, v: &Value) -> Json {
    match v {
        Value::Ext(coeffs) => {
            let base = field.base_field();
            Json::Array(
                coeffs
                    .iter()
                    .map(|c| Json::String(base.value_string(c)))
                    .collect(),
            )
        }
        other => Json::String(field.value_string(other)),
    }
}

fn delta_entries_json(field: &Field, delta: &ExactMatrix, dim: usize) -> Json {
    let mut out = Vec::new();
    for k in 0..dim {
        for i in 0..dim {
            for j in 0..dim {
                let v = delta.at(i * dim + j, k);
                if !field.is_zero(v) {
                    out.push(json!([k, i, j, scalar_to_json(field, v)]));
                }
            }
        }
    }
    Json::Array(out)
}

fn mul_entries_json(field: &Field, mul: &ExactMatrix, dim: usize) -> Json {
    let mut out = Vec::new();
    for k in 0..dim {
        for i in 0..dim {
            for j in 0..dim {
                let v = mul.at(k, i * dim + j);
                if !field.is_zero(v) {
                    out.push(json!([k, i, j, scalar_to_json(field, v)]));
                }
            }
        }
    }
    Json::Array(out)
}

fn rho_entries_json(field: &Field, v: &Comodule) -> Json {
    let (m, n) = (v.dim(), v.over().dim());
    let mut out = Vec::new();
    for col in 0..m {
        for w in 0..m {
            for c in 0..n {
                let row = match v.side() {
                    Side::Right => w * n + c,
                    Side::Left => c * m + w,
                };
                let val = v.rho().at(row, col);
                if !field.is_zero(val) {
                    out.push(json!([col, w, c, scalar_to_json(field, val)]));
                }
            }
        }
    }
    Json::Array(out)
}

fn row_json(field: &Field, row: &[Value]) -> Json {
    Json::Array(row.iter().map(|v| scalar_to_json(field, v)).collect())
}

pub fn matrix_rows_json(field: &Field, m: &ExactMatrix) -> Json {
    Json::Array((0..m.rows()).map(|i| row_json(field, &m.row(i))).collect())
}

fn object_json(field: &Field, obj: &Object) -> Json {
    let mut map = Map::new();
    map.insert("kind".into(), Json::String(obj.kind().to_string()));
    map.insert("dim".into(), Json::Number(obj.dim().into()));
    if let Some(c) = obj.coalgebra() {
        map.insert(
            "delta".into(),
            delta_entries_json(field, c.delta(), c.dim()),
        );
        map.insert("counit".into(), row_json(field, &c.counit().row(0)));
    }
    if let Some(a) = obj.algebra() {
        map.insert("mul".into(), mul_entries_json(field, a.mul(), a.dim()));
        map.insert("unit".into(), row_json(field, &a.unit().col(0)));
    }
    if let Some(s) = obj.antipode() {
        map.insert("antipode".into(), matrix_rows_json(field, s));
    }
    Json::Object(map)
}

/// Canonical JSON form of a workspace: sorted names, canonical scalars,
/// RREF subspace bases, sparse entries in index order.
pub fn emit_workspace(ws: &Workspace) -> String {
    let field = ws.field();
    let mut root = Map::new();
    root.insert("field".into(), Json::String(field.to_string()));
    let objects: Map<String, Json> = ws
        .objects
        .iter()
        .map(|(n, o)| (n.clone(), object_json(field, o)))
        .collect();
    root.insert("objects".into(), Json::Object(objects));
    if !ws.subspaces.is_empty() {
        let subs: Map<String, Json> = ws
            .subspaces
            .iter()
            .map(|(n, s)| {
                (
                    n.clone(),
                    json!({
                        "ambient": s.ambient_dim(),
                        "basis": matrix_rows_json(field, s.basis()),
                    }),
                )
            })
            .collect();
        root.insert("subspaces".into(), Json::Object(subs));
    }
    if !ws.morphisms.is_empty() {
        let morphs: Map<String, Json> = ws
            .morphisms
            .iter()
            .map(|(n, m)| {
                (
                    n.clone(),
                    json!({
                        "kind": m.morphism.kind.to_string(),
                        "from": m.from,
                        "to": m.to,
                        "matrix": matrix_rows_json(field, &m.morphism.matrix),
                    }),
                )
            })
            .collect();
        root.insert("morphisms".into(), Json::Object(morphs));
    }
    if !ws.comodules.is_empty() {
        let comods: Map<String, Json> = ws
            .comodules
            .iter()
            .map(|(n, (over, v))| {
                (
                    n.clone(),
                    json!({
                        "over": over,
                        "side": v.side().to_string(),
                        "dim": v.dim(),
                        "rho": rho_entries_json(field, v),
                    }),
                )
            })
            .collect();
        root.insert("comodules".into(), Json::Object(comods));
    }
    let mut text = serde_json::to_string_pretty(&Json::Object(root)).expect("serialization");
    text.push('\n');
    text
}
