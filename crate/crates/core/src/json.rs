//! The JSON exchange format for Hopf algebras, comodule algebras over `k`
//! or `k[t]`, and bilinear forms.
//!
//! Sparse vectors are lists `[[index, "coeff"], ...]`; coefficients use the
//! scalar text forms, or `"c0+c1t+c2t^2"` for polynomials.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::comodule::{ComoduleAlgebra, Presentation};
use crate::error::{Error, Result};
use crate::hopf::{Algebra, Coalgebra, HopfAlgebra, LinMap};
use crate::scalars::{Coeff, Field, FieldSpec, SVec, Scalar, UniPoly};
use crate::twisting::BilinearForm;

fn schema(path: &str, msg: impl Into<String>) -> Error {
    Error::Schema { path: path.to_string(), msg: msg.into() }
}

/// Coefficients with a JSON text form.
pub trait JsonCoeff: Coeff + Sized {
    fn to_text(&self) -> String;
    fn from_text(field: &Field, s: &str) -> Result<Self>;
}

impl JsonCoeff for Scalar {
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn from_text(field: &Field, s: &str) -> Result<Self> {
        field.parse(s)
    }
}

impl JsonCoeff for UniPoly {
    fn to_text(&self) -> String {
        UniPoly::to_text(self, 't')
    }
    fn from_text(field: &Field, s: &str) -> Result<Self> {
        UniPoly::parse(field, s, 't')
    }
}

fn vec_json<R: JsonCoeff>(v: &SVec<R>) -> Value {
    Value::Array(v.iter().map(|(i, c)| json!([i, c.to_text()])).collect())
}

fn algebra_fields<R: JsonCoeff>(alg: &Algebra<R>, out: &mut serde_json::Map<String, Value>) {
    let d = alg.dim();
    out.insert("field".into(), serde_json::to_value(alg.field().spec()).unwrap());
    out.insert("basis".into(), json!(alg.labels()));
    let mut mult = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let v = alg.mul_basis(i, j);
            if !v.is_zero() {
                mult.push(json!([i, j, vec_json(v)]));
            }
        }
    }
    out.insert("mult".into(), Value::Array(mult));
    out.insert("unit".into(), vec_json(alg.unit()));
}

pub fn hopf_to_json(h: &HopfAlgebra) -> Value {
    let mut out = serde_json::Map::new();
    algebra_fields(h.algebra(), &mut out);
    let d = h.dim();
    let co = h.coalgebra();
    let comult: Vec<Value> = (0..d)
        .map(|i| {
            let terms: Vec<Value> =
                co.comult_basis(i).iter().map(|(jk, c)| json!([jk / d, jk % d, c.to_text()])).collect();
            json!([i, terms])
        })
        .collect();
    out.insert("comult".into(), Value::Array(comult));
    out.insert("counit".into(), vec_json(co.counit()));
    out.insert("antipode".into(), linmap_json(h.antipode()));
    Value::Object(out)
}

fn linmap_json<R: JsonCoeff>(f: &LinMap<R>) -> Value {
    Value::Array(f.images.iter().enumerate().map(|(i, v)| json!([i, vec_json(v)])).collect())
}

/// A comodule algebra with its Hopf algebra inline.
pub fn comodule_to_json<R: JsonCoeff>(ca: &ComoduleAlgebra<R>) -> Value {
    comodule_json_with_hopf(ca, hopf_to_json(ca.hopf()))
}

/// A comodule algebra with `hopf` given as a path or inline object.
pub fn comodule_json_with_hopf<R: JsonCoeff>(ca: &ComoduleAlgebra<R>, hopf: Value) -> Value {
    let mut out = serde_json::Map::new();
    algebra_fields(ca.algebra(), &mut out);
    out.insert("hopf".into(), hopf);
    let dh = ca.hopf().dim();
    let coaction: Vec<Value> = (0..ca.dim())
        .map(|i| {
            let terms: Vec<Value> =
                ca.coaction_basis(i).iter().map(|(jh, c)| json!([jh / dh, jh % dh, c.to_text()])).collect();
            json!([i, terms])
        })
        .collect();
    out.insert("coaction".into(), Value::Array(coaction));
    out.insert("base_dim".into(), json!(ca.base_dim()));
    out.insert("inclusion".into(), linmap_json(ca.inclusion()));
    if let Some(p) = ca.presentation() {
        out.insert("presentation".into(), json!({ "generators": p.generators, "words": p.words }));
    }
    Value::Object(out)
}

fn matrix_json(f: &BilinearForm) -> Value {
    Value::Array((0..f.rows).map(|i| Value::Array((0..f.cols).map(|j| json!(f.get(i, j).to_string())).collect())).collect())
}

/// `{"hopf": H, "rows": labels, "cols": labels, "values": [[..]]}`.
pub fn cocycle_to_json(sigma: &BilinearForm, h: &HopfAlgebra) -> Value {
    json!({
        "hopf": hopf_to_json(h),
        "rows": h.labels(),
        "cols": h.labels(),
        "values": matrix_json(sigma),
    })
}

/// `{"left": U, "right": A, "rows": labels of U, "cols": labels of A, "values": [[..]]}`.
pub fn pairing_to_json(tau: &BilinearForm, u: &HopfAlgebra, a: &HopfAlgebra) -> Value {
    json!({
        "left": hopf_to_json(u),
        "right": hopf_to_json(a),
        "rows": u.labels(),
        "cols": a.labels(),
        "values": matrix_json(tau),
    })
}

fn get<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| schema(path, format!("missing field `{key}`")))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn as_index(v: &Value, bound: usize, path: &str) -> Result<usize> {
    let i = v.as_u64().ok_or_else(|| schema(path, "expected a non-negative integer"))? as usize;
    if i >= bound {
        return Err(schema(path, format!("index {i} out of range (< {bound})")));
    }
    Ok(i)
}

fn as_coeff<R: JsonCoeff>(v: &Value, field: &Field, path: &str) -> Result<R> {
    let s = v.as_str().ok_or_else(|| schema(path, "expected a coefficient string"))?;
    R::from_text(field, s).map_err(|e| schema(path, e.to_string()))
}

/// `[[i, "c"], ...]` with `i < dim`.
fn read_vec<R: JsonCoeff>(v: &Value, dim: usize, field: &Field, path: &str) -> Result<SVec<R>> {
    let mut out = SVec::new();
    for (n, t) in as_array(v, path)?.iter().enumerate() {
        let p = format!("{path}[{n}]");
        let t = as_array(t, &p)?;
        if t.len() != 2 {
            return Err(schema(&p, "expected [index, coeff]"));
        }
        out.add_term(as_index(&t[0], dim, &format!("{p}[0]"))?, as_coeff(&t[1], field, &format!("{p}[1]"))?);
    }
    Ok(out)
}

/// `[[i, [[j, k, "c"], ...]], ...]` into a table of vectors in `dim_l ⊗ dim_r`.
fn read_pair_table<R: JsonCoeff>(
    v: &Value,
    rows: usize,
    dims: (usize, usize),
    field: &Field,
    path: &str,
) -> Result<Vec<SVec<R>>> {
    let mut table = vec![SVec::new(); rows];
    for (n, e) in as_array(v, path)?.iter().enumerate() {
        let p = format!("{path}[{n}]");
        let e = as_array(e, &p)?;
        if e.len() != 2 {
            return Err(schema(&p, "expected [i, terms]"));
        }
        let i = as_index(&e[0], rows, &format!("{p}[0]"))?;
        for (m, t) in as_array(&e[1], &format!("{p}[1]"))?.iter().enumerate() {
            let q = format!("{p}[1][{m}]");
            let t = as_array(t, &q)?;
            if t.len() != 3 {
                return Err(schema(&q, "expected [j, k, coeff]"));
            }
            let j = as_index(&t[0], dims.0, &format!("{q}[0]"))?;
            let k = as_index(&t[1], dims.1, &format!("{q}[1]"))?;
            table[i].add_term(j * dims.1 + k, as_coeff(&t[2], field, &format!("{q}[2]"))?);
        }
    }
    Ok(table)
}

/// `[[i, [[j, "c"], ...]], ...]` as a linear map `src → tgt`.
fn read_linmap<R: JsonCoeff>(v: &Value, src: usize, tgt: usize, field: &Field, path: &str) -> Result<LinMap<R>> {
    let mut images = vec![SVec::new(); src];
    for (n, e) in as_array(v, path)?.iter().enumerate() {
        let p = format!("{path}[{n}]");
        let e = as_array(e, &p)?;
        if e.len() != 2 {
            return Err(schema(&p, "expected [i, image]"));
        }
        let i = as_index(&e[0], src, &format!("{p}[0]"))?;
        images[i] = read_vec(&e[1], tgt, field, &format!("{p}[1]"))?;
    }
    LinMap::new(src, tgt, images)
}

fn read_field(v: &Value, path: &str) -> Result<Field> {
    let spec: FieldSpec = serde_json::from_value(get(v, "field", path)?.clone())
        .map_err(|e| schema(&format!("{path}.field"), e.to_string()))?;
    Field::new(&spec).map_err(|e| schema(&format!("{path}.field"), e.to_string()))
}

fn read_algebra<R: JsonCoeff>(v: &Value, path: &str) -> Result<Algebra<R>> {
    let field = read_field(v, path)?;
    let bp = format!("{path}.basis");
    let labels: Vec<String> = as_array(get(v, "basis", path)?, &bp)?
        .iter()
        .enumerate()
        .map(|(n, l)| l.as_str().map(str::to_string).ok_or_else(|| schema(&format!("{bp}[{n}]"), "expected a label")))
        .collect::<Result<_>>()?;
    let d = labels.len();
    let mp = format!("{path}.mult");
    let mut mult = vec![SVec::new(); d * d];
    for (n, e) in as_array(get(v, "mult", path)?, &mp)?.iter().enumerate() {
        let p = format!("{mp}[{n}]");
        let e = as_array(e, &p)?;
        if e.len() != 3 {
            return Err(schema(&p, "expected [i, j, terms]"));
        }
        let i = as_index(&e[0], d, &format!("{p}[0]"))?;
        let j = as_index(&e[1], d, &format!("{p}[1]"))?;
        mult[i * d + j] = read_vec(&e[2], d, &field, &format!("{p}[2]"))?;
    }
    let unit = read_vec(get(v, "unit", path)?, d, &field, &format!("{path}.unit"))?;
    Algebra::new(&field, labels, mult, unit).map_err(|e| schema(path, e.to_string()))
}

pub fn hopf_from_json(v: &Value, name: &str) -> Result<HopfAlgebra> {
    hopf_at(v, name, "$")
}

fn hopf_at(v: &Value, name: &str, path: &str) -> Result<HopfAlgebra> {
    let alg: Algebra = read_algebra(v, path)?;
    let field = alg.field().clone();
    let d = alg.dim();
    let comult = read_pair_table(get(v, "comult", path)?, d, (d, d), &field, &format!("{path}.comult"))?;
    let counit = read_vec(get(v, "counit", path)?, d, &field, &format!("{path}.counit"))?;
    let co = Coalgebra::new(&field, alg.labels().to_vec(), comult, counit).map_err(|e| schema(path, e.to_string()))?;
    let s = read_linmap(get(v, "antipode", path)?, d, d, &field, &format!("{path}.antipode"))?;
    HopfAlgebra::new(name, alg, co, s).map_err(|e| schema(path, e.to_string()))
}

/// `hopf` given inline or as a path relative to `base_dir`.
fn read_hopf_ref(v: &Value, key: &str, base_dir: Option<&Path>, path: &str) -> Result<HopfAlgebra> {
    let h = get(v, key, path)?;
    let p = format!("{path}.{key}");
    match h {
        Value::String(file) => {
            let full: PathBuf = base_dir.map_or_else(|| PathBuf::from(file), |b| b.join(file));
            let inner = read_json_file(&full)?;
            hopf_at(&inner, file, "$")
        }
        Value::Object(_) => hopf_at(h, key, &p),
        _ => Err(schema(&p, "expected an object or a path")),
    }
}

/// A comodule algebra over `k` (`R = Scalar`) or `k[t]` (`R = UniPoly`).
pub fn comodule_from_json<R: JsonCoeff>(v: &Value, name: &str, base_dir: Option<&Path>) -> Result<ComoduleAlgebra<R>> {
    let path = "$";
    let alg: Algebra<R> = read_algebra(v, path)?;
    let field = alg.field().clone();
    let hopf = Arc::new(read_hopf_ref(v, "hopf", base_dir, path)?);
    let (d, dh) = (alg.dim(), hopf.dim());
    let coaction = read_pair_table(get(v, "coaction", path)?, d, (d, dh), &field, "$.coaction")?;
    let base_dim = get(v, "base_dim", path)?.as_u64().ok_or_else(|| schema("$.base_dim", "expected an integer"))? as usize;
    let inclusion = read_linmap(get(v, "inclusion", path)?, base_dim, d, &field, "$.inclusion")?;
    let ca = ComoduleAlgebra::new(name, alg, hopf, coaction, inclusion).map_err(|e| schema(path, e.to_string()))?;
    match v.get("presentation") {
        None => Ok(ca),
        Some(p) => ca.with_presentation(read_presentation(p, d)?).map_err(|e| schema("$.presentation", e.to_string())),
    }
}

/// Optional `{"generators": [i, ...], "words": [[g, ...], ...]}`.
fn read_presentation(v: &Value, d: usize) -> Result<Presentation> {
    let gp = "$.presentation.generators";
    let generators =
        as_array(get(v, "generators", "$.presentation")?, gp)?.iter().enumerate().map(|(n, g)| as_index(g, d, &format!("{gp}[{n}]"))).collect::<Result<Vec<_>>>()?;
    let wp = "$.presentation.words";
    let words = as_array(get(v, "words", "$.presentation")?, wp)?;
    if words.len() != d {
        return Err(schema(wp, format!("expected {d} words")));
    }
    let words = words
        .iter()
        .enumerate()
        .map(|(n, w)| {
            let p = format!("{wp}[{n}]");
            as_array(w, &p)?.iter().enumerate().map(|(m, g)| as_index(g, generators.len(), &format!("{p}[{m}]"))).collect()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Presentation { generators, words })
}

fn read_matrix(v: &Value, rows: &[String], cols: &[String], field: &Field) -> Result<BilinearForm> {
    for (key, want) in [("rows", rows), ("cols", cols)] {
        let got: Vec<&str> = as_array(get(v, key, "$")?, &format!("$.{key}"))?.iter().filter_map(Value::as_str).collect();
        if got != want.iter().map(String::as_str).collect::<Vec<_>>() {
            return Err(schema(&format!("$.{key}"), "labels do not match the basis"));
        }
    }
    let vals = as_array(get(v, "values", "$")?, "$.values")?;
    if vals.len() != rows.len() {
        return Err(schema("$.values", format!("expected {} rows", rows.len())));
    }
    let mut values = Vec::with_capacity(rows.len() * cols.len());
    for (i, row) in vals.iter().enumerate() {
        let p = format!("$.values[{i}]");
        let row = as_array(row, &p)?;
        if row.len() != cols.len() {
            return Err(schema(&p, format!("expected {} entries", cols.len())));
        }
        for (j, c) in row.iter().enumerate() {
            values.push(as_coeff::<Scalar>(c, field, &format!("{p}[{j}]"))?);
        }
    }
    Ok(BilinearForm { rows: rows.len(), cols: cols.len(), values })
}

/// A bilinear form on `H` and the Hopf algebra it lives on.
pub fn cocycle_from_json(v: &Value, base_dir: Option<&Path>) -> Result<(BilinearForm, Arc<HopfAlgebra>)> {
    let h = Arc::new(read_hopf_ref(v, "hopf", base_dir, "$")?);
    let form = read_matrix(v, h.labels(), h.labels(), h.field())?;
    Ok((form, h))
}

/// A bilinear form `U × A → k` with both Hopf algebras.
pub fn pairing_from_json(
    v: &Value,
    base_dir: Option<&Path>,
) -> Result<(BilinearForm, Arc<HopfAlgebra>, Arc<HopfAlgebra>)> {
    let u = Arc::new(read_hopf_ref(v, "left", base_dir, "$")?);
    let a = Arc::new(read_hopf_ref(v, "right", base_dir, "$")?);
    if u.field() != a.field() {
        return Err(schema("$.right.field", "left and right fields differ"));
    }
    let form = read_matrix(v, u.labels(), a.labels(), u.field())?;
    Ok((form, u, a))
}

/// Reads and parses a file; syntax errors carry line and column.
pub fn read_json_file(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| schema(&path.display().to_string(), e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| {
        schema(&format!("{}:{}:{}", path.display(), e.line(), e.column()), e.to_string())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{taft_galois_object, taft_hopf, TaftParams};
    use crate::homotopy::taft_homotopy_witness;

    fn f7() -> Field {
        Field::prime(7).unwrap()
    }

    #[test]
    fn hopf_round_trip() {
        let f = f7();
        let h = taft_hopf(3, &f.from_i64(2), &f).unwrap();
        let v = hopf_to_json(&h);
        let back = hopf_from_json(&v, h.name()).unwrap();
        assert_eq!(back.algebra(), h.algebra());
        assert_eq!(back.coalgebra(), h.coalgebra());
        assert_eq!(back.antipode(), h.antipode());
        assert_eq!(v["field"], json!({"kind": "prime", "p": 7}));
        assert_eq!(v["basis"][1], json!("x"));
    }

    #[test]
    fn comodule_round_trip() {
        let f = f7();
        let h = Arc::new(taft_hopf(3, &f.from_i64(2), &f).unwrap());
        let p = TaftParams::new(3, f.from_i64(2), f.from_i64(3), f.from_i64(5)).unwrap();
        let a = taft_galois_object(&p, &h).unwrap();
        let v = comodule_to_json(&a);
        let back: ComoduleAlgebra = comodule_from_json(&v, a.name(), None).unwrap();
        assert_eq!(back.algebra(), a.algebra());
        assert_eq!(back.coaction_table(), a.coaction_table());
        assert_eq!(back.inclusion(), a.inclusion());
        assert_eq!(back.presentation(), a.presentation());
        let mut bare = v.clone();
        bare.as_object_mut().unwrap().remove("presentation");
        let back: ComoduleAlgebra = comodule_from_json(&bare, a.name(), None).unwrap();
        assert!(back.presentation().is_none());
        bare["presentation"] = json!({"generators": [1], "words": [[0]]});
        assert!(matches!(comodule_from_json::<Scalar>(&bare, "bad", None), Err(Error::Schema { .. })));
    }

    #[test]
    fn polynomial_coefficients() {
        let f = f7();
        let w = taft_homotopy_witness(3, &f.from_i64(2), &f, &f.from_i64(3), &f.from_i64(5)).unwrap();
        let v = comodule_to_json(&w);
        let text = v.to_string();
        assert!(text.contains("\"5t\""), "b³ = 5t should appear");
        let back: ComoduleAlgebra<UniPoly> = comodule_from_json(&v, w.name(), None).unwrap();
        assert_eq!(back.algebra(), w.algebra());
    }

    #[test]
    fn schema_errors_name_the_field() {
        let f = f7();
        let h = taft_hopf(3, &f.from_i64(2), &f).unwrap();
        let mut v = hopf_to_json(&h);
        v["mult"][0][2][0][0] = json!(99);
        match hopf_from_json(&v, "bad") {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "$.mult[0][2][0][0]"),
            other => panic!("{other:?}"),
        }
        v = hopf_to_json(&h);
        v.as_object_mut().unwrap().remove("counit");
        assert!(matches!(hopf_from_json(&v, "bad"), Err(Error::Schema { .. })));
    }
}
