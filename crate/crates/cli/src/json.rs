//! JSON forms of scalars, matrices, pairs and automorphism words.
//!
//! Scalars are strings in the core text form. Polynomials are arrays of
//! scalars, constant term first.

use serde_json::{json, Value};

use tamecm_autgroup::{AutElem, AutWord};
use tamecm_cmspace::MatrixPair;
use tamecm_core::{Backend, Matrix, Scalar, UniPoly, Var};

use crate::error::{invalid, Result};

pub fn scalar_to_json<S: Scalar>(s: &S) -> Value {
    Value::String(s.to_string())
}

pub fn scalar_from_json<S: Scalar>(v: &Value) -> Result<S> {
    match v {
        Value::String(s) => Ok(S::parse(s)?),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(S::from_i64(i)),
            None => Ok(S::parse(&n.to_string())?),
        },
        other => Err(invalid(format!("expected a scalar, found {other}"))),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| invalid(format!("{what}: expected an array")))
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| invalid(format!("missing field `{key}`")))
}

pub fn matrix_to_json<S: Scalar>(m: &Matrix<S>) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(scalar_to_json).collect())).collect())
}

pub fn matrix_from_json<S: Scalar>(v: &Value) -> Result<Matrix<S>> {
    let rows = array(v, "matrix")?
        .iter()
        .map(|r| array(r, "matrix row")?.iter().map(scalar_from_json).collect::<Result<Vec<S>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(rows)?)
}

pub fn pair_to_json<S: Scalar>(p: &MatrixPair<S>) -> Value {
    matrices_to_json(p.x(), p.y())
}

pub fn matrices_to_json<S: Scalar>(x: &Matrix<S>, y: &Matrix<S>) -> Value {
    json!({
        "n": x.rows(),
        "X": matrix_to_json(x),
        "Y": matrix_to_json(y),
        "backend": S::BACKEND.name(),
    })
}

/// `(X, Y)` without the rank-one check.
pub fn matrices_from_json<S: Scalar>(v: &Value) -> Result<(Matrix<S>, Matrix<S>)> {
    let x: Matrix<S> = matrix_from_json(field(v, "X")?)?;
    let y: Matrix<S> = matrix_from_json(field(v, "Y")?)?;
    if let Some(n) = v.get("n") {
        let n = n.as_u64().ok_or_else(|| invalid("`n` must be a non-negative integer"))? as usize;
        if x.rows() != n || y.rows() != n {
            return Err(invalid(format!("`n` = {n} does not match the matrices")));
        }
    }
    Ok((x, y))
}

pub fn pair_from_json<S: Scalar>(v: &Value) -> Result<MatrixPair<S>> {
    let (x, y) = matrices_from_json(v)?;
    Ok(tamecm_cmspace::make_pair(x, y)?)
}

pub fn poly_to_json<S: Scalar>(p: &UniPoly<S>) -> Value {
    Value::Array(p.coeffs().iter().map(scalar_to_json).collect())
}

pub fn poly_from_json<S: Scalar>(v: &Value, var: Var) -> Result<UniPoly<S>> {
    let c = array(v, "polynomial")?.iter().map(scalar_from_json).collect::<Result<Vec<S>>>()?;
    Ok(UniPoly::from_coeffs(var, c))
}

pub fn elem_to_json<S: Scalar>(g: &AutElem<S>) -> Value {
    let s = scalar_to_json::<S>;
    match g {
        AutElem::Phi(p) => json!({"kind": "Phi", "p": poly_to_json(p)}),
        AutElem::Psi(q) => json!({"kind": "Psi", "q": poly_to_json(q)}),
        AutElem::Scale(t) => json!({"kind": "Scale", "t": s(t.get())}),
        AutElem::Triangular(t) => json!({"kind": "Triangular", "a": s(t.a()), "q": poly_to_json(t.q()), "h": s(t.h())}),
        AutElem::Affine(a) => json!({
            "kind": "Affine",
            "linear": a.linear().map(&s),
            "translation": a.translation_part().map(s),
        }),
    }
}

fn scalars<S: Scalar, const N: usize>(v: &Value, what: &str) -> Result<[S; N]> {
    let items = array(v, what)?.iter().map(scalar_from_json).collect::<Result<Vec<S>>>()?;
    items.try_into().map_err(|_| invalid(format!("{what}: expected {N} entries")))
}

pub fn elem_from_json<S: Scalar>(v: &Value) -> Result<AutElem<S>> {
    let kind = field(v, "kind")?.as_str().ok_or_else(|| invalid("`kind` must be a string"))?;
    Ok(match kind {
        "Phi" => AutElem::phi(poly_from_json(field(v, "p")?, Var::X)?),
        "Psi" => AutElem::psi(poly_from_json(field(v, "q")?, Var::Y)?),
        "Scale" => AutElem::scale(scalar_from_json(field(v, "t")?)?)?,
        "Triangular" => AutElem::triangular(
            scalar_from_json(field(v, "a")?)?,
            poly_from_json(field(v, "q")?, Var::Y)?,
            scalar_from_json(field(v, "h")?)?,
        )?,
        "Affine" => {
            AutElem::affine(scalars(field(v, "linear")?, "linear")?, scalars(field(v, "translation")?, "translation")?)?
        }
        other => return Err(invalid(format!("unknown element kind `{other}`"))),
    })
}

pub fn word_to_json<S: Scalar>(w: &AutWord<S>) -> Value {
    Value::Array(w.elems().iter().map(elem_to_json).collect())
}

pub fn word_from_json<S: Scalar>(v: &Value) -> Result<AutWord<S>> {
    Ok(AutWord::new(array(v, "word")?.iter().map(elem_from_json).collect::<Result<_>>()?))
}

fn collect_scalar_text<'a>(v: &'a Value, out: &mut Vec<&'a str>) {
    match v {
        Value::String(s) => out.push(s),
        Value::Array(items) => items.iter().for_each(|i| collect_scalar_text(i, out)),
        Value::Object(map) => map
            .iter()
            .filter(|(k, _)| !matches!(k.as_str(), "kind" | "backend"))
            .for_each(|(_, i)| collect_scalar_text(i, out)),
        _ => {}
    }
}

fn is_decimal(s: &str) -> bool {
    s.contains(['.', 'e', 'E']) || s.eq_ignore_ascii_case("nan") || s.contains("inf")
}

/// Backend implied by one input document: its `backend` field if present,
/// otherwise float when any scalar is written in decimal form. Exact
/// fractions and decimals in the same document are rejected.
pub fn infer_backend(v: &Value) -> Result<Option<Backend>> {
    let mut texts = Vec::new();
    collect_scalar_text(v, &mut texts);
    let decimal = texts.iter().any(|s| is_decimal(s));
    let fraction = texts.iter().any(|s| s.contains('/'));
    if decimal && fraction {
        return Err(invalid("exact and decimal scalars mixed in one input"));
    }
    if let Some(b) = v.get("backend") {
        let name = b.as_str().ok_or_else(|| invalid("`backend` must be a string"))?;
        return Ok(Some(name.parse()?));
    }
    Ok(decimal.then_some(Backend::Float))
}

/// Output document: `{"command", "result", "certificates", "warnings"}`.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Envelope {
    pub command: String,
    pub result: Value,
    pub certificates: Vec<Value>,
    pub warnings: Vec<String>,
    /// Exit code for a completed run that still reports failure.
    #[serde(skip)]
    pub status: i32,
}

impl Envelope {
    pub fn new(command: &str, result: Value) -> Self {
        Envelope { command: command.to_string(), result, certificates: Vec::new(), warnings: Vec::new(), status: 0 }
    }

    pub fn certificate(mut self, c: Value) -> Self {
        self.certificates.push(c);
        self
    }

    pub fn warn(mut self, w: impl Into<String>) -> Self {
        self.warnings.push(w.into());
        self
    }
}

/// `{"tag", "word", "verified"}` audit entry.
pub fn audit_entry<S: Scalar>(tag: &str, word: &AutWord<S>, verified: bool) -> Value {
    json!({"tag": tag, "word": word_to_json(word), "verified": verified})
}

