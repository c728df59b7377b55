//! Report schema validation and the text rendering.

use serde_json::Value;

use crate::error::{Error, Result};

pub const SCHEMA: &str = "jk-report/1";

fn fail(field: &str, message: impl Into<String>) -> Error {
    Error::Internal(format!("report field `{field}`: {}", message.into()))
}

fn get<'a>(v: &'a Value, field: &str) -> Result<&'a Value> {
    v.get(field).ok_or_else(|| fail(field, "missing"))
}

fn uint(v: &Value, field: &str) -> Result<u64> {
    get(v, field)?.as_u64().ok_or_else(|| fail(field, "expected a non-negative integer"))
}

fn uints(v: &Value, field: &str) -> Result<Vec<u64>> {
    get(v, field)?
        .as_array()
        .ok_or_else(|| fail(field, "expected an array"))?
        .iter()
        .map(|x| x.as_u64().ok_or_else(|| fail(field, "expected non-negative integers")))
        .collect()
}

fn array<'a>(v: &'a Value, field: &str) -> Result<&'a Vec<Value>> {
    get(v, field)?.as_array().ok_or_else(|| fail(field, "expected an array"))
}

fn object(v: &Value, field: &str) -> Result<()> {
    get(v, field)?.as_object().map(|_| ()).ok_or_else(|| fail(field, "expected an object"))
}

fn require(v: &Value, fields: &[&str]) -> Result<()> {
    fields.iter().try_for_each(|f| get(v, f).map(|_| ()))
}

/// The Kronecker part shared by pencil and representation reports: types
/// of every field plus the totals k_hor = Σ(εᵢ + 1), k_vert = Σ(ηⱼ + 1).
fn kronecker(v: &Value) -> Result<()> {
    uint(v, "rank")?;
    let eps = uints(v, "eps")?;
    let eta = uints(v, "eta")?;
    let k_hor = uint(v, "k_hor")?;
    let k_vert = uint(v, "k_vert")?;
    let deg_d = uint(v, "deg_D")?;
    if k_hor != eps.iter().map(|e| e + 1).sum::<u64>() {
        return Err(fail("k_hor", "differs from Σ(ε + 1)"));
    }
    if k_vert != eta.iter().map(|e| e + 1).sum::<u64>() {
        return Err(fail("k_vert", "differs from Σ(η + 1)"));
    }
    for entry in array(v, "jordan")? {
        entry.get("factor").and_then(Value::as_str).ok_or_else(|| fail("jordan", "factor missing"))?;
        uints(entry, "sizes")?;
    }
    if let Some(shape) = v.get("shape") {
        let dims: Vec<u64> = shape
            .as_array()
            .filter(|s| s.len() == 2)
            .and_then(|s| s.iter().map(Value::as_u64).collect())
            .ok_or_else(|| fail("shape", "expected [rows, cols]"))?;
        let (m, n) = (dims[0], dims[1]);
        let sum_eps: u64 = eps.iter().sum();
        let sum_eta: u64 = eta.iter().sum();
        if m != sum_eps + k_vert + deg_d || n != k_hor + sum_eta + deg_d {
            return Err(fail("shape", "block sizes do not add up to the pencil shape"));
        }
    }
    Ok(())
}

/// Checks the fields every consumer relies on before a report is written.
pub fn validate_report(v: &Value) -> Result<()> {
    if v.get("schema").and_then(Value::as_str) != Some(SCHEMA) {
        return Err(fail("schema", format!("expected \"{SCHEMA}\"")));
    }
    let command = get(v, "command")?.as_str().ok_or_else(|| fail("command", "expected a string"))?;
    match command {
        "pencil" => {
            get(v, "shape")?;
            kronecker(v)
        }
        "rep analyze" => {
            kronecker(v)?;
            for f in ["p", "q", "dim_g", "dim_V", "dim_st_reg", "codim_orbit_reg"] {
                uint(v, f)?;
            }
            object(v, "identities")?;
            object(v, "witness")
        }
        "rep semiinvariant" => {
            uint(v, "degree")?;
            uint(v, "degree_via_pencil").map(|_| ())
        }
        "shifts" => {
            require(v, &["a", "invariants", "shift_family", "formal"])?;
            for f in ["trdeg", "vorontsov", "degree_sums", "independence"] {
                object(v, f)?;
            }
            array(v, "chain_property").map(|_| ())
        }
        "zoo list" => array(v, "entries").map(|_| ()),
        "zoo show" => require(v, &["name", "algebra", "representation", "expected"]),
        "check" => {
            for f in ["seed", "trials", "bound"] {
                uint(v, f)?;
            }
            for entry in array(v, "entries")? {
                require(entry, &["name", "invariants", "checks", "witnesses"])?;
            }
            object(v, "summary")?;
            get(v, "ok")?.as_bool().map(|_| ()).ok_or_else(|| fail("ok", "expected a boolean"))
        }
        other => Err(fail("command", format!("unknown command `{other}`"))),
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match scalar(val) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(val, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}- [{i}]\n"));
                        render_into(item, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

/// Indented `key: value` lines; scalar arrays stay on one line.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}
