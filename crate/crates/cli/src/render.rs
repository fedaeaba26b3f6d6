//! Plain-text rendering of an envelope: a bracketed header followed by one
//! `key: value` line per leaf, with nested keys joined by dots.

use std::fmt::Write;

use serde_json::{Map, Value};

use crate::payload::{Envelope, Status};

pub fn text(env: &Envelope) -> String {
    let mut out = String::new();
    let mut header = env.command.clone();
    if let Value::Object(inputs) = &env.inputs {
        for (k, v) in inputs {
            write!(header, " {k}={}", inline(v)).unwrap();
        }
    }
    writeln!(out, "[{header}]").unwrap();
    match (&env.status, &env.result) {
        (Status::None, _) | (_, Value::Null) => writeln!(out, "result: none").unwrap(),
        (_, Value::Object(map)) => fields(&mut out, "", map),
        (_, v) => writeln!(out, "result: {}", inline(v)).unwrap(),
    }
    out
}

fn fields(out: &mut String, prefix: &str, map: &Map<String, Value>) {
    for (k, v) in map {
        let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
        match v {
            Value::Object(inner) if as_class(inner).is_none() => fields(out, &key, inner),
            Value::Array(rows) if is_matrix(rows) => {
                writeln!(out, "{key}:").unwrap();
                matrix(out, rows);
            }
            Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                writeln!(out, "{key}: {} item(s)", items.len()).unwrap();
                for item in items {
                    writeln!(out, "  {}", inline(item)).unwrap();
                }
            }
            _ => writeln!(out, "{key}: {}", inline(v)).unwrap(),
        }
    }
}

fn as_class(map: &Map<String, Value>) -> Option<String> {
    let basis = map.get("basis")?.as_str()?;
    let coeffs = map.get("coeffs")?.as_array()?;
    (map.len() == 2).then(|| format!("{} {basis}", tuple(coeffs)))
}

fn is_matrix(rows: &[Value]) -> bool {
    !rows.is_empty() && rows.iter().all(|r| r.as_array().is_some_and(|r| r.iter().all(Value::is_string)))
}

fn matrix(out: &mut String, rows: &[Value]) {
    let cells: Vec<Vec<&str>> =
        rows.iter().map(|r| r.as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect()).collect();
    let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(0);
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(out, "  {}", line.join(" ")).unwrap();
    }
}

fn tuple(items: &[Value]) -> String {
    let parts: Vec<String> = items.iter().map(inline).collect();
    format!("({})", parts.join(", "))
}

fn inline(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::Array(items) => tuple(items),
        Value::Object(map) => as_class(map).unwrap_or_else(|| {
            let parts: Vec<String> = map.iter().map(|(k, v)| format!("{k}={}", inline(v))).collect();
            parts.join(" ")
        }),
    }
}
