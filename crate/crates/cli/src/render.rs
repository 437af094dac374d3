//! Plain-text rendering of an output document.
//!
//! Every value in the JSON document appears in the text, in the same order.

use std::fmt::Write;

use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::Null => Some("-".into()),
        _ => None,
    }
}

/// `[a, b, c]` for an array of scalars.
fn inline(v: &Value) -> Option<String> {
    if let Some(s) = scalar(v) {
        return Some(s);
    }
    let items = v.as_array()?;
    let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
    Some(format!("[{}]", parts?.join(", ")))
}

fn entries(out: &mut String, map: &serde_json::Map<String, Value>, indent: usize) {
    for (key, value) in map {
        write_entry(out, key, value, indent);
    }
}

fn write_entry(out: &mut String, key: &str, value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    if let Some(s) = inline(value) {
        let _ = writeln!(out, "{pad}{key}: {s}");
        return;
    }
    let _ = writeln!(out, "{pad}{key}:");
    match value {
        Value::Object(map) => entries(out, map, indent + 1),
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(map) => {
                        let _ = writeln!(out, "{pad}  -");
                        entries(out, map, indent + 2);
                    }
                    other => match inline(other) {
                        Some(s) => {
                            let _ = writeln!(out, "{pad}  {s}");
                        }
                        None => write_entry(out, "-", other, indent + 1),
                    },
                }
            }
        }
        _ => unreachable!("scalars are inline"),
    }
}

pub fn text(doc: &Value) -> String {
    let mut out = String::new();
    match doc {
        Value::Object(map) => entries(&mut out, map, 0),
        other => write_entry(&mut out, "result", other, 0),
    }
    out
}
