//! Plain-text rendering of a payload. Values appear in the same order and
//! with the same spelling as in the JSON output.

use std::fmt::Write;

use serde_json::Value;

pub fn table(command: &str, group: Option<&str>, level: Option<u32>, payload: &Value) -> String {
    let mut out = format!("# {command}");
    if let Some(g) = group {
        let _ = write!(out, "  group {g}");
    }
    if let Some(k) = level {
        let _ = write!(out, "  level {k}");
    }
    out.push('\n');
    block(&mut out, payload, 0);
    while out.ends_with('\n') {
        out.pop();
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::String(s) => Some(s.clone()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        _ => None,
    }
}

/// Scalars, and arrays of scalars written as `[a,b]`.
fn inline(v: &Value) -> Option<String> {
    if let Some(s) = scalar(v) {
        return Some(s);
    }
    match v {
        Value::Array(xs) => {
            let parts: Option<Vec<String>> = xs.iter().map(scalar).collect();
            parts.map(|p| format!("[{}]", p.join(",")))
        }
        _ => None,
    }
}

/// Arrays whose items all fit on one line become one line per item.
fn rows(v: &Value) -> Option<Vec<String>> {
    let Value::Array(xs) = v else { return None };
    xs.iter()
        .map(|x| match x {
            Value::Array(cells) => cells.iter().map(inline).collect::<Option<Vec<_>>>().map(|c| c.join("  ")),
            _ => inline(x),
        })
        .collect()
}

fn block(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (key, val) in map {
                match (inline(val), rows(val)) {
                    (Some(s), _) => {
                        let _ = writeln!(out, "{pad}{key}: {s}");
                    }
                    (None, Some(lines)) => {
                        let _ = writeln!(out, "{pad}{key}:");
                        for l in lines {
                            let _ = writeln!(out, "{pad}  {l}");
                        }
                    }
                    (None, None) => {
                        let _ = writeln!(out, "{pad}{key}:");
                        block(out, val, indent + 2);
                    }
                }
            }
        }
        Value::Array(items) => {
            if let Some(lines) = rows(v) {
                for l in lines {
                    let _ = writeln!(out, "{pad}{l}");
                }
                return;
            }
            for item in items {
                let _ = writeln!(out, "{pad}-");
                block(out, item, indent + 2);
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}
