//! Plain-text rendering of the JSON reports.

use serde_json::Value;

/// One-line form of a value: scalars as is, `null` as `-`, arrays of
/// scalars as `[a, b]`, tagged objects as `tag(k=v, ...)`.
fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(cell).collect::<Vec<_>>().join(", ")),
        Value::Object(map) => {
            let tag = map.get("type").or_else(|| map.get("kind")).map(cell);
            let rest: Vec<String> = map
                .iter()
                .filter(|(k, _)| *k != "type" && *k != "kind")
                .map(|(k, v)| format!("{k}={}", cell(v)))
                .collect();
            match (tag, rest.is_empty()) {
                (Some(t), true) => t,
                (Some(t), false) => format!("{t}({})", rest.join(", ")),
                (None, _) => format!("{{{}}}", rest.join(", ")),
            }
        }
        other => other.to_string(),
    }
}

fn is_scalar_list(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()))
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) if !map.contains_key("type") => {
            for (k, sub) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, sub, out);
            }
        }
        Value::Array(items) if !is_scalar_list(v) => {
            for (i, sub) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), sub, out);
            }
        }
        _ => out.push((prefix.to_string(), cell(v))),
    }
}

fn table(rows: &[Value]) -> String {
    let Some(Value::Object(first)) = rows.first() else {
        return "(no rows)\n".into();
    };
    let header: Vec<String> = first.keys().cloned().collect();
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| header.iter().map(|k| cell(&r[k.as_str()])).collect())
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|c| body.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap())
        .collect();
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut s = line(&header);
    for r in &body {
        s.push_str(&line(r));
    }
    s
}

/// Aligned `key  value` lines; the array under `table_key`, if any, is
/// printed afterwards as a table.
pub fn text(report: &Value, table_key: Option<&str>) -> String {
    let mut pairs = Vec::new();
    let mut rows = None;
    if let Value::Object(map) = report {
        for (k, v) in map {
            if Some(k.as_str()) == table_key {
                rows = v.as_array();
            } else {
                flatten(k, v, &mut pairs);
            }
        }
    }
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut s: String = pairs.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect();
    if let Some(rows) = rows {
        s.push('\n');
        s.push_str(&table(rows));
    }
    s
}
