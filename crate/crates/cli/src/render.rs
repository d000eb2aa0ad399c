//! Markdown rendering of a JSON payload. Nothing here looks at anything but
//! the `Value` it is handed.

use serde_json::{Map, Value};

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(scalar_leaf) => {
            Some(a.iter().filter_map(scalar).collect::<Vec<_>>().join(", "))
        }
        _ => None,
    }
}

fn scalar_leaf(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

/// Objects whose fields are all scalars or scalar lists print as a table.
fn table(items: &[Value]) -> Option<String> {
    let objs: Vec<&Map<String, Value>> =
        items.iter().map(Value::as_object).collect::<Option<_>>()?;
    if objs.is_empty() || objs.iter().any(|o| o.values().any(|v| scalar(v).is_none())) {
        return None;
    }
    let mut keys: Vec<&String> = Vec::new();
    for o in &objs {
        for k in o.keys() {
            if !keys.contains(&k) {
                keys.push(k);
            }
        }
    }
    let mut out = format!(
        "| {} |\n|{}\n",
        keys.iter().map(|k| cell(k)).collect::<Vec<_>>().join(" | "),
        " --- |".repeat(keys.len())
    );
    for o in objs {
        let row: Vec<String> = keys
            .iter()
            .map(|k| cell(&o.get(*k).and_then(scalar).unwrap_or_default()))
            .collect();
        out.push_str(&format!("| {} |\n", row.join(" | ")));
    }
    Some(out)
}

fn block(key: &str, v: &Value, depth: usize, out: &mut String) {
    let indent = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        if s.contains('\n') {
            out.push_str(&format!(
                "{indent}- **{key}**:\n\n```\n{}\n```\n\n",
                s.trim_end()
            ));
        } else {
            out.push_str(&format!("{indent}- **{key}**: {s}\n"));
        }
        return;
    }
    match v {
        Value::Array(items) => {
            if depth == 0 {
                if let Some(t) = table(items) {
                    out.push_str(&format!("\n### {key}\n\n{t}\n"));
                    return;
                }
            }
            out.push_str(&format!("{indent}- **{key}**:\n"));
            for (i, item) in items.iter().enumerate() {
                block(&format!("[{i}]"), item, depth + 1, out);
            }
        }
        Value::Object(m) => {
            out.push_str(&format!("{indent}- **{key}**:\n"));
            for (k, x) in m {
                block(k, x, depth + 1, out);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

pub fn markdown(payload: &Value) -> String {
    let command = payload["command"].as_str().unwrap_or("?");
    let status = payload["status"].as_str().unwrap_or("?");
    let mut out = format!("# stacky {command}\n\nstatus: **{status}**\n\n");
    if let Some(err) = payload.get("error") {
        out.push_str(&format!(
            "error `{}`: {}\n",
            err["code"].as_str().unwrap_or("?"),
            err["message"].as_str().unwrap_or("")
        ));
        return out;
    }
    if let Some(Value::Array(lines)) = payload["result"].get("summary") {
        out.push_str("```\n");
        for l in lines {
            out.push_str(l.as_str().unwrap_or(""));
            out.push('\n');
        }
        out.push_str("```\n\n");
    }
    if let Some(Value::Object(m)) = payload.get("result") {
        for (k, v) in m {
            if k != "summary" {
                block(k, v, 0, &mut out);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn tables_and_errors() {
        let v = json!({"command": "x", "status": "ok", "result": {"rows": [{"a": 1, "b": "p|q"}, {"a": 2}]}});
        let md = markdown(&v);
        assert!(md.contains("| a | b |"));
        assert!(md.contains("| 1 | p\\|q |"));
        assert!(md.contains("| 2 |  |"));
        let e = json!({"command": "x", "status": "error", "error": {"code": "syntax", "message": "bad"}});
        assert!(markdown(&e).contains("error `syntax`: bad"));
    }
}
