use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub library_version: String,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witt_cache_key: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub provenance: Provenance,
    /// Wall time; the only field that varies between identical runs.
    pub timing_ms: f64,
}

pub fn to_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize")
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Null => Some("none".into()),
        _ => None,
    }
}

fn render(out: &mut String, key: &str, v: &Value) {
    if let Some(s) = scalar(v) {
        let _ = writeln!(out, "{key}: {s}");
        return;
    }
    match v {
        Value::Array(items) => {
            let _ = writeln!(out, "{key}: ({} entries)", items.len());
            for item in items {
                let line = scalar(item).unwrap_or_else(|| item.to_string());
                let _ = writeln!(out, "  {line}");
            }
        }
        Value::Object(map) => {
            for (k, inner) in map {
                render(out, &format!("{key}.{k}"), inner);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

/// Text form: one `key: value` line per field, list entries one per line.
pub fn to_text(report: &Report) -> String {
    let mut out = String::new();
    if let Value::Object(map) = &report.result {
        for (k, v) in map {
            render(&mut out, k, v);
        }
    } else {
        render(&mut out, "result", &report.result);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command: "roots".into(),
            inputs: json!({"field": "2:1", "skew": "F^2+F+1"}),
            result: json!({"count": "4", "basis": ["u", "u^2"], "nested": {"a": 1}}),
            provenance: Provenance {
                library_version: "0.1.0".into(),
                seed: 0,
                witt_cache_key: None,
            },
            timing_ms: 0.5,
        }
    }

    #[test]
    fn json_round_trips() {
        let r = sample();
        let text = to_json(&r);
        assert!(text.contains("schema_version"));
        assert_eq!(serde_json::from_str::<Report>(&text).unwrap(), r);
    }

    #[test]
    fn text_lists_one_entry_per_line() {
        let text = to_text(&sample());
        assert!(text.contains("basis: (2 entries)\n  u\n  u^2\n"));
        assert!(text.contains("nested.a: 1"));
    }
}
