//! Run records and their text and JSON renderings.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct RunRecord {
    pub command: &'static str,
    /// graph6 of the input graph, the canonical blueprint, or the parameters.
    pub input: String,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl RunRecord {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("records serialize");
                s.push('\n');
                s
            }
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut rows = vec![
            ("command".to_string(), self.command.to_string()),
            ("input".to_string(), self.input.trim_end().replace('\n', "; ")),
        ];
        flatten("", &self.result, &mut rows);
        if let Some(ms) = self.wall_time_ms {
            rows.push(("wall_time_ms".into(), format!("{ms:.3}")));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(_) => None,
    }
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    if let Some(s) = scalar(v) {
        rows.push((prefix.to_string(), s));
        return;
    }
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                flatten(&join(prefix, k), item, rows);
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), item, rows);
            }
        }
        _ => unreachable!("scalars are handled above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_is_aligned_and_flat() {
        let r = RunRecord {
            command: "solve",
            input: "Bw".into(),
            result: json!({"number": 2, "witness": [0, 1], "nested": {"ok": true}, "rows": [{"a": 1}]}),
            wall_time_ms: None,
        };
        let text = r.render(Format::Text);
        assert!(text.contains("command    solve\n"), "{text}");
        assert!(text.contains("witness    [0, 1]\n"), "{text}");
        assert!(text.contains("nested.ok  true\n"), "{text}");
        assert!(text.contains("rows[0].a  1\n"), "{text}");
        assert!(!r.render(Format::Json).contains("wall_time_ms"));
    }
}
