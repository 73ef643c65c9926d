//! Report envelope and the two serializations.
//!
//! Reports are built as `serde_json::Value`, whose maps keep keys sorted, so
//! printing, re-parsing and printing again gives the same bytes.

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

pub fn envelope(argv: &[String], inputs: Value, outputs: Value) -> Value {
    json!({ "command": argv, "inputs": inputs, "outputs": outputs })
}

pub fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("values always serialize") + "\n",
        Format::Tsv => {
            let mut lines = Vec::new();
            flatten("", report, &mut lines);
            lines.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect()
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) if !m.is_empty() => m.iter().for_each(|(k, x)| flatten(&key(k), x, out)),
        Value::Array(a) if !a.is_empty() => a.iter().enumerate().for_each(|(i, x)| flatten(&key(&i.to_string()), x, out)),
        Value::Object(_) => out.push((prefix.to_string(), "{}".into())),
        Value::Array(_) => out.push((prefix.to_string(), "[]".into())),
        Value::String(s) => out.push((prefix.to_string(), s.replace(['\t', '\n'], " "))),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

/// `serde_json::to_value` for the library's report types.
pub fn value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

pub fn object(pairs: impl IntoIterator<Item = (&'static str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}
