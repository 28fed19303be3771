use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Csv => csv_text(report),
    }
}

fn csv_text(report: &Value) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(checks) = report.get("checks").and_then(Value::as_array) {
        w.write_record(["suite", "check", "passed", "failed", "statement"]).expect("in-memory write");
        for c in checks {
            let field = |k: &str| match &c[k] {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            w.write_record([field("suite"), field("check"), field("passed"), field("failed"), field("statement")])
                .expect("in-memory write");
        }
    } else {
        w.write_record(["field", "value"]).expect("in-memory write");
        let mut rows = Vec::new();
        flatten("", report, &mut rows);
        for (k, v) in rows {
            w.write_record([k, v]).expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV of UTF-8 input")
}

/// Objects become dotted keys; arrays of scalars or vectors stay as JSON text.
fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&key(k), x, rows);
            }
        }
        Value::Array(items) if items.iter().any(Value::is_object) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), x, rows);
            }
        }
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}
