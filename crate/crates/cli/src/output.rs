use serde_json::Value;

use crate::commands::Outcome;
use crate::Format;

pub fn render(out: &Outcome, format: Format) -> Result<String, String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&out.report).expect("serializable")),
        Format::Csv => {
            let table = out.table.as_ref().ok_or("this command has no tabular output; use --format json or text")?;
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in table {
                w.write_record(row).map_err(|e| e.to_string())?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            Ok(String::from_utf8(bytes).expect("utf8").trim_end().to_string())
        }
        Format::Text => {
            let mut lines = Vec::new();
            flatten("", &out.report, &mut lines);
            Ok(lines.join("\n"))
        }
    }
}

/// One `path = value` line per scalar, with arrays of scalars kept on one line.
fn flatten(path: &str, v: &Value, out: &mut Vec<String>) {
    let child = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                flatten(&child(k), v, out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            out.push(format!("{path} = [{}]", items.join(", ")));
        }
        Value::Array(a) => {
            for (i, v) in a.iter().enumerate() {
                flatten(&child(&i.to_string()), v, out);
            }
        }
        _ => out.push(format!("{path} = {}", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
