//! One renderer for every subcommand: records are ordered JSON objects, and
//! TSV and human output are views over the same values.

use clap::ValueEnum;
use serde_json::{Map, Value};
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Human,
}

pub const REPORT_COLUMNS: &[&str] = &[
    "graph6",
    "n",
    "m",
    "j",
    "p",
    "alpha_j",
    "a",
    "a_j",
    "c_j",
    "a_weak",
    "c_weak",
    "chrom_bound",
    "chi_j",
    "claw_free",
    "claw_w",
    "faudree",
    "k1p_bound",
    "planar_bound",
    "gamma_j",
    "z_j",
    "w_j",
    "w_weak",
    "checks",
];

fn is_rational(map: &Map<String, Value>) -> bool {
    map.len() == 3 && map.contains_key("num") && map.contains_key("den")
}

fn is_check_list(items: &[Value]) -> bool {
    items
        .iter()
        .all(|c| c.get("name").is_some() && c.get("pass").is_some())
}

fn failed_checks(items: &[Value]) -> Vec<&Value> {
    items
        .iter()
        .filter(|c| c["pass"] == Value::Bool(false))
        .collect()
}

fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => "-".into(),
        Some(Value::String(s)) => s.clone(),
        Some(Value::Object(map)) if is_rational(map) => format!("{}/{}", map["num"], map["den"]),
        Some(Value::Array(items)) if !items.is_empty() && is_check_list(items) => {
            let failed = failed_checks(items);
            if failed.is_empty() {
                "pass".into()
            } else {
                let names: Vec<_> = failed.iter().map(|c| cell(c.get("name"))).collect();
                format!("fail:{}", names.join(","))
            }
        }
        Some(Value::Array(items)) if items.iter().all(Value::is_number) => items
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(","),
        Some(other) => other.to_string(),
    }
}

fn human(v: &Value) -> String {
    match v {
        Value::Object(map) if is_rational(map) => {
            format!("{}/{} (floor {})", map["num"], map["den"], map["floor"])
        }
        Value::Array(items) if !items.is_empty() && is_check_list(items) => {
            let failed = failed_checks(items);
            let mut s = format!("{}/{} pass", items.len() - failed.len(), items.len());
            for c in failed {
                let _ = write!(
                    s,
                    "\n    FAIL {}: {} vs {}",
                    cell(c.get("name")),
                    c["left"],
                    c["right"]
                );
            }
            s
        }
        Value::Object(map) => {
            let mut s = String::new();
            for (k, x) in map {
                let _ = write!(s, "\n    {k}: {}", cell(Some(x)));
            }
            s
        }
        other => cell(Some(other)),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, Value)>) {
    match v {
        Value::Object(map) if !is_rational(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, out);
            }
        }
        _ => out.push((prefix.to_string(), v.clone())),
    }
}

/// Renders records; `columns` fixes the TSV header, otherwise it is the
/// union of flattened keys in first-seen order.
pub fn render(records: &[Value], format: Format, columns: Option<&[&str]>) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            for r in records {
                out.push_str(&serde_json::to_string(r).expect("json value"));
                out.push('\n');
            }
        }
        Format::Tsv => {
            let flat: Vec<Map<String, Value>> = records
                .iter()
                .map(|r| {
                    let mut pairs = Vec::new();
                    flatten("", r, &mut pairs);
                    pairs.into_iter().collect()
                })
                .collect();
            let header: Vec<String> = match columns {
                Some(cols) => cols.iter().map(|c| c.to_string()).collect(),
                None => {
                    let mut seen: Vec<String> = Vec::new();
                    for row in &flat {
                        for k in row.keys() {
                            if !seen.contains(k) {
                                seen.push(k.clone());
                            }
                        }
                    }
                    seen
                }
            };
            out.push_str(&header.join("\t"));
            out.push('\n');
            for row in &flat {
                let cells: Vec<_> = header.iter().map(|c| cell(row.get(c))).collect();
                out.push_str(&cells.join("\t"));
                out.push('\n');
            }
        }
        Format::Human => {
            for (i, r) in records.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                match r {
                    Value::Object(map) => {
                        let width = map.keys().map(String::len).max().unwrap_or(0);
                        for (k, v) in map {
                            if !v.is_null() {
                                let _ = writeln!(out, "{k:<width$}  {}", human(v));
                            }
                        }
                    }
                    other => {
                        let _ = writeln!(out, "{}", human(other));
                    }
                }
            }
        }
    }
    out
}
