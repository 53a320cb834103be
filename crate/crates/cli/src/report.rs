//! Command output: a fixed set of columns, rows keyed by column name, and the
//! three renderers.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub type Row = Map<String, Value>;

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub params: Value,
    /// Column order for CSV and text; JSON objects use sorted keys.
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
    pub discrepancies: Vec<Value>,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    fn to_json(&self) -> String {
        let doc = json!({
            "command": self.command,
            "params": self.params,
            "rows": self.rows,
            "discrepancies": self.discrepancies,
        });
        let mut out = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
        out.push('\n');
        out
    }

    fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.columns).expect("writing to memory");
        for row in &self.rows {
            let record: Vec<String> = self.columns.iter().map(|c| cell(row.get(c))).collect();
            w.write_record(&record).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("writing to memory")).expect("CSV output is UTF-8")
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.columns.iter().map(String::len).max().unwrap_or(0);
        writeln!(out, "{}", self.command).unwrap();
        for row in &self.rows {
            out.push('\n');
            for c in &self.columns {
                if let Some(v) = row.get(c).filter(|v| !v.is_null()) {
                    writeln!(out, "  {c:<width$}  {}", cell(Some(v))).unwrap();
                }
            }
        }
        if !self.discrepancies.is_empty() {
            writeln!(out, "\ndiscrepancies").unwrap();
            for d in &self.discrepancies {
                writeln!(out, "  {d}").unwrap();
            }
        }
        out
    }
}

/// Flat rendering of one value: numbers in an array joined by spaces,
/// strings by `; `, pairs inside an array as `a:b`, null as empty.
fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(Value::Array(items)) if items.iter().all(Value::is_string) => {
            items.iter().map(|i| cell(Some(i))).collect::<Vec<_>>().join("; ")
        }
        Some(Value::Array(items)) => items
            .iter()
            .map(|i| match i {
                Value::Array(inner) => inner.iter().map(|x| cell(Some(x))).collect::<Vec<_>>().join(":"),
                other => cell(Some(other)),
            })
            .collect::<Vec<_>>()
            .join(" "),
        Some(other) => other.to_string(),
    }
}
