//! Machine-readable reports.
//!
//! Every verification produces a [`Report`]: a verdict plus a list of flat
//! records. JSON carries the whole report, CSV only the records, and text is
//! a short human summary. Output is deterministic for fixed parameters except
//! for `elapsed_ms`.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::Result;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Inconclusive,
}

impl Verdict {
    /// `Verified` only if every check passed.
    pub fn from_checks(all_passed: bool) -> Self {
        if all_passed {
            Verdict::Verified
        } else {
            Verdict::Refuted
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::Refuted | Verdict::Inconclusive => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(crate::Error::InvalidArgument(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub parameters: Map<String, Value>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    pub constants: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub records: Vec<Value>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            parameters: Map::new(),
            verdict: Verdict::Inconclusive,
            constants: Map::new(),
            notes: Vec::new(),
            records: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.into(), serde_json::to_value(value).expect("serializable"));
        self
    }

    pub fn constant(&mut self, key: &str, value: impl Serialize) {
        self.constants.insert(key.into(), serde_json::to_value(value).expect("serializable"));
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn push(&mut self, record: impl Serialize) {
        self.records.push(serde_json::to_value(record).expect("serializable"));
    }

    /// Records deserialized as `T`.
    pub fn records_as<T: serde::de::DeserializeOwned>(&self) -> Result<Vec<T>> {
        self.records.iter().map(|r| Ok(serde_json::from_value(r.clone())?)).collect()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Csv => self.to_csv(),
            Format::Text => Ok(self.to_text()),
        }
    }

    /// Renders to `path`, or to stdout when `path` is `None`.
    pub fn emit(&self, format: Format, path: Option<&Path>) -> Result<()> {
        let out = self.render(format)?;
        match path {
            Some(p) => std::fs::write(p, out)?,
            None => print!("{out}"),
        }
        Ok(())
    }

    fn columns(&self) -> Vec<String> {
        let mut cols: Vec<String> = Vec::new();
        for r in &self.records {
            if let Value::Object(m) = r {
                for k in m.keys() {
                    if !cols.contains(k) {
                        cols.push(k.clone());
                    }
                }
            }
        }
        cols
    }

    fn to_csv(&self) -> Result<String> {
        let cols = self.columns();
        let mut w = csv::Writer::from_writer(Vec::new());
        if !cols.is_empty() {
            w.write_record(&cols)?;
        }
        for r in &self.records {
            let row: Vec<String> = cols.iter().map(|c| cell(r.get(c))).collect();
            w.write_record(&row)?;
        }
        let bytes = w.into_inner().map_err(|e| crate::Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}: {:?}", self.command, self.verdict);
        for (k, v) in &self.parameters {
            let _ = writeln!(s, "  {k} = {}", cell(Some(v)));
        }
        for (k, v) in &self.constants {
            let _ = writeln!(s, "  constant {k} = {}", cell(Some(v)));
        }
        for n in &self.notes {
            let _ = writeln!(s, "  note: {n}");
        }
        for r in &self.records {
            let line = match r {
                Value::Object(m) => {
                    m.iter().map(|(k, v)| format!("{k}={}", cell(Some(v)))).collect::<Vec<_>>().join("  ")
                }
                other => cell(Some(other)),
            };
            let _ = writeln!(s, "  {line}");
        }
        let _ = writeln!(s, "  ({} records, {} ms)", self.records.len(), self.elapsed_ms);
        s
    }
}

fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(other) => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        let mut r = Report::new("demo").param("b_max", 3);
        r.push(json!({"b": 1, "e": -1, "lambda": "(-1 + √5)/2"}));
        r.push(json!({"b": 2, "e": 0, "lambda": "√2"}));
        r.verdict = Verdict::Verified;
        r
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let back = Report::from_json(&r.render(Format::Json).unwrap()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_has_records_only() {
        let csv = sample().render(Format::Csv).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "b,e,lambda");
        assert_eq!(lines.len(), 3);
    }

    #[test]
    fn text_mentions_verdict() {
        assert!(sample().render(Format::Text).unwrap().starts_with("demo: Verified"));
        assert_eq!(Verdict::Inconclusive.exit_code(), 1);
    }
}
