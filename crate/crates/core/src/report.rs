//! Structured results with text and JSON renderings.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::document::IdealDocument;
use crate::verify::Check;

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Input {
    pub label: Option<String>,
    pub ring: Vec<String>,
    pub text: String,
}

impl Input {
    pub fn from_document(doc: &IdealDocument) -> Self {
        Input { label: doc.label.clone(), ring: doc.ring().names().to_vec(), text: doc.to_string() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Option<Input>,
    pub values: Map<String, Value>,
    pub certificates: Map<String, Value>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Report {
    pub fn new(command: impl Into<String>, input: Option<Input>) -> Self {
        Report { command: command.into(), input, ..Default::default() }
    }

    pub fn value(&mut self, key: &str, v: impl Serialize) {
        self.values.insert(key.to_string(), serde_json::to_value(v).expect("serializable"));
    }

    pub fn certificate(&mut self, key: &str, v: impl Serialize) {
        self.certificates.insert(key.to_string(), serde_json::to_value(v).expect("serializable"));
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        let s = s.into();
        if !self.notes.contains(&s) {
            self.notes.push(s);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => self.to_text(),
        }
    }

    fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        if let Some(input) = &self.input {
            let label = input.label.as_deref().unwrap_or("-");
            out += &format!("input: {label} (ring {}: {})\n", input.ring.len(), input.ring.join(", "));
        }
        for (title, map) in [("values", &self.values), ("certificates", &self.certificates)] {
            if !map.is_empty() {
                out += &format!("{title}:\n");
                for (k, v) in map {
                    flatten(&mut out, k, v);
                }
            }
        }
        if !self.checks.is_empty() {
            out += "checks:\n";
            for c in &self.checks {
                let verdict = if c.pass { "PASS" } else { "FAIL" };
                out += &format!("  {verdict} {}: {} {} {}\n", c.name, c.lhs, c.relation.symbol(), c.rhs);
            }
            out += &format!("summary: {} checks, {} failed\n", self.checks.len(), self.failures());
        }
        if !self.notes.is_empty() {
            out += "notes:\n";
            for n in &self.notes {
                out += &format!("  - {n}\n");
            }
        }
        out
    }
}

fn flatten(out: &mut String, key: &str, v: &Value) {
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, inner) in m {
                flatten(out, &format!("{key}.{k}"), inner);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            out.push_str(&format!("  {key}:\n"));
            for item in items {
                out.push_str(&format!("    {}\n", scalar(item)));
            }
        }
        _ => out.push_str(&format!("  {key} = {}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "undefined".into(),
        other => other.to_string(),
    }
}
