//! Reports printed by every command, as text or JSON.

use rota_core::Rational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of one command. `holds = false` maps to exit code 1.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub holds: bool,
    pub lines: Vec<String>,
    #[serde(default)]
    pub data: Value,
}

impl Report {
    pub fn new(command: &str, holds: bool) -> Self {
        Report {
            command: command.to_string(),
            holds,
            lines: Vec::new(),
            data: Value::Null,
        }
    }

    pub fn line(mut self, s: impl Into<String>) -> Self {
        self.lines.push(s.into());
        self
    }

    pub fn push(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn with_data(mut self, data: impl Serialize) -> Self {
        self.data = serde_json::to_value(data).expect("report data serializes");
        self
    }

    pub fn exit_code(&self) -> i32 {
        if self.holds {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let verdict = if self.holds { "holds" } else { "fails" };
        let mut out = format!("{}: {verdict}\n", self.command);
        for l in &self.lines {
            out.push_str("  ");
            out.push_str(l);
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Writes `v` in the basis `labels`, e.g. `2*x - 1/2*x2`. A basis element
/// labelled `1` is written as a bare coefficient.
pub fn format_element(labels: &[String], v: &[Rational]) -> String {
    let mut out = String::new();
    for (c, label) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let (neg, abs) = (c.is_negative(), c.abs());
        let body = if label == "1" {
            abs.to_string()
        } else if abs.is_one() {
            label.clone()
        } else {
            format!("{abs}*{label}")
        };
        match (out.is_empty(), neg) {
            (true, false) => out.push_str(&body),
            (true, true) => out.push_str(&format!("-{body}")),
            (false, false) => out.push_str(&format!(" + {body}")),
            (false, true) => out.push_str(&format!(" - {body}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
