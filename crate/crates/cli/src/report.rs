//! Deterministic run reports: structured JSON and plain text.

use std::fmt::Write as _;
use std::time::Duration;

use colorhopf::{Check, ValidationReport, Witness};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Text(String),
    List(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub key: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub section: String,
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub status: String,
    pub facts: Vec<Fact>,
    pub checks: Vec<CheckLine>,
    /// wall clock, text output only
    #[serde(skip)]
    pub timings: Vec<(String, Duration)>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), ..Default::default() }
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl ToString) {
        self.facts.push(Fact { key: key.into(), value: Value::Text(value.to_string()) });
    }

    pub fn list<S: ToString>(&mut self, key: impl Into<String>, items: impl IntoIterator<Item = S>) {
        let v = items.into_iter().map(|s| s.to_string()).collect();
        self.facts.push(Fact { key: key.into(), value: Value::List(v) });
    }

    pub fn check(&mut self, section: &str, c: Check) {
        self.checks.push(CheckLine { section: section.into(), name: c.name, passed: c.passed, witness: c.witness });
    }

    pub fn checks_from(&mut self, r: ValidationReport) {
        let section = r.subject.clone();
        for c in r.checks {
            self.check(&section, c);
        }
    }

    pub fn time(&mut self, what: impl Into<String>, d: Duration) {
        self.timings.push((what.into(), d));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Sets `status` from the checks.
    pub fn finish(&mut self) {
        self.status = if self.passed() { "pass" } else { "fail" }.into();
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "status: {}", self.status.to_uppercase());
        for f in &self.facts {
            match &f.value {
                Value::Text(t) => {
                    let _ = writeln!(out, "{}: {t}", f.key);
                }
                Value::List(v) => {
                    let _ = writeln!(out, "{}:", f.key);
                    for x in v {
                        let _ = writeln!(out, "  {x}");
                    }
                }
            }
        }
        let mut section = None;
        for c in &self.checks {
            if section != Some(&c.section) {
                let _ = writeln!(out, "{}", c.section);
                section = Some(&c.section);
            }
            let _ = write!(out, "  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name);
            if let Some(w) = &c.witness {
                let _ = write!(out, " {w}");
            }
            out.push('\n');
        }
        for (what, d) in &self.timings {
            let _ = writeln!(out, "time {what}: {} µs", d.as_micros());
        }
        out
    }
}
