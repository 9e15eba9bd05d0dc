//! JSON reports emitted by the command-line front end.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::field::Field;

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
}

/// Output of one subcommand. Maps are ordered, so serialization is
/// deterministic.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub artifact_version: String,
    pub field_presentation_choices: BTreeMap<String, String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            inputs: BTreeMap::new(),
            results: BTreeMap::new(),
            checks: Vec::new(),
            artifact_version: ARTIFACT_VERSION.into(),
            field_presentation_choices: BTreeMap::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.inputs.insert(key.into(), to_value(value));
        self
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.results.insert(key.into(), to_value(value));
        self
    }

    pub fn check(&mut self, name: &str, passed: bool, details: impl Into<String>) -> &mut Self {
        let status = if passed { Status::Pass } else { Status::Fail };
        self.checks.push(Check { name: name.into(), status, details: details.into() });
        self
    }

    /// Records how `field` is presented (the modulus of `GF(p^m)`).
    pub fn field(&mut self, field: &Field) -> &mut Self {
        self.field_presentation_choices.insert(field.spec(), field.presentation());
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn to_json(&self) -> String {
        // round-trip through Value so that nested maps are key-sorted
        serde_json::to_string_pretty(&to_value(self)).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} (graded-descent {})\n", self.command, self.artifact_version);
        for (k, v) in &self.results {
            out.push_str(&format!("{k}: {}\n", compact(v)));
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{tag} {}", c.name));
            if !c.details.is_empty() {
                out.push_str(&format!(" ({})", c.details));
            }
            out.push('\n');
        }
        out
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("value serializes")
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted() {
        let mut r = Report::new("x");
        r.result("zeta", 1).result("alpha", serde_json::json!({"b": 1, "a": 2}));
        let s = r.to_json();
        assert!(s.find("\"alpha\"").unwrap() < s.find("\"zeta\"").unwrap());
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
        assert!(r.passed());
        r.check("c", false, "");
        assert!(!r.passed());
        assert!(r.to_text().contains("FAIL c"));
    }
}
