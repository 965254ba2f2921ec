use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        expected: impl fmt::Display,
        computed: impl fmt::Display,
    ) -> Self {
        let expected = expected.to_string();
        let computed = computed.to_string();
        Check {
            name: name.into(),
            pass: expected == computed,
            expected,
            computed,
        }
    }

    /// A check whose pass condition is not plain string equality.
    pub fn with(
        name: impl Into<String>,
        expected: impl fmt::Display,
        computed: impl fmt::Display,
        pass: bool,
    ) -> Self {
        Check {
            name: name.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
        }
    }

    pub fn failed(
        name: impl Into<String>,
        expected: impl fmt::Display,
        err: impl fmt::Display,
    ) -> Self {
        Check::with(name, expected, format!("error: {err}"), false)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub title: String,
    pub checks: Vec<Check>,
    pub pass: bool,
    /// Wall time; left out of output unless asked for, so that reports
    /// stay byte-identical across runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

impl VerifyReport {
    /// Checks are sorted by name.
    pub fn new(suite: &str, title: &str, mut checks: Vec<Check>, seconds: f64) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        VerifyReport {
            suite: suite.into(),
            title: title.into(),
            pass: checks.iter().all(|c| c.pass),
            checks,
            seconds: Some(seconds),
        }
    }

    /// Text without timings, identical across runs.
    pub fn render(&self) -> String {
        let mut out = format!("== {} ({})\n", self.suite, self.title);
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            if c.pass {
                out += &format!("{verdict}  {:width$}  {}\n", c.name, c.computed);
            } else {
                out += &format!(
                    "{verdict}  {:width$}  expected {}, computed {}\n",
                    c.name, c.expected, c.computed
                );
            }
        }
        out += &format!(
            "{}: {}/{} checks passed\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len()
        );
        out
    }
}

pub const REPORT_SCHEMA: &str = r#"{
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "VerifyReport",
  "type": "object",
  "required": ["suite", "title", "checks", "pass"],
  "properties": {
    "suite": { "type": "string" },
    "title": { "type": "string" },
    "pass": { "type": "boolean", "description": "true iff every check passes" },
    "seconds": { "type": "number", "minimum": 0 },
    "checks": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["name", "expected", "computed", "pass"],
        "properties": {
          "name": { "type": "string" },
          "expected": { "type": "string" },
          "computed": { "type": "string" },
          "pass": { "type": "boolean" }
        },
        "additionalProperties": false
      }
    }
  },
  "additionalProperties": false
}
"#;
