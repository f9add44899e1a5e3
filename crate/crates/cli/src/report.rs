use std::fmt::Write as _;

use hopf_forests::report::Check;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct CounterexampleJson {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub status: &'static str,
    pub cases: usize,
    pub counterexample: Option<CounterexampleJson>,
}

impl From<&Check> for CheckJson {
    fn from(c: &Check) -> Self {
        CheckJson {
            name: c.name.clone(),
            status: if c.passed() { "pass" } else { "fail" },
            cases: c.cases,
            counterexample: c
                .counterexample
                .as_ref()
                .map(|x| CounterexampleJson { input: x.input.clone(), lhs: x.lhs.clone(), rhs: x.rhs.clone() }),
        }
    }
}

/// Outcome of one invocation. Timing is reported on stderr only, so stdout
/// stays identical across runs.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub items: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckJson>,
}

impl RunReport {
    pub fn value(command: Vec<String>, result: String) -> Self {
        RunReport { command, status: "ok", result: Some(result), items: Vec::new(), checks: Vec::new() }
    }

    pub fn list(command: Vec<String>, result: String, items: Vec<String>) -> Self {
        RunReport { command, status: "ok", result: Some(result), items, checks: Vec::new() }
    }

    pub fn checks(command: Vec<String>, checks: &[Check]) -> Self {
        let passed = checks.iter().all(Check::passed);
        RunReport {
            command,
            status: if passed { "pass" } else { "fail" },
            result: None,
            items: Vec::new(),
            checks: checks.iter().map(CheckJson::from).collect(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == "fail"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(r) = &self.result {
            out.push_str(r);
            out.push('\n');
        }
        for item in &self.items {
            out.push_str(item);
            out.push('\n');
        }
        for c in &self.checks {
            match &c.counterexample {
                None => writeln!(out, "pass  {} ({} cases)", c.name, c.cases),
                Some(x) => writeln!(out, "FAIL  {} at {}\n  lhs: {}\n  rhs: {}", c.name, x.input, x.lhs, x.rhs),
            }
            .unwrap();
        }
        if !self.checks.is_empty() {
            writeln!(out, "{}", self.status).unwrap();
        }
        out
    }
}
