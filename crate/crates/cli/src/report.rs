use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// What a suite produced before it is wrapped into a [`RunReport`].
#[derive(Debug, Default)]
pub struct Outcome {
    pub assertions: Vec<Assertion>,
    /// Observations that are reported but not asserted.
    pub findings: Vec<String>,
    pub results: Map<String, Value>,
}

impl Outcome {
    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.assertions.push(Assertion {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn finding(&mut self, text: impl Into<String>) {
        self.findings.push(text.into());
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Result of `check`. Without `--timings` the JSON is a pure function of
/// the command line.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub suite: String,
    pub assertions: Vec<Assertion>,
    pub findings: Vec<String>,
    pub results: Map<String, Value>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl RunReport {
    pub fn new(command: Vec<String>, suite: &str, outcome: Outcome, elapsed: Option<Duration>) -> Self {
        let verdict = if outcome.assertions.iter().all(|a| a.passed) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        RunReport {
            command,
            suite: suite.to_string(),
            assertions: outcome.assertions,
            findings: outcome.findings,
            results: outcome.results,
            verdict,
            elapsed_ms: elapsed.map(|d| d.as_millis() as u64),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for a in &self.assertions {
            let tag = if a.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{tag}  {}: {}", a.name, a.detail);
        }
        for f in &self.findings {
            let _ = writeln!(out, "NOTE  {f}");
        }
        let verdict = if self.passed() { "pass" } else { "fail" };
        let _ = write!(out, "{}: {verdict}", self.suite);
        if let Some(ms) = self.elapsed_ms {
            let _ = write!(out, " ({ms} ms)");
        }
        out
    }
}
