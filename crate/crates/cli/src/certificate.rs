use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "certificate-v1";

/// One asserted relation. `pass` is computed when the check is added and
/// never edited afterwards.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

/// A verified claim together with everything needed to re-check it.
///
/// Invariant: the verdict is pass iff every check passes. Evidence that is
/// recorded but not asserted lives in `records`.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub claim: String,
    pub anchor: String,
    pub field: String,
    pub seed: u64,
    pub cutoff: usize,
    pub inputs: Map<String, Value>,
    pub quantities: Map<String, Value>,
    pub records: Map<String, Value>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub timings_ms: BTreeMap<String, u64>,
    /// Extra preformatted lines for the table rendering only.
    pub table_lines: Vec<String>,
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

impl Certificate {
    pub fn new(claim: &str, anchor: &str, field: impl Into<String>, seed: u64, cutoff: usize) -> Self {
        Certificate {
            claim: claim.into(),
            anchor: anchor.into(),
            field: field.into(),
            seed,
            cutoff,
            inputs: Map::new(),
            quantities: Map::new(),
            records: Map::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            timings_ms: BTreeMap::new(),
            table_lines: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, v: impl Serialize) {
        self.inputs.insert(key.into(), to_value(v));
    }

    pub fn quantity(&mut self, key: &str, v: impl Serialize) {
        self.quantities.insert(key.into(), to_value(v));
    }

    /// Evidence that is reported but not part of the verdict.
    pub fn record(&mut self, key: &str, v: impl Serialize) {
        self.records.insert(key.into(), to_value(v));
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Asserts `actual == expected`.
    pub fn check_eq(&mut self, name: &str, expected: impl Serialize, actual: impl Serialize) -> bool {
        let (expected, actual) = (to_value(expected), to_value(actual));
        let pass = expected == actual;
        self.checks.push(Check { name: name.into(), expected, actual, pass });
        pass
    }

    /// Asserts a relation that is not plain equality; `expected` describes it.
    pub fn check(&mut self, name: &str, expected: impl Serialize, actual: impl Serialize, pass: bool) -> bool {
        self.checks.push(Check { name: name.into(), expected: to_value(expected), actual: to_value(actual), pass });
        pass
    }

    pub fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        *self.timings_ms.entry(phase.into()).or_default() += t.elapsed().as_millis() as u64;
        out
    }

    /// Pass iff at least one check was made and all of them hold.
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.to_json_without_timings();
        v["timings_ms"] = to_value(&self.timings_ms);
        v
    }

    /// The reproducible part: byte-identical for equal inputs and seed.
    pub fn to_json_without_timings(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "tool_version": env!("CARGO_PKG_VERSION"),
            "claim": self.claim,
            "anchor": self.anchor,
            "field": self.field,
            "seed": self.seed,
            "cutoff": self.cutoff,
            "inputs": self.inputs,
            "quantities": self.quantities,
            "records": self.records,
            "checks": self.checks,
            "verdict": self.verdict(),
            "first_failure": self.first_failure().map(|c| c.name.clone()),
            "notes": self.notes,
        })
    }

    pub fn render_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "claim    {}", self.claim);
        let _ = writeln!(s, "anchor   {}", self.anchor);
        let _ = writeln!(s, "field    {}   seed {}   cutoff {}", self.field, self.seed, self.cutoff);
        for (k, v) in &self.inputs {
            let _ = writeln!(s, "input    {k} = {}", compact(v));
        }
        for line in &self.table_lines {
            let _ = writeln!(s, "{line}");
        }
        for (k, v) in &self.quantities {
            if !self.table_lines.is_empty() && k == "report" {
                continue;
            }
            let _ = writeln!(s, "quantity {k} = {}", compact(v));
        }
        for (k, v) in &self.records {
            let _ = writeln!(s, "record   {k} = {}", compact(v));
        }
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        let _ = writeln!(s, "{:<width$}  {:<6}  expected / actual", "check", "result");
        for c in &self.checks {
            let _ = writeln!(
                s,
                "{:<width$}  {:<6}  {} / {}",
                c.name,
                if c.pass { "PASS" } else { "FAIL" },
                compact(&c.expected),
                compact(&c.actual)
            );
        }
        for n in &self.notes {
            let _ = writeln!(s, "note     {n}");
        }
        let _ = write!(s, "verdict  {}", self.verdict().to_uppercase());
        if let Some(c) = self.first_failure() {
            let _ = write!(s, " (first failure: {})", c.name);
        }
        s.push('\n');
        s
    }
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
    fn verdict_tracks_checks() {
        let mut c = Certificate::new("x", "y", "Q", 1, 20);
        assert!(!c.passed());
        assert!(c.check_eq("a", 2, 2));
        assert!(c.passed());
        assert!(!c.check_eq("b", 2, 3));
        c.check_eq("c", 1, 2);
        assert!(!c.passed());
        assert_eq!(c.first_failure().unwrap().name, "b");
        let v = c.to_json();
        assert_eq!(v["verdict"], "fail");
        assert_eq!(v["first_failure"], "b");
        assert_eq!(v["schema"], SCHEMA);
        assert!(c.render_table().contains("first failure: b"));
    }

    #[test]
    fn timings_are_excluded_from_reproducible_json() {
        let mut c = Certificate::new("x", "y", "Q", 1, 20);
        c.time("phase", || ());
        assert!(c.to_json().get("timings_ms").is_some());
        assert!(c.to_json_without_timings().get("timings_ms").is_none());
    }
}
