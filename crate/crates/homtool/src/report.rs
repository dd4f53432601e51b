//! Run reports. The JSON form depends only on the command line and the seed;
//! wall time is reported on stderr so that reruns stay byte-identical.

use serde::Serialize;
use serde_json::Value;

use crate::suites::CaseResult;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub seed: u64,
    pub result: Value,
    pub cases: Vec<CaseResult>,
    pub passed: usize,
    pub failed: usize,
}

impl RunReport {
    pub fn new(command: String, seed: u64, result: Value, cases: Vec<CaseResult>) -> RunReport {
        let passed = cases.iter().filter(|c| c.passed).count();
        let failed = cases.len() - passed;
        RunReport { command, seed, result, cases, passed, failed }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.result {
            Value::Null => {}
            Value::String(s) => out.push_str(&format!("{s}\n")),
            Value::Number(n) => out.push_str(&format!("{n}\n")),
            other => out.push_str(&format!("{}\n", serde_json::to_string_pretty(other).expect("value"))),
        }
        for c in &self.cases {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark} {} ({} checked, {} failed)\n", c.name, c.checked, c.failed));
            for f in &c.failures {
                out.push_str(&format!("    {f}\n"));
            }
        }
        if !self.cases.is_empty() {
            out.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn case(passed: bool) -> CaseResult {
        CaseResult { name: "c".into(), passed, checked: 1, failed: u64::from(!passed), failures: vec![] }
    }

    #[test]
    fn counts_and_text() {
        let r = RunReport::new("verify x".into(), 0, Value::Null, vec![case(true), case(false)]);
        assert_eq!((r.passed, r.failed), (1, 1));
        assert!(!r.all_passed());
        assert!(r.to_text().contains("FAIL c"));
        assert_eq!(r.to_json(), r.clone().to_json());
    }
}
