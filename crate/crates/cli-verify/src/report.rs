use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::grid::{Check, Clamp};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One failing case with everything needed to run it again.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub inputs: BTreeMap<String, Value>,
    pub expected: Value,
    pub computed: Value,
    pub rerun: String,
}

/// The grid a check actually ran on.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSummary {
    pub params: BTreeMap<String, Value>,
    pub clamped: Vec<Clamp>,
    pub cases: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: Check,
    pub status: Status,
    pub grid: GridSummary,
    pub passed: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// What a check hands back before timing and status are attached.
#[derive(Debug, Default)]
pub(crate) struct Run {
    pub params: BTreeMap<String, Value>,
    pub clamped: Vec<Clamp>,
    pub notes: Vec<String>,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl Run {
    pub fn param(&mut self, key: &str, value: impl Serialize) {
        self.params.insert(
            key.to_string(),
            serde_json::to_value(value).unwrap_or(Value::Null),
        );
    }

    /// Records a batch of case outcomes in order.
    pub fn absorb(&mut self, outcomes: Vec<Option<Failure>>) {
        self.cases += outcomes.len();
        self.failures.extend(outcomes.into_iter().flatten());
    }

    pub fn into_report(self, check: Check, wall_ms: Option<u64>) -> VerificationReport {
        let status = if self.failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            check,
            status,
            passed: self.cases - self.failures.len(),
            grid: GridSummary {
                params: self.params,
                clamped: self.clamped,
                cases: self.cases,
            },
            failures: self.failures,
            notes: self.notes,
            wall_ms,
        }
    }
}

/// Builds a failure from `(key, value)` inputs.
pub(crate) fn failure(
    inputs: &[(&str, Value)],
    expected: Value,
    computed: Value,
    rerun: String,
) -> Failure {
    Failure {
        inputs: inputs
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
        expected,
        computed,
        rerun,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn status_follows_failures() {
        let mut run = Run::default();
        run.absorb(vec![None, None]);
        let r = run.into_report(Check::EtaCount, None);
        assert!(r.passed() && r.passed == 2);
        let mut run = Run::default();
        run.absorb(vec![
            None,
            Some(failure(&[("a", json!(1))], json!(2), json!(3), "x".into())),
        ]);
        let r = run.into_report(Check::EtaCount, Some(5));
        assert_eq!((r.status, r.passed, r.failures.len()), (Status::Fail, 1, 1));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], "fail");
        assert_eq!(v["failures"][0]["inputs"]["a"], 1);
    }
}
