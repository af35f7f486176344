//! Report types emitted by the verification and search commands.
//!
//! Reports serialize deterministically: struct fields in declaration
//! order, maps with sorted keys. Two runs of the same build differ only
//! in the `elapsed_ms` fields.

use serde::Serialize;

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
}

/// One sub-check of a verification claim.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub index: u32,
    pub name: String,
    pub passed: bool,
    pub evidence: serde_json::Value,
}

impl CheckResult {
    pub fn new(index: u32, name: &str, passed: bool, evidence: serde_json::Value) -> Self {
        Self {
            index,
            name: name.to_string(),
            passed,
            evidence,
        }
    }
}

/// Outcome of machine-checking one claim, with per-check evidence.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub claim: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failing: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn from_checks(claim: &str, checks: Vec<CheckResult>, elapsed_ms: u64) -> Self {
        let first_failing = checks.iter().find(|c| !c.passed).map(|c| c.index);
        Self {
            schema: REPORT_SCHEMA,
            claim: claim.to_string(),
            status: if first_failing.is_none() {
                Status::Verified
            } else {
                Status::Failed
            },
            first_failing,
            note: None,
            checks,
            elapsed_ms,
        }
    }

    pub fn verified(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    /// Human-readable rendering: one line per check.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "claim {}: {}\n",
            self.claim,
            match self.status {
                Status::Verified => "verified",
                Status::Failed => "FAILED",
            }
        ));
        for check in &self.checks {
            out.push_str(&format!(
                "  [{}] {} {}\n",
                if check.passed { "ok" } else { "FAIL" },
                check.index,
                check.name
            ));
        }
        if let Some(note) = &self.note {
            out.push_str(&format!("  note: {note}\n"));
        }
        out
    }
}

/// Result of the exhaustive minimal-vertex search for a target group.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub schema: u32,
    pub target: String,
    pub n_examined: usize,
    /// isomorphism classes examined per vertex count 1..=n_examined
    pub classes_examined: Vec<usize>,
    pub result: SearchOutcome,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found {
        n: usize,
        certificate_g6: String,
        aut_order: u64,
        generators: Vec<Vec<usize>>,
    },
    NotFoundUpTo {
        n: usize,
    },
}

impl SearchReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("target {}: ", self.target);
        match &self.result {
            SearchOutcome::Found {
                n,
                certificate_g6,
                aut_order,
                ..
            } => {
                out.push_str(&format!(
                    "minimal vertex count {n} (certificate {certificate_g6}, |Aut| = {aut_order})\n"
                ));
            }
            SearchOutcome::NotFoundUpTo { n } => {
                out.push_str(&format!("not realized by any graph on up to {n} vertices\n"));
            }
        }
        out.push_str(&format!(
            "  classes examined per n: {:?}\n",
            self.classes_examined
        ));
        out
    }
}

/// Sets every `elapsed_ms` field in a JSON report to zero; used to
/// compare reports across runs.
pub fn normalize_timing(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            for (key, v) in map.iter_mut() {
                if key == "elapsed_ms" {
                    *v = serde_json::json!(0);
                } else {
                    normalize_timing(v);
                }
            }
        }
        serde_json::Value::Array(items) => {
            for v in items {
                normalize_timing(v);
            }
        }
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn status_follows_checks() {
        let ok = VerificationReport::from_checks(
            "demo",
            vec![CheckResult::new(1, "a", true, json!({}))],
            3,
        );
        assert!(ok.verified());
        assert_eq!(ok.first_failing, None);

        let failed = VerificationReport::from_checks(
            "demo",
            vec![
                CheckResult::new(1, "a", true, json!({})),
                CheckResult::new(2, "b", false, json!({})),
                CheckResult::new(3, "c", false, json!({})),
            ],
            3,
        );
        assert!(!failed.verified());
        assert_eq!(failed.first_failing, Some(2));
    }

    #[test]
    fn timing_normalization() {
        let mut a = json!({"elapsed_ms": 5, "inner": [{"elapsed_ms": 7, "x": 1}]});
        let mut b = json!({"elapsed_ms": 9, "inner": [{"elapsed_ms": 2, "x": 1}]});
        normalize_timing(&mut a);
        normalize_timing(&mut b);
        assert_eq!(a, b);
    }
}
