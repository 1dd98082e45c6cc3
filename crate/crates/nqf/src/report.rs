use serde::Serialize;
use serde_json::Value;

use crate::config::Instance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one check on one instance. Serialized as a single JSON line.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    /// Truncation degree, `null` for the full algebra.
    pub max_degree: Option<usize>,
    pub status: Status,
    pub seed: u64,
    /// Short description of what was covered.
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    /// Only present when timings are requested; keeps default output reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl CheckReport {
    pub fn new(check: &str, inst: Instance, max_degree: Option<usize>, seed: u64) -> Self {
        CheckReport {
            check: check.into(),
            instance: inst.to_string(),
            max_degree,
            status: Status::Pass,
            seed,
            detail: String::new(),
            counterexample: None,
            wall_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        let trunc = self.max_degree.map_or("full".to_string(), |d| format!("deg<={d}"));
        let mut s = format!("{status} {:<13} {} ({trunc}) {}", self.check, self.instance, self.detail);
        if let Some(ms) = self.wall_ms {
            s.push_str(&format!(" [{ms} ms]"));
        }
        if let Some(c) = &self.counterexample {
            s.push_str(&format!("\n    counterexample: {c}"));
        }
        s
    }
}
