use std::collections::BTreeMap;
use std::time::Instant;

use alphametric::classify::MetricProfile;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: u32 = 1;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 2;
pub const EXIT_CLASSIFICATION: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_NO_INPUT: u8 = 66;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    /// Alpha index computed by the classifier.
    Measured,
    /// Alpha index supplied on the command line.
    Asserted,
}

#[derive(Debug, Clone, Serialize)]
pub struct AlphaUsed {
    pub i: u32,
    pub basis: Basis,
}

#[derive(Debug, Clone, Serialize)]
pub struct Guarantee {
    pub name: String,
    pub statement: String,
    pub i: u32,
    pub basis: Basis,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputInfo {
    pub path: String,
    pub sha256: String,
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

/// The JSON document every invocation prints.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: Vec<String>,
    pub input: Option<InputInfo>,
    pub profile: Option<MetricProfile>,
    pub alpha: Option<AlphaUsed>,
    pub guarantees: Vec<Guarantee>,
    pub caveats: Vec<String>,
    pub result: Value,
    pub error: Option<ErrorInfo>,
    pub exit_code: u8,
    pub bfs_calls: u64,
    /// Wall-clock time per phase; the only nondeterministic field.
    pub timing_ms: BTreeMap<String, f64>,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            schema: SCHEMA,
            command,
            input: None,
            profile: None,
            alpha: None,
            guarantees: Vec::new(),
            caveats: Vec::new(),
            result: Value::Null,
            error: None,
            exit_code: EXIT_OK,
            bfs_calls: 0,
            timing_ms: BTreeMap::new(),
        }
    }

    pub fn time(&mut self, phase: &str, start: Instant) {
        let ms = start.elapsed().as_secs_f64() * 1e3;
        *self.timing_ms.entry(phase.to_string()).or_insert(0.0) += ms;
    }

    /// Records a guarantee under the alpha index in use; no-op when the
    /// index is unknown.
    pub fn guarantee(&mut self, name: &str, statement: impl FnOnce(u32) -> String) {
        if let Some(a) = &self.alpha {
            self.guarantees.push(Guarantee {
                name: name.to_string(),
                statement: statement(a.i),
                i: a.i,
                basis: a.basis,
            });
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
