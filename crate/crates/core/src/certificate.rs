//! Pass/fail records with witnesses.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::exactfield::ParamSummary;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Passed, but something the caller should look at was noticed.
    Flagged,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub check_id: String,
    /// The claim being checked, in words.
    pub statement: String,
    pub status: Status,
    /// One entry per recorded sub-check: `{ "ok": bool, "detail": … }`.
    pub witness: Map<String, Value>,
    pub elapsed_ms: u64,
    pub params: Option<ParamSummary>,
    pub seed: u64,
}

impl Certificate {
    pub fn new(check_id: impl Into<String>, statement: impl Into<String>) -> Self {
        Self {
            check_id: check_id.into(),
            statement: statement.into(),
            status: Status::Pass,
            witness: Map::new(),
            elapsed_ms: 0,
            params: None,
            seed: 0,
        }
    }

    /// Record a sub-check; a false `ok` fails the certificate.
    pub fn require(&mut self, label: &str, ok: bool, detail: impl Into<Value>) -> bool {
        let mut entry = Map::new();
        entry.insert("ok".into(), Value::Bool(ok));
        entry.insert("detail".into(), detail.into());
        self.witness.insert(label.to_string(), Value::Object(entry));
        if !ok {
            self.status = Status::Fail;
        }
        ok
    }

    /// Record an observation that does not affect pass/fail.
    pub fn note(&mut self, label: &str, detail: impl Into<Value>) {
        self.witness.insert(label.to_string(), detail.into());
    }

    /// Mark a passing certificate as flagged, keeping the reason.
    pub fn flag(&mut self, label: &str, detail: impl Into<Value>) {
        self.note(label, detail);
        if self.status == Status::Pass {
            self.status = Status::Flagged;
        }
    }

    /// Fold another certificate's sub-checks in under a prefix.
    pub fn absorb(&mut self, prefix: &str, other: &Certificate) {
        let ok = other.status != Status::Fail;
        let mut entry = Map::new();
        entry.insert("ok".into(), Value::Bool(ok));
        entry.insert("detail".into(), Value::Object(other.witness.clone()));
        self.witness.insert(prefix.to_string(), Value::Object(entry));
        match other.status {
            Status::Fail => self.status = Status::Fail,
            Status::Flagged if self.status == Status::Pass => self.status = Status::Flagged,
            _ => {}
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}
