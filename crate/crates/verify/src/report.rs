//! Check reports with counterexample witnesses.

use std::time::Instant;

use serde::Serialize;

/// Outcome of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Neither confirmed nor refuted (for example every certificate trial failed).
    Inconclusive,
}

/// Location and value of a failing entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub degree: i64,
    pub row: String,
    pub col: String,
    pub value: String,
}

/// Result of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub millis: u64,
}

impl CheckReport {
    pub fn pass(id: impl Into<String>) -> Self {
        CheckReport { id: id.into(), status: Status::Pass, witness: None, detail: None, millis: 0 }
    }

    /// A failure; the witness is mandatory.
    pub fn fail(id: impl Into<String>, witness: Witness) -> Self {
        CheckReport { id: id.into(), status: Status::Fail, witness: Some(witness), detail: None, millis: 0 }
    }

    /// A failure without a matrix location; the detail becomes the witness value.
    pub fn fail_with(id: impl Into<String>, detail: impl Into<String>) -> Self {
        let detail = detail.into();
        let witness = Witness { degree: 0, row: String::new(), col: String::new(), value: detail.clone() };
        CheckReport { id: id.into(), status: Status::Fail, witness: Some(witness), detail: Some(detail), millis: 0 }
    }

    pub fn inconclusive(id: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckReport { id: id.into(), status: Status::Inconclusive, witness: None, detail: Some(detail.into()), millis: 0 }
    }

    /// Pass or fail from a boolean, with a detail message either way.
    pub fn from_bool(id: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        let detail = detail.into();
        let mut r = if ok { Self::pass(id) } else { Self::fail_with(id, detail.clone()) };
        r.detail = Some(detail);
        r
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Run `f` and record its wall time in the report.
pub fn timed(f: impl FnOnce() -> CheckReport) -> CheckReport {
    let start = Instant::now();
    let mut r = f();
    r.millis = start.elapsed().as_millis() as u64;
    r
}

/// Reports as a JSON array sorted by id.
pub fn reports_to_json(reports: &[CheckReport]) -> serde_json::Value {
    let mut sorted = reports.to_vec();
    sorted.sort_by(|a, b| a.id.cmp(&b.id));
    serde_json::to_value(sorted).expect("reports serialize")
}
