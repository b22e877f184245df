//! Verification reports.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::tensor::Witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotAsserted,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportItem {
    pub id: String,
    pub description: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl ReportItem {
    pub fn pass(id: impl Into<String>, description: impl Into<String>) -> ReportItem {
        ReportItem {
            id: id.into(),
            description: description.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(id: impl Into<String>, description: impl Into<String>, witness: impl Into<String>) -> ReportItem {
        ReportItem {
            id: id.into(),
            description: description.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
        }
    }

    pub fn not_asserted(id: impl Into<String>, description: impl Into<String>, reason: impl Into<String>) -> ReportItem {
        ReportItem {
            id: id.into(),
            description: description.into(),
            status: Status::NotAsserted,
            witness: Some(reason.into()),
        }
    }

    pub fn error(id: impl Into<String>, description: impl Into<String>, message: impl Into<String>) -> ReportItem {
        ReportItem {
            id: id.into(),
            description: description.into(),
            status: Status::Error,
            witness: Some(message.into()),
        }
    }

    /// Turns the outcome of an equality check into an item.
    pub fn from_check(id: &str, description: &str, outcome: Result<Option<Witness>>) -> ReportItem {
        match outcome {
            Ok(None) => ReportItem::pass(id, description),
            Ok(Some(w)) => ReportItem::fail(id, description, w.to_string()),
            Err(e) => ReportItem::error(id, description, e.to_string()),
        }
    }

    pub fn from_bool(id: &str, description: &str, ok: bool, witness: impl FnOnce() -> String) -> ReportItem {
        if ok {
            ReportItem::pass(id, description)
        } else {
            ReportItem::fail(id, description, witness())
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub not_asserted: usize,
    pub error: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timestamp: Option<String>,
    pub items: Vec<ReportItem>,
    pub summary: Summary,
}

impl Report {
    pub fn new(scenario: impl Into<String>) -> Report {
        Report {
            scenario: scenario.into(),
            timestamp: None,
            items: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, item: ReportItem) {
        self.items.push(item);
        self.refresh();
    }

    pub fn extend(&mut self, items: impl IntoIterator<Item = ReportItem>) {
        self.items.extend(items);
        self.refresh();
    }

    fn refresh(&mut self) {
        let mut s = Summary::default();
        for it in &self.items {
            match it.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::NotAsserted => s.not_asserted += 1,
                Status::Error => s.error += 1,
            }
        }
        self.summary = s;
    }

    pub fn item(&self, id: &str) -> Option<&ReportItem> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn all_ok(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "scenario: {}", self.scenario).unwrap();
        if let Some(t) = &self.timestamp {
            writeln!(out, "timestamp: {t}").unwrap();
        }
        for it in &self.items {
            let tag = match it.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::NotAsserted => "N/A ",
                Status::Error => "ERR ",
            };
            writeln!(out, "[{tag}] {:<44} {}", it.id, it.description).unwrap();
            if let Some(w) = &it.witness {
                if it.status != Status::Pass {
                    writeln!(out, "       {w}").unwrap();
                }
            }
        }
        writeln!(
            out,
            "summary: {} pass, {} fail, {} not asserted, {} error",
            self.summary.pass, self.summary.fail, self.summary.not_asserted, self.summary.error
        )
        .unwrap();
        out
    }
}
