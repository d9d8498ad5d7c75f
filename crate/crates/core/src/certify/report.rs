use serde::Serialize;

use super::engine::{FactorEvidence, Point, SignCertificate, Status};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportItem {
    pub name: String,
    pub status: Status,
    pub factors: Vec<FactorEvidence>,
    pub witness: Option<Point>,
    pub boxes: usize,
    pub depth: u32,
    pub notes: Vec<String>,
}

impl ReportItem {
    pub fn from_certificate(name: impl Into<String>, cert: SignCertificate) -> Self {
        Self {
            name: name.into(),
            status: cert.status,
            factors: cert.factors,
            witness: cert.witness,
            boxes: cert.boxes,
            depth: cert.depth,
            notes: cert.notes,
        }
    }

    /// An exact identity check: certified when it holds, failed otherwise.
    pub fn identity(name: impl Into<String>, holds: bool, notes: Vec<String>) -> Self {
        Self {
            name: name.into(),
            status: if holds { Status::Certified } else { Status::Failed },
            factors: Vec::new(),
            witness: None,
            boxes: 0,
            depth: 0,
            notes,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub status: Status,
    pub items: Vec<ReportItem>,
}

impl Report {
    pub fn new(items: Vec<ReportItem>) -> Self {
        Self {
            status: Status::combine(items.iter().map(|i| i.status)),
            items,
        }
    }

    pub fn concat(reports: impl IntoIterator<Item = Report>) -> Self {
        Self::new(reports.into_iter().flat_map(|r| r.items).collect())
    }

    pub fn item(&self, name: &str) -> Option<&ReportItem> {
        self.items.iter().find(|i| i.name == name)
    }

    /// Names of items that are not certified.
    pub fn problems(&self) -> Vec<&str> {
        self.items
            .iter()
            .filter(|i| i.status != Status::Certified)
            .map(|i| i.name.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}
