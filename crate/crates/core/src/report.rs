//! Pass/fail bookkeeping shared by the verification routines.

use serde::{Deserialize, Serialize};

/// One evaluated instance of an identity or claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub family: String,
    pub n: i64,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(family: impl Into<String>, n: i64, holds: bool) -> Self {
        Check {
            family: family.into(),
            n,
            holds,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    /// Free-text findings, e.g. where a printed formula differs from what
    /// the computation gives.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn family_holds(&self, family: &str) -> bool {
        self.checks
            .iter()
            .filter(|c| c.family == family)
            .all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.holds).collect()
    }

    pub fn count(&self, family: &str) -> usize {
        self.checks.iter().filter(|c| c.family == family).count()
    }
}
