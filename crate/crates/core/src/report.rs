use alloc::string::String;
use alloc::vec::Vec;

/// Outcome of a verified claim.
///
/// `Evidence` marks a claim about an infinite object for which only a
/// bounded necessary condition was checked and found to hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Status {
    Pass,
    Fail,
    Evidence,
}

/// Record of one claim checked over a finite set of cases.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CheckReport {
    pub claim_id: String,
    /// Statement of the claim being checked.
    pub paper_anchor: String,
    pub bound: usize,
    pub cases: u64,
    pub violations: Vec<String>,
    pub status: Status,
}

/// Violation lists are truncated to this many entries; `cases` and the
/// status still reflect every case.
pub const MAX_LISTED_VIOLATIONS: usize = 32;

impl CheckReport {
    pub fn new(claim_id: &str, anchor: &str, bound: usize) -> Self {
        CheckReport {
            claim_id: claim_id.into(),
            paper_anchor: anchor.into(),
            bound,
            cases: 0,
            violations: Vec::new(),
            status: Status::Pass,
        }
    }

    /// Reports a holding claim as `Evidence` rather than `Pass`.
    pub fn as_evidence(mut self) -> Self {
        if self.status == Status::Pass {
            self.status = Status::Evidence;
        }
        self
    }

    pub fn case(&mut self) {
        self.cases += 1;
    }

    pub fn cases(&mut self, n: u64) {
        self.cases += n;
    }

    /// Records one case, and a violation when `ok` is false.
    pub fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violate(describe());
        }
    }

    pub fn violate(&mut self, what: String) {
        self.status = Status::Fail;
        if self.violations.len() < MAX_LISTED_VIOLATIONS {
            self.violations.push(what);
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}
