//! JSON report assembled from individual check records.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use trigcenter::report::{CheckOutcome, Status, Witness};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub params: BTreeMap<String, String>,
    /// `pass` iff the outcome matched the expectation.
    pub status: Status,
    /// Raw outcome of the check before the expectation is applied.
    pub outcome: Status,
    pub expect: Expect,
    pub detail: String,
    pub witness: Option<Witness>,
    pub wall_ms: u64,
}

impl CheckRecord {
    pub fn new(id: String, params: BTreeMap<String, String>, expect: Expect, out: CheckOutcome, wall_ms: u64) -> Self {
        let matched = matches!(
            (out.status, expect),
            (Status::Pass, Expect::Pass) | (Status::Fail, Expect::Fail) | (Status::Skipped, _)
        );
        let status = match out.status {
            Status::Skipped => Status::Skipped,
            _ if matched => Status::Pass,
            _ => Status::Fail,
        };
        let witness = out.witness.or_else(|| {
            (status == Status::Fail).then(|| Witness::message("check passed but a failure was expected"))
        });
        Self {
            id,
            params,
            status,
            outcome: out.status,
            expect,
            detail: out.detail,
            witness,
            wall_ms,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        Self {
            schema_version: SCHEMA_VERSION,
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}
