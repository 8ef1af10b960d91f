use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::grid::Grid;
use crate::oracle::SizeGuard;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    VerifiedOnGrid,
    Refuted,
    SkippedOutOfGuard,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::VerifiedOnGrid => "verified-on-grid",
            Status::Refuted => "refuted",
            Status::SkippedOutOfGuard => "skipped-out-of-guard",
        }
    }
}

/// A grid point where the two sides differ. Integers are kept as decimal
/// strings so nothing is rounded on serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub point: String,
    pub formula: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditVerdict {
    pub identity: String,
    pub claim: String,
    pub grid_points_checked: u64,
    pub grid_points_skipped: u64,
    pub status: Status,
    pub failing_points: u64,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub tool_version: String,
    pub guard: SizeGuard,
    pub grid: Grid,
    pub conventions: Vec<String>,
    pub verdicts: Vec<AuditVerdict>,
}

/// Values assigned to terms that the audited formulas leave undefined.
pub const CONVENTIONS: &[&str] = &[
    "0^0 = 1",
    "{l 0}_0 = 1 if l = 0 else 0; {0 k}_0 = 1; cumulative Stirling with negative lower index = 0",
    "B0(n,k,0) = (k-1)^n; B(n,k,0) = (k-1)! {n k-1}; B(n,k,r) = 0 for k < 1",
    "binomial with negative upper index = 0",
    "B_(n,r) in r-Bell identities counts partitions of {1..n} with 1..r in distinct blocks",
];

impl AuditReport {
    pub fn new(grid: Grid, guard: SizeGuard, verdicts: Vec<AuditVerdict>) -> Self {
        AuditReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            guard,
            grid,
            conventions: CONVENTIONS.iter().map(|s| s.to_string()).collect(),
            verdicts,
        }
    }

    pub fn verdict(&self, id: &str) -> Option<&AuditVerdict> {
        self.verdicts.iter().find(|v| v.identity == id)
    }

    pub fn any_refuted(&self) -> bool {
        self.verdicts.iter().any(|v| v.status == Status::Refuted)
    }

    /// Line-oriented text form, one block per verdict.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "mixed-stirling audit {}", self.tool_version);
        let _ = writeln!(out, "guard: {}", self.guard);
        let _ = writeln!(out, "grid: {}", self.grid);
        for c in &self.conventions {
            let _ = writeln!(out, "convention: {c}");
        }
        for v in &self.verdicts {
            let _ = writeln!(out);
            let _ = writeln!(out, "[{}]", v.identity);
            let _ = writeln!(out, "claim: {}", v.claim);
            let _ = writeln!(out, "points: {}", v.grid_points_checked);
            let _ = writeln!(out, "skipped: {}", v.grid_points_skipped);
            let _ = writeln!(out, "status: {}", v.status.as_str());
            let _ = writeln!(out, "failing: {}", v.failing_points);
            for cx in &v.counterexamples {
                let _ = writeln!(
                    out,
                    "counterexample: {} formula={} oracle={}",
                    cx.point, cx.formula, cx.oracle
                );
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per identity.
    pub fn summary(&self) -> String {
        let width = self.verdicts.iter().map(|v| v.identity.len()).max().unwrap_or(0);
        let mut out = String::new();
        for v in &self.verdicts {
            let _ = writeln!(
                out,
                "{:<width$}  {:<20}  checked={} skipped={} failing={}",
                v.identity,
                v.status.as_str(),
                v.grid_points_checked,
                v.grid_points_skipped,
                v.failing_points,
            );
        }
        out
    }
}
