//! Identity registry and grid runner.
//!
//! Every counting claim in the registry is evaluated on each point of a
//! parameter grid and compared against an independent reference, usually the
//! enumeration oracle. Points the oracle refuses (size guard) are skipped and
//! counted. The resulting [`AuditReport`] is deterministic for fixed inputs.

mod grid;
mod registry;
mod report;

pub use grid::{Grid, Point, Span};
pub use registry::{identity_ids, IDENTITY_MANIFEST};
pub use report::{AuditReport, AuditVerdict, Counterexample, Status};

use crate::error::{Error, Result};
use crate::oracle::SizeGuard;
use crate::Signed;

/// Maximum counterexamples kept per identity.
pub const COUNTEREXAMPLE_CAP: usize = 10;

/// Both sides of an identity at one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub identity: &'static str,
    pub point: Point,
    pub formula: Signed,
    pub reference: Signed,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.formula == self.reference
    }
}

/// Runs every registered identity over `grid`.
pub fn run_audit(grid: &Grid, guard: &SizeGuard) -> AuditReport {
    let mut ctx = registry::Context::new(*guard);
    let verdicts = registry::REGISTRY
        .iter()
        .map(|identity| identity.verdict(grid, &mut ctx))
        .collect();
    AuditReport::new(grid.clone(), *guard, verdicts)
}

/// Runs only the listed identities, in registry order.
pub fn run_audit_selected(grid: &Grid, guard: &SizeGuard, ids: &[String]) -> Result<AuditReport> {
    for id in ids {
        registry::lookup(id)?;
    }
    let mut ctx = registry::Context::new(*guard);
    let verdicts = registry::REGISTRY
        .iter()
        .filter(|identity| ids.iter().any(|id| id == identity.id))
        .map(|identity| identity.verdict(grid, &mut ctx))
        .collect();
    Ok(AuditReport::new(grid.clone(), *guard, verdicts))
}

/// Evaluates one identity at one point.
pub fn check_identity(id: &str, point: &Point, guard: &SizeGuard) -> Result<Check> {
    let identity = registry::lookup(id)?;
    let mut ctx = registry::Context::new(*guard);
    let (formula, reference) = identity.evaluate(point, &mut ctx)?;
    Ok(Check {
        identity: identity.id,
        point: point.clone(),
        formula,
        reference,
    })
}

pub(crate) fn unknown(id: &str) -> Error {
    Error::UnknownIdentity(id.to_string())
}
