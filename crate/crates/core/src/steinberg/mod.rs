//! Steinberg Leibniz algebras `stl_n(R)`, their cocycles and the sharp extensions.

mod calculus;
mod cocycle;
mod hat;
mod model;
mod report;
mod symbolic;
mod theta;

use serde::Serialize;

pub use calculus::verify_calculus;
pub use cocycle::{psi3, psi4, sign, CocycleTarget, Descriptor};
pub use hat::{build_hat, hat_over, verify_sharp_relations, HatModel};
pub use model::{build_stl, check_defining_relations, SteinbergModel};
pub use report::{hl2_report, hl2_report_for, predicted_hl2, Hl2Report};
pub use symbolic::{
    verify_cocycle, verify_cocycle_corrupted, verify_cocycle_with, CocycleReport, SymbolicStl,
};
pub use theta::{act, group_g, Quadruple, ThetaMap};

/// Outcome of a batch of identity checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub passed: bool,
    pub cases: usize,
    /// first failing case, if any
    pub witness: Option<String>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            passed: true,
            cases: 0,
            witness: None,
        }
    }

    /// Records one case; only the first failure is kept as the witness.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.passed {
            self.passed = false;
            self.witness = Some(describe());
        }
    }
}

/// A named group of [`CheckReport`]s.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub subject: String,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn new(subject: impl Into<String>, checks: Vec<CheckReport>) -> Self {
        SuiteReport {
            subject: subject.into(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    /// First failing check and its witness.
    pub fn first_failure(&self) -> Option<String> {
        self.checks
            .iter()
            .find(|c| !c.passed)
            .map(|c| format!("{}: {}", c.check, c.witness.clone().unwrap_or_default()))
    }
}
