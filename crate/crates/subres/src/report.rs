//! Machine-readable verification records.

use serde::Serialize;

use crate::error::Error;
use crate::poly::Poly;
use crate::rat::Rat;

/// Outcome of one identity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Identity checked by a report: 1 relates the nested and recursive
/// families, 2 relates the nested and reduced families, 0 is the
/// proportionality check against remainder-sequence elements.
pub const THEOREM_NESTED_RECURSIVE: u8 = 1;
pub const THEOREM_NESTED_REDUCED: u8 = 2;
pub const CHECK_PROPORTIONALITY: u8 = 0;

/// Result of checking one identity instance at a stage/index pair.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub theorem: u8,
    pub k: usize,
    pub j: usize,
    /// Predicted constant relating the two sides (or the observed
    /// proportionality multiple).
    pub factor: Rat,
    pub status: Status,
    /// Machine-readable reason code for skips, empty otherwise.
    pub reason: String,
    /// Coefficient-wise difference of the two sides when the check fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Poly>,
}

impl VerifyReport {
    pub fn pass(theorem: u8, k: usize, j: usize, factor: Rat) -> Self {
        VerifyReport {
            theorem,
            k,
            j,
            factor,
            status: Status::Pass,
            reason: String::new(),
            witness: None,
        }
    }

    pub fn fail(theorem: u8, k: usize, j: usize, factor: Rat, witness: Poly) -> Self {
        VerifyReport {
            theorem,
            k,
            j,
            factor,
            status: Status::Fail,
            reason: "EXACT_MISMATCH".into(),
            witness: Some(witness),
        }
    }

    pub fn skipped(theorem: u8, k: usize, j: usize, reason: &str) -> Self {
        VerifyReport {
            theorem,
            k,
            j,
            factor: Rat::zero(),
            status: Status::Skipped,
            reason: reason.to_string(),
            witness: None,
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Maps an error to the skip reason code reported by the suites.
pub fn reason_code(e: &Error) -> &'static str {
    match e {
        Error::SingularU { .. } => "SINGULAR_U",
        Error::VanishingLeading { .. } => "VANISHING_LEADING",
        Error::BadChain(_) => "BAD_CHAIN",
        Error::LayoutUnresolved(_) => "LAYOUT_UNRESOLVED",
        _ => "ERROR",
    }
}

/// Skip code for instances excluded because a remainder sequence is
/// defective where the check needs it normal.
pub const DEFECTIVE_PRS: &str = "DEFECTIVE_PRS";
