use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use super::DiskGrid;
use crate::numfmt::g17;

/// Outcome of one numerical check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub criterion: String,
    /// Always equal to `min_margin > 0`.
    pub passed: bool,
    /// Signed distance from the threshold at the worst sample.
    pub min_margin: f64,
    /// Where the worst sample was taken (a point of the disk).
    pub witness: Complex64,
    pub grid: DiskGrid,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    pub fn new(criterion: impl Into<String>, min_margin: f64, witness: Complex64, grid: DiskGrid) -> Self {
        Self {
            criterion: criterion.into(),
            passed: min_margin > 0.0,
            min_margin,
            witness,
            grid,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn rmax(&self) -> f64 {
        self.grid.r_max()
    }
}

/// `criterion=<id> passed=<bool> margin=<float> witness=<re>,<im> rmax=<float>`
impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion={} passed={} margin={} witness={},{} rmax={}",
            self.criterion,
            self.passed,
            g17(self.min_margin),
            g17(self.witness.re),
            g17(self.witness.im),
            g17(self.rmax())
        )
    }
}
