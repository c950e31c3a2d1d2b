//! Coefficient-shape checks for Alexander polynomials of alternating links.
//!
//! Sequences are stored 0-based as `(a_0, ..., a_{l-1})`. The trapezoidal
//! check reports 1-based indices `(a_1, ..., a_n)`, matching how the
//! property is usually stated; the plateau start `i0` is 1-based as well.

mod foxmilnor;
mod ratios;
mod trapezoid;

use serde::Serialize;
use thiserror::Error;

use crate::polyalg::CoeffSeq;

pub use foxmilnor::{fox_milnor, verify_factor, ConcordanceCert, FOX_MILNOR_MAX_LEN};
pub use ratios::{ratio_scan, RatioStats};
pub use trapezoid::{
    concordance_bound_check, hm_check, is_trapezoidal, leading_inequalities, peak_indices,
    stable_length, ConcordanceBound, HmReport, StableLength, TrapezoidFailure, TrapezoidReport,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConjectureError {
    #[error("empty coefficient sequence")]
    Empty,
    /// Not strictly increasing, then constant, then strictly decreasing.
    /// `index` is the 0-based position where the shape breaks.
    #[error("sequence is not strict-trapezoidal (breaks at index {index})")]
    Shape { index: usize },
    #[error("sequence of length {len} exceeds the search limit {max}")]
    DegreeBound { len: usize, max: usize },
}

/// Counterexample dump for a single census entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub line: usize,
    pub name: String,
    pub sequence: CoeffSeq,
    pub check: &'static str,
    pub clause: Option<u8>,
    pub index: Option<usize>,
    pub detail: String,
}

impl Violation {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("violation serializes")
    }
}
