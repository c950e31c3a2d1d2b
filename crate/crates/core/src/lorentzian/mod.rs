//! M-convex supports, exact Lorentzian checks and multivariable refinements
//! of the Alexander polynomial.

mod check;
mod refinement;
mod scan;
mod support;

use thiserror::Error;

pub use check::{is_lorentzian, quadratic_inertia, LorentzianReport, LorentzianWitness};
pub use refinement::{
    braid_seifert_matrix, hypertrees, refinement_validate, seifert_alexander, seifert_signature,
    BraidSeifertBuilder, HypertreeBuilder, Refinement, RefinementBuilder, RefinementCheck,
};
pub use scan::{
    alternating_three_braids, three_braid_nonlorentzian_scan, ScanRow, SCAN_MAX_CROSSINGS,
};
pub use support::{is_m_convex, ExchangeWitness, SupportSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LorentzianError {
    #[error("empty support")]
    Empty,
    #[error("terms have different total degrees")]
    NotHomogeneous,
    #[error("exponent vector has arity {found}, expected {expected}")]
    Arity { expected: usize, found: usize },
    #[error("expected degree {expected}, found {found}")]
    Degree { expected: u32, found: u32 },
    #[error("{0}")]
    Unsupported(&'static str),
    #[error("crossing budget {budget} exceeds the limit {max}")]
    Budget { budget: usize, max: usize },
}
