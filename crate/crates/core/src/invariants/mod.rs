//! Alexander polynomial (Wirtinger matrix, reduced Burau, Conway skein),
//! signature, determinant and genus.

mod alexander;
mod genus;
mod signature;
mod skein;

use thiserror::Error;

use crate::diagram::DiagramError;
use crate::polyalg::NormalizeError;

pub use alexander::{
    alexander_burau, alexander_burau_poly, alexander_pd, alexander_pd_poly, burau_matrix,
};
pub use genus::{genus_alternating, link_determinant, GenusInfo};
pub use signature::{goeritz_data, signature, signature_with_color, GoeritzData, SignatureValue};
pub use skein::{conway_at, conway_skein, conway_to_alexander, SKEIN_MAX_CROSSINGS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("split link: the Alexander polynomial vanishes")]
    Split,
    #[error("zero Alexander determinant on a non-split input")]
    ZeroDeterminant,
    #[error("Burau determinant is not divisible by 1 + t + ... + t^(n-1)")]
    BurauDivision,
    #[error("skein recursion limited to {max} crossings, got {crossings}")]
    SkeinBudget { crossings: usize, max: usize },
    #[error("genus parity violation: span {span} with {components} components")]
    GenusParity { span: usize, components: usize },
}

impl From<NormalizeError> for InvariantError {
    fn from(_: NormalizeError) -> Self {
        InvariantError::ZeroDeterminant
    }
}
