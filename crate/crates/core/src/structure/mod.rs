//! Twist regions and Murasugi-sum decompositions of alternating diagrams.

mod murasugi;
mod twist;

use thiserror::Error;

pub use murasugi::{decompose_murasugi, sums_below, Decomposition, Piece, SumEdge};
pub use twist::{
    guaranteed_prefix, guaranteed_prefix_from_mt, is_twist_concentrated, twist_regions,
    TwistConcentration, TwistProfile, TwistRegion,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("diagram is not reduced")]
    NotReduced,
    #[error("internal error: {0}")]
    Internal(&'static str),
}
