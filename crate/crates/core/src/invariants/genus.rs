use num_bigint::BigInt;
use serde::Serialize;

use crate::diagram::{seifert_circles, LinkDiagram};
use crate::polyalg::CoeffSeq;

use super::InvariantError;

/// Genus from the Alexander span and from the Seifert surface of the
/// diagram. The two agree on reduced alternating diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenusInfo {
    pub from_span: u64,
    pub from_seifert: u64,
}

impl GenusInfo {
    pub fn agrees(&self) -> bool {
        self.from_span == self.from_seifert
    }
}

pub fn genus_alternating(d: &LinkDiagram, c: &CoeffSeq) -> Result<GenusInfo, InvariantError> {
    let mu = d.component_count();
    let span = c.len() - 1;
    if span + 1 < mu || !(span + 1 - mu).is_multiple_of(2) {
        return Err(InvariantError::GenusParity {
            span,
            components: mu,
        });
    }
    let from_span = ((span + 1 - mu) / 2) as u64;
    let s = seifert_circles(d).circle_count();
    // Euler characteristic of the Seifert surface is s - c.
    let twice = 2 + d.crossing_count() as i64 - mu as i64 - s as i64;
    debug_assert!(twice >= 0 && twice % 2 == 0);
    Ok(GenusInfo {
        from_span,
        from_seifert: (twice / 2) as u64,
    })
}

/// `|Delta(-1)|`, the sum of the coefficient magnitudes.
pub fn link_determinant(c: &CoeffSeq) -> BigInt {
    c.determinant()
}
