use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::diagram::{seifert_circles, LinkDiagram, Sign};
use crate::polyalg::Rational;

use super::StructureError;

/// Maximal chain of crossings joined by bigon faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistRegion {
    /// Crossing indices in chain order.
    pub crossings: Vec<usize>,
    /// Both strands run the same way through every bigon of the chain.
    pub coherent: bool,
    pub sign: Sign,
}

impl TwistRegion {
    pub fn size(&self) -> usize {
        self.crossings.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistProfile {
    pub regions: Vec<TwistRegion>,
    pub mt: usize,
}

fn check_preconditions(d: &LinkDiagram) -> Result<(), StructureError> {
    if !d.is_alternating() {
        return Err(StructureError::NotAlternating);
    }
    if !d.is_reduced() {
        return Err(StructureError::NotReduced);
    }
    Ok(())
}

pub fn twist_regions(d: &LinkDiagram) -> Result<TwistProfile, StructureError> {
    check_preconditions(d)?;
    let c = d.crossing_count();
    // Bigon faces with their two crossings and whether their arcs are parallel.
    let mut arcs_of_face = vec![Vec::new(); d.faces().len()];
    for a in 0..d.arc_count() {
        for f in d.arc_faces(a) {
            arcs_of_face[f].push(a);
        }
    }
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); c];
    for (f, face) in d.faces().iter().enumerate() {
        if face.degree() != 2 {
            continue;
        }
        let (x, y) = (face.corners[0].crossing, face.corners[1].crossing);
        let [a, b] = arcs_of_face[f][..] else {
            unreachable!("a bigon has two sides")
        };
        let parallel = d.tail(a).crossing == d.tail(b).crossing;
        adj[x].push((y, parallel));
        adj[y].push((x, parallel));
    }

    let mut seen = vec![false; c];
    let mut regions = Vec::new();
    for s in 0..c {
        if seen[s] {
            continue;
        }
        // Collect the region, then walk it from an end of the chain.
        let mut members = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < members.len() {
            for &(y, _) in &adj[members[i]] {
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        let start = members
            .iter()
            .copied()
            .find(|&x| adj[x].len() < 2)
            .unwrap_or(members[0]);
        let mut chain = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while chain.len() < members.len() {
            let next = adj[cur]
                .iter()
                .map(|&(y, _)| y)
                .filter(|&y| y != prev && !chain.contains(&y))
                .min()
                .expect("bigon chain is a path or a cycle");
            chain.push(next);
            prev = cur;
            cur = next;
        }
        let coherent = members.iter().all(|&x| adj[x].iter().all(|&(_, p)| p));
        let sign = d.crossings()[start].sign();
        regions.push(TwistRegion {
            crossings: chain,
            coherent,
            sign,
        });
    }
    let mt = regions
        .iter()
        .filter(|r| r.coherent)
        .map(TwistRegion::size)
        .max()
        .unwrap_or(0);
    Ok(TwistProfile { regions, mt })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistConcentration {
    pub holds: bool,
    pub mt: usize,
    pub genus: u64,
    pub components: usize,
    /// `(MT - 3) - (g + |L|/2)`.
    pub margin: Rational,
}

/// Genus of the canonical Seifert surface of the diagram, which is the
/// genus of the link for reduced alternating diagrams.
fn diagram_genus(d: &LinkDiagram) -> u64 {
    let s = seifert_circles(d).circle_count() as i64;
    ((2 + d.crossing_count() as i64 - d.component_count() as i64 - s) / 2) as u64
}

pub fn is_twist_concentrated(d: &LinkDiagram) -> Result<TwistConcentration, StructureError> {
    let profile = twist_regions(d)?;
    let genus = diagram_genus(d);
    let components = d.component_count();
    let lhs = BigRational::from_integer(BigInt::from(profile.mt as i64 - 3));
    let rhs = BigRational::new(BigInt::from(2 * genus + components as u64), BigInt::from(2));
    let margin = lhs - rhs;
    Ok(TwistConcentration {
        holds: margin >= BigRational::from_integer(0.into()),
        mt: profile.mt,
        genus,
        components,
        margin: Rational(margin),
    })
}

/// Number of leading trapezoidal inequalities forced by the largest
/// coherent twist region: `max(MT - 3, 0)`.
pub fn guaranteed_prefix_from_mt(mt: usize) -> usize {
    mt.saturating_sub(3)
}

pub fn guaranteed_prefix(d: &LinkDiagram) -> Result<usize, StructureError> {
    Ok(guaranteed_prefix_from_mt(twist_regions(d)?.mt))
}
