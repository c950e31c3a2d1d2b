use num_bigint::BigInt;
use serde::Serialize;

use crate::diagram::LinkDiagram;
use crate::polyalg::{signature_exact, SymRatMatrix};

use super::InvariantError;

/// Link signature. The convention makes the positive trefoil (closure of
/// `sigma_1^3`) have signature `-2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignatureValue {
    pub sigma: i64,
    pub convention: &'static str,
}

pub const CONVENTION: &str = "positive-trefoil=-2";

/// Goeritz matrix of the checkerboard surface built from one color class,
/// with its correction term. Rows are indexed by the faces of the other
/// color, which carry the first homology of the surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoeritzData {
    /// Unshaded faces, in the order used for rows (before deleting the first).
    pub faces: Vec<usize>,
    /// Full (unreduced) Goeritz matrix.
    pub matrix: Vec<Vec<BigInt>>,
    /// Sum of the incidence numbers over type II crossings.
    pub correction: i64,
}

/// Incidence number of a crossing for the surface of the given color:
/// `+1` or `-1` according to how the shaded corners sit against the
/// over-strand.
fn incidence(d: &LinkDiagram, x: usize, color: u8) -> (i64, usize) {
    let shaded_parity = if d.face_color(d.corner_face(x, 0)) == color {
        0
    } else {
        1
    };
    let eta = if shaded_parity == 0 { 1 } else { -1 };
    (eta, shaded_parity)
}

pub fn goeritz_data(d: &LinkDiagram, color: u8) -> GoeritzData {
    let faces: Vec<usize> = (0..d.faces().len())
        .filter(|&f| d.face_color(f) != color)
        .collect();
    let index = |f: usize| faces.iter().position(|&g| g == f).expect("unshaded face");
    let n = faces.len();
    let mut g = vec![vec![BigInt::from(0); n]; n];
    let mut correction = 0;
    for (x, cr) in d.crossings().iter().enumerate() {
        let (eta, parity) = incidence(d, x, color);
        let f1 = index(d.corner_face(x, parity + 1));
        let f2 = index(d.corner_face(x, (parity + 3) % 4));
        if f1 != f2 {
            g[f1][f2] -= eta;
            g[f2][f1] -= eta;
            g[f1][f1] += eta;
            g[f2][f2] += eta;
        }
        // Type II: the shaded corners are the ones the oriented smoothing joins.
        if parity == cr.merged_corner_parity() {
            correction += eta;
        }
    }
    GoeritzData {
        faces,
        matrix: g,
        correction,
    }
}

/// Gordon-Litherland signature from the surface of the given face color.
pub fn signature_with_color(d: &LinkDiagram, color: u8) -> i64 {
    let data = goeritz_data(d, color);
    let reduced: Vec<Vec<BigInt>> = data.matrix[1..].iter().map(|r| r[1..].to_vec()).collect();
    let sign = if reduced.is_empty() {
        0
    } else {
        signature_exact(
            &SymRatMatrix::from_big_integers(&reduced).expect("Goeritz matrix is symmetric"),
        )
        .signature()
    };
    sign - data.correction
}

pub fn signature(d: &LinkDiagram) -> Result<SignatureValue, InvariantError> {
    Ok(SignatureValue {
        sigma: signature_with_color(d, 0),
        convention: CONVENTION,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, parse_braid, parse_pd};

    fn sig(text: &str) -> i64 {
        signature(&braid_closure(&parse_braid(text).unwrap()).unwrap())
            .unwrap()
            .sigma
    }

    #[test]
    fn anchors() {
        assert_eq!(sig("2 ; 1 1 1"), -2);
        assert_eq!(sig("2 ; -1 -1 -1"), 2);
        assert_eq!(sig("3 ; 1 -2 1 -2"), 0);
        assert_eq!(sig("2 ; 1 1 1 1 1"), -4);
        assert_eq!(sig("2 ; 1 1"), -1);
    }

    #[test]
    fn colors_agree() {
        for text in [
            "2 ; 1 1 1",
            "3 ; 1 -2 1 -2",
            "3 ; 1 1 -2 1 -2 -2",
            "4 ; 1 -2 3 -2 1 3",
            "2 ; 1 1 1 1",
            "3 ; 1 2 1 2",
        ] {
            let d = braid_closure(&parse_braid(text).unwrap()).unwrap();
            assert_eq!(
                signature_with_color(&d, 0),
                signature_with_color(&d, 1),
                "{text}"
            );
        }
    }

    #[test]
    fn kink_has_zero_signature() {
        let d = parse_pd("X(1,2,2,1)").unwrap();
        assert_eq!(signature(&d).unwrap().sigma, 0);
        assert_eq!(signature(&d.mirror()).unwrap().sigma, 0);
    }
}
