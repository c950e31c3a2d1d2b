use crate::diagram::{BraidWord, LinkDiagram, Sign};
use crate::polyalg::matrix::{identity, mat_mul};
use crate::polyalg::{det, normalize_alexander, CoeffSeq, LaurentPoly, PolyMatrix};

use super::InvariantError;

/// Alexander polynomial from the Wirtinger presentation, before
/// normalization.
pub fn alexander_pd_poly(d: &LinkDiagram) -> Result<LaurentPoly, InvariantError> {
    let c = d.crossing_count();
    // Wirtinger arcs start at under-out slots and run through over-passes.
    let mut wirt = vec![usize::MAX; d.arc_count()];
    let mut count = 0;
    for comp in d.components() {
        let Some(start) = comp.iter().position(|&a| d.tail(a).slot == 2) else {
            // A component that never passes under is split off.
            return Err(InvariantError::Split);
        };
        let mut cur = usize::MAX;
        for k in 0..comp.len() {
            let a = comp[(start + k) % comp.len()];
            if d.tail(a).slot == 2 {
                cur = count;
                count += 1;
            }
            wirt[a] = cur;
        }
    }
    debug_assert_eq!(count, c);

    let one_minus_t = LaurentPoly::new(0, [1, -1]);
    let mut m: PolyMatrix = vec![vec![LaurentPoly::zero(); c]; c];
    for (x, cr) in d.crossings().iter().enumerate() {
        let over = wirt[cr.arc(cr.over_in_slot())];
        let under_in = wirt[cr.arc(0)];
        let under_out = wirt[cr.arc(2)];
        let (w_in, w_out) = match cr.sign() {
            Sign::Positive => (LaurentPoly::t(), -LaurentPoly::one()),
            Sign::Negative => (-LaurentPoly::one(), LaurentPoly::t()),
        };
        m[x][over] += &one_minus_t;
        m[x][under_in] += &w_in;
        m[x][under_out] += &w_out;
    }
    let minor: PolyMatrix = m[..c - 1].iter().map(|r| r[..c - 1].to_vec()).collect();
    let p = det(&minor);
    if p.is_zero() {
        return Err(InvariantError::ZeroDeterminant);
    }
    Ok(p)
}

/// Normalized Alexander coefficients of a diagram (Wirtinger method).
pub fn alexander_pd(d: &LinkDiagram) -> Result<CoeffSeq, InvariantError> {
    Ok(normalize_alexander(&alexander_pd_poly(d)?)?)
}

/// Reduced Burau matrix of one letter. Generator `sigma_i` acts on the
/// `(n-1)`-dimensional block around row `i-1`.
pub fn burau_matrix(strands: usize, letter: i32) -> PolyMatrix {
    let dim = strands - 1;
    let k = letter.unsigned_abs() as usize - 1;
    let mut m = identity(dim);
    let inv_t = LaurentPoly::mono(1, -1);
    if letter > 0 {
        m[k][k] = LaurentPoly::mono(-1, 1);
        if k >= 1 {
            m[k - 1][k] = LaurentPoly::t();
        }
        if k + 1 < dim {
            m[k + 1][k] = LaurentPoly::one();
        }
    } else {
        m[k][k] = LaurentPoly::mono(-1, -1);
        if k >= 1 {
            m[k - 1][k] = LaurentPoly::one();
        }
        if k + 1 < dim {
            m[k + 1][k] = inv_t;
        }
    }
    m
}

/// `det(rho(b) - I) / (1 + t + ... + t^(n-1))`, before normalization.
pub fn alexander_burau_poly(b: &BraidWord) -> Result<LaurentPoly, InvariantError> {
    let raw = b.closure_raw();
    if raw.free_loops > 0 || !raw.is_connected() {
        return Err(InvariantError::Split);
    }
    let n = b.strands();
    let mut rho = identity(n - 1);
    for &letter in b.word() {
        rho = mat_mul(&rho, &burau_matrix(n, letter));
    }
    for (i, row) in rho.iter_mut().enumerate() {
        row[i] = &row[i] - &LaurentPoly::one();
    }
    let num = det(&rho);
    if num.is_zero() {
        return Err(InvariantError::ZeroDeterminant);
    }
    num.div_exact(&LaurentPoly::geometric(n))
        .ok_or(InvariantError::BurauDivision)
}

/// Normalized Alexander coefficients of a braid closure (Burau method).
pub fn alexander_burau(b: &BraidWord) -> Result<CoeffSeq, InvariantError> {
    Ok(normalize_alexander(&alexander_burau_poly(b)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, parse_braid, parse_pd};
    use crate::polyalg::det_cofactor;

    fn seq(v: &[i64]) -> CoeffSeq {
        CoeffSeq::from_magnitudes(v.iter().copied())
    }

    #[test]
    fn burau_examples() {
        assert_eq!(
            alexander_burau(&parse_braid("2 ; 1 1 1").unwrap()).unwrap(),
            seq(&[1, 1, 1])
        );
        assert_eq!(
            alexander_burau(&parse_braid("2 ; 1 1").unwrap()).unwrap(),
            seq(&[1, 1])
        );
        assert_eq!(
            alexander_burau(&parse_braid("3 ; 1 -2 1 -2").unwrap()).unwrap(),
            seq(&[1, 3, 1])
        );
    }

    #[test]
    fn burau_trefoil_numerator() {
        let b = parse_braid("2 ; 1 1 1").unwrap();
        let mut rho = burau_matrix(2, 1);
        for _ in 0..2 {
            rho = mat_mul(&rho, &burau_matrix(2, 1));
        }
        assert_eq!(rho[0][0], LaurentPoly::mono(-1, 3));
        assert_eq!(
            alexander_burau_poly(&b).unwrap(),
            LaurentPoly::new(0, [-1, 1, -1])
        );
    }

    #[test]
    fn burau_inverse_letters_cancel() {
        for n in 2..5 {
            for i in 1..n as i32 {
                let p = mat_mul(&burau_matrix(n, i), &burau_matrix(n, -i));
                assert_eq!(p, identity(n - 1));
            }
        }
    }

    #[test]
    fn sigma1_sigma2_minus_identity_matches_cofactor() {
        let mut m = mat_mul(&burau_matrix(3, 1), &burau_matrix(3, 2));
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = &row[i] - &LaurentPoly::one();
        }
        assert_eq!(det(&m), det_cofactor(&m));
        assert_eq!(crate::polyalg::det_bareiss(&m), det_cofactor(&m));
    }

    #[test]
    fn wirtinger_examples() {
        let t = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert_eq!(alexander_pd(&t).unwrap(), seq(&[1, 1, 1]));
        let f = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        assert_eq!(alexander_pd(&f).unwrap(), seq(&[1, 3, 1]));
        let h = braid_closure(&parse_braid("2 ; 1 1").unwrap()).unwrap();
        assert_eq!(alexander_pd(&h).unwrap(), seq(&[1, 1]));
    }

    #[test]
    fn wirtinger_matches_burau_on_small_braids() {
        for text in [
            "3 ; 1 -2 1 -2",
            "3 ; 1 1 -2 1 -2 -2",
            "4 ; 1 -2 3 1 -2 3",
            "3 ; 1 2 1 2",
            "2 ; 1 1 1 1",
        ] {
            let b = parse_braid(text).unwrap();
            let d = braid_closure(&b).unwrap();
            assert_eq!(
                alexander_pd(&d).unwrap(),
                alexander_burau(&b).unwrap(),
                "{text}"
            );
        }
    }

    #[test]
    fn kink_unknot() {
        let d = parse_pd("X(1,2,2,1)").unwrap();
        assert_eq!(alexander_pd(&d).unwrap(), seq(&[1]));
    }

    #[test]
    fn split_braid_is_rejected() {
        assert_eq!(
            alexander_burau(&parse_braid("3 ; 1 1").unwrap()),
            Err(InvariantError::Split)
        );
    }
}
