use num_bigint::BigInt;
use serde::Serialize;

use crate::invariants::SignatureValue;
use crate::polyalg::CoeffSeq;

use super::ConjectureError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TrapezoidFailure {
    /// 1-based index `i` of the first failing inequality.
    pub index: usize,
    /// 1 for the monotonicity clause, 2 for the plateau clause.
    pub clause: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TrapezoidReport {
    pub holds: bool,
    pub failure: Option<TrapezoidFailure>,
    /// 1-based plateau start, present for strictly trapezoidal sequences.
    pub i0: Option<usize>,
    pub sl: Option<usize>,
}

/// 1-based peak indices `(m, n + 1 - m)` with `m = ceil(n / 2)`. The two
/// coincide for odd `n` and are the central pair for even `n`.
pub fn peak_indices(n: usize) -> (usize, usize) {
    let m = n.div_ceil(2);
    (m, n + 1 - m)
}

/// Fox's trapezoidal property of `(a_1, ..., a_n)`:
/// (1) `a_1 <= ... <= a_m` and `a_{m'} >= ... >= a_n`;
/// (2) an equality `a_i = a_{i+1}` with `i < m` forces `a_i = ... = a_m`,
/// and symmetrically on the descending side.
pub fn is_trapezoidal(c: &CoeffSeq) -> Result<TrapezoidReport, ConjectureError> {
    if c.is_empty() {
        return Err(ConjectureError::Empty);
    }
    let a = |i: usize| c.get(i - 1);
    let n = c.len();
    let (m, m2) = peak_indices(n);
    let fail = |index, clause| {
        Ok(TrapezoidReport {
            holds: false,
            failure: Some(TrapezoidFailure { index, clause }),
            i0: None,
            sl: None,
        })
    };
    for i in 1..m {
        if a(i) > a(i + 1) {
            return fail(i, 1);
        }
    }
    for i in m2..n {
        if a(i) < a(i + 1) {
            return fail(i, 1);
        }
    }
    for i in 1..m {
        if a(i) == a(i + 1) && (i + 1..=m).any(|j| a(j) != a(i)) {
            return fail(i, 2);
        }
    }
    for i in (m2 + 1..=n).rev() {
        if a(i) == a(i - 1) && (m2..i).any(|j| a(j) != a(i)) {
            return fail(i - 1, 2);
        }
    }
    let (i0, sl) = match stable_length(c) {
        Ok(s) => (Some(s.i0), Some(s.sl)),
        Err(_) => (None, None),
    };
    Ok(TrapezoidReport {
        holds: true,
        failure: None,
        i0,
        sl,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StableLength {
    /// 1-based plateau start.
    pub i0: usize,
    pub sl: usize,
}

/// Plateau data of `a_0 < ... < a_{i0-1} = ... = a_{l-i0} > ... > a_{l-1}`.
pub fn stable_length(c: &CoeffSeq) -> Result<StableLength, ConjectureError> {
    let l = c.len();
    if l == 0 {
        return Err(ConjectureError::Empty);
    }
    let a = c.coeffs();
    let rise = (0..l - 1).find(|&j| a[j] >= a[j + 1]).unwrap_or(l - 1);
    let i0 = rise + 1;
    let end = l - i0;
    if end < rise {
        return Err(ConjectureError::Shape { index: end + 1 });
    }
    if let Some(j) = (rise..end).find(|&j| a[j] != a[j + 1]) {
        return Err(ConjectureError::Shape { index: j + 1 });
    }
    if let Some(j) = (end..l - 1).find(|&j| a[j] <= a[j + 1]) {
        return Err(ConjectureError::Shape { index: j + 1 });
    }
    Ok(StableLength {
        i0,
        sl: l - 2 * (i0 - 1),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HmReport {
    pub holds: bool,
    pub sharp: bool,
    /// `floor((|sigma| + 1) / 2)`.
    pub lhs: u64,
    /// `floor(sl / 2)`.
    pub rhs: u64,
}

/// The Hirasawa-Murasugi inequality `floor((|sigma|+1)/2) >= floor(sl/2)`.
pub fn hm_check(c: &CoeffSeq, s: &SignatureValue) -> Result<HmReport, ConjectureError> {
    let sl = stable_length(c)?.sl as u64;
    let lhs = s.sigma.unsigned_abs().div_ceil(2);
    let rhs = sl / 2;
    Ok(HmReport {
        holds: lhs >= rhs,
        sharp: lhs == rhs,
        lhs,
        rhs,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConcordanceBound {
    pub holds: bool,
    pub sl: usize,
    /// Length of the representative's coefficient sequence, `deg + 1`.
    pub bound: usize,
}

/// Checks `sl(c) <= deg(rep) + 1` for a supplied algebraically concordant
/// representative `rep`.
pub fn concordance_bound_check(
    c: &CoeffSeq,
    rep: &CoeffSeq,
) -> Result<ConcordanceBound, ConjectureError> {
    let sl = stable_length(c)?.sl;
    if rep.is_empty() {
        return Err(ConjectureError::Empty);
    }
    Ok(ConcordanceBound {
        holds: sl <= rep.len(),
        sl,
        bound: rep.len(),
    })
}

/// Number of leading inequalities `a_i <= a_{i+1}` that hold before the
/// first failure, read from both ends toward the peak. At most `m - 1`.
pub fn leading_inequalities(c: &CoeffSeq) -> usize {
    let a: &[BigInt] = c.coeffs();
    let n = a.len();
    let (m, _) = peak_indices(n);
    let mut k = 0;
    while k + 1 < m && a[k] <= a[k + 1] && a[n - 1 - k] <= a[n - 2 - k] {
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> CoeffSeq {
        CoeffSeq::from_magnitudes(v.iter().copied())
    }

    fn sig(s: i64) -> SignatureValue {
        SignatureValue {
            sigma: s,
            convention: "test",
        }
    }

    #[test]
    fn trapezoid_examples() {
        assert!(is_trapezoidal(&seq(&[1, 3, 1])).unwrap().holds);
        let r = is_trapezoidal(&seq(&[1, 2, 2, 3, 3, 2, 2, 1])).unwrap();
        assert_eq!(
            r.failure,
            Some(TrapezoidFailure {
                index: 2,
                clause: 2
            })
        );
        let r = is_trapezoidal(&seq(&[1, 2, 1, 3, 1])).unwrap();
        assert_eq!(r.failure.map(|f| f.clause), Some(1));
        assert!(is_trapezoidal(&seq(&[])).is_err());
    }

    #[test]
    fn plateau_reaching_middle_is_fine() {
        let r = is_trapezoidal(&seq(&[1, 2, 2, 2, 2, 1])).unwrap();
        assert!(r.holds);
        assert_eq!((r.i0, r.sl), (Some(2), Some(4)));
    }

    #[test]
    fn stable_length_examples() {
        assert_eq!(
            stable_length(&seq(&[1, 3, 1])).unwrap(),
            StableLength { i0: 2, sl: 1 }
        );
        assert_eq!(
            stable_length(&seq(&[1, 1, 1])).unwrap(),
            StableLength { i0: 1, sl: 3 }
        );
        assert_eq!(
            stable_length(&seq(&[1, 3, 3, 1])).unwrap(),
            StableLength { i0: 2, sl: 2 }
        );
        assert_eq!(
            stable_length(&seq(&[1])).unwrap(),
            StableLength { i0: 1, sl: 1 }
        );
        assert!(matches!(
            stable_length(&seq(&[1, 2, 2, 3, 3, 2, 2, 1])),
            Err(ConjectureError::Shape { .. })
        ));
        assert!(matches!(
            stable_length(&seq(&[1, 2, 3, 2])),
            Err(ConjectureError::Shape { .. })
        ));
    }

    #[test]
    fn hm_examples() {
        let t = hm_check(&seq(&[1, 1, 1]), &sig(-2)).unwrap();
        assert_eq!(
            t,
            HmReport {
                holds: true,
                sharp: true,
                lhs: 1,
                rhs: 1
            }
        );
        let f = hm_check(&seq(&[1, 3, 1]), &sig(0)).unwrap();
        assert_eq!(
            f,
            HmReport {
                holds: true,
                sharp: true,
                lhs: 0,
                rhs: 0
            }
        );
        let t25 = hm_check(&seq(&[1, 1, 1, 1, 1]), &sig(-4)).unwrap();
        assert_eq!(
            t25,
            HmReport {
                holds: true,
                sharp: true,
                lhs: 2,
                rhs: 2
            }
        );
        let bad = hm_check(&seq(&[1, 1, 1, 1, 1]), &sig(0)).unwrap();
        assert!(!bad.holds);
    }

    #[test]
    fn concordance_examples() {
        assert!(
            concordance_bound_check(&seq(&[1, 1, 1]), &seq(&[1, 1, 1]))
                .unwrap()
                .holds
        );
        assert!(
            concordance_bound_check(&seq(&[1, 3, 1]), &seq(&[1, 3, 1]))
                .unwrap()
                .holds
        );
        let r = concordance_bound_check(&seq(&[1, 1, 1, 1, 1]), &seq(&[1, 1, 1])).unwrap();
        assert_eq!(
            r,
            ConcordanceBound {
                holds: false,
                sl: 5,
                bound: 3
            }
        );
    }

    #[test]
    fn leading_inequality_count() {
        assert_eq!(leading_inequalities(&seq(&[1, 2, 3, 4, 3, 2, 1])), 3);
        assert_eq!(leading_inequalities(&seq(&[2, 1, 3, 1, 2])), 0);
        assert_eq!(leading_inequalities(&seq(&[1, 3, 2, 4, 2, 3, 1])), 1);
        assert_eq!(leading_inequalities(&seq(&[5])), 0);
    }
}
