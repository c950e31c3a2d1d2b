use num_bigint::BigInt;
use serde::Serialize;

use crate::polyalg::{CoeffSeq, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioStats {
    /// Largest `a_i / a_{i+1}` below the peak.
    pub max_ascending: Option<Rational>,
    /// Largest `a_{i+1} / a_i` from the peak on.
    pub max_descending: Option<Rational>,
    pub log_concave: bool,
    /// First 0-based `i` with `a_i^2 < a_{i-1} a_{i+1}`.
    pub log_concavity_failure: Option<usize>,
}

/// Consecutive-coefficient ratios around the peak `p = floor((l-1)/2)`
/// (0-based), plus the log-concavity check. Entries must be positive.
pub fn ratio_scan(c: &CoeffSeq) -> RatioStats {
    let a: &[BigInt] = c.coeffs();
    let n = a.len();
    let p = n.saturating_sub(1) / 2;
    let ratio = |x: &BigInt, y: &BigInt| Rational::new(x.clone(), y.clone());
    let max_ascending = (0..p).map(|i| ratio(&a[i], &a[i + 1])).max();
    let max_descending = (p..n.saturating_sub(1))
        .map(|i| ratio(&a[i + 1], &a[i]))
        .max();
    let failure = (1..n.saturating_sub(1)).find(|&i| &a[i] * &a[i] < &a[i - 1] * &a[i + 1]);
    RatioStats {
        max_ascending,
        max_descending,
        log_concave: failure.is_none(),
        log_concavity_failure: failure,
    }
}
