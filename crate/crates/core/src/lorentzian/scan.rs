use num_traits::One;
use serde::Serialize;

use crate::diagram::{braid_closure, BraidWord};

use super::check::is_lorentzian;
use super::refinement::{BraidSeifertBuilder, RefinementBuilder};
use super::LorentzianError;

/// Largest crossing budget accepted by the 3-braid scan.
pub const SCAN_MAX_CROSSINGS: usize = 14;

/// Alternating 3-braids `s1^a1 s2^-b1 ... s1^ak s2^-bk` with all exponents
/// positive and at most `budget` letters, one per cyclic rotation of the
/// block sequence, in order of length and then block sequence.
pub fn alternating_three_braids(budget: usize) -> Vec<BraidWord> {
    fn blocks(total: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
        if total == 0 {
            if !cur.is_empty() && cur.len().is_multiple_of(2) {
                out.push(cur.clone());
            }
            return;
        }
        for a in 1..=total {
            cur.push(a);
            blocks(total - a, out, cur);
            cur.pop();
        }
    }
    let mut words = Vec::new();
    for len in 2..=budget {
        let mut all = Vec::new();
        blocks(len, &mut all, &mut Vec::new());
        for seq in all {
            // Rotations by whole (s1, s2) pairs give conjugate braids.
            let k = seq.len();
            let canonical = (0..k).step_by(2).all(|r| {
                let rot: Vec<usize> = seq[r..].iter().chain(&seq[..r]).copied().collect();
                seq <= rot
            });
            if !canonical {
                continue;
            }
            let word: Vec<i32> = seq
                .iter()
                .enumerate()
                .flat_map(|(i, &n)| std::iter::repeat_n(if i % 2 == 0 { 1 } else { -2 }, n))
                .collect();
            words.push(BraidWord::new(3, word).expect("valid 3-braid"));
        }
    }
    words
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub word: String,
    pub is_connected_sum: bool,
    pub is_lorentzian: bool,
    pub witness: Option<String>,
    /// Every coefficient of the refinement equals one.
    pub unit_coefficients: bool,
}

impl ScanRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{};{};{};{}",
            self.word,
            self.is_connected_sum,
            self.is_lorentzian,
            self.witness.as_deref().unwrap_or("")
        )
    }
}

/// Builds the Seifert-form refinement of each closure, normalizes it
/// (`sum c_a x^a / a!`, scaled to integers) and tests it for the Lorentzian
/// property. A word with a single `s1` block and a single `s2` block closes
/// to a connected sum of two `(2, n)` torus links.
pub fn three_braid_nonlorentzian_scan(budget: usize) -> Result<Vec<ScanRow>, LorentzianError> {
    if budget > SCAN_MAX_CROSSINGS {
        return Err(LorentzianError::Budget {
            budget,
            max: SCAN_MAX_CROSSINGS,
        });
    }
    alternating_three_braids(budget)
        .into_iter()
        .map(|b| {
            let d =
                braid_closure(&b).map_err(|_| LorentzianError::Unsupported("closure failed"))?;
            let r = BraidSeifertBuilder.build(&d, Some(&b))?;
            let report = is_lorentzian(&r.poly.normalized())?;
            let unit_coefficients = r.poly.terms().all(|(_, c)| c.is_one());
            let blocks = b
                .word()
                .windows(2)
                .filter(|w| w[0].signum() != w[1].signum())
                .count()
                + 1;
            Ok(ScanRow {
                word: b.to_string(),
                is_connected_sum: blocks == 2,
                is_lorentzian: report.holds,
                witness: report.witness.map(|w| w.to_string()),
                unit_coefficients,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_rotations_once() {
        let words: Vec<String> = alternating_three_braids(4)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            words,
            [
                "3 ; 1 -2",
                "3 ; 1 -2 -2",
                "3 ; 1 1 -2",
                "3 ; 1 -2 1 -2",
                "3 ; 1 -2 -2 -2",
                "3 ; 1 1 -2 -2",
                "3 ; 1 1 1 -2"
            ]
        );
        assert!(alternating_three_braids(0).is_empty());
    }

    #[test]
    fn connected_sums_are_lorentzian() {
        let rows = three_braid_nonlorentzian_scan(7).unwrap();
        for r in rows.iter().filter(|r| r.is_connected_sum) {
            assert!(r.is_lorentzian, "{}", r.word);
            assert!(r.unit_coefficients, "{}", r.word);
        }
        for r in rows.iter().filter(|r| !r.is_connected_sum) {
            assert!(!r.unit_coefficients, "{}", r.word);
        }
        let borromean = rows
            .iter()
            .find(|r| r.word == "3 ; 1 -2 1 -2 1 -2")
            .unwrap();
        assert!(!borromean.is_lorentzian);
        assert!(borromean.witness.as_deref().unwrap().starts_with("Hessian"));
    }

    #[test]
    fn budget_limits() {
        assert!(three_braid_nonlorentzian_scan(0).unwrap().is_empty());
        assert!(matches!(
            three_braid_nonlorentzian_scan(15),
            Err(LorentzianError::Budget { .. })
        ));
        assert_eq!(
            ScanRow {
                word: "w".into(),
                is_connected_sum: true,
                is_lorentzian: false,
                witness: None,
                unit_coefficients: true
            }
            .csv_line(),
            "w;true;false;"
        );
    }
}
