use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use super::LaurentPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NormalizeError {
    #[error("the zero polynomial has no normalized coefficient sequence")]
    Zero,
}

/// Magnitudes `(a_0, ..., a_{l-1})` of a normalized Alexander polynomial,
/// stored 0-based, together with whether the original signs alternated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoeffSeq {
    coeffs: Vec<BigInt>,
    signs_alternate: bool,
}

impl CoeffSeq {
    /// Builds a sequence from magnitudes directly; the sign flag is set, as
    /// for the coefficient list of an alternating link.
    pub fn from_magnitudes<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self {
            coeffs: coeffs.into_iter().map(|c| c.into().abs()).collect(),
            signs_alternate: true,
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn signs_alternate(&self) -> bool {
        self.signs_alternate
    }

    pub fn all_positive(&self) -> bool {
        self.coeffs.iter().all(Signed::is_positive)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn reversed(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().rev().cloned().collect(),
            signs_alternate: self.signs_alternate,
        }
    }

    /// Re-embeds as `sum (-1)^i a_i t^i`.
    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::new(
            0,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 0 { a.clone() } else { -a }),
        )
    }

    /// Value of the alternating-sign polynomial at `t = -1`, i.e. `sum a_i`.
    pub fn determinant(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn to_i64s(&self) -> Vec<i64> {
        self.coeffs
            .iter()
            .map(|c| i64::try_from(c).expect("coefficient exceeds i64"))
            .collect()
    }
}

/// Multiplies by a unit `±t^k` so that the lowest exponent is zero and the
/// constant term is positive; returns the coefficient magnitudes.
pub fn normalize_alexander(p: &LaurentPoly) -> Result<CoeffSeq, NormalizeError> {
    if p.is_zero() {
        return Err(NormalizeError::Zero);
    }
    let c = p.coeffs();
    let first_positive = c[0].is_positive();
    let signs_alternate = c
        .iter()
        .enumerate()
        .all(|(i, a)| !a.is_zero() && (a.is_positive() == first_positive) == (i % 2 == 0));
    Ok(CoeffSeq {
        coeffs: c.iter().map(Signed::abs).collect(),
        signs_alternate,
    })
}

impl fmt::Display for CoeffSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for CoeffSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoeffSeq{self}")?;
        if !self.signs_alternate {
            write!(f, "[non-alternating signs]")?;
        }
        Ok(())
    }
}

impl Serialize for CoeffSeq {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}
