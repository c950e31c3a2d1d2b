use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::polyalg::Exponent;

use super::LorentzianError;

/// Finite set of exponent vectors of a common arity and total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSet {
    arity: usize,
    degree: u32,
    points: BTreeSet<Exponent>,
}

impl SupportSet {
    pub fn new<I: IntoIterator<Item = Exponent>>(points: I) -> Result<Self, LorentzianError> {
        let points: BTreeSet<Exponent> = points.into_iter().collect();
        let first = points.iter().next().ok_or(LorentzianError::Empty)?;
        let arity = first.len();
        let degree: u32 = first.iter().sum();
        for p in &points {
            if p.len() != arity {
                return Err(LorentzianError::Arity {
                    expected: arity,
                    found: p.len(),
                });
            }
            if p.iter().sum::<u32>() != degree {
                return Err(LorentzianError::NotHomogeneous);
            }
        }
        Ok(Self {
            arity,
            degree,
            points,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, e: &[u32]) -> bool {
        self.points.contains(e)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Exponent> {
        self.points.iter()
    }
}

/// A failure of the exchange axiom: no `j` with `alpha_j < beta_j` makes
/// `alpha - e_i + e_j` a member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangeWitness {
    pub alpha: Exponent,
    pub beta: Exponent,
    /// 1-based coordinate.
    pub i: usize,
}

impl fmt::Display for ExchangeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Exponent| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(
            f,
            "alpha=({}) beta=({}) i={}",
            show(&self.alpha),
            show(&self.beta),
            self.i
        )
    }
}

/// Exhaustive check of the exchange axiom. Pairs are scanned in
/// lexicographic order, so the witness is deterministic.
pub fn is_m_convex(s: &SupportSet) -> Result<(), ExchangeWitness> {
    for alpha in s.points.iter().rev() {
        for beta in &s.points {
            for i in 0..s.arity {
                if alpha[i] <= beta[i] {
                    continue;
                }
                let exchanged = (0..s.arity).filter(|&j| alpha[j] < beta[j]).any(|j| {
                    let mut e = alpha.clone();
                    e[i] -= 1;
                    e[j] += 1;
                    s.points.contains(&e)
                });
                if !exchanged {
                    return Err(ExchangeWitness {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        i: i + 1,
                    });
                }
            }
        }
    }
    Ok(())
}
