use itertools::Itertools;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::polyalg::{signature_exact, Exponent, Inertia, MultiPoly, SymRatMatrix};

use super::support::{is_m_convex, ExchangeWitness, SupportSet};
use super::LorentzianError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LorentzianWitness {
    NegativeCoefficient {
        exponent: Exponent,
    },
    NotMConvex(ExchangeWitness),
    /// `d - 2` variable indices (0-based, non-decreasing) whose derivative
    /// has a Hessian with more than one positive eigenvalue.
    Hessian {
        chain: Vec<usize>,
        inertia: Inertia,
    },
}

impl std::fmt::Display for LorentzianWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::NegativeCoefficient { exponent } => {
                write!(f, "negative coefficient at {exponent:?}")
            }
            Self::NotMConvex(w) => write!(f, "support not M-convex: {w}"),
            Self::Hessian { chain, inertia } => write!(
                f,
                "Hessian after d/dx{chain:?} has inertia ({},{},{})",
                inertia.n_plus, inertia.n_minus, inertia.n_zero
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LorentzianReport {
    pub holds: bool,
    pub witness: Option<LorentzianWitness>,
    /// Number of derivative chains examined.
    pub chains_checked: usize,
}

fn hessian_inertia(q: &MultiPoly) -> Inertia {
    let h = q.quadratic_hessian();
    signature_exact(&SymRatMatrix::from_big_integers(&h).expect("Hessian is square and symmetric"))
}

/// Inertia of the Hessian of a quadratic form.
pub fn quadratic_inertia(q: &MultiPoly) -> Result<Inertia, LorentzianError> {
    match q.homogeneous_degree() {
        Some(2) => Ok(hessian_inertia(q)),
        Some(d) => Err(LorentzianError::Degree {
            expected: 2,
            found: d,
        }),
        None => Err(LorentzianError::NotHomogeneous),
    }
}

/// Exact Lorentzian test. Derivative chains are taken as multisets of
/// variables, checked in parallel; the reported witness is the first
/// failing chain in lexicographic order.
pub fn is_lorentzian(p: &MultiPoly) -> Result<LorentzianReport, LorentzianError> {
    if p.is_zero() {
        return Err(LorentzianError::Empty);
    }
    let d = p
        .homogeneous_degree()
        .ok_or(LorentzianError::NotHomogeneous)?;
    let fail = |w| {
        Ok(LorentzianReport {
            holds: false,
            witness: Some(w),
            chains_checked: 0,
        })
    };
    if let Some((e, _)) = p.terms().find(|(_, c)| c.is_negative()) {
        return fail(LorentzianWitness::NegativeCoefficient {
            exponent: e.clone(),
        });
    }
    if let Err(w) = is_m_convex(&SupportSet::new(p.support())?) {
        return fail(LorentzianWitness::NotMConvex(w));
    }
    if d < 2 {
        return Ok(LorentzianReport {
            holds: true,
            witness: None,
            chains_checked: 0,
        });
    }
    let chains: Vec<Vec<usize>> = (0..p.arity())
        .combinations_with_replacement(d as usize - 2)
        .collect();
    let bad = chains.par_iter().find_map_first(|chain| {
        let q = chain.iter().fold(p.clone(), |acc, &v| acc.derivative(v));
        let inertia = hessian_inertia(&q);
        (inertia.n_plus > 1).then(|| LorentzianWitness::Hessian {
            chain: chain.clone(),
            inertia,
        })
    });
    Ok(LorentzianReport {
        holds: bad.is_none(),
        witness: bad,
        chains_checked: chains.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(&[u32], i64)]) -> MultiPoly {
        let k = terms[0].0.len();
        MultiPoly::from_terms(k, terms.iter().map(|(e, c)| (e.to_vec(), *c))).unwrap()
    }

    #[test]
    fn e2_in_three_variables() {
        let e2 = poly(&[(&[1, 1, 0], 1), (&[1, 0, 1], 1), (&[0, 1, 1], 1)]);
        assert_eq!(
            quadratic_inertia(&e2).unwrap(),
            Inertia {
                n_plus: 1,
                n_minus: 2,
                n_zero: 0
            }
        );
        let r = is_lorentzian(&e2).unwrap();
        assert!(r.holds);
        assert_eq!(r.chains_checked, 1);
    }

    #[test]
    fn sum_of_squares_fails() {
        let p = poly(&[(&[2, 0], 1), (&[0, 2], 1)]);
        let r = is_lorentzian(&p).unwrap();
        assert!(!r.holds);
        // The support {(2,0),(0,2)} already breaks the exchange axiom.
        assert!(matches!(r.witness, Some(LorentzianWitness::NotMConvex(_))));
        assert_eq!(
            quadratic_inertia(&p).unwrap(),
            Inertia {
                n_plus: 2,
                n_minus: 0,
                n_zero: 0
            }
        );
    }

    #[test]
    fn xy_is_lorentzian() {
        let p = poly(&[(&[1, 1], 1)]);
        assert_eq!(
            quadratic_inertia(&p).unwrap(),
            Inertia {
                n_plus: 1,
                n_minus: 1,
                n_zero: 0
            }
        );
        assert!(is_lorentzian(&p).unwrap().holds);
    }

    #[test]
    fn hessian_witness_on_cubic() {
        // Full support, but d/dx = 3x^2 + 6xy + 30y^2 is positive definite.
        let p = poly(&[(&[3, 0], 1), (&[2, 1], 3), (&[1, 2], 30), (&[0, 3], 1)]);
        let r = is_lorentzian(&p).unwrap();
        assert!(!r.holds);
        match r.witness {
            Some(LorentzianWitness::Hessian { chain, inertia }) => {
                assert_eq!(chain, vec![0]);
                assert_eq!(inertia.n_plus, 2);
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn errors() {
        let p = poly(&[(&[2, 0], 1), (&[0, 1], 1)]);
        assert_eq!(is_lorentzian(&p), Err(LorentzianError::NotHomogeneous));
        assert_eq!(
            is_lorentzian(&MultiPoly::zero(2)),
            Err(LorentzianError::Empty)
        );
        let neg = poly(&[(&[1, 1], -1)]);
        assert!(matches!(
            is_lorentzian(&neg).unwrap().witness,
            Some(LorentzianWitness::NegativeCoefficient { .. })
        ));
    }
}
