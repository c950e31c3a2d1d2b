use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use super::LaurentPoly;

/// Exponent vector of a monomial.
pub type Exponent = Vec<u32>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MultiPolyError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("exponent vector has arity {found}, expected {expected}")]
    Arity { expected: usize, found: usize },
}

/// Polynomial in `k` variables with integer coefficients, stored sparsely.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I, T>(arity: usize, terms: I) -> Result<Self, MultiPolyError>
    where
        I: IntoIterator<Item = (Exponent, T)>,
        T: Into<BigInt>,
    {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            p.add_term(e, c.into())?;
        }
        Ok(p)
    }

    /// Sum of `x^alpha` over the given exponents, all coefficients one.
    pub fn indicator<I: IntoIterator<Item = Exponent>>(
        arity: usize,
        support: I,
    ) -> Result<Self, MultiPolyError> {
        Self::from_terms(arity, support.into_iter().map(|e| (e, 1)))
    }

    pub fn add_term(&mut self, e: Exponent, c: BigInt) -> Result<(), MultiPolyError> {
        if e.len() != self.arity {
            return Err(MultiPolyError::Arity {
                expected: self.arity,
                found: e.len(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> Vec<Exponent> {
        self.terms.keys().cloned().collect()
    }

    /// Common total degree of all terms, or `None` when terms disagree
    /// (or the polynomial is zero).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[var] -= 1;
            out.terms.insert(f, c * BigInt::from(e[var]));
        }
        out
    }

    /// Hessian of a quadratic form: `H_ii = 2 c(2 e_i)`, `H_ij = c(e_i + e_j)`.
    /// Terms of other degrees are ignored.
    pub fn quadratic_hessian(&self) -> Vec<Vec<BigInt>> {
        let k = self.arity;
        let mut h = vec![vec![BigInt::zero(); k]; k];
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() != 2 {
                continue;
            }
            let nz: Vec<usize> = (0..k).filter(|&i| e[i] > 0).collect();
            match nz.as_slice() {
                [i] => h[*i][*i] = c * BigInt::from(2),
                [i, j] => {
                    h[*i][*j] = c.clone();
                    h[*j][*i] = c.clone();
                }
                _ => unreachable!(),
            }
        }
        h
    }

    /// Positive multiple of `sum c_a x^a / a!`, scaled by the lcm of the
    /// factorial denominators so that it stays integral.
    pub fn normalized(&self) -> Self {
        let fact = |e: &Exponent| e.iter().fold(BigInt::one(), |acc, &k| acc * factorial(k));
        let l = self
            .terms
            .keys()
            .fold(BigInt::one(), |acc, e| acc.lcm(&fact(e)));
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c * (&l / fact(e))))
            .collect();
        Self {
            arity: self.arity,
            terms,
        }
    }

    /// Specialization `x_j -> t^{w_j}`.
    pub fn specialize(&self, weights: &[i64]) -> LaurentPoly {
        assert_eq!(weights.len(), self.arity);
        let mut acc = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let deg: i64 = e.iter().zip(weights).map(|(&a, &w)| a as i64 * w).sum();
            acc += &LaurentPoly::mono(c.clone(), deg);
        }
        acc
    }

    /// Applies a permutation of variables: variable `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f = vec![0; self.arity];
                for (i, &a) in e.iter().enumerate() {
                    f[perm[i]] = a;
                }
                (f, c.clone())
            })
            .collect();
        Self {
            arity: self.arity,
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = Self::zero(self.arity);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, c * d).unwrap();
            }
        }
        out
    }
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Text format: one term per line, `coefficient : e1 e2 ... ek`.
/// Blank lines and lines starting with `#` are skipped.
impl FromStr for MultiPoly {
    type Err = MultiPolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut arity = None;
        let mut poly = None::<MultiPoly>;
        for (i, raw) in s.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| MultiPolyError::Parse {
                line: i + 1,
                msg: msg.to_string(),
            };
            let (c, e) = line
                .split_once(':')
                .ok_or_else(|| err("expected `coefficient : exponents`"))?;
            let c: BigInt = c.trim().parse().map_err(|_| err("bad coefficient"))?;
            let e: Exponent = e
                .split_whitespace()
                .map(|x| x.parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| err("bad exponent"))?;
            let k = *arity.get_or_insert(e.len());
            if e.len() != k {
                return Err(err(&format!("expected {k} exponents, found {}", e.len())));
            }
            poly.get_or_insert_with(|| MultiPoly::zero(k))
                .add_term(e, c)?;
        }
        poly.ok_or(MultiPolyError::Parse {
            line: 0,
            msg: "no terms".into(),
        })
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in &self.terms {
            writeln!(
                f,
                "{c} : {}",
                e.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("{c}*{e:?}"))
            .collect();
        write!(f, "MultiPoly[{}]({})", self.arity, terms.join(" + "))
    }
}
