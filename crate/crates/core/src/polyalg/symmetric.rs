use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is empty")]
    Empty,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
}

/// Square symmetric matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymRatMatrix {
    rows: Vec<Vec<BigRational>>,
}

/// Counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn dim(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }
}

impl SymRatMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::NotSquare);
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(MatrixError::NotSymmetric(i, j));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        Self::new(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| BigRational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn from_big_integers(rows: &[Vec<BigInt>]) -> Result<Self, MatrixError> {
        Self::new(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|x| BigRational::from_integer(x.clone()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    /// Coefficients `c_0..c_n` of `det(x I - A)` by Faddeev-LeVerrier.
    pub fn char_poly(&self) -> Vec<BigRational> {
        let n = self.dim();
        let a = &self.rows;
        let mut c = vec![BigRational::zero(); n + 1];
        c[n] = BigRational::from_integer(1.into());
        let mut m = vec![vec![BigRational::zero(); n]; n];
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = vec![vec![BigRational::zero(); n]; n];
            for i in 0..n {
                for j in 0..n {
                    let mut s = BigRational::zero();
                    for l in 0..n {
                        if !a[i][l].is_zero() && !m[l][j].is_zero() {
                            s += &a[i][l] * &m[l][j];
                        }
                    }
                    if i == j {
                        s += &c[n - k + 1];
                    }
                    next[i][j] = s;
                }
            }
            m = next;
            let mut tr = BigRational::zero();
            for i in 0..n {
                for l in 0..n {
                    tr += &a[i][l] * &m[l][i];
                }
            }
            c[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
        }
        c
    }
}

/// Inertia by exact symmetric Gaussian reduction (congruence transforms only).
pub fn inertia_by_pivoting(m: &SymRatMatrix) -> Inertia {
    let mut a = m.rows.clone();
    let mut n = a.len();
    let mut res = Inertia {
        n_plus: 0,
        n_minus: 0,
        n_zero: 0,
    };
    while n > 0 {
        // Bring a nonzero diagonal entry to position 0 if one exists.
        if a[0][0].is_zero() {
            if let Some(j) = (1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(0, j);
                for row in a.iter_mut() {
                    row.swap(0, j);
                }
            } else if let Some(j) = (1..n).find(|&j| !a[0][j].is_zero()) {
                // Row/column 0 += row/column j makes the pivot 2 a[0][j].
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[0][k] += v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][0] += v;
                }
            } else {
                res.n_zero += 1;
                a.remove(0);
                for row in a.iter_mut() {
                    row.remove(0);
                }
                n -= 1;
                continue;
            }
        }
        let p = a[0][0].clone();
        if p.is_positive() {
            res.n_plus += 1;
        } else {
            res.n_minus += 1;
        }
        let mut b = vec![vec![BigRational::zero(); n - 1]; n - 1];
        for i in 1..n {
            for j in 1..n {
                b[i - 1][j - 1] = &a[i][j] - &a[i][0] * &a[0][j] / &p;
            }
        }
        a = b;
        n -= 1;
    }
    res
}

/// Inertia from the characteristic polynomial by Descartes' rule of signs,
/// which is exact because a symmetric matrix has only real eigenvalues.
pub fn inertia_by_char_poly(m: &SymRatMatrix) -> Inertia {
    let c = m.char_poly();
    let n_zero = c.iter().take_while(|x| x.is_zero()).count();
    let rest = &c[n_zero..];
    let variations = |seq: &mut dyn Iterator<Item = bool>| {
        let mut count = 0;
        let mut last = None;
        for s in seq {
            if let Some(l) = last {
                if l != s {
                    count += 1;
                }
            }
            last = Some(s);
        }
        count
    };
    let n_plus = variations(
        &mut rest
            .iter()
            .filter(|x| !x.is_zero())
            .map(|x| x.is_positive()),
    );
    let n_minus = variations(
        &mut rest
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| x.is_positive() ^ ((n_zero + i) % 2 == 1)),
    );
    Inertia {
        n_plus,
        n_minus,
        n_zero,
    }
}

/// Exact inertia of a symmetric rational matrix.
pub fn signature_exact(m: &SymRatMatrix) -> Inertia {
    inertia_by_pivoting(m)
}
