//! Exact arithmetic: Laurent polynomials, sparse multivariate polynomials,
//! determinants over `Z[t, t^{-1}]` and inertia of symmetric rational matrices.

mod coeffseq;
mod laurent;
pub mod matrix;
mod multi;
mod rational;
mod symmetric;

pub use coeffseq::{normalize_alexander, CoeffSeq, NormalizeError};
pub use laurent::LaurentPoly;
pub use matrix::{det, det_bareiss, det_cofactor, PolyMatrix};
pub use multi::{Exponent, MultiPoly, MultiPolyError};
pub use rational::Rational;
pub use symmetric::{
    inertia_by_char_poly, inertia_by_pivoting, signature_exact, Inertia, MatrixError, SymRatMatrix,
};
