//! Exact invariants of alternating link diagrams and machine checks of
//! coefficient-shape conjectures for the Alexander polynomial.
//!
//! The crate is organised bottom-up:
//!
//! * [`diagram`]: PD codes, braid closures, faces, Seifert circles.
//! * [`polyalg`]: exact Laurent/multivariate polynomials, determinants, inertia.
//! * [`invariants`]: Alexander polynomial (three ways), signature, genus.
//! * [`structure`]: twist regions and Murasugi-sum decompositions.
//! * [`conjectures`]: trapezoidal and Hirasawa-Murasugi checks, Fox-Milnor search.
//! * [`lorentzian`]: M-convexity and Lorentzian checks.
//! * [`harness`]: census files, parallel sweeps and reports.

pub mod conjectures;
pub mod diagram;
pub mod harness;
pub mod invariants;
pub mod lorentzian;
pub mod polyalg;
pub mod structure;
