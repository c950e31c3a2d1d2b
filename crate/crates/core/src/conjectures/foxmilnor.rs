use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::polyalg::{CoeffSeq, LaurentPoly};

use super::ConjectureError;

/// Longest coefficient sequence accepted by [`fox_milnor`] (degree 20).
pub const FOX_MILNOR_MAX_LEN: usize = 21;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcordanceCert {
    /// `f` with `Delta = ± f(t) f(t^-1) t^deg f`, in canonical form.
    pub factor: Option<LaurentPoly>,
    /// Largest per-coefficient bound searched. Every integer factor lies
    /// within these bounds, so `None` is a proof of nonexistence.
    pub bound: BigInt,
    /// Set when a necessary condition ruled out a factor before searching.
    pub obstruction: Option<&'static str>,
}

impl Serialize for ConcordanceCert {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ConcordanceCert", 3)?;
        st.serialize_field("factor", &self.factor.as_ref().map(ToString::to_string))?;
        st.serialize_field("bound", &self.bound.to_string())?;
        st.serialize_field("obstruction", &self.obstruction)?;
        st.end()
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

/// Coefficient bounds for a factor `f` of degree `k` with `f f* = g`.
/// Mahler measure is multiplicative and `M(f*) = M(f)`, so
/// `M(f)^2 = M(g) <= |g|_2` and `|f_i| <= C(k, i) M(f)`.
fn coefficient_bounds(g: &[BigInt], k: usize) -> Vec<BigInt> {
    let norm_sq: BigInt = g.iter().map(|c| c * c).sum();
    (0..=k)
        .map(|i| {
            let b = binomial(k, i);
            (b.pow(4) * &norm_sq).nth_root(4)
        })
        .collect()
}

fn reciprocal_product(f: &[BigInt]) -> Vec<BigInt> {
    let k = f.len() - 1;
    let mut out = vec![BigInt::zero(); 2 * k + 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in f.iter().rev().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

struct Search<'a> {
    g: &'a [BigInt],
    k: usize,
    bounds: Vec<BigInt>,
    f: Vec<BigInt>,
}

impl Search<'_> {
    /// Sum of the products in `g_j` that do not involve `f_j` or `f_{k-j}`.
    fn middle(&self, j: usize) -> BigInt {
        (1..j).map(|i| &self.f[i] * &self.f[self.k - j + i]).sum()
    }

    fn within(&self, i: usize, v: &BigInt) -> bool {
        v.abs() <= self.bounds[i]
    }

    /// Coefficients are fixed in pairs `(f_j, f_{k-j})` from the outside
    /// in; `g_j` is linear in the pair once the outer ones are known.
    fn step(&mut self, j: usize) -> bool {
        let k = self.k;
        if 2 * j > k {
            return reciprocal_product(&self.f) == self.g;
        }
        let rest = &self.g[j] - self.middle(j);
        if 2 * j == k {
            let coef = &self.f[0] + &self.f[k];
            if coef.is_zero() {
                if !rest.is_zero() {
                    return false;
                }
                let b = self.bounds[j].clone();
                let mut v = -b.clone();
                while v <= b {
                    self.f[j] = v.clone();
                    if self.step(j + 1) {
                        return true;
                    }
                    v += 1;
                }
                return false;
            }
            let (q, r) = rest.div_rem(&coef);
            if !r.is_zero() || !self.within(j, &q) {
                return false;
            }
            self.f[j] = q;
            return self.step(j + 1);
        }
        let b = self.bounds[j].clone();
        let mut v = -b.clone();
        while v <= b {
            let num = &rest - &v * &self.f[k];
            let (q, r) = num.div_rem(&self.f[0]);
            if r.is_zero() && self.within(k - j, &q) {
                self.f[j] = v.clone();
                self.f[k - j] = q;
                if self.step(j + 1) {
                    return true;
                }
            }
            v += 1;
        }
        false
    }
}

/// Canonical representative among `±f(t)` and `±t^k f(1/t)`: the one whose
/// coefficient list, read from the top degree down, is lexicographically
/// largest.
fn canonical(f: &[BigInt]) -> Vec<BigInt> {
    let rev: Vec<BigInt> = f.iter().rev().cloned().collect();
    let neg = |v: &[BigInt]| v.iter().map(|c| -c).collect::<Vec<_>>();
    let candidates = [f.to_vec(), neg(f), rev.clone(), neg(&rev)];
    candidates
        .into_iter()
        .max_by(|a, b| a.iter().rev().cmp(b.iter().rev()))
        .expect("four candidates")
}

/// Exhaustive search for an integer `f` with `Delta = ± f(t) f(t^-1) t^deg f`.
pub fn fox_milnor(c: &CoeffSeq) -> Result<ConcordanceCert, ConjectureError> {
    let l = c.len();
    if l == 0 {
        return Err(ConjectureError::Empty);
    }
    if l > FOX_MILNOR_MAX_LEN {
        return Err(ConjectureError::DegreeBound {
            len: l,
            max: FOX_MILNOR_MAX_LEN,
        });
    }
    let none = |bound, why| {
        Ok(ConcordanceCert {
            factor: None,
            bound,
            obstruction: Some(why),
        })
    };
    if l.is_multiple_of(2) {
        return none(BigInt::zero(), "even length");
    }
    let k = (l - 1) / 2;
    let delta = c.to_poly();
    let g: Vec<BigInt> = delta.coeffs().to_vec();
    let bounds = coefficient_bounds(&g, k);
    let bound = bounds.iter().max().cloned().unwrap_or_default();
    // f(-1)^2 = ±Delta(-1) and f(1)^2 = ±Delta(1).
    if !is_square(&c.determinant()) {
        return none(bound, "determinant is not a square");
    }
    if !is_square(&delta.coeffs().iter().sum::<BigInt>().abs()) {
        return none(bound, "|Delta(1)| is not a square");
    }
    for sign in [1, -1] {
        let target: Vec<BigInt> = g.iter().map(|x| x * sign).collect();
        let g0 = target[0].clone();
        if k == 0 {
            if is_square(&g0) {
                let f = vec![g0.sqrt()];
                return Ok(ConcordanceCert {
                    factor: Some(LaurentPoly::new(0, f)),
                    bound,
                    obstruction: None,
                });
            }
            continue;
        }
        // f_0 > 0 without loss of generality; f_0 f_k = g_0.
        let n = g0.abs();
        let mut d = BigInt::one();
        while d <= n {
            if n.is_multiple_of(&d) && d <= bounds[0] {
                let fk = &g0 / &d;
                if fk.abs() <= bounds[k] {
                    let mut f = vec![BigInt::zero(); k + 1];
                    f[0] = d.clone();
                    f[k] = fk;
                    let mut s = Search {
                        g: &target,
                        k,
                        bounds: bounds.clone(),
                        f,
                    };
                    if s.step(1) {
                        let factor = LaurentPoly::new(0, canonical(&s.f));
                        return Ok(ConcordanceCert {
                            factor: Some(factor),
                            bound,
                            obstruction: None,
                        });
                    }
                }
            }
            d += 1;
        }
    }
    Ok(ConcordanceCert {
        factor: None,
        bound,
        obstruction: None,
    })
}

/// Resubstitution check: `f(t) f(t^-1) t^deg f` normalizes to `c`.
pub fn verify_factor(c: &CoeffSeq, f: &LaurentPoly) -> bool {
    let product = reciprocal_product(f.coeffs());
    let p = LaurentPoly::new(0, product);
    crate::polyalg::normalize_alexander(&p).is_ok_and(|s| s == *c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> CoeffSeq {
        CoeffSeq::from_magnitudes(v.iter().copied())
    }

    #[test]
    fn stevedore_pattern() {
        let cert = fox_milnor(&seq(&[2, 5, 2])).unwrap();
        assert_eq!(cert.factor, Some(LaurentPoly::new(0, [-1, 2])));
        assert!(verify_factor(
            &seq(&[2, 5, 2]),
            cert.factor.as_ref().unwrap()
        ));
    }

    #[test]
    fn trefoil_has_no_factor() {
        let cert = fox_milnor(&seq(&[1, 1, 1])).unwrap();
        assert_eq!(cert.factor, None);
    }

    #[test]
    fn unknot_factor_is_one() {
        assert_eq!(
            fox_milnor(&seq(&[1])).unwrap().factor,
            Some(LaurentPoly::one())
        );
    }

    #[test]
    fn square_knot_factor() {
        // (1,2,3,2,1) = (t^2 - t + 1)^2.
        let c = seq(&[1, 2, 3, 2, 1]);
        let cert = fox_milnor(&c).unwrap();
        let f = cert.factor.unwrap();
        assert!(verify_factor(&c, &f));
        assert_eq!(f, LaurentPoly::new(0, [1, -1, 1]));
    }

    #[test]
    fn degree_three_factor_found() {
        let f = [1i64, -2, 3, -2];
        let fb: Vec<BigInt> = f.iter().map(|&x| x.into()).collect();
        let p = LaurentPoly::new(0, reciprocal_product(&fb));
        let c = crate::polyalg::normalize_alexander(&p).unwrap();
        let cert = fox_milnor(&c).unwrap();
        assert!(verify_factor(&c, cert.factor.as_ref().unwrap()));
    }

    #[test]
    fn limits() {
        assert!(matches!(
            fox_milnor(&seq(&[1; 23])),
            Err(ConjectureError::DegreeBound { .. })
        ));
        assert_eq!(fox_milnor(&seq(&[1, 1])).unwrap().factor, None);
        assert!(fox_milnor(&seq(&[])).is_err());
    }

    #[test]
    fn bounds_dominate_known_factor() {
        let g: Vec<BigInt> = [2, -5, 2].iter().map(|&x| BigInt::from(x)).collect();
        let b = coefficient_bounds(&g, 1);
        assert!(b.iter().all(|x| *x >= BigInt::from(2)));
    }
}
