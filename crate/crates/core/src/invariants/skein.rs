use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::diagram::raw::RawDiagram;
use crate::diagram::{LinkDiagram, Sign};
use crate::polyalg::LaurentPoly;

use super::InvariantError;

/// Largest diagram the skein recursion accepts.
pub const SKEIN_MAX_CROSSINGS: usize = 12;

type Key = (usize, Vec<([usize; 4], bool)>);

/// Conway polynomial in `z` (stored as a polynomial in the variable of
/// [`LaurentPoly`]), by the skein relation
/// `C(L+) - C(L-) = z C(L0)` with `C(unknot) = 1`.
pub fn conway_skein(d: &LinkDiagram) -> Result<LaurentPoly, InvariantError> {
    let c = d.crossing_count();
    if c > SKEIN_MAX_CROSSINGS {
        return Err(InvariantError::SkeinBudget {
            crossings: c,
            max: SKEIN_MAX_CROSSINGS,
        });
    }
    let mut memo = HashMap::new();
    Ok(conway_raw(d.to_raw(), &mut memo))
}

/// First crossing that the traversal meets on its under-strand before
/// meeting it on its over-strand, or `None` when the diagram is descending.
fn first_ascending(d: &RawDiagram) -> Option<usize> {
    let ends = d.ends();
    let mut seen = HashSet::new();
    for walk in d.component_walks() {
        for a in walk {
            let (x, s) = ends[&a].head;
            if seen.insert(x) && s == 0 {
                return Some(x);
            }
        }
    }
    None
}

fn conway_raw(d: RawDiagram, memo: &mut HashMap<Key, LaurentPoly>) -> LaurentPoly {
    if d.crossings.is_empty() {
        return if d.free_loops == 1 {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        };
    }
    if !d.is_connected() {
        return LaurentPoly::zero();
    }
    let key = d.canonical_key();
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let value = match first_ascending(&d) {
        None => {
            if d.component_walks().len() == 1 {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            }
        }
        Some(x) => {
            let sign = d.crossings[x].sign;
            let smoothed = conway_raw(d.smooth(x), memo);
            let mut switched = d.clone();
            switched.switch(x);
            let switched = conway_raw(switched, memo);
            let z_term = &LaurentPoly::t() * &smoothed;
            match sign {
                Sign::Positive => switched + z_term,
                Sign::Negative => switched - z_term,
            }
        }
    };
    memo.insert(key, value.clone());
    value
}

/// Substitutes `z^2 = t - 2 + t^{-1}`. For an odd polynomial
/// `z P(z^2)` the result is `(t - 1) P(t - 2 + t^{-1})`, the Alexander
/// polynomial up to the unit `t^{1/2}`.
pub fn conway_to_alexander(conway: &LaurentPoly) -> LaurentPoly {
    if conway.is_zero() {
        return LaurentPoly::zero();
    }
    let odd = conway.min_exp().rem_euclid(2) == 1;
    let z2 = LaurentPoly::new(-1, [1, -2, 1]);
    let mut acc = LaurentPoly::zero();
    for (e, c) in conway.terms() {
        debug_assert_eq!(
            e.rem_euclid(2) == 1,
            odd,
            "Conway polynomial mixes parities"
        );
        let k = (e / 2) as u32;
        acc += &z2.pow(k).scale(c);
    }
    if odd {
        &acc * &LaurentPoly::new(0, [-1, 1])
    } else {
        acc
    }
}

/// Value of a Conway polynomial at `z^2 = s`, for even polynomials.
pub fn conway_at(conway: &LaurentPoly, z_squared: i64) -> BigRational {
    let mut acc = BigRational::from_integer(BigInt::from(0));
    for (e, c) in conway.terms() {
        let v = BigRational::from_integer(BigInt::from(z_squared)).pow((e / 2) as i32);
        acc += v * BigRational::from_integer(c.clone());
    }
    acc
}
