use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::diagram::{seifert_circles, BraidWord, LinkDiagram};
use crate::polyalg::{det, normalize_alexander, CoeffSeq, Exponent, LaurentPoly, MultiPoly};

use super::support::{is_m_convex, SupportSet};
use super::LorentzianError;

/// Multivariable polynomial refining an Alexander polynomial, with the
/// weights `x_j -> t^{w_j}` that specialize it back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    pub poly: MultiPoly,
    pub weights: Vec<i64>,
}

impl Refinement {
    pub fn specialize(&self) -> LaurentPoly {
        self.poly.specialize(&self.weights)
    }
}

/// Source of candidate refinements. Each builder covers its own class of
/// diagrams and reports anything outside it as an error.
pub trait RefinementBuilder {
    fn name(&self) -> &'static str;
    fn build(
        &self,
        d: &LinkDiagram,
        braid: Option<&BraidWord>,
    ) -> Result<Refinement, LorentzianError>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RefinementCheck {
    pub all_coeffs_one: bool,
    pub m_convex: bool,
    pub specializes: bool,
}

impl RefinementCheck {
    pub fn passes(&self) -> bool {
        self.all_coeffs_one && self.m_convex && self.specializes
    }
}

/// The three refinement contracts: unit coefficients, M-convex support and
/// specialization (under `weights`) to a polynomial normalizing to `c`.
pub fn refinement_validate(
    p: &MultiPoly,
    c: &CoeffSeq,
    weights: &[i64],
) -> Result<RefinementCheck, LorentzianError> {
    if weights.len() != p.arity() {
        return Err(LorentzianError::Arity {
            expected: p.arity(),
            found: weights.len(),
        });
    }
    let support = SupportSet::new(p.support())?;
    let all_coeffs_one = p.terms().all(|(_, c)| c.is_one());
    let m_convex = is_m_convex(&support).is_ok();
    let specializes =
        normalize_alexander(&p.specialize(weights)).is_ok_and(|s| s.coeffs() == c.coeffs());
    Ok(RefinementCheck {
        all_coeffs_one,
        m_convex,
        specializes,
    })
}

/// Hypertrees of the hypergraph whose hyperedges are the Seifert circles of
/// a special alternating diagram, each containing the faces it borders
/// other than the Seifert disks.
///
/// A vector `f` on the circles is a hypertree iff `sum f = |faces| - 1` and
/// `sum_{e in S} f(e) <= |N(S)| - 1` for every nonempty set `S` of circles.
/// The weights are the indicator of one side of the Seifert graph.
#[derive(Clone, Copy, Debug, Default)]
pub struct HypertreeBuilder;

/// Circle-to-face neighbourhoods, as bitsets over the non-disk faces.
fn circle_neighbourhoods(d: &LinkDiagram) -> (Vec<BTreeSet<usize>>, usize) {
    let seifert = seifert_circles(d);
    let n = seifert.circle_count();
    let mut arcs_of_face: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); d.faces().len()];
    for a in 0..d.arc_count() {
        for f in d.arc_faces(a) {
            arcs_of_face[f].insert(a);
        }
    }
    let is_disk = |f: usize| {
        let circles: BTreeSet<usize> = arcs_of_face[f]
            .iter()
            .map(|&a| seifert.circle_of_arc[a])
            .collect();
        circles.len() == 1 && {
            let c = *circles.iter().next().unwrap();
            arcs_of_face[f].len() == seifert.circles[c].arcs.len()
        }
    };
    let violet: Vec<usize> = (0..d.faces().len()).filter(|&f| !is_disk(f)).collect();
    let mut nbhd = vec![BTreeSet::new(); n];
    for (vi, &f) in violet.iter().enumerate() {
        for &a in &arcs_of_face[f] {
            nbhd[seifert.circle_of_arc[a]].insert(vi);
        }
    }
    (nbhd, violet.len())
}

pub fn hypertrees(nbhd: &[BTreeSet<usize>], violet: usize) -> Vec<Exponent> {
    let n = nbhd.len();
    // Subset bounds |N(S)| - 1, indexed by bitmask.
    let bound: Vec<i64> = (0..1usize << n)
        .map(|mask| {
            let mut u = BTreeSet::new();
            for (e, nb) in nbhd.iter().enumerate() {
                if mask >> e & 1 == 1 {
                    u.extend(nb.iter().copied());
                }
            }
            u.len() as i64 - 1
        })
        .collect();
    let total = violet as i64 - 1;
    let mut out = Vec::new();
    let mut f = vec![0u32; n];
    fn rec(
        e: usize,
        f: &mut Vec<u32>,
        used: i64,
        total: i64,
        bound: &[i64],
        out: &mut Vec<Exponent>,
    ) {
        let n = f.len();
        if e == n {
            if used == total {
                out.push(f.clone());
            }
            return;
        }
        let hi = bound[1 << e].min(total - used);
        for v in 0..=hi.max(-1) {
            f[e] = v as u32;
            // Every subset whose largest member is e is now fully assigned.
            let ok = (0..1usize << e).all(|low| {
                let mask = low | 1 << e;
                let s: i64 = (0..=e)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| f[i] as i64)
                    .sum();
                s <= bound[mask]
            });
            if ok {
                rec(e + 1, f, used + v, total, bound, out);
            }
        }
        f[e] = 0;
    }
    if total >= 0 {
        rec(0, &mut f, 0, total, &bound, &mut out);
    }
    out
}

impl RefinementBuilder for HypertreeBuilder {
    fn name(&self) -> &'static str {
        "hypertree"
    }

    fn build(
        &self,
        d: &LinkDiagram,
        _braid: Option<&BraidWord>,
    ) -> Result<Refinement, LorentzianError> {
        if !d.is_special_alternating() {
            return Err(LorentzianError::Unsupported(
                "diagram is not special alternating",
            ));
        }
        let (nbhd, violet) = circle_neighbourhoods(d);
        let support = hypertrees(&nbhd, violet);
        let poly = MultiPoly::indicator(nbhd.len(), support).expect("hypertrees share the arity");
        let weights = seifert_circles(d)
            .bipartition()
            .into_iter()
            .map(i64::from)
            .collect();
        Ok(Refinement { poly, weights })
    }
}

/// Seifert matrix of a braid closure from its canonical Seifert surface: one
/// disk per strand, one band per letter. The homology basis has a loop for
/// every pair of consecutive letters on the same generator; the returned
/// vector gives the generator (1-based) of each loop.
pub fn braid_seifert_matrix(b: &BraidWord) -> (Vec<Vec<i64>>, Vec<usize>) {
    let w = b.word();
    let gen = |p: usize| w[p].unsigned_abs() as usize;
    let sign = |p: usize| i64::from(w[p].signum());
    let next = |p: usize| (p + 1..w.len()).find(|&q| gen(q) == gen(p));
    let loops: Vec<(usize, usize)> = (0..w.len())
        .filter_map(|p| next(p).map(|q| (p, q)))
        .collect();
    let n = loops.len();
    let mut v = vec![vec![0i64; n]; n];
    for (i, &(p, hp)) in loops.iter().enumerate() {
        v[i][i] = -(sign(p) + sign(hp)) / 2;
        for (j, &(q, hq)) in loops.iter().enumerate() {
            if i == j {
                continue;
            }
            if gen(p) == gen(q) && hp == q {
                // Consecutive loops share the band at q.
                v[i][j] = (sign(q) + 1) / 2;
                v[j][i] = (sign(q) - 1) / 2;
            } else if gen(p).abs_diff(gen(q)) == 1 && p < q && q < hp && hp < hq {
                // Interleaved loops on adjacent generators: the entry sits in
                // the row of the lower generator, signed by which starts first.
                if gen(p) < gen(q) {
                    v[i][j] = 1;
                } else {
                    v[j][i] = -1;
                }
            }
        }
    }
    (v, loops.iter().map(|&(p, _)| gen(p)).collect())
}

/// For an alternating 3-braid, `Q(u, v) = det(V - L V^T)` with `L` carrying
/// `u` on loops of the first generator and `v` on loops of the second,
/// evaluated at `-u, -v` and homogenized with a middle variable. Weights
/// `(1, 0, 1)` recover `det(V - t V^T)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct BraidSeifertBuilder;

impl RefinementBuilder for BraidSeifertBuilder {
    fn name(&self) -> &'static str {
        "braid-seifert"
    }

    fn build(
        &self,
        _d: &LinkDiagram,
        braid: Option<&BraidWord>,
    ) -> Result<Refinement, LorentzianError> {
        let b = braid.ok_or(LorentzianError::Unsupported("needs a braid word"))?;
        if b.strands() != 3 {
            return Err(LorentzianError::Unsupported("needs a 3-braid"));
        }
        let (v, gens) = braid_seifert_matrix(b);
        let n = v.len();
        if n == 0 {
            let poly = MultiPoly::indicator(3, [vec![0, 0, 0]]).expect("arity 3");
            return Ok(Refinement {
                poly,
                weights: vec![1, 0, 1],
            });
        }
        // Kronecker substitution v = u^m with m above the u-degree.
        let m = n as i64 + 1;
        let var = |g: usize| {
            if g == 1 {
                LaurentPoly::mono(-1, 1)
            } else {
                LaurentPoly::mono(-1, m)
            }
        };
        let mat: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = LaurentPoly::constant(v[i][j]);
                        let b = &var(gens[i]) * &LaurentPoly::constant(v[j][i]);
                        &a - &b
                    })
                    .collect()
            })
            .collect();
        let q = det(&mat);
        if q.is_zero() {
            return Err(LorentzianError::Unsupported("degenerate Seifert form"));
        }
        let mut terms: Vec<((u32, u32), BigInt)> = q
            .terms()
            .map(|(e, c)| (((e % m) as u32, (e / m) as u32), c.clone()))
            .collect();
        let top = terms.iter().map(|((i, j), _)| i + j).max().unwrap_or(0);
        let flip = terms
            .iter()
            .find(|((i, j), _)| i + j == 0)
            .is_some_and(|(_, c)| c.is_negative());
        let mut poly = MultiPoly::zero(3);
        for ((i, j), c) in terms.drain(..) {
            let c = if flip { -c } else { c };
            poly.add_term(vec![i, top - i - j, j], c).expect("arity 3");
        }
        Ok(Refinement {
            poly,
            weights: vec![1, 0, 1],
        })
    }
}

/// Normalized `det(V - t V^T)` of the braid's Seifert matrix.
pub fn seifert_alexander(b: &BraidWord) -> Option<CoeffSeq> {
    let (v, _) = braid_seifert_matrix(b);
    if v.is_empty() {
        return Some(CoeffSeq::from_magnitudes([1]));
    }
    let n = v.len();
    let mat: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| &LaurentPoly::constant(v[i][j]) - &LaurentPoly::mono(v[j][i], 1))
                .collect()
        })
        .collect();
    normalize_alexander(&det(&mat)).ok()
}

/// Signature of `V + V^T`.
pub fn seifert_signature(b: &BraidWord) -> i64 {
    let (v, _) = braid_seifert_matrix(b);
    if v.is_empty() {
        return 0;
    }
    let n = v.len();
    let s: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| v[i][j] + v[j][i]).collect())
        .collect();
    let m = crate::polyalg::SymRatMatrix::from_integers(&s).expect("symmetric");
    crate::polyalg::signature_exact(&m).signature()
}
