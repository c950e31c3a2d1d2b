use num_bigint::BigInt;
use proptest::prelude::*;

use knotcheck::conjectures::{fox_milnor, hm_check, is_trapezoidal, stable_length, verify_factor};
use knotcheck::diagram::{braid_closure, BraidWord};
use knotcheck::invariants::{alexander_burau, alexander_pd, signature, SignatureValue};
use knotcheck::lorentzian::{is_lorentzian, is_m_convex, SupportSet};
use knotcheck::polyalg::{
    det_bareiss, det_cofactor, inertia_by_char_poly, normalize_alexander, signature_exact,
    CoeffSeq, LaurentPoly, MultiPoly, SymRatMatrix,
};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-2i64..=2, prop::collection::vec(-3i64..=3, 1..4)).prop_map(|(m, c)| LaurentPoly::new(m, c))
}

fn poly_matrix() -> impl Strategy<Value = Vec<Vec<LaurentPoly>>> {
    (1usize..=4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(laurent(), n), n))
}

fn sym_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
            let mut m = vec![vec![0; n]; n];
            for i in 0..n {
                for j in 0..=i {
                    m[i][j] = v[i * n + j];
                    m[j][i] = v[i * n + j];
                }
            }
            m
        })
    })
}

/// Products of elementary row operations, hence invertible over the integers.
fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec((0..n, 0..n, -2i64..=2), 0..8).prop_map(move |ops| {
        let mut p: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        for (a, b, k) in ops {
            if a != b {
                for j in 0..n {
                    p[a][j] += k * p[b][j];
                }
            }
        }
        p
    })
}

fn congruent(a: &[Vec<i64>], p: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .flat_map(|k| (0..n).map(move |l| (k, l)))
                        .map(|(k, l)| p[k][i] * a[k][l] * p[l][j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// Braid words on 2 to 4 strands with at most 10 letters.
fn braid() -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(|s| {
        let g = s as i32 - 1;
        prop::collection::vec((1..=g, any::<bool>()), 1..=10).prop_map(move |w| {
            BraidWord::new(
                s,
                w.into_iter()
                    .map(|(x, neg)| if neg { -x } else { x })
                    .collect(),
            )
            .unwrap()
        })
    })
}

fn seq() -> impl Strategy<Value = CoeffSeq> {
    prop::collection::vec(1i64..=6, 1..9).prop_map(CoeffSeq::from_magnitudes)
}

fn linear_form(k: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(0i64..=3, k)
        .prop_filter("nonzero form", |c| c.iter().any(|&x| x > 0))
        .prop_map(move |c| {
            let terms = c.into_iter().enumerate().map(|(i, x)| {
                let mut e = vec![0u32; k];
                e[i] = 1;
                (e, x)
            });
            MultiPoly::from_terms(k, terms).unwrap()
        })
}

fn product_of_forms() -> impl Strategy<Value = MultiPoly> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(k, d)| {
        prop::collection::vec(linear_form(k), d)
            .prop_map(|fs| fs.iter().skip(1).fold(fs[0].clone(), |acc, f| acc.mul(f)))
    })
}

fn elementary_two(k: usize) -> MultiPoly {
    let mut terms = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let mut e = vec![0u32; k];
            e[i] = 1;
            e[j] = 1;
            terms.push((e, 1i64));
        }
    }
    MultiPoly::from_terms(k, terms).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cofactor_matches_bareiss(m in poly_matrix()) {
        prop_assert_eq!(det_cofactor(&m), det_bareiss(&m));
    }

    #[test]
    fn inertia_is_a_congruence_invariant((a, p) in sym_matrix().prop_flat_map(|a| {
        let n = a.len();
        (Just(a), unimodular(n))
    })) {
        let base = SymRatMatrix::from_integers(&a).unwrap();
        let moved = SymRatMatrix::from_integers(&congruent(&a, &p)).unwrap();
        prop_assert_eq!(signature_exact(&base), signature_exact(&moved));
        prop_assert_eq!(signature_exact(&base), inertia_by_char_poly(&base));
    }

    #[test]
    fn normalization_is_idempotent(p in laurent().prop_filter("nonzero", |p| !p.is_zero())) {
        let once = normalize_alexander(&p).unwrap();
        let twice = normalize_alexander(&once.to_poly()).unwrap();
        prop_assert_eq!(once.coeffs(), twice.coeffs());
        let shifted = normalize_alexander(&p.shift(3)).unwrap();
        prop_assert_eq!(once.coeffs(), shifted.coeffs());
        let inverted = normalize_alexander(&p.invert_variable()).unwrap();
        prop_assert_eq!(once.reversed().coeffs().to_vec(), inverted.coeffs().to_vec());
    }

    #[test]
    fn mirror_is_an_involution(b in braid()) {
        let Ok(d) = braid_closure(&b) else { return Ok(()) };
        let m = d.mirror();
        prop_assert_eq!(m.mirror().pd_code(), d.pd_code());
        if let (Ok(c), Ok(cm)) = (alexander_pd(&d), alexander_pd(&m)) {
            prop_assert_eq!(c.coeffs(), cm.coeffs());
            prop_assert_eq!(signature(&d).unwrap().sigma, -signature(&m).unwrap().sigma);
        }
    }

    #[test]
    fn pd_and_burau_agree(b in braid()) {
        let Ok(d) = braid_closure(&b) else { return Ok(()) };
        match (alexander_pd(&d), alexander_burau(&b)) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x.coeffs(), y.coeffs()),
            (Err(_), Err(_)) => {}
            (x, y) => prop_assert!(false, "one method failed: {:?} vs {:?}", x, y),
        }
    }

    #[test]
    fn trapezoid_verdict_survives_reversal(c in seq()) {
        let r = is_trapezoidal(&c).unwrap();
        let rev = is_trapezoidal(&c.reversed()).unwrap();
        prop_assert_eq!(r.holds, rev.holds);
        prop_assert_eq!(r.failure.is_some(), !r.holds);
    }

    #[test]
    fn palindromic_plateau_has_length_parity(half in prop::collection::vec(1i64..=6, 1..6), odd in any::<bool>()) {
        let mut v = half.clone();
        v.extend(half.iter().rev().skip(usize::from(odd)));
        let c = CoeffSeq::from_magnitudes(v);
        if let Ok(s) = stable_length(&c) {
            prop_assert_eq!(s.sl % 2, c.len() % 2);
            prop_assert!(s.i0 >= 1 && s.sl >= 1);
        }
    }

    #[test]
    fn hm_ignores_signature_sign(c in seq(), sigma in -10i64..=10) {
        let at = |s| hm_check(&c, &SignatureValue { sigma: s, convention: "test" });
        prop_assert_eq!(at(sigma), at(-sigma));
    }

    #[test]
    fn fox_milnor_finds_planted_factors(f in prop::collection::vec(-3i64..=3, 1..5)) {
        let f = LaurentPoly::new(0, f);
        prop_assume!(!f.is_zero());
        let product = &f * &f.invert_variable();
        let c = normalize_alexander(&product).unwrap();
        // Sequences only carry magnitudes, so the product must alternate.
        prop_assume!(c.signs_alternate() && c.len() <= 7);
        let cert = fox_milnor(&c).unwrap();
        let found = cert.factor.expect("a factor was planted");
        prop_assert!(verify_factor(&c, &found));
    }

    #[test]
    fn products_of_linear_forms_are_lorentzian(p in product_of_forms()) {
        let r = is_lorentzian(&p).unwrap();
        prop_assert!(r.holds, "{:?} on {}", r.witness, p);
    }

    #[test]
    fn lorentzian_support_is_m_convex(p in product_of_forms(), extra in prop::collection::vec(0u32..=2, 1..=4)) {
        // Perturb with one more monomial of the right degree, then compare.
        let k = p.arity();
        let d = p.homogeneous_degree().unwrap();
        let mut e: Vec<u32> = extra.into_iter().cycle().take(k).collect();
        let s: u32 = e.iter().sum();
        if s > d { return Ok(()) }
        e[0] += d - s;
        let mut q = p.clone();
        q.add_term(e, BigInt::from(1)).unwrap();
        if is_lorentzian(&q).unwrap().holds {
            prop_assert!(is_m_convex(&SupportSet::new(q.support()).unwrap()).is_ok());
        }
    }

    #[test]
    fn lorentzian_is_permutation_invariant(p in product_of_forms(), rot in 0usize..4) {
        let k = p.arity();
        let perm: Vec<usize> = (0..k).map(|i| (i + rot) % k).collect();
        let q = p.permute(&perm);
        prop_assert_eq!(is_lorentzian(&p).unwrap().holds, is_lorentzian(&q).unwrap().holds);
    }
}

#[test]
fn elementary_symmetric_quadratics_are_lorentzian() {
    for k in 2..=5 {
        let r = is_lorentzian(&elementary_two(k)).unwrap();
        assert!(r.holds, "e2 in {k} variables: {:?}", r.witness);
    }
}
