use super::LaurentPoly;

/// Square matrix over `Z[t, t^{-1}]`, row-major.
pub type PolyMatrix = Vec<Vec<LaurentPoly>>;

pub fn identity(n: usize) -> PolyMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = LaurentPoly::zero();
                    for l in 0..k {
                        if a[i][l].is_zero() || b[l][j].is_zero() {
                            continue;
                        }
                        acc += &(&a[i][l] * &b[l][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn assert_square(m: &PolyMatrix) {
    assert!(m.iter().all(|r| r.len() == m.len()), "matrix is not square");
}

/// Determinant. Cofactor expansion up to 4x4, fraction-free elimination above.
pub fn det(m: &PolyMatrix) -> LaurentPoly {
    if m.len() <= 4 {
        det_cofactor(m)
    } else {
        det_bareiss(m)
    }
}

/// Laplace expansion along the first row.
pub fn det_cofactor(m: &PolyMatrix) -> LaurentPoly {
    assert_square(m);
    let n = m.len();
    match n {
        0 => LaurentPoly::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = LaurentPoly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: PolyMatrix = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &det_cofactor(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// Bareiss fraction-free elimination. Every division is exact in the
/// Laurent ring, which is an integral domain.
pub fn det_bareiss(m: &PolyMatrix) -> LaurentPoly {
    assert_square(m);
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly");
            }
        }
        prev = a[k][k].clone();
        for row in a.iter_mut().skip(k + 1) {
            row[k] = LaurentPoly::zero();
        }
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(min: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::new(min, c.iter().copied())
    }

    #[test]
    fn two_by_two() {
        let m = vec![
            vec![LaurentPoly::t(), LaurentPoly::one()],
            vec![LaurentPoly::one(), LaurentPoly::t()],
        ];
        assert_eq!(det(&m), p(0, &[-1, 0, 1]));
        assert_eq!(det_bareiss(&m), p(0, &[-1, 0, 1]));
    }

    #[test]
    fn one_by_one() {
        let q = p(-1, &[3, 0, 2]);
        assert_eq!(det(&vec![vec![q.clone()]]), q);
    }

    #[test]
    fn empty_is_one() {
        assert!(det(&vec![]).is_one());
    }

    #[test]
    fn zero_pivot_needs_swap() {
        let m = vec![
            vec![LaurentPoly::zero(), LaurentPoly::one(), LaurentPoly::zero()],
            vec![LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero()],
            vec![LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::t()],
        ];
        assert_eq!(det_bareiss(&m), -LaurentPoly::t());
        assert_eq!(det_cofactor(&m), -LaurentPoly::t());
    }

    #[test]
    fn singular() {
        let r = vec![p(0, &[1, 1]), p(0, &[2])];
        let m = vec![r.clone(), r];
        assert!(det_bareiss(&m).is_zero());
    }
}
