use serde::Serialize;

use crate::diagram::{seifert_circles, LinkDiagram};

use super::StructureError;

/// A special alternating piece: the diagram left after smoothing every
/// crossing outside the piece and discarding the resulting free circles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Piece {
    /// Crossings of the original diagram, ascending.
    pub crossings: Vec<usize>,
    #[serde(skip)]
    pub diagram: LinkDiagram,
}

/// Murasugi sum along a separating Seifert circle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumEdge {
    pub a: usize,
    pub b: usize,
    /// Half the number of sides of the gluing polygon.
    pub length: usize,
    /// Seifert circle of the original diagram along which the sum is taken.
    pub circle: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub pieces: Vec<Piece>,
    pub edges: Vec<SumEdge>,
    /// Piece index of each original crossing.
    pub piece_of: Vec<usize>,
}

impl Decomposition {
    pub fn max_sum_length(&self) -> usize {
        self.edges.iter().map(|e| e.length).max().unwrap_or(0)
    }
}

/// Blocks (2-connected components) of the Seifert graph, as a block index
/// per crossing. Iterative Tarjan over edge ids, so parallel crossings
/// between the same two circles stay in one block.
fn seifert_blocks(circles: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); circles];
    for (e, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, e));
        adj[b].push((a, e));
    }
    let mut disc = vec![usize::MAX; circles];
    let mut low = vec![0; circles];
    let mut block = vec![usize::MAX; edges.len()];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_block = 0;
    let mut time = 0;
    for root in 0..circles {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, edge used to enter it, next adjacency index)
        let mut frames = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, via, ref mut i)) = frames.last_mut() {
            if *i < adj[v].len() {
                let (w, e) = adj[v][*i];
                *i += 1;
                if e == via {
                    continue;
                }
                if disc[w] == usize::MAX {
                    stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(u, _, _)) = frames.last() {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    while let Some(e) = stack.pop() {
                        block[e] = next_block;
                        if e == via {
                            break;
                        }
                    }
                    next_block += 1;
                }
            }
        }
    }
    block
}

/// Splits along every separating Seifert circle. Pieces are the blocks of
/// the Seifert graph; in an alternating diagram all crossings of a block
/// share a sign, so each piece is special. At a circle shared by several
/// pieces, the sums form a maximum spanning tree under the pairwise sum
/// lengths, so a plumbing is never reported as a chain of connected sums.
pub fn decompose_murasugi(d: &LinkDiagram) -> Result<Decomposition, StructureError> {
    if !d.is_alternating() {
        return Err(StructureError::NotAlternating);
    }
    let seifert = seifert_circles(d);
    let c = d.crossing_count();
    let block = seifert_blocks(seifert.circle_count(), &seifert.edges);

    // Pieces in order of their smallest crossing.
    let mut piece_of = vec![usize::MAX; c];
    let mut block_piece = std::collections::HashMap::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for x in 0..c {
        let p = *block_piece.entry(block[x]).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        piece_of[x] = p;
        members[p].push(x);
    }

    let mut edges = Vec::new();
    for (k, circle) in seifert.circles.iter().enumerate() {
        let seq: Vec<usize> = circle.visits.iter().map(|&(x, _)| piece_of[x]).collect();
        let mut here: Vec<usize> = seq.clone();
        here.sort_unstable();
        here.dedup();
        if here.len() < 2 {
            continue;
        }
        // Half the number of alternations between a and b around the circle.
        let length = |a: usize, b: usize| {
            let s: Vec<usize> = seq.iter().copied().filter(|&p| p == a || p == b).collect();
            (0..s.len())
                .filter(|&i| s[i] != s[(i + 1) % s.len()])
                .count()
                / 2
        };
        let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
        for (i, &a) in here.iter().enumerate() {
            for &b in &here[i + 1..] {
                pairs.push((length(a, b), a, b));
            }
        }
        pairs.sort_by(|x, y| y.0.cmp(&x.0).then((x.1, x.2).cmp(&(y.1, y.2))));
        let mut comp: Vec<usize> = here.clone();
        for (len, a, b) in pairs {
            let ca = comp[here.binary_search(&a).unwrap()];
            let cb = comp[here.binary_search(&b).unwrap()];
            if ca != cb {
                comp.iter_mut().filter(|c| **c == cb).for_each(|c| *c = ca);
                edges.push(SumEdge {
                    a,
                    b,
                    length: len,
                    circle: k,
                });
            }
        }
    }
    edges.sort_by_key(|e| (e.a, e.b, e.circle));

    let pieces = if members.len() == 1 {
        vec![Piece {
            crossings: members.pop().unwrap(),
            diagram: d.clone(),
        }]
    } else {
        members
            .into_iter()
            .map(|keep| {
                let mut raw = d.to_raw();
                for x in (0..c).rev().filter(|x| !keep.contains(x)) {
                    raw = raw.smooth(x);
                }
                raw.free_loops = 0;
                let diagram = raw
                    .into_diagram()
                    .map_err(|_| StructureError::Internal("piece is not a valid diagram"))?;
                Ok(Piece {
                    crossings: keep,
                    diagram,
                })
            })
            .collect::<Result<_, StructureError>>()?
    };
    Ok(Decomposition {
        pieces,
        edges,
        piece_of,
    })
}

/// True when every sum in the decomposition has length below `bound`.
pub fn sums_below(dec: &Decomposition, bound: usize) -> bool {
    dec.edges.iter().all(|e| e.length < bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;
    use crate::invariants::alexander_pd_poly;
    use crate::polyalg::normalize_alexander;

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

    #[test]
    fn trefoil_is_one_piece() {
        let dec = decompose_murasugi(&parse_pd(TREFOIL).unwrap()).unwrap();
        assert_eq!(dec.pieces.len(), 1);
        assert!(dec.edges.is_empty());
        assert!(sums_below(&dec, 1));
    }

    #[test]
    fn figure_eight_is_a_plumbing() {
        let dec = decompose_murasugi(&parse_pd(FIGURE_EIGHT).unwrap()).unwrap();
        assert_eq!(dec.pieces.len(), 2);
        assert_eq!(dec.edges.len(), 1);
        assert_eq!(dec.edges[0].length, 2);
        assert!(sums_below(&dec, 3));
        let signs: Vec<i64> = dec
            .pieces
            .iter()
            .map(|p| p.diagram.writhe().signum())
            .collect();
        assert_eq!(signs.iter().sum::<i64>(), 0);
        for p in &dec.pieces {
            assert!(p.diagram.is_special_alternating());
        }
    }

    #[test]
    fn square_knot_is_a_connected_sum() {
        let t = parse_pd(TREFOIL).unwrap();
        let s = t.connected_sum(&t.mirror()).unwrap();
        let dec = decompose_murasugi(&s).unwrap();
        assert_eq!(dec.pieces.len(), 2);
        assert_eq!(dec.edges.len(), 1);
        assert_eq!(dec.edges[0].length, 1);
        let product = dec
            .pieces
            .iter()
            .fold(crate::polyalg::LaurentPoly::one(), |acc, p| {
                &acc * &alexander_pd_poly(&p.diagram).unwrap()
            });
        assert_eq!(
            normalize_alexander(&product).unwrap(),
            normalize_alexander(&alexander_pd_poly(&s).unwrap()).unwrap()
        );
    }

    #[test]
    fn granny_knot_splits_at_the_cut_circle() {
        let t = parse_pd(TREFOIL).unwrap();
        let dec = decompose_murasugi(&t.connected_sum(&t).unwrap()).unwrap();
        assert_eq!(dec.pieces.len(), 2);
        assert_eq!(dec.edges.iter().map(|e| e.length).collect::<Vec<_>>(), [1]);
    }

    #[test]
    fn doubled_figure_eight_keeps_both_plumbings() {
        let f = parse_pd(FIGURE_EIGHT).unwrap();
        let dec = decompose_murasugi(&f.connected_sum(&f).unwrap()).unwrap();
        assert_eq!(dec.pieces.len(), 4);
        let mut lengths: Vec<usize> = dec.edges.iter().map(|e| e.length).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, [1, 2, 2]);
    }

    #[test]
    fn blocks_of_a_path_with_a_double_edge() {
        // 0 = 1 - 2: the parallel pair is one block, the single edge another.
        let b = seifert_blocks(3, &[(0, 1), (1, 0), (1, 2)]);
        assert_eq!(b[0], b[1]);
        assert_ne!(b[0], b[2]);
    }

    #[test]
    fn synthetic_long_sum_fails_bound() {
        let mut dec = decompose_murasugi(&parse_pd(FIGURE_EIGHT).unwrap()).unwrap();
        dec.edges[0].length = 3;
        assert!(!sums_below(&dec, 3));
        assert!(sums_below(&dec, 4));
    }
}
