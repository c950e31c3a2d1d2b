use serde::Serialize;

use super::{LinkDiagram, Sign};

/// Which side of a Seifert circle, looking along its orientation, the
/// neighbouring circle at a crossing lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// A Seifert circle: its arcs in orientation order and the crossings it
/// passes, each with the side on which the partner circle sits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertCircle {
    pub arcs: Vec<usize>,
    pub visits: Vec<(usize, Side)>,
}

/// Seifert circles and the Seifert graph: one edge per crossing joining the
/// circles through its two smoothed corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    pub circles: Vec<SeifertCircle>,
    /// For each crossing, the circle leaving through the under-out slot and
    /// the one leaving through the over-out slot.
    pub edges: Vec<(usize, usize)>,
    pub signs: Vec<Sign>,
    /// Circle containing each arc.
    pub circle_of_arc: Vec<usize>,
}

impl SeifertData {
    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge multiplicities between unordered pairs of circles.
    pub fn multiplicities(&self) -> std::collections::BTreeMap<(usize, usize), usize> {
        let mut m = std::collections::BTreeMap::new();
        for &(a, b) in &self.edges {
            *m.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        m
    }

    pub fn is_graph_connected(&self) -> bool {
        let n = self.circles.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Proper 2-colouring of the Seifert graph, which is bipartite for
    /// planar diagrams.
    pub fn bipartition(&self) -> Vec<u8> {
        let n = self.circles.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    }
                }
            }
        }
        color
    }
}

/// Oriented smoothing of every crossing. Diagrams are connected by
/// construction, so the Seifert graph is too.
pub fn seifert_circles(d: &LinkDiagram) -> SeifertData {
    let n_arcs = d.arc_count();
    let mut circle_of_arc = vec![usize::MAX; n_arcs];
    let mut circles = Vec::new();
    let mut edges = vec![(usize::MAX, usize::MAX); d.crossing_count()];
    for start in 0..n_arcs {
        if circle_of_arc[start] != usize::MAX {
            continue;
        }
        let id = circles.len();
        let mut arcs = Vec::new();
        let mut visits = Vec::new();
        let mut a = start;
        loop {
            circle_of_arc[a] = id;
            arcs.push(a);
            let h = d.head(a);
            let c = &d.crossings()[h.crossing];
            let positive = c.sign() == Sign::Positive;
            let (out_slot, side) = if h.slot == 0 {
                (
                    c.over_out_slot(),
                    if positive { Side::Left } else { Side::Right },
                )
            } else {
                (2, if positive { Side::Right } else { Side::Left })
            };
            visits.push((h.crossing, side));
            if out_slot == 2 {
                edges[h.crossing].0 = id;
            } else {
                edges[h.crossing].1 = id;
            }
            a = c.arc(out_slot);
            if a == start {
                break;
            }
        }
        circles.push(SeifertCircle { arcs, visits });
    }
    let signs = d.crossings().iter().map(|c| c.sign()).collect();
    SeifertData {
        circles,
        edges,
        signs,
        circle_of_arc,
    }
}
