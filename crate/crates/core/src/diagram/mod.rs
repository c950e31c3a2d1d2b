//! Oriented planar link diagrams.
//!
//! A crossing is stored as its PD tuple `(a, b, c, d)`: the labels of the
//! four incident arcs in cyclic order, starting with the incoming
//! under-strand. The under-strand runs `a -> c`. The over-strand runs
//! `b -> d` on positive crossings and `d -> b` on negative ones; the cyclic
//! order is read clockwise, which makes that sign rule the geometric one.
//!
//! Internally arcs are 0-based (`label - 1`) and slots are numbered 0..4 in
//! the order of the PD tuple. Corner `k` of a crossing is the angle between
//! slots `k` and `k + 1`.

mod braid;
mod pd;
pub(crate) mod raw;
mod seifert;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use braid::{braid_closure, parse_braid, BraidWord};
pub use pd::parse_pd;
pub use seifert::{seifert_circles, SeifertCircle, SeifertData, Side};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("empty diagram")]
    Empty,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("arc labels must be 1..={expected}, found {found}")]
    LabelRange { expected: usize, found: usize },
    #[error("arc label {label} appears {count} times, expected exactly 2")]
    LabelCount { label: usize, count: usize },
    #[error("crossing {crossing}: {msg}")]
    Orientation { crossing: usize, msg: String },
    #[error("split diagram: the diagram graph is disconnected")]
    Split,
    #[error("not planar: {faces} faces for {crossings} crossings")]
    NonPlanar { faces: usize, crossings: usize },
    #[error("invalid braid: {0}")]
    Braid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    labels: [usize; 4],
    sign: Sign,
}

impl Crossing {
    /// 1-based PD labels.
    pub fn labels(&self) -> [usize; 4] {
        self.labels.map(|a| a + 1)
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub(crate) fn arc(&self, slot: usize) -> usize {
        self.labels[slot]
    }

    pub fn over_in_slot(&self) -> usize {
        match self.sign {
            Sign::Positive => 1,
            Sign::Negative => 3,
        }
    }

    pub fn over_out_slot(&self) -> usize {
        match self.sign {
            Sign::Positive => 3,
            Sign::Negative => 1,
        }
    }

    pub fn is_incoming(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in_slot()
    }

    pub fn is_over(slot: usize) -> bool {
        slot % 2 == 1
    }

    /// Corners merged by the oriented smoothing (between two incoming or two
    /// outgoing strands): `{0, 2}` on positive crossings, `{1, 3}` otherwise.
    pub fn merged_corner_parity(&self) -> usize {
        match self.sign {
            Sign::Positive => 0,
            Sign::Negative => 1,
        }
    }
}

/// A position on a crossing: `(crossing index, slot)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoint {
    pub crossing: usize,
    pub slot: usize,
}

/// A face of the planar diagram, as the corners it occupies in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub corners: Vec<Endpoint>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.corners.len()
    }
}

/// Validated, connected, oriented planar link diagram.
#[derive(Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    tails: Vec<Endpoint>,
    heads: Vec<Endpoint>,
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
    faces: Vec<Face>,
    corner_face: Vec<[usize; 4]>,
    arc_faces: Vec<[usize; 2]>,
    face_color: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramPredicates {
    pub is_alternating: bool,
    pub is_reduced: bool,
    pub is_special_alternating: bool,
    pub component_count: usize,
    pub writhe: i64,
}

impl LinkDiagram {
    /// Builds a diagram from 0-based arc tuples with known signs. Checks arc
    /// multiplicities, orientation consistency, connectivity and planarity.
    pub(crate) fn assemble(
        tuples: Vec<[usize; 4]>,
        signs: Vec<Sign>,
    ) -> Result<Self, DiagramError> {
        let c = tuples.len();
        if c == 0 {
            return Err(DiagramError::Empty);
        }
        let n_arcs = 2 * c;
        let crossings: Vec<Crossing> = tuples
            .into_iter()
            .zip(signs)
            .map(|(labels, sign)| Crossing { labels, sign })
            .collect();

        let mut tails = vec![None; n_arcs];
        let mut heads = vec![None; n_arcs];
        for (x, cr) in crossings.iter().enumerate() {
            for (slot, &a) in cr.labels.iter().enumerate() {
                if a >= n_arcs {
                    return Err(DiagramError::LabelRange {
                        expected: n_arcs,
                        found: a + 1,
                    });
                }
                let side = if cr.is_incoming(slot) {
                    &mut heads
                } else {
                    &mut tails
                };
                if side[a].replace(Endpoint { crossing: x, slot }).is_some() {
                    return Err(DiagramError::Orientation {
                        crossing: x + 1,
                        msg: format!(
                            "arc {} is {} twice",
                            a + 1,
                            if cr.is_incoming(slot) {
                                "incoming"
                            } else {
                                "outgoing"
                            }
                        ),
                    });
                }
            }
        }
        let tails: Vec<Endpoint> =
            tails
                .into_iter()
                .collect::<Option<_>>()
                .ok_or(DiagramError::Orientation {
                    crossing: 0,
                    msg: "some arc has no outgoing end".into(),
                })?;
        let heads: Vec<Endpoint> =
            heads
                .into_iter()
                .collect::<Option<_>>()
                .ok_or(DiagramError::Orientation {
                    crossing: 0,
                    msg: "some arc has no incoming end".into(),
                })?;

        // Components: follow each arc through its head crossing.
        let mut component_of = vec![usize::MAX; n_arcs];
        let mut components = Vec::new();
        for start in 0..n_arcs {
            if component_of[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut walk = Vec::new();
            let mut a = start;
            loop {
                component_of[a] = id;
                walk.push(a);
                let h = heads[a];
                a = crossings[h.crossing].labels[(h.slot + 2) % 4];
                if a == start {
                    break;
                }
            }
            components.push(walk);
        }

        let mut d = Self {
            crossings,
            tails,
            heads,
            components,
            component_of,
            faces: Vec::new(),
            corner_face: Vec::new(),
            arc_faces: Vec::new(),
            face_color: Vec::new(),
        };
        if !d.crossing_graph_connected() {
            return Err(DiagramError::Split);
        }
        d.trace_faces();
        if d.faces.len() != c + 2 {
            return Err(DiagramError::NonPlanar {
                faces: d.faces.len(),
                crossings: c,
            });
        }
        d.color_faces();
        Ok(d)
    }

    fn crossing_graph_connected(&self) -> bool {
        let c = self.crossings.len();
        let mut seen = vec![false; c];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &a in &self.crossings[x].labels {
                for y in [self.heads[a].crossing, self.tails[a].crossing] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The other end of the arc sitting at `e`.
    fn across(&self, e: Endpoint) -> Endpoint {
        let a = self.crossings[e.crossing].labels[e.slot];
        if self.heads[a] == e {
            self.tails[a]
        } else {
            self.heads[a]
        }
    }

    fn trace_faces(&mut self) {
        let c = self.crossings.len();
        let mut corner_face = vec![[usize::MAX; 4]; c];
        let mut arc_faces = vec![[usize::MAX; 2]; 2 * c];
        let mut faces = Vec::new();
        for x0 in 0..c {
            for s0 in 0..4 {
                // Leaving (x0, s0) arrives at some corner; start faces from unused ones.
                let first = self.across(Endpoint {
                    crossing: x0,
                    slot: s0,
                });
                if corner_face[first.crossing][first.slot] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut corners = Vec::new();
                let mut leave = Endpoint {
                    crossing: x0,
                    slot: s0,
                };
                loop {
                    let arrive = self.across(leave);
                    if corner_face[arrive.crossing][arrive.slot] != usize::MAX {
                        break;
                    }
                    let a = self.crossings[leave.crossing].labels[leave.slot];
                    let side = if self.tails[a] == leave { 0 } else { 1 };
                    arc_faces[a][side] = id;
                    corner_face[arrive.crossing][arrive.slot] = id;
                    corners.push(arrive);
                    leave = Endpoint {
                        crossing: arrive.crossing,
                        slot: (arrive.slot + 1) % 4,
                    };
                }
                faces.push(Face { corners });
            }
        }
        self.faces = faces;
        self.corner_face = corner_face;
        self.arc_faces = arc_faces;
    }

    fn color_faces(&mut self) {
        let n = self.faces.len();
        let mut adj = vec![Vec::new(); n];
        for &[f, g] in &self.arc_faces {
            adj[f].push(g);
            adj[g].push(f);
        }
        let mut color = vec![u8::MAX; n];
        color[0] = 0;
        let mut stack = vec![0];
        while let Some(f) = stack.pop() {
            for &g in &adj[f] {
                if color[g] == u8::MAX {
                    color[g] = 1 - color[f];
                    stack.push(g);
                }
                debug_assert_ne!(color[g], color[f], "face adjacency is not bipartite");
            }
        }
        self.face_color = color;
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.heads.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Arcs (0-based) of each component in orientation order.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_of(&self, arc: usize) -> usize {
        self.component_of[arc]
    }

    /// Where arc `a` (0-based) ends.
    pub fn head(&self, a: usize) -> Endpoint {
        self.heads[a]
    }

    /// Where arc `a` (0-based) starts.
    pub fn tail(&self, a: usize) -> Endpoint {
        self.tails[a]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Face occupying corner `k` of crossing `x`.
    pub fn corner_face(&self, x: usize, k: usize) -> usize {
        self.corner_face[x][k]
    }

    /// The two faces on either side of arc `a`.
    pub fn arc_faces(&self, a: usize) -> [usize; 2] {
        self.arc_faces[a]
    }

    /// Checkerboard color (0 or 1) of a face.
    pub fn face_color(&self, f: usize) -> u8 {
        self.face_color[f]
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    /// True when every arc runs from an over-pass to an under-pass or back.
    pub fn is_alternating(&self) -> bool {
        (0..self.arc_count()).all(|a| {
            let t = self.tails[a];
            let h = self.heads[a];
            Crossing::is_over(t.slot) != Crossing::is_over(h.slot)
        })
    }

    /// Crossings that meet one face in two opposite corners. Such a crossing
    /// separates the diagram graph once its vertex is split.
    pub fn nugatory_crossings(&self) -> Vec<usize> {
        (0..self.crossings.len())
            .filter(|&x| {
                let f = &self.corner_face[x];
                f[0] == f[2] || f[1] == f[3]
            })
            .collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.nugatory_crossings().is_empty()
    }

    pub fn is_special_alternating(&self) -> bool {
        self.is_alternating() && self.crossings.iter().map(|c| c.sign).all_equal_sign()
    }

    pub fn predicates(&self) -> DiagramPredicates {
        DiagramPredicates {
            is_alternating: self.is_alternating(),
            is_reduced: self.is_reduced(),
            is_special_alternating: self.is_special_alternating(),
            component_count: self.component_count(),
            writhe: self.writhe(),
        }
    }

    /// Switches every crossing.
    pub fn mirror(&self) -> Self {
        let mut raw = self.to_raw();
        for i in 0..raw.crossings.len() {
            raw.switch(i);
        }
        raw.into_diagram()
            .expect("mirror of a valid diagram is valid")
    }

    /// PD-level connected sum. Cuts an over-to-under arc in each diagram and
    /// reconnects across, which keeps alternating inputs alternating.
    pub fn connected_sum(&self, other: &Self) -> Result<Self, DiagramError> {
        let pick = |d: &Self| -> usize {
            (0..d.arc_count())
                .find(|&a| {
                    Crossing::is_over(d.tails[a].slot) && !Crossing::is_over(d.heads[a].slot)
                })
                .unwrap_or(0)
        };
        let e1 = pick(self);
        let e2 = pick(other);
        let offset = self.arc_count();
        let mut raw = self.to_raw();
        let mut second = other.to_raw();
        for c in &mut second.crossings {
            for a in &mut c.slots {
                *a += offset;
            }
        }
        let e2 = e2 + offset;
        // e1 now ends where e2 ended, and e2 ends where e1 ended.
        let h1 = self.heads[e1];
        let h2 = other.heads[e2 - offset];
        raw.crossings[h1.crossing].slots[h1.slot] = e2;
        second.crossings[h2.crossing].slots[h2.slot] = e1;
        raw.crossings.extend(second.crossings);
        raw.into_diagram()
    }

    /// 1-based PD tuples.
    pub fn pd_code(&self) -> Vec<[usize; 4]> {
        self.crossings.iter().map(Crossing::labels).collect()
    }

    pub(crate) fn to_raw(&self) -> raw::RawDiagram {
        raw::RawDiagram {
            crossings: self
                .crossings
                .iter()
                .map(|c| raw::RawCrossing {
                    slots: c.labels,
                    sign: c.sign,
                })
                .collect(),
            free_loops: 0,
        }
    }
}

trait AllEqual {
    fn all_equal_sign(self) -> bool;
}

impl<I: Iterator<Item = Sign>> AllEqual for I {
    fn all_equal_sign(mut self) -> bool {
        match self.next() {
            None => true,
            Some(s) => self.all(|t| t == s),
        }
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pd_code()
            .iter()
            .map(|[a, b, c, d]| format!("X({a},{b},{c},{d})"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinkDiagram[{self}]")
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    // Standard figure-eight diagram in the same PD convention.
    pub(crate) const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

    #[test]
    fn trefoil_basics() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 3);
        assert_eq!(d.faces().len(), 5);
        let p = d.predicates();
        assert!(p.is_alternating && p.is_reduced && p.is_special_alternating);
    }

    #[test]
    fn figure_eight_predicates() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let p = d.predicates();
        assert!(p.is_alternating && p.is_reduced);
        assert!(!p.is_special_alternating);
        assert_eq!(p.writhe, 0);
    }

    #[test]
    fn kink_is_not_reduced() {
        // Markov stabilization of the trefoil braid adds one kink.
        let d = braid_closure(&parse_braid("3 ; 1 1 1 2").unwrap()).unwrap();
        assert!(!d.is_reduced());
        assert_eq!(d.nugatory_crossings(), vec![3]);
        assert!(parse_pd(TREFOIL).unwrap().is_reduced());
    }

    #[test]
    fn one_crossing_unknot() {
        let d = parse_pd("X(1,2,2,1)").unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.faces().len(), 3);
        assert!(!d.is_reduced());
    }

    #[test]
    fn mirror_is_involution() {
        for code in [TREFOIL, FIGURE_EIGHT] {
            let d = parse_pd(code).unwrap();
            let m = d.mirror();
            assert_eq!(m.writhe(), -d.writhe());
            assert_eq!(m.is_alternating(), d.is_alternating());
            assert_eq!(m.mirror(), d);
        }
    }

    #[test]
    fn checkerboard_is_proper() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        for a in 0..d.arc_count() {
            let [f, g] = d.arc_faces(a);
            assert_ne!(d.face_color(f), d.face_color(g));
        }
        for x in 0..d.crossing_count() {
            assert_eq!(
                d.face_color(d.corner_face(x, 0)),
                d.face_color(d.corner_face(x, 2))
            );
            assert_ne!(
                d.face_color(d.corner_face(x, 0)),
                d.face_color(d.corner_face(x, 1))
            );
        }
    }

    #[test]
    fn connected_sum_of_trefoils() {
        let t = parse_pd(TREFOIL).unwrap();
        let s = t.connected_sum(&t.mirror()).unwrap();
        assert_eq!(s.crossing_count(), 6);
        assert_eq!(s.component_count(), 1);
        assert!(s.is_alternating());
        assert!(s.is_reduced());
        assert_eq!(s.writhe(), 0);
        let g = t.connected_sum(&t).unwrap();
        assert!(g.is_special_alternating());
    }
}
