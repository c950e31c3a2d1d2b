//! Unvalidated crossing lists with arbitrary arc ids, used while switching
//! and smoothing crossings. Free loops (components with no crossings) are
//! counted separately.

use std::collections::{BTreeMap, HashMap};

use super::{DiagramError, LinkDiagram, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct RawCrossing {
    pub slots: [usize; 4],
    pub sign: Sign,
}

impl RawCrossing {
    pub fn over_in_slot(&self) -> usize {
        if self.sign == Sign::Positive {
            1
        } else {
            3
        }
    }

    pub fn over_out_slot(&self) -> usize {
        if self.sign == Sign::Positive {
            3
        } else {
            1
        }
    }

    pub fn is_incoming(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in_slot()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct RawDiagram {
    pub crossings: Vec<RawCrossing>,
    pub free_loops: usize,
}

/// Head and tail positions of an arc: `(crossing, slot)`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Ends {
    pub head: (usize, usize),
    pub tail: (usize, usize),
}

impl RawDiagram {
    pub fn ends(&self) -> BTreeMap<usize, Ends> {
        let mut heads = HashMap::new();
        let mut tails = HashMap::new();
        for (x, c) in self.crossings.iter().enumerate() {
            for s in 0..4 {
                if c.is_incoming(s) {
                    heads.insert(c.slots[s], (x, s));
                } else {
                    tails.insert(c.slots[s], (x, s));
                }
            }
        }
        heads
            .into_iter()
            .map(|(a, head)| {
                (
                    a,
                    Ends {
                        head,
                        tail: tails[&a],
                    },
                )
            })
            .collect()
    }

    /// Arc that continues after arriving at `(x, s)`.
    pub fn next_arc(&self, (x, s): (usize, usize)) -> usize {
        self.crossings[x].slots[(s + 2) % 4]
    }

    /// Arc walks of each component, started at its smallest arc id, in
    /// order of those ids.
    pub fn component_walks(&self) -> Vec<Vec<usize>> {
        let ends = self.ends();
        let mut seen = std::collections::HashSet::new();
        let mut walks = Vec::new();
        for &start in ends.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut walk = Vec::new();
            let mut a = start;
            loop {
                seen.insert(a);
                walk.push(a);
                a = self.next_arc(ends[&a].head);
                if a == start {
                    break;
                }
            }
            walks.push(walk);
        }
        walks
    }

    /// True when the crossings form one connected piece and there are no
    /// free loops, or when the diagram is a single free loop.
    pub fn is_connected(&self) -> bool {
        if self.crossings.is_empty() {
            return self.free_loops == 1;
        }
        if self.free_loops > 0 {
            return false;
        }
        let ends = self.ends();
        let n = self.crossings.len();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for a in self.crossings[x].slots {
                let e = ends[&a];
                for y in [e.head.0, e.tail.0] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Changes crossing `i` from over to under, keeping orientations.
    pub fn switch(&mut self, i: usize) {
        let c = &mut self.crossings[i];
        let [s0, s1, s2, s3] = c.slots;
        c.slots = match c.sign {
            Sign::Positive => [s1, s2, s3, s0],
            Sign::Negative => [s3, s0, s1, s2],
        };
        c.sign = c.sign.flip();
    }

    /// Oriented smoothing of crossing `i`.
    pub fn smooth(&self, i: usize) -> RawDiagram {
        let c = &self.crossings[i];
        let u_in = c.slots[0];
        let u_out = c.slots[2];
        let o_in = c.slots[c.over_in_slot()];
        let o_out = c.slots[c.over_out_slot()];
        // Merged classes among the four local arcs.
        let mut rep: HashMap<usize, usize> = HashMap::new();
        for a in c.slots {
            rep.insert(a, a);
        }
        fn find(rep: &mut HashMap<usize, usize>, a: usize) -> usize {
            let p = rep[&a];
            if p == a {
                a
            } else {
                let r = find(rep, p);
                rep.insert(a, r);
                r
            }
        }
        let mut join = |a: usize, b: usize| {
            let (ra, rb) = (find(&mut rep, a), find(&mut rep, b));
            if ra != rb {
                rep.insert(ra.max(rb), ra.min(rb));
            }
        };
        join(u_in, o_out);
        join(o_in, u_out);

        let mut crossings: Vec<RawCrossing> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(x, _)| x != i)
            .map(|(_, c)| c.clone())
            .collect();
        let mut used = std::collections::HashSet::new();
        for c in &mut crossings {
            for a in &mut c.slots {
                if rep.contains_key(a) {
                    *a = find(&mut rep, *a);
                    used.insert(*a);
                }
            }
        }
        let mut classes: Vec<usize> = c.slots.iter().map(|&a| find(&mut rep, a)).collect();
        classes.sort_unstable();
        classes.dedup();
        let new_loops = classes.iter().filter(|r| !used.contains(r)).count();
        RawDiagram {
            crossings,
            free_loops: self.free_loops + new_loops,
        }
    }

    /// Relabels arcs consecutively along components and validates.
    pub fn into_diagram(self) -> Result<LinkDiagram, DiagramError> {
        if self.free_loops > 0 || self.crossings.is_empty() {
            return Err(if self.crossings.is_empty() {
                DiagramError::Empty
            } else {
                DiagramError::Split
            });
        }
        let walks = self.component_walks();
        let mut label = HashMap::new();
        for a in walks.iter().flatten() {
            let k = label.len();
            label.insert(*a, k);
        }
        let tuples = self
            .crossings
            .iter()
            .map(|c| c.slots.map(|a| label[&a]))
            .collect();
        let signs = self.crossings.iter().map(|c| c.sign).collect();
        LinkDiagram::assemble(tuples, signs)
    }

    /// Canonical form up to relabeling arcs and reordering crossings:
    /// relabel by traversal from each possible start arc, keep the least.
    pub fn canonical_key(&self) -> (usize, Vec<([usize; 4], bool)>) {
        let ends = self.ends();
        let walks = self.component_walks();
        let comp_of: HashMap<usize, usize> = walks
            .iter()
            .enumerate()
            .flat_map(|(i, w)| w.iter().map(move |&a| (a, i)))
            .collect();
        let mut best: Option<Vec<([usize; 4], bool)>> = None;
        for &start in ends.keys() {
            let mut label = HashMap::new();
            let mut order = vec![comp_of[&start]];
            let mut cursor = start;
            let mut done = vec![false; walks.len()];
            loop {
                // Walk the current component from `cursor`.
                let mut a = cursor;
                loop {
                    let k = label.len();
                    label.insert(a, k);
                    a = self.next_arc(ends[&a].head);
                    if a == cursor {
                        break;
                    }
                }
                done[comp_of[&cursor]] = true;
                // Next component: first unlabeled arc met at a crossing of a
                // labeled arc, in label order.
                let mut labeled: Vec<(usize, usize)> =
                    label.iter().map(|(&a, &k)| (k, a)).collect();
                labeled.sort_unstable();
                let next = labeled.iter().find_map(|&(_, a)| {
                    let (x, _) = ends[&a].head;
                    self.crossings[x]
                        .slots
                        .iter()
                        .copied()
                        .find(|b| !label.contains_key(b))
                });
                match next {
                    Some(b) => {
                        cursor = b;
                        order.push(comp_of[&b]);
                    }
                    None => {
                        if let Some(ci) = done.iter().position(|d| !d) {
                            cursor = walks[ci][0];
                            order.push(ci);
                        } else {
                            break;
                        }
                    }
                }
            }
            let mut code: Vec<([usize; 4], bool)> = self
                .crossings
                .iter()
                .map(|c| (c.slots.map(|a| label[&a]), c.sign == Sign::Positive))
                .collect();
            code.sort_unstable();
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
        (self.free_loops, best.unwrap_or_default())
    }
}
