use std::fmt;
use std::str::FromStr;

use super::raw::{RawCrossing, RawDiagram};
use super::{DiagramError, LinkDiagram, Sign};

/// Word in the Artin generators of the braid group on `n` strands. Letter
/// `i > 0` is `sigma_i`, `i < 0` is `sigma_|i|^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self, DiagramError> {
        if strands < 2 {
            return Err(DiagramError::Braid(format!(
                "need at least 2 strands, got {strands}"
            )));
        }
        if word.is_empty() {
            return Err(DiagramError::Braid("empty word".into()));
        }
        if let Some(&bad) = word
            .iter()
            .find(|&&i| i == 0 || i.unsigned_abs() as usize >= strands)
        {
            return Err(DiagramError::Braid(format!(
                "generator {bad} out of range for {strands} strands"
            )));
        }
        Ok(Self { strands, word })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    /// Permutation induced on strand positions, as images of `0..n`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &i in &self.word {
            let k = i.unsigned_abs() as usize - 1;
            at.swap(k, k + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    pub fn cycle_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for s in 0..perm.len() {
            if !seen[s] {
                cycles += 1;
                let mut j = s;
                while !seen[j] {
                    seen[j] = true;
                    j = perm[j];
                }
            }
        }
        cycles
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            word: self.word.iter().rev().map(|i| -i).collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ;", self.strands)?;
        for i in &self.word {
            write!(f, " {i}")?;
        }
        Ok(())
    }
}

/// Parses `n ; i1 i2 ... ik`.
pub fn parse_braid(text: &str) -> Result<BraidWord, DiagramError> {
    let (n, w) = text
        .split_once(';')
        .ok_or_else(|| DiagramError::Braid("expected `n ; word`".into()))?;
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| DiagramError::Braid(format!("bad strand count `{}`", n.trim())))?;
    let word = w
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<i32>()
                .map_err(|_| DiagramError::Braid(format!("bad letter `{s}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    BraidWord::new(n, word)
}

impl FromStr for BraidWord {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_braid(s)
    }
}

impl BraidWord {
    pub(crate) fn closure_raw(&self) -> RawDiagram {
        let n = self.strands;
        let mut cur: Vec<usize> = (0..n).collect();
        let mut next_id = n;
        let mut crossings = Vec::with_capacity(self.word.len());
        for &letter in &self.word {
            let i = letter.unsigned_abs() as usize - 1;
            let (l, r) = (cur[i], cur[i + 1]);
            let (l2, r2) = (next_id, next_id + 1);
            next_id += 2;
            // `l2` and `r2` are the arcs leaving at positions i and i+1.
            let c = if letter > 0 {
                RawCrossing {
                    slots: [r, l, l2, r2],
                    sign: Sign::Positive,
                }
            } else {
                RawCrossing {
                    slots: [l, l2, r2, r],
                    sign: Sign::Negative,
                }
            };
            crossings.push(c);
            cur[i] = l2;
            cur[i + 1] = r2;
        }
        // Close up: the arc leaving the top at position p is the one that
        // entered the bottom at p.
        let mut free_loops = 0;
        let mut rename = std::collections::HashMap::new();
        for (p, &top) in cur.iter().enumerate() {
            if top == p {
                free_loops += 1;
            } else {
                rename.insert(top, p);
            }
        }
        for c in &mut crossings {
            for a in &mut c.slots {
                if let Some(&p) = rename.get(a) {
                    *a = p;
                }
            }
        }
        RawDiagram {
            crossings,
            free_loops,
        }
    }
}

/// Standard closure of a braid, as a PD-coded diagram. Words whose closure
/// is split (a strand never crosses, or the strands fall into separate
/// groups) are rejected.
pub fn braid_closure(b: &BraidWord) -> Result<LinkDiagram, DiagramError> {
    let raw = b.closure_raw();
    if raw.free_loops > 0 {
        return Err(DiagramError::Split);
    }
    raw.into_diagram()
}
