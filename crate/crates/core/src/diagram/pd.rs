use super::{DiagramError, LinkDiagram, Sign};

fn parse_err(pos: usize, msg: impl Into<String>) -> DiagramError {
    DiagramError::Parse {
        pos,
        msg: msg.into(),
    }
}

/// Tokenizes `X(a,b,c,d)` groups; also accepts the `[[a,b,c,d],...]` and
/// `{{a,b,c,d},...}` list notations by treating brackets as separators.
fn tokenize(text: &str) -> Result<Vec<[usize; 4]>, DiagramError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        return tokenize_nested(text);
    }
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() || b == b',' {
            i += 1;
            continue;
        }
        if b != b'X' && b != b'x' {
            return Err(parse_err(
                i,
                format!("expected `X(`, found `{}`", b as char),
            ));
        }
        i += 1;
        if bytes.get(i) != Some(&b'(') {
            return Err(parse_err(i, "expected `(` after `X`"));
        }
        i += 1;
        let close = text[i..]
            .find(')')
            .ok_or_else(|| parse_err(i, "unclosed `(`"))?
            + i;
        let mut labels = [0usize; 4];
        let mut k = 0;
        let mut off = i;
        for part in text[i..close].split(',') {
            if k == 4 {
                return Err(parse_err(off, "crossing has more than 4 labels"));
            }
            let v: usize = part
                .trim()
                .parse()
                .map_err(|_| parse_err(off, format!("bad label `{}`", part.trim())))?;
            if v == 0 {
                return Err(parse_err(off, "labels start at 1"));
            }
            labels[k] = v;
            k += 1;
            off += part.len() + 1;
        }
        if k != 4 {
            return Err(parse_err(i, "crossing needs exactly 4 labels"));
        }
        out.push(labels);
        i = close + 1;
    }
    Ok(out)
}

fn tokenize_nested(text: &str) -> Result<Vec<[usize; 4]>, DiagramError> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut num = None::<(usize, usize)>;
    let mut depth = 0i32;
    for (pos, ch) in text
        .char_indices()
        .chain(std::iter::once((text.len(), ' ')))
    {
        if let Some(d) = ch.to_digit(10) {
            let (start, v) = num.unwrap_or((pos, 0));
            num = Some((start, v * 10 + d as usize));
            continue;
        }
        if let Some((start, v)) = num.take() {
            if depth != 2 {
                return Err(parse_err(start, "label outside a crossing"));
            }
            if v == 0 {
                return Err(parse_err(start, "labels start at 1"));
            }
            cur.push(v);
        }
        match ch {
            '[' | '{' => depth += 1,
            ']' | '}' => {
                if depth == 2 {
                    let q: [usize; 4] = cur
                        .as_slice()
                        .try_into()
                        .map_err(|_| parse_err(pos, "crossing needs exactly 4 labels"))?;
                    out.push(q);
                    cur.clear();
                }
                depth -= 1;
                if depth < 0 {
                    return Err(parse_err(pos, "unbalanced bracket"));
                }
            }
            ',' => {}
            c if c.is_whitespace() => {}
            c => return Err(parse_err(pos, format!("unexpected `{c}`"))),
        }
    }
    if depth != 0 {
        return Err(parse_err(text.len(), "unbalanced bracket"));
    }
    Ok(out)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Parses a PD code and assigns signs by the label-successor rule.
///
/// Labels must run consecutively along each component; the successor of
/// the last label of a component is its first label.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let tuples = tokenize(text)?;
    if tuples.is_empty() {
        return Err(DiagramError::Empty);
    }
    let n = 2 * tuples.len();
    let mut count = vec![0usize; n + 1];
    for q in &tuples {
        for &a in q {
            if a > n {
                return Err(DiagramError::LabelRange {
                    expected: n,
                    found: a,
                });
            }
            count[a] += 1;
        }
    }
    if let Some(label) = (1..=n).find(|&a| count[a] != 2) {
        return Err(DiagramError::LabelCount {
            label,
            count: count[label],
        });
    }

    // Components are unions of the strands a->c and b<->d.
    let mut uf = UnionFind((0..=n).collect());
    for q in &tuples {
        uf.union(q[0], q[2]);
        uf.union(q[1], q[3]);
    }
    let mut lo = vec![usize::MAX; n + 1];
    let mut hi = vec![0; n + 1];
    for a in 1..=n {
        let r = uf.find(a);
        lo[r] = lo[r].min(a);
        hi[r] = hi[r].max(a);
    }
    let mut size = vec![0; n + 1];
    for a in 1..=n {
        size[uf.find(a)] += 1;
    }
    for a in 1..=n {
        let r = uf.find(a);
        if hi[r] - lo[r] + 1 != size[r] {
            return Err(DiagramError::Orientation {
                crossing: 0,
                msg: format!("labels of the component containing {a} are not consecutive"),
            });
        }
    }
    let succ = |uf: &mut UnionFind, a: usize| {
        let r = uf.find(a);
        if a == hi[r] {
            lo[r]
        } else {
            a + 1
        }
    };

    for (x, q) in tuples.iter().enumerate() {
        if q[0] == q[2] || q[1] == q[3] {
            return Err(DiagramError::Orientation {
                crossing: x + 1,
                msg: "strand enters and exits on one arc".into(),
            });
        }
        if succ(&mut uf, q[0]) != q[2] {
            return Err(DiagramError::Orientation {
                crossing: x + 1,
                msg: format!(
                    "under-strand {} -> {} is not along the orientation",
                    q[0], q[2]
                ),
            });
        }
    }

    // Two-label components have b -> d and d -> b both consistent with the
    // successor rule; settle them by requiring one head and one tail per arc.
    let mut sign: Vec<Option<Sign>> = tuples
        .iter()
        .map(|q| {
            let fwd = succ(&mut uf, q[1]) == q[3];
            let bwd = succ(&mut uf, q[3]) == q[1];
            match (fwd, bwd) {
                (true, false) => Some(Some(Sign::Positive)),
                (false, true) => Some(Some(Sign::Negative)),
                (true, true) => Some(None),
                (false, false) => None,
            }
        })
        .enumerate()
        .map(|(x, s)| {
            s.ok_or_else(|| DiagramError::Orientation {
                crossing: x + 1,
                msg: format!(
                    "over-strand {} / {} are not consecutive labels",
                    tuples[x][1], tuples[x][3]
                ),
            })
        })
        .collect::<Result<_, _>>()?;

    loop {
        let mut heads = vec![0usize; n + 1];
        let mut tails = vec![0usize; n + 1];
        for (q, s) in tuples.iter().zip(&sign) {
            heads[q[0]] += 1;
            tails[q[2]] += 1;
            if let Some(s) = s {
                let (i, o) = if *s == Sign::Positive {
                    (q[1], q[3])
                } else {
                    (q[3], q[1])
                };
                heads[i] += 1;
                tails[o] += 1;
            }
        }
        let mut changed = false;
        let mut pending = None;
        for (x, q) in tuples.iter().enumerate() {
            if sign[x].is_some() {
                continue;
            }
            pending.get_or_insert(x);
            if heads[q[1]] > 0 || tails[q[3]] > 0 {
                sign[x] = Some(Sign::Negative);
                changed = true;
            } else if heads[q[3]] > 0 || tails[q[1]] > 0 {
                sign[x] = Some(Sign::Positive);
                changed = true;
            }
        }
        match (changed, pending) {
            (_, None) => break,
            (true, _) => continue,
            (false, Some(x)) => sign[x] = Some(Sign::Positive),
        }
    }

    let zero_based = tuples.iter().map(|q| q.map(|a| a - 1)).collect();
    LinkDiagram::assemble(zero_based, sign.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_is_rejected() {
        assert_eq!(parse_pd(""), Err(DiagramError::Empty));
        assert_eq!(parse_pd("   "), Err(DiagramError::Empty));
    }

    #[test]
    fn triple_label_is_rejected() {
        let e = parse_pd("X(1,4,2,5) X(1,6,4,1) X(5,2,6,3)").unwrap_err();
        assert!(matches!(e, DiagramError::LabelCount { label: 1, count: 3 }));
    }

    #[test]
    fn malformed_token_reports_position() {
        match parse_pd("X(1,4,2,5) Y(3,6,4,1)") {
            Err(DiagramError::Parse { pos, .. }) => assert_eq!(pos, 11),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_pd("X(1,4,2)"),
            Err(DiagramError::Parse { .. })
        ));
        assert!(matches!(
            parse_pd("X(1,4,2,5"),
            Err(DiagramError::Parse { .. })
        ));
    }

    #[test]
    fn list_notations() {
        let a = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let b = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap();
        let c = parse_pd("{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn hopf_link_two_label_components() {
        let d = parse_pd("{{4, 1, 3, 2}, {2, 3, 1, 4}}").unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.writhe(), 2);
        let m = parse_pd("X(1,3,2,4) X(2,3,1,4)");
        // Over-strands would both run 3 -> 4 and 4 -> 3 consistently only one way.
        assert!(m.is_ok());
    }

    #[test]
    fn non_successor_under_strand() {
        assert!(matches!(
            parse_pd("X(1,4,3,5) X(2,6,4,1) X(5,2,6,3)"),
            Err(DiagramError::Orientation { .. }) | Err(DiagramError::LabelCount { .. })
        ));
    }
}
