use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::conjectures::{
    fox_milnor, hm_check, is_trapezoidal, leading_inequalities, peak_indices, ratio_scan,
    verify_factor, ConcordanceCert, RatioStats, TrapezoidFailure, Violation,
};
use crate::invariants::{alexander_pd, genus_alternating, signature};
use crate::polyalg::CoeffSeq;
use crate::structure::{decompose_murasugi, is_twist_concentrated};

use super::CensusEntry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Trapezoidal shape of the coefficient sequence.
    Fox,
    Hm,
    Twist,
    Decompose,
    FoxMilnor,
    Ratios,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Fox,
        Check::Hm,
        Check::Twist,
        Check::Decompose,
        Check::FoxMilnor,
        Check::Ratios,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Fox => "fox",
            Check::Hm => "hm",
            Check::Twist => "twist",
            Check::Decompose => "decompose",
            Check::FoxMilnor => "foxmilnor",
            Check::Ratios => "ratios",
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown check `{0}` (expected fox, hm, twist, decompose, foxmilnor, ratios)")]
pub struct UnknownCheck(pub String);

impl FromStr for Check {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| UnknownCheck(s.to_string()))
    }
}

/// Subset of [`Check`]s to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckSet(u8);

impl CheckSet {
    pub fn all() -> Self {
        Self(0b11_1111)
    }

    pub fn none() -> Self {
        Self(0)
    }

    pub fn with(self, c: Check) -> Self {
        Self(self.0 | 1 << c as u8)
    }

    pub fn contains(self, c: Check) -> bool {
        self.0 & (1 << c as u8) != 0
    }
}

impl Default for CheckSet {
    fn default() -> Self {
        Self::all()
    }
}

impl FromStr for CheckSet {
    type Err = UnknownCheck;

    /// Comma-separated check names.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .try_fold(Self::none(), |acc, t| Ok(acc.with(t.parse()?)))
    }
}

impl fmt::Display for CheckSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = Check::ALL
            .into_iter()
            .filter(|c| self.contains(*c))
            .map(Check::name)
            .collect();
        f.write_str(&names.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionSummary {
    pub pieces: usize,
    pub max_sum_length: usize,
}

/// Everything the sweep learns about one census entry. A field is `null`
/// when its check was not requested or a precondition failed; the reason
/// for the latter is recorded in `notes`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkReport {
    pub name: String,
    pub coefficients: Option<CoeffSeq>,
    pub trapezoidal: Option<bool>,
    pub trapezoid_failure: Option<TrapezoidFailure>,
    pub signature: Option<i64>,
    pub i0: Option<usize>,
    pub sl: Option<usize>,
    pub hm_holds: Option<bool>,
    pub hm_sharp: Option<bool>,
    pub mt: Option<usize>,
    pub twist_concentrated: Option<bool>,
    pub guaranteed_prefix: Option<usize>,
    pub decomposition: Option<DecompositionSummary>,
    pub fox_milnor: Option<ConcordanceCert>,
    pub ratios: Option<RatioStats>,
    pub notes: Vec<String>,
    /// Microseconds per stage; only filled on request since it breaks
    /// byte-for-byte reproducibility.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<&'static str, u64>>,
}

impl LinkReport {
    fn empty(name: &str) -> Self {
        Self {
            name: name.to_string(),
            coefficients: None,
            trapezoidal: None,
            trapezoid_failure: None,
            signature: None,
            i0: None,
            sl: None,
            hm_holds: None,
            hm_sharp: None,
            mt: None,
            twist_concentrated: None,
            guaranteed_prefix: None,
            decomposition: None,
            fox_milnor: None,
            ratios: None,
            notes: Vec::new(),
            timings: None,
        }
    }

    /// True when the entry could not be checked at all.
    pub fn has_precondition_failure(&self) -> bool {
        self.notes.iter().any(|n| n.starts_with("precondition"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryOutcome {
    pub report: LinkReport,
    pub violations: Vec<Violation>,
}

struct Clock {
    on: bool,
    times: BTreeMap<&'static str, u64>,
}

impl Clock {
    fn time<T>(&mut self, stage: &'static str, f: impl FnOnce() -> T) -> T {
        if !self.on {
            return f();
        }
        let start = Instant::now();
        let out = f();
        self.times.insert(stage, start.elapsed().as_micros() as u64);
        out
    }
}

/// Runs the requested checks on one entry. Never panics on bad input:
/// failures become notes, conjecture failures become violations.
pub fn evaluate(entry: &CensusEntry, checks: CheckSet, timings: bool) -> EntryOutcome {
    let d = &entry.diagram;
    let mut r = LinkReport::empty(&entry.name);
    let mut violations = Vec::new();
    let mut clock = Clock {
        on: timings,
        times: BTreeMap::new(),
    };

    let c = match clock.time("alexander", || alexander_pd(d)) {
        Ok(c) => c,
        Err(e) => {
            r.notes.push(format!("precondition: {e}"));
            r.timings = timings.then_some(clock.times);
            return EntryOutcome {
                report: r,
                violations,
            };
        }
    };
    let violation = |check: &'static str, clause, index, detail: String| Violation {
        line: entry.line,
        name: entry.name.clone(),
        sequence: c.clone(),
        check,
        clause,
        index,
        detail,
    };
    r.coefficients = Some(c.clone());
    match clock.time("signature", || signature(d)) {
        Ok(s) => r.signature = Some(s.sigma),
        Err(e) => r.notes.push(format!("signature: {e}")),
    }
    if !d.is_alternating() {
        r.notes.push("precondition: not alternating".into());
        r.timings = timings.then_some(clock.times);
        return EntryOutcome {
            report: r,
            violations,
        };
    }
    if !c.signs_alternate() || !c.all_positive() {
        violations.push(violation(
            "sign-alternation",
            None,
            None,
            "coefficients do not alternate in sign".into(),
        ));
    }
    if !c.is_palindromic() {
        violations.push(violation(
            "palindromic",
            None,
            None,
            format!("{c} is not palindromic"),
        ));
    }
    let reduced = d.is_reduced();
    if reduced {
        match genus_alternating(d, &c) {
            Ok(g) if !g.agrees() => violations.push(violation(
                "genus",
                None,
                None,
                format!(
                    "span gives {}, Seifert surface gives {}",
                    g.from_span, g.from_seifert
                ),
            )),
            Ok(_) => {}
            Err(e) => violations.push(violation("genus", None, None, e.to_string())),
        }
    } else {
        r.notes.push("twist: skipped, diagram not reduced".into());
    }

    if checks.contains(Check::Fox) || checks.contains(Check::Twist) {
        let t = clock
            .time("trapezoid", || is_trapezoidal(&c))
            .expect("Alexander sequences are nonempty");
        r.trapezoidal = Some(t.holds);
        r.trapezoid_failure = t.failure;
        r.i0 = t.i0;
        r.sl = t.sl;
        if checks.contains(Check::Fox) {
            if let Some(f) = t.failure {
                violations.push(violation(
                    "trapezoidal",
                    Some(f.clause),
                    Some(f.index),
                    format!("{c}"),
                ));
            }
        }
    }

    if checks.contains(Check::Hm) {
        if let Some(sigma) = r.signature {
            let s = crate::invariants::SignatureValue {
                sigma,
                convention: "Gordon-Litherland",
            };
            match hm_check(&c, &s) {
                Ok(h) => {
                    r.hm_holds = Some(h.holds);
                    r.hm_sharp = Some(h.sharp);
                    if !h.holds {
                        violations.push(violation(
                            "hm",
                            None,
                            None,
                            format!("lhs {} < rhs {} with sigma {sigma}", h.lhs, h.rhs),
                        ));
                    }
                }
                Err(e) => r.notes.push(format!("hm: {e}")),
            }
        }
    }

    if checks.contains(Check::Twist) && reduced && d.component_count() > 0 {
        match clock.time("twist", || is_twist_concentrated(d)) {
            Ok(tc) => {
                let prefix = crate::structure::guaranteed_prefix_from_mt(tc.mt);
                r.mt = Some(tc.mt);
                r.twist_concentrated = Some(tc.holds);
                r.guaranteed_prefix = Some(prefix);
                if tc.holds && r.trapezoidal == Some(false) {
                    violations.push(violation(
                        "twist-concentrated",
                        None,
                        None,
                        format!("MT {} concentrated but not trapezoidal", tc.mt),
                    ));
                }
                let (m, _) = peak_indices(c.len());
                let need = prefix.min(m.saturating_sub(1));
                let have = leading_inequalities(&c);
                if have < need {
                    violations.push(violation(
                        "twist-prefix",
                        None,
                        Some(have + 1),
                        format!(
                            "MT {} guarantees {need} leading inequalities, found {have}",
                            tc.mt
                        ),
                    ));
                }
            }
            Err(e) => r.notes.push(format!("twist: {e}")),
        }
    }

    if checks.contains(Check::Decompose) {
        match clock.time("decompose", || decompose_murasugi(d)) {
            Ok(dec) => {
                r.decomposition = Some(DecompositionSummary {
                    pieces: dec.pieces.len(),
                    max_sum_length: dec.max_sum_length(),
                });
            }
            Err(e) => r.notes.push(format!("decompose: {e}")),
        }
    }

    if checks.contains(Check::FoxMilnor) {
        match clock.time("foxmilnor", || fox_milnor(&c)) {
            Ok(cert) => {
                if let Some(f) = &cert.factor {
                    if !verify_factor(&c, f) {
                        violations.push(violation(
                            "foxmilnor",
                            None,
                            None,
                            format!("factor {f} fails resubstitution"),
                        ));
                    }
                }
                r.fox_milnor = Some(cert);
            }
            Err(e) => r.notes.push(format!("foxmilnor: {e}")),
        }
    }

    if checks.contains(Check::Ratios) {
        r.ratios = Some(clock.time("ratios", || ratio_scan(&c)));
    }

    r.timings = timings.then_some(clock.times);
    EntryOutcome {
        report: r,
        violations,
    }
}
