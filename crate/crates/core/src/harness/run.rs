use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::conjectures::Violation;

use super::report::{evaluate, CheckSet, LinkReport};
use super::{read_census, CensusEntry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(format!("unknown format `{other}` (expected json or csv)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub jobs: usize,
    pub checks: CheckSet,
    /// Report destination; stdout when absent.
    pub report: Option<PathBuf>,
    pub format: ReportFormat,
    pub timings: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        Self {
            jobs: 1,
            checks: CheckSet::all(),
            report: None,
            format: ReportFormat::Json,
            timings: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Sweep {
    /// One per entry, in input order.
    pub reports: Vec<LinkReport>,
    pub violations: Vec<Violation>,
}

impl Sweep {
    pub fn exit_code(&self) -> i32 {
        if !self.reports.is_empty()
            && self
                .reports
                .iter()
                .all(LinkReport::has_precondition_failure)
        {
            EXIT_INPUT
        } else if self.violations.is_empty() {
            EXIT_OK
        } else {
            EXIT_VIOLATIONS
        }
    }
}

/// Evaluates every entry on a pool of `jobs` threads. Results are collected
/// by input index, so the output does not depend on scheduling.
pub fn sweep(entries: &[CensusEntry], opts: &CensusOptions) -> Sweep {
    let run = || -> Vec<_> {
        entries
            .par_iter()
            .map(|e| evaluate(e, opts.checks, opts.timings))
            .collect()
    };
    let outcomes = match rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
    {
        Ok(pool) => pool.install(run),
        Err(e) => {
            log::warn!("thread pool unavailable ({e}), using the global pool");
            run()
        }
    };
    let mut reports = Vec::with_capacity(outcomes.len());
    let mut violations = Vec::new();
    for o in outcomes {
        reports.push(o.report);
        violations.extend(o.violations);
    }
    Sweep {
        reports,
        violations,
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    name: &'a str,
    coefficients: String,
    trapezoidal: Option<bool>,
    signature: Option<i64>,
    i0: Option<usize>,
    sl: Option<usize>,
    hm_holds: Option<bool>,
    hm_sharp: Option<bool>,
    mt: Option<usize>,
    twist_concentrated: Option<bool>,
    guaranteed_prefix: Option<usize>,
    pieces: Option<usize>,
    max_sum_length: Option<usize>,
    fox_milnor: Option<String>,
    log_concave: Option<bool>,
    notes: String,
}

impl<'a> From<&'a LinkReport> for CsvRow<'a> {
    fn from(r: &'a LinkReport) -> Self {
        Self {
            name: &r.name,
            coefficients: r
                .coefficients
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_default(),
            trapezoidal: r.trapezoidal,
            signature: r.signature,
            i0: r.i0,
            sl: r.sl,
            hm_holds: r.hm_holds,
            hm_sharp: r.hm_sharp,
            mt: r.mt,
            twist_concentrated: r.twist_concentrated,
            guaranteed_prefix: r.guaranteed_prefix,
            pieces: r.decomposition.map(|d| d.pieces),
            max_sum_length: r.decomposition.map(|d| d.max_sum_length),
            fox_milnor: r.fox_milnor.as_ref().map(|c| {
                c.factor
                    .as_ref()
                    .map_or_else(|| "none".to_string(), ToString::to_string)
            }),
            log_concave: r.ratios.as_ref().map(|s| s.log_concave),
            notes: r.notes.join("; "),
        }
    }
}

/// Serializes the reports. JSON is one pretty-printed array.
pub fn render_report(reports: &[LinkReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in reports {
                w.serialize(CsvRow::from(r)).expect("rows serialize");
            }
            String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8")
        }
    }
}

/// Full census run: read, sweep, write the report, dump violations to
/// stderr as JSON lines. Returns the process exit code.
pub fn run_census(path: &Path, opts: &CensusOptions) -> i32 {
    let entries = match read_census(path) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let result = sweep(&entries, opts);
    let text = render_report(&result.reports, opts.format);
    let written = match &opts.report {
        Some(p) => std::fs::write(p, text.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_INPUT;
    }
    for v in &result.violations {
        eprintln!("{}", v.to_json());
    }
    log::info!(
        "{} entries, {} violations",
        entries.len(),
        result.violations.len()
    );
    result.exit_code()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::parse_census;

    const TEXT: &str = "\
3_1 ; pd ; X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)
4_1 ; braid ; 3 ; 1 -2 1 -2
nonalt ; braid ; 3 ; 1 1 1 2 2 2
T25 ; braid ; 2 ; 1 1 1 1 1
";

    #[test]
    fn order_and_determinism() {
        let entries = parse_census(TEXT).unwrap();
        let one = sweep(
            &entries,
            &CensusOptions {
                jobs: 1,
                ..Default::default()
            },
        );
        let four = sweep(
            &entries,
            &CensusOptions {
                jobs: 4,
                ..Default::default()
            },
        );
        let names: Vec<&str> = one.reports.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["3_1", "4_1", "nonalt", "T25"]);
        for f in [ReportFormat::Json, ReportFormat::Csv] {
            assert_eq!(
                render_report(&one.reports, f),
                render_report(&four.reports, f)
            );
        }
        assert_eq!(one.exit_code(), EXIT_OK);
    }

    #[test]
    fn csv_has_header_and_rows() {
        let entries = parse_census(TEXT).unwrap();
        let csv = render_report(
            &sweep(&entries, &CensusOptions::default()).reports,
            ReportFormat::Csv,
        );
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[0].starts_with("name,coefficients,trapezoidal,signature"));
        assert!(lines[1].starts_with("3_1,\"(1,1,1)\",true,"));
    }

    #[test]
    fn missing_file_is_input_error() {
        assert_eq!(
            run_census(
                Path::new("/nonexistent/census.txt"),
                &CensusOptions::default()
            ),
            EXIT_INPUT
        );
    }

    #[test]
    fn all_failing_entries_is_input_error() {
        let entries = parse_census("a ; braid ; 3 ; 1 1 2 2\n").unwrap();
        assert_eq!(
            sweep(&entries, &CensusOptions::default()).exit_code(),
            EXIT_INPUT
        );
    }
}
