use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand as ClapSubcommand};
use knotcheck::harness::{
    cli_single, run_census, CensusOptions, CheckSet, ReportFormat, SingleError, SingleInput,
    Subcommand,
};

#[derive(Parser)]
#[command(
    name = "knotcheck",
    version,
    about = "Alexander polynomial conjecture checks for alternating links"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ClapSubcommand)]
enum Command {
    /// Sweep a census file and write a report.
    Census(CensusArgs),
    /// Alexander coefficients; braids are checked against Burau as well.
    Alex(SingleArgs),
    /// Signature.
    Sig(SingleArgs),
    /// Trapezoidal check with plateau data.
    Trapezoid(SingleArgs),
    /// Hirasawa-Murasugi inequality.
    Hm(SingleArgs),
    /// Twist regions and twist concentration.
    Twist(SingleArgs),
    /// Murasugi decomposition into special alternating pieces.
    Decompose(SingleArgs),
    /// Lorentzian test of a polynomial file or of a link's refinement.
    Lorentzian(SingleArgs),
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    census: PathBuf,
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    format: ReportFormat,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value = "fox,hm,twist,decompose,foxmilnor,ratios")]
    checks: CheckSet,
    /// Add per-stage timings (reports are no longer reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct SingleArgs {
    /// Braid word, `strands ; letters`.
    #[arg(long, conflicts_with_all = ["pd", "poly"])]
    braid: Option<String>,
    /// PD code, `X(a,b,c,d) ...`.
    #[arg(long, conflicts_with = "poly")]
    pd: Option<String>,
    /// Polynomial file, `coefficient : exponents` per line.
    #[arg(long)]
    poly: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

fn single(cmd: Subcommand, args: SingleArgs) -> Result<ExitCode> {
    let input = match (args.braid, args.pd, args.poly) {
        (Some(b), _, _) => SingleInput::Braid(b),
        (_, Some(p), _) => SingleInput::Pd(p),
        (_, _, Some(path)) => {
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("reading {}", path.display()))?;
            SingleInput::Poly(text)
        }
        _ => bail!("one of --braid, --pd or --poly is required"),
    };
    match cli_single(cmd, &input) {
        Ok(out) => {
            if args.json {
                println!("{}", serde_json::to_string_pretty(&out.json)?);
            } else {
                println!("{}", out.text);
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ SingleError::Disagreement(_)) => {
            eprintln!("error: {e}");
            Ok(ExitCode::from(1))
        }
        Err(e) => {
            eprintln!("error: {e}");
            Ok(ExitCode::from(2))
        }
    }
}

fn main() -> Result<ExitCode> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let (cmd, args) = match cli.command {
        Command::Census(a) => {
            let opts = CensusOptions {
                jobs: a.jobs,
                checks: a.checks,
                report: a.report,
                format: a.format,
                timings: a.timings,
            };
            return Ok(ExitCode::from(run_census(&a.census, &opts) as u8));
        }
        Command::Alex(a) => (Subcommand::Alex, a),
        Command::Sig(a) => (Subcommand::Sig, a),
        Command::Trapezoid(a) => (Subcommand::Trapezoid, a),
        Command::Hm(a) => (Subcommand::Hm, a),
        Command::Twist(a) => (Subcommand::Twist, a),
        Command::Decompose(a) => (Subcommand::Decompose, a),
        Command::Lorentzian(a) => (Subcommand::Lorentzian, a),
    };
    single(cmd, args)
}
