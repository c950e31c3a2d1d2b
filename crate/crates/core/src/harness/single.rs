use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};
use thiserror::Error;

use crate::conjectures::{hm_check, is_trapezoidal, ConjectureError};
use crate::diagram::{braid_closure, parse_braid, parse_pd, BraidWord, DiagramError, LinkDiagram};
use crate::invariants::{
    alexander_burau, alexander_pd, conway_skein, conway_to_alexander, signature, InvariantError,
    SKEIN_MAX_CROSSINGS,
};
use crate::lorentzian::{
    is_lorentzian, refinement_validate, BraidSeifertBuilder, HypertreeBuilder, LorentzianError,
    RefinementBuilder,
};
use crate::polyalg::{normalize_alexander, MultiPoly, MultiPolyError};
use crate::structure::{decompose_murasugi, is_twist_concentrated, twist_regions, StructureError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subcommand {
    Alex,
    Sig,
    Trapezoid,
    Hm,
    Twist,
    Decompose,
    Lorentzian,
}

impl FromStr for Subcommand {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "alex" => Self::Alex,
            "sig" => Self::Sig,
            "trapezoid" => Self::Trapezoid,
            "hm" => Self::Hm,
            "twist" => Self::Twist,
            "decompose" => Self::Decompose,
            "lorentzian" => Self::Lorentzian,
            other => return Err(format!("unknown subcommand `{other}`")),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingleInput {
    Braid(String),
    Pd(String),
    /// Text of a polynomial file, `coefficient : exponents` per line.
    Poly(String),
}

#[derive(Debug, Error)]
pub enum SingleError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Conjecture(#[from] ConjectureError),
    #[error(transparent)]
    Lorentzian(#[from] LorentzianError),
    #[error(transparent)]
    Poly(#[from] MultiPolyError),
    #[error("{0}")]
    Input(&'static str),
    #[error("Alexander methods disagree: {0}")]
    Disagreement(String),
}

/// Result of a single-link command in both output forms.
#[derive(Clone, Debug, PartialEq)]
pub struct SingleOutput {
    pub text: String,
    pub json: Value,
}

fn diagram_of(input: &SingleInput) -> Result<(LinkDiagram, Option<BraidWord>), SingleError> {
    match input {
        SingleInput::Braid(s) => {
            let b = parse_braid(s)?;
            Ok((braid_closure(&b)?, Some(b)))
        }
        SingleInput::Pd(s) => Ok((parse_pd(s)?, None)),
        SingleInput::Poly(_) => Err(SingleError::Input("this command takes --braid or --pd")),
    }
}

fn alex(d: &LinkDiagram, b: Option<&BraidWord>) -> Result<SingleOutput, SingleError> {
    let pd = alexander_pd(d)?;
    let mut methods = vec![("pd", pd.clone())];
    if let Some(b) = b {
        methods.push(("burau", alexander_burau(b)?));
    }
    if d.crossing_count() <= SKEIN_MAX_CROSSINGS {
        let skein = normalize_alexander(&conway_to_alexander(&conway_skein(d)?))
            .map_err(InvariantError::from)?;
        methods.push(("skein", skein));
    }
    if let Some((name, c)) = methods.iter().find(|(_, c)| c.coeffs() != pd.coeffs()) {
        return Err(SingleError::Disagreement(format!(
            "pd gives {pd}, {name} gives {c}"
        )));
    }
    let names: Vec<&str> = methods.iter().map(|(n, _)| *n).collect();
    let mut text = pd.to_string();
    if names.len() > 1 {
        write!(text, "\nmethods agree: {}", names.join(", ")).unwrap();
    }
    Ok(SingleOutput {
        text,
        json: json!({ "coefficients": pd, "methods": names, "agree": true }),
    })
}

fn lorentzian(input: &SingleInput) -> Result<SingleOutput, SingleError> {
    let (poly, refinement) = match input {
        SingleInput::Poly(text) => (text.parse::<MultiPoly>()?, None),
        _ => {
            let (d, b) = diagram_of(input)?;
            let builder: &dyn RefinementBuilder = match &b {
                Some(b) if b.strands() == 3 => &BraidSeifertBuilder,
                _ if d.is_special_alternating() => &HypertreeBuilder,
                _ => {
                    return Err(SingleError::Input(
                        "refinements exist for 3-braids and special alternating diagrams",
                    ))
                }
            };
            let r = builder.build(&d, b.as_ref())?;
            let check = refinement_validate(&r.poly, &alexander_pd(&d)?, &r.weights)?;
            (r.poly.normalized(), Some((builder.name(), check)))
        }
    };
    let report = is_lorentzian(&poly)?;
    let mut text = format!("Lorentzian: {}", report.holds);
    if let Some(w) = &report.witness {
        write!(text, "\nwitness: {w}").unwrap();
    }
    let mut json = json!({ "lorentzian": report.holds, "witness": report.witness, "chains_checked": report.chains_checked });
    if let Some((name, check)) = refinement {
        write!(
            text,
            "\nrefinement ({name}): unit coefficients {}, M-convex {}, specializes {}",
            check.all_coeffs_one, check.m_convex, check.specializes
        )
        .unwrap();
        json["refinement"] = json!({ "builder": name, "contracts": check });
    }
    Ok(SingleOutput { text, json })
}

/// Runs one command on one input.
pub fn cli_single(cmd: Subcommand, input: &SingleInput) -> Result<SingleOutput, SingleError> {
    if cmd == Subcommand::Lorentzian {
        return lorentzian(input);
    }
    let (d, b) = diagram_of(input)?;
    match cmd {
        Subcommand::Alex => alex(&d, b.as_ref()),
        Subcommand::Sig => {
            let s = signature(&d)?;
            Ok(SingleOutput {
                text: format!("signature: {}", s.sigma),
                json: json!({ "signature": s.sigma }),
            })
        }
        Subcommand::Trapezoid => {
            let c = alexander_pd(&d)?;
            let t = is_trapezoidal(&c)?;
            let mut text = format!("{c}\ntrapezoidal: {}", t.holds);
            if let Some(f) = t.failure {
                write!(text, " (clause {} fails at i={})", f.clause, f.index).unwrap();
            }
            if let (Some(i0), Some(sl)) = (t.i0, t.sl) {
                write!(text, "\ni0={i0} sl={sl}").unwrap();
            }
            Ok(SingleOutput {
                text,
                json: json!({ "coefficients": c, "report": t }),
            })
        }
        Subcommand::Hm => {
            let c = alexander_pd(&d)?;
            let s = signature(&d)?;
            let h = hm_check(&c, &s)?;
            let text = format!(
                "holds: {}, sharp: {}, lhs={}, rhs={}",
                h.holds, h.sharp, h.lhs, h.rhs
            );
            Ok(SingleOutput {
                text,
                json: json!({ "signature": s.sigma, "report": h }),
            })
        }
        Subcommand::Twist => {
            let p = twist_regions(&d)?;
            let tc = is_twist_concentrated(&d)?;
            let mut text = String::new();
            for r in &p.regions {
                writeln!(text, "region size {} coherent {}", r.size(), r.coherent).unwrap();
            }
            write!(
                text,
                "MT={} g={} components={} margin={} twist-concentrated: {}",
                tc.mt, tc.genus, tc.components, tc.margin, tc.holds
            )
            .unwrap();
            Ok(SingleOutput {
                text,
                json: json!({ "profile": p, "concentration": tc }),
            })
        }
        Subcommand::Decompose => {
            let dec = decompose_murasugi(&d)?;
            let mut text = format!("pieces: {}", dec.pieces.len());
            for (i, p) in dec.pieces.iter().enumerate() {
                write!(text, "\n  piece {i}: crossings {:?}", p.crossings).unwrap();
            }
            for e in &dec.edges {
                write!(text, "\n  sum {} -- {} length {}", e.a, e.b, e.length).unwrap();
            }
            Ok(SingleOutput {
                text,
                json: serde_json::to_value(&dec).expect("decomposition serializes"),
            })
        }
        Subcommand::Lorentzian => unreachable!("handled above"),
    }
}
