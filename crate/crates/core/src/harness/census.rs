use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{braid_closure, parse_braid, parse_pd, BraidWord, DiagramError, LinkDiagram};

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: duplicate name `{name}`")]
    Duplicate { line: usize, name: String },
    #[error("line {line} ({name}): {source}")]
    Diagram {
        line: usize,
        name: String,
        source: DiagramError,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InputKind {
    Pd,
    Braid,
}

impl fmt::Display for InputKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputKind::Pd => "pd",
            InputKind::Braid => "braid",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub line: usize,
    pub name: String,
    pub kind: InputKind,
    pub raw: String,
    pub diagram: LinkDiagram,
    /// Present for braid entries.
    pub braid: Option<BraidWord>,
}

impl CensusEntry {
    pub fn from_parts(
        line: usize,
        name: &str,
        kind: InputKind,
        raw: &str,
    ) -> Result<Self, CensusError> {
        let wrap = |source| CensusError::Diagram {
            line,
            name: name.to_string(),
            source,
        };
        let (diagram, braid) = match kind {
            InputKind::Pd => (parse_pd(raw).map_err(wrap)?, None),
            InputKind::Braid => {
                let b = parse_braid(raw).map_err(wrap)?;
                (braid_closure(&b).map_err(wrap)?, Some(b))
            }
        };
        Ok(Self {
            line,
            name: name.to_string(),
            kind,
            raw: raw.to_string(),
            diagram,
            braid,
        })
    }
}

/// Parses census text: `name ; pd|braid ; payload` per line, `#` comments.
/// The payload of a braid entry itself contains a `;`.
pub fn parse_census(text: &str) -> Result<Vec<CensusEntry>, CensusError> {
    let mut out = Vec::new();
    let mut names = HashSet::new();
    for (i, raw_line) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw_line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut parts = content.splitn(3, ';');
        let (Some(name), Some(kind), Some(payload)) = (parts.next(), parts.next(), parts.next())
        else {
            return Err(CensusError::Syntax {
                line,
                msg: "expected `name ; pd|braid ; payload`".into(),
            });
        };
        let name = name.trim();
        if name.is_empty() {
            return Err(CensusError::Syntax {
                line,
                msg: "empty name".into(),
            });
        }
        let kind = match kind.trim() {
            "pd" => InputKind::Pd,
            "braid" => InputKind::Braid,
            other => {
                return Err(CensusError::Syntax {
                    line,
                    msg: format!("unknown input kind `{other}`"),
                })
            }
        };
        if !names.insert(name.to_string()) {
            return Err(CensusError::Duplicate {
                line,
                name: name.to_string(),
            });
        }
        out.push(CensusEntry::from_parts(line, name, kind, payload.trim())?);
    }
    Ok(out)
}

pub fn read_census(path: &Path) -> Result<Vec<CensusEntry>, CensusError> {
    let text = std::fs::read_to_string(path).map_err(|source| CensusError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_census(&text)
}
