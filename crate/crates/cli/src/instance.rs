//! Line-delimited JSON instance files.
//!
//! The first line is a header `{"kind": ..., "meta": {...}}`; every later
//! line is one item with decimal-string coordinates, e.g.
//! `{"x_lo":"0.5","x_hi":"1.5","y_lo":"2"}` or `{"x":"0.1","y":"3"}`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use geosep_core::geometry::{format_decimal, parse_decimal};
use geosep_core::{PointSite, Rect};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Rects,
    Points,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Rects => "rects",
            Kind::Points => "points",
        })
    }
}

impl FromStr for Kind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rects" => Ok(Kind::Rects),
            "points" => Ok(Kind::Points),
            other => Err(CliError::Params(format!("unknown kind {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub generator: String,
    #[serde(default)]
    pub params: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Items {
    Rects(Vec<Rect>),
    Points(Vec<PointSite>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct InstanceFile {
    pub meta: Meta,
    pub items: Items,
}

#[derive(Serialize, Deserialize)]
struct Header {
    kind: Kind,
    #[serde(default)]
    meta: Meta,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RectRecord {
    x_lo: String,
    x_hi: String,
    y_lo: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointRecord {
    x: String,
    y: String,
}

impl InstanceFile {
    pub fn kind(&self) -> Kind {
        match self.items {
            Items::Rects(_) => Kind::Rects,
            Items::Points(_) => Kind::Points,
        }
    }

    pub fn len(&self) -> usize {
        match &self.items {
            Items::Rects(r) => r.len(),
            Items::Points(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_jsonl(&self) -> String {
        let header = Header {
            kind: self.kind(),
            meta: self.meta.clone(),
        };
        let mut out = serde_json::to_string(&header).expect("header serializes");
        out.push('\n');
        let mut push = |line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        match &self.items {
            Items::Rects(rects) => {
                for r in rects {
                    push(
                        serde_json::to_string(&RectRecord {
                            x_lo: format_decimal(r.x_lo),
                            x_hi: format_decimal(r.x_hi),
                            y_lo: format_decimal(r.y_lo),
                        })
                        .expect("record serializes"),
                    );
                }
            }
            Items::Points(points) => {
                for p in points {
                    push(
                        serde_json::to_string(&PointRecord {
                            x: format_decimal(p.x),
                            y: format_decimal(p.y),
                        })
                        .expect("record serializes"),
                    );
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or_else(|| CliError::Malformed {
            line: 1,
            reason: "missing header".into(),
        })?;
        let header: Header = serde_json::from_str(first).map_err(|e| CliError::Malformed {
            line: 1,
            reason: e.to_string(),
        })?;
        let malformed = |line: usize, reason: String| CliError::Malformed { line: line + 1, reason };
        let items = match header.kind {
            Kind::Rects => {
                let mut rects = Vec::new();
                for (i, line) in lines {
                    let rec: RectRecord = serde_json::from_str(line).map_err(|e| malformed(i, e.to_string()))?;
                    let coord = |s: &str| parse_decimal(s).map_err(|e| malformed(i, e.to_string()));
                    let r = Rect::new(coord(&rec.x_lo)?, coord(&rec.x_hi)?, coord(&rec.y_lo)?)
                        .map_err(|e| malformed(i, e.to_string()))?;
                    rects.push(r);
                }
                Items::Rects(rects)
            }
            Kind::Points => {
                let mut points = Vec::new();
                for (i, line) in lines {
                    let rec: PointRecord = serde_json::from_str(line).map_err(|e| malformed(i, e.to_string()))?;
                    let coord = |s: &str| parse_decimal(s).map_err(|e| malformed(i, e.to_string()));
                    points.push(PointSite::new(coord(&rec.x)?, coord(&rec.y)?));
                }
                Items::Points(points)
            }
        };
        Ok(Self {
            meta: header.meta,
            items,
        })
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        Self::parse(&text)
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, self.to_jsonl()).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            source: e,
        })
    }
}
