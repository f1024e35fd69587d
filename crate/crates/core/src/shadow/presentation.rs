//! Combinatorial shadows of planar diagrams.

use crate::qarith::HalfInt;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::path::Path;
use thiserror::Error;

/// A complementary region of the diagram with its Euler characteristic and
/// gleam.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub id: u32,
    pub euler: i64,
    #[serde(default)]
    pub gleam: HalfInt,
}

/// An edge of the diagram (a graph edge cut at its crossings). `euler` is 0
/// for closed loops and 1 for arcs; `regions` holds the one or two regions
/// on its sides.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: u32,
    pub color: HalfInt,
    pub euler: u8,
    pub regions: Vec<u32>,
}

/// A trivalent vertex; `regions[k]` is the region not touching `faces[k]`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub faces: [u32; 3],
    pub regions: [u32; 3],
}

/// A crossing of two strands colored `colors[0]`, `colors[1]`.
///
/// `regions` lists the four sectors in rotational order such that strand 0
/// separates `regions[0] | regions[1]` and `regions[2] | regions[3]`, and
/// strand 1 separates `regions[1] | regions[2]` and `regions[3] | regions[0]`:
///
/// ```text
///        r0
///     \     /
///  r1   \ /   r3        strand 0 is `\`, strand 1 is `/`
///       / \
///     /     \
///        r2
/// ```
///
/// `sign` is +1 when the crossing adds +½ to the gleams of `r1, r3` and −½
/// to `r0, r2`, and −1 for the reverse.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub colors: [HalfInt; 2],
    pub regions: [u32; 4],
    pub sign: i64,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq, Default)]
pub struct ShadowPresentation {
    pub regions: Vec<Region>,
    pub outer: u32,
    pub faces: Vec<Face>,
    #[serde(default)]
    pub vertices: Vec<Vertex>,
    #[serde(default)]
    pub crossings: Vec<Crossing>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShadowError {
    #[error("invalid presentation: {0}")]
    Invalid(String),
    #[error("invalid shadow state: {0}")]
    State(String),
    #[error("diagram is not closed")]
    NotClosed,
    #[error("{0}")]
    Diagram(String),
}

#[derive(Debug, Error)]
pub enum ShadowFormatError {
    #[error("{path}: line {line}, column {column}: {msg}")]
    Parse { path: String, line: usize, column: usize, msg: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl ShadowPresentation {
    pub fn region(&self, id: u32) -> Option<&Region> {
        self.regions.iter().find(|r| r.id == id)
    }

    /// Index of each region id in `regions`.
    pub(crate) fn index(&self) -> HashMap<u32, usize> {
        self.regions.iter().enumerate().map(|(k, r)| (r.id, k)).collect()
    }

    /// Gleam contributed to each region by the crossings alone.
    pub fn crossing_gleams(&self) -> HashMap<u32, HalfInt> {
        let mut out: HashMap<u32, HalfInt> = HashMap::new();
        for c in &self.crossings {
            for (k, r) in c.regions.iter().enumerate() {
                let s = if k % 2 == 1 { c.sign } else { -c.sign };
                *out.entry(*r).or_default() = out.get(r).copied().unwrap_or_default() + HalfInt(s);
            }
        }
        out
    }

    /// Structural checks: ids resolve, outer region present, every face has
    /// one or two sides, crossing signs are ±1.
    pub fn check(&self) -> Result<(), ShadowError> {
        let idx = self.index();
        let bad = |m: String| Err(ShadowError::Invalid(m));
        if idx.len() != self.regions.len() {
            return bad("duplicate region id".into());
        }
        if !idx.contains_key(&self.outer) {
            return bad(format!("outer region {} is not listed", self.outer));
        }
        let mut faces = HashMap::new();
        for f in &self.faces {
            if faces.insert(f.id, f).is_some() {
                return bad(format!("duplicate face id {}", f.id));
            }
            if f.regions.is_empty() || f.regions.len() > 2 {
                return bad(format!("face {} has {} sides", f.id, f.regions.len()));
            }
            if let Some(r) = f.regions.iter().find(|r| !idx.contains_key(r)) {
                return bad(format!("face {} refers to unknown region {r}", f.id));
            }
            if f.color.0 < 0 || f.euler > 1 {
                return bad(format!("face {} has color {} and euler {}", f.id, f.color, f.euler));
            }
        }
        for (k, v) in self.vertices.iter().enumerate() {
            if let Some(f) = v.faces.iter().find(|f| !faces.contains_key(f)) {
                return bad(format!("vertex {k} refers to unknown face {f}"));
            }
            if let Some(r) = v.regions.iter().find(|r| !idx.contains_key(r)) {
                return bad(format!("vertex {k} refers to unknown region {r}"));
            }
        }
        for (k, c) in self.crossings.iter().enumerate() {
            if let Some(r) = c.regions.iter().find(|r| !idx.contains_key(r)) {
                return bad(format!("crossing {k} refers to unknown region {r}"));
            }
            if c.sign != 1 && c.sign != -1 {
                return bad(format!("crossing {k} has sign {}", c.sign));
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str, origin: &str) -> Result<Self, ShadowFormatError> {
        serde_json::from_str(text).map_err(|e| ShadowFormatError::Parse {
            path: origin.to_string(),
            line: e.line(),
            column: e.column(),
            msg: crate::sliced::strip_position(&e.to_string()),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentation serializes")
    }

    pub fn load(path: &Path) -> Result<Self, ShadowFormatError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ShadowFormatError::Io { path: path.display().to_string(), source })?;
        Self::from_json(&text, &path.display().to_string())
    }

    pub fn save(&self, path: &Path) -> Result<(), ShadowFormatError> {
        std::fs::write(path, self.to_json() + "\n")
            .map_err(|source| ShadowFormatError::Io { path: path.display().to_string(), source })
    }
}
