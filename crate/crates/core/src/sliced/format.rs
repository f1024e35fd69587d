//! JSON reading and writing of sliced diagrams.
//!
//! Colors, states and framings are doubled integers everywhere: `1` means
//! spin ½, `2` means spin 1. A diagram document looks like
//!
//! ```json
//! {
//!   "slices": [[{"kind": "cup", "colors": [2]}], [{"kind": "cap", "colors": [2]}]],
//!   "edges": [{"id": 0, "color": 2, "euler": 0, "g": 0}],
//!   "wires": [[[0, 0]], [[0, 0]]],
//!   "boundary": {"bottom": [], "top": []}
//! }
//! ```
//!
//! `wires[s][t]` lists the edge id of each leg of tile `t` in slice `s`,
//! bottom legs first. `g` and `boundary` may be omitted.

use super::diagram::SlicedDiagram;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: line {line}, column {column}: {msg}")]
    Parse { path: String, line: usize, column: usize, msg: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Parses a diagram document. `origin` names the source in error messages.
pub fn from_json(text: &str, origin: &str) -> Result<SlicedDiagram, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Parse {
        path: origin.to_string(),
        line: e.line(),
        column: e.column(),
        msg: strip_position(&e.to_string()),
    })
}

pub fn to_json(d: &SlicedDiagram) -> String {
    serde_json::to_string_pretty(d).expect("diagram serializes")
}

pub fn load(path: &Path) -> Result<SlicedDiagram, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    from_json(&text, &path.display().to_string())
}

pub fn save(d: &SlicedDiagram, path: &Path) -> Result<(), FormatError> {
    std::fs::write(path, to_json(d) + "\n").map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

// serde_json appends " at line L column C"; we report those separately.
pub(crate) fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(k) => msg[..k].to_string(),
        None => msg.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::HalfInt;
    use crate::sliced::builders;

    #[test]
    fn round_trip() {
        let h = HalfInt::from_doubled;
        let d = builders::crossed_tet(h(2), h(2), h(2), h(2), h(2), h(2)).with_framing(1, h(1));
        assert_eq!(from_json(&to_json(&d), "mem").unwrap(), d);
    }

    #[test]
    fn reports_position() {
        let err = from_json("{\"slices\": [[{\"kind\": \"spiral\", \"colors\": [1]}]]}", "bad.json").unwrap_err();
        let s = err.to_string();
        assert!(s.starts_with("bad.json: line 1, column"), "{s}");
        assert!(s.contains("spiral"), "{s}");
    }
}
