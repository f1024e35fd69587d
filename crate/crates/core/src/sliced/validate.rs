//! Structural checks on sliced diagrams.

use super::diagram::SlicedDiagram;
use crate::qarith::{admissible, HalfInt};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;

/// One problem found by [`validate`]; `slice`/`tile` locate it when relevant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub slice: Option<usize>,
    pub tile: Option<usize>,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.slice, self.tile) {
            (Some(s), Some(t)) => write!(f, "slice {s}, tile {t}: {}", self.reason),
            (Some(s), None) => write!(f, "slice {s}: {}", self.reason),
            _ => write!(f, "{}", self.reason),
        }
    }
}

fn v(slice: Option<usize>, tile: Option<usize>, reason: impl Into<String>) -> Violation {
    Violation { slice, tile, reason: reason.into() }
}

fn show(cs: &[HalfInt]) -> String {
    let parts: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Checks colors, admissibility, slice interfaces and the wire-to-edge map.
pub fn validate(d: &SlicedDiagram) -> Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    let mut shape_ok = true;

    for (si, s) in d.slices.iter().enumerate() {
        for (ti, t) in s.tiles.iter().enumerate() {
            if t.colors.len() != t.kind.arity() {
                out.push(v(Some(si), Some(ti), format!("{:?} needs {} colors, got {}", t.kind, t.kind.arity(), t.colors.len())));
                shape_ok = false;
                continue;
            }
            if t.colors.iter().any(|c| c.0 < 0) {
                out.push(v(Some(si), Some(ti), "negative color"));
            }
            if t.kind.is_vertex() && !admissible(t.colors[0], t.colors[1], t.colors[2]) {
                out.push(v(Some(si), Some(ti), format!("inadmissible vertex colors {}", show(&t.colors))));
            }
        }
    }
    if !shape_ok {
        return Err(out);
    }

    // interfaces
    let mut below = d.boundary.bottom.clone();
    for (si, s) in d.slices.iter().enumerate() {
        let bottom = s.bottom_colors();
        if bottom != below {
            out.push(v(Some(si), None, format!("bottom colors {} do not match {} below", show(&bottom), show(&below))));
        }
        below = s.top_colors();
    }
    if below != d.boundary.top {
        out.push(v(None, None, format!("top colors {} do not match boundary {}", show(&below), show(&d.boundary.top))));
    }

    // edges
    let mut edges: HashMap<u32, usize> = HashMap::new();
    for (k, e) in d.edges.iter().enumerate() {
        if edges.insert(e.id, k).is_some() {
            out.push(v(None, None, format!("duplicate edge id {}", e.id)));
        }
        if e.euler > 1 {
            out.push(v(None, None, format!("edge {} has euler {} (must be 0 or 1)", e.id, e.euler)));
        }
        if e.color.0 < 0 {
            out.push(v(None, None, format!("edge {} has negative color", e.id)));
        }
    }

    // wires
    if d.wires.len() != d.slices.len() {
        out.push(v(None, None, format!("wires cover {} slices, diagram has {}", d.wires.len(), d.slices.len())));
        return Err(out);
    }
    let mut touches_vertex: HashMap<u32, bool> = HashMap::new();
    let mut prev_top: Option<Vec<u32>> = None;
    let mut wires_ok = true;
    for (si, s) in d.slices.iter().enumerate() {
        if d.wires[si].len() != s.tiles.len() {
            out.push(v(Some(si), None, format!("wires list {} tiles, slice has {}", d.wires[si].len(), s.tiles.len())));
            wires_ok = false;
            continue;
        }
        let mut bottoms = Vec::new();
        let mut tops = Vec::new();
        for (ti, t) in s.tiles.iter().enumerate() {
            let legs = &d.wires[si][ti];
            let nb = t.n_bottom();
            if legs.len() != nb + t.n_top() {
                out.push(v(Some(si), Some(ti), format!("{} leg ids given, tile has {}", legs.len(), nb + t.n_top())));
                wires_ok = false;
                continue;
            }
            let cols: Vec<HalfInt> = t.bottom_colors().into_iter().chain(t.top_colors()).collect();
            for (j, id) in legs.iter().enumerate() {
                match edges.get(id) {
                    None => out.push(v(Some(si), Some(ti), format!("leg {j} refers to unknown edge {id}"))),
                    Some(&k) => {
                        if d.edges[k].color != cols[j] {
                            out.push(v(Some(si), Some(ti), format!("leg {j} has color {} but edge {id} has color {}", cols[j], d.edges[k].color)));
                        }
                    }
                }
                let e = touches_vertex.entry(*id).or_insert(false);
                *e |= t.kind.is_vertex();
            }
            for (x, y) in t.through_pairs() {
                if legs[x] != legs[y] {
                    out.push(v(Some(si), Some(ti), format!("legs {x} and {y} lie on one strand but carry edges {} and {}", legs[x], legs[y])));
                }
            }
            bottoms.extend_from_slice(&legs[..nb]);
            tops.extend_from_slice(&legs[nb..]);
        }
        if let Some(pt) = &prev_top {
            if pt.len() == bottoms.len() {
                for (p, (a, b)) in pt.iter().zip(bottoms.iter()).enumerate() {
                    if a != b {
                        out.push(v(Some(si), None, format!("position {p}: edge {b} continues edge {a} from the slice below")));
                    }
                }
            }
        }
        prev_top = Some(tops);
    }
    if wires_ok {
        for e in &d.edges {
            let tv = touches_vertex.get(&e.id).copied();
            match tv {
                None => out.push(v(None, None, format!("edge {} is not used by any leg", e.id))),
                Some(t) => {
                    if u8::from(t) != e.euler {
                        out.push(v(None, None, format!("edge {} has euler {} but {} a vertex", e.id, e.euler, if t { "touches" } else { "does not touch" })));
                    }
                }
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}
