//! The closed and open test diagrams, by largest doubled color.

use crate::qarith::{admissible, HalfInt};
use crate::sliced::{builders, Boundary, Slice, SlicedDiagram, Tile};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    /// Builder call with doubled colors, e.g. `theta(2,2,2)`.
    pub name: String,
    pub diagram: SlicedDiagram,
}

impl CorpusEntry {
    fn new(name: String, diagram: SlicedDiagram) -> Self {
        CorpusEntry { name, diagram }
    }

    /// Every edge has framing offset 0.
    pub fn blackboard(&self) -> bool {
        self.diagram.edges.iter().all(|e| e.g.0 == 0)
    }
}

fn h(x: i64) -> HalfInt {
    HalfInt(x)
}

fn triples(max: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                if admissible(h(a), h(b), h(c)) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Colorings `(a..f)` of the tetrahedron with triples `(a,b,c)`, `(a,e,f)`,
/// `(d,b,f)`, `(d,e,c)`.
pub fn tet_colorings(max: i64) -> Vec<[i64; 6]> {
    let mut out = Vec::new();
    for [a, b, c] in triples(max) {
        for d in 0..=max {
            for e in 0..=max {
                for f in 0..=max {
                    let ok = admissible(h(a), h(e), h(f)) && admissible(h(d), h(b), h(f)) && admissible(h(d), h(e), h(c));
                    if ok {
                        out.push([a, b, c, d, e, f]);
                    }
                }
            }
        }
    }
    out
}

/// The θ-graphs, tetrahedra (plain and crossed), prisms, connected sums of
/// θ-graphs, twisted links with up to two half twists per box and framed
/// unknots, all with doubled colors at most `max`.
pub fn graph_corpus(max: i64) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for a in 0..=max {
        for g in -1..=1 {
            out.push(CorpusEntry::new(format!("unknot({a}, g={g})"), builders::unlink(&[(h(a), h(g))])));
        }
    }
    for [a, b, c] in triples(max) {
        out.push(CorpusEntry::new(format!("theta({a},{b},{c})"), builders::theta(h(a), h(b), h(c))));
    }
    for [a, b, c] in triples(max) {
        let t = builders::theta_tangle(h(a), h(b), h(c));
        out.push(CorpusEntry::new(format!("theta({a},{b},{c}) # theta({a},{b},{c})"), builders::connected_sum(&t, &t)));
    }
    for c in tet_colorings(max) {
        let [a, b, cc, d, e, f] = c.map(h);
        out.push(CorpusEntry::new(format!("tet{c:?}"), builders::tet(a, b, cc, d, e, f)));
        out.push(CorpusEntry::new(format!("crossed_tet{c:?}"), builders::crossed_tet(a, b, cc, d, e, f)));
    }
    for n in (0..=max).step_by(2) {
        out.push(CorpusEntry::new(format!("prism({n})"), builders::prism(h(n))));
    }
    out.extend(twisted_links(max));
    out
}

/// The figure-eight-in-a-circle links with `a, b ∈ {−2..2}` half twists.
pub fn twisted_links(max: i64) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 1..=max {
        for a in -2..=2 {
            for b in -2..=2 {
                out.push(CorpusEntry::new(format!("twisted_link({n}, {a}, {b})"), builders::twisted_link(h(n), a, b)));
            }
        }
    }
    out
}

/// Two-strand braid closures: Hopf links and trefoils of both handedness.
pub fn braid_corpus(max: i64) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for a in 1..=max {
        for b in 1..=max {
            for n in [-3, -2, -1, 1, 2, 3] {
                if n % 2 != 0 && a != b {
                    continue;
                }
                out.push(CorpusEntry::new(format!("braid_closure({a},{b},{n})"), builders::braid_closure(h(a), h(b), n)));
            }
        }
    }
    out
}

/// Open diagrams: single vertices of both kinds, crossings of both signs,
/// opened θ-graphs, identity strands and two-crossing twists.
pub fn open_corpus(max: i64) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for a in 0..=max {
        out.push(CorpusEntry::new(format!("strand({a})"), builders::strand(h(a))));
    }
    for [a, b, c] in triples(max) {
        let (x, y, z) = (h(a), h(b), h(c));
        out.push(CorpusEntry::new(format!("vertex_y({a},{b},{c})"), builders::vertex_tangle(x, y, z)));
        out.push(CorpusEntry::new(
            format!("vertex_p({a},{b},{c})"),
            SlicedDiagram::from_slices(
                vec![Slice::new(vec![Tile::vertex_p(x, y, z)])],
                Boundary { bottom: vec![x, y], top: vec![z] },
            ),
        ));
        out.push(CorpusEntry::new(format!("theta_tangle({a},{b},{c})"), builders::theta_tangle(x, y, z)));
    }
    for a in 0..=max {
        for b in 0..=max {
            for n in [-2, -1, 1, 2] {
                out.push(CorpusEntry::new(format!("twist_chain({a},{b},{n})"), builders::twist_chain(h(a), h(b), n)));
            }
        }
    }
    out
}
