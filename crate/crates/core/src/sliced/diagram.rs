//! Morse-sliced diagrams of colored framed trivalent graphs.

use crate::qarith::HalfInt;
use serde::{Deserialize, Serialize};

/// Elementary tile kinds.
///
/// Leg conventions (bottom legs → top legs, left to right):
///
/// | kind        | colors      | bottom   | top      |
/// |-------------|-------------|----------|----------|
/// | `Identity`  | `[a]`       | `a`      | `a`      |
/// | `Cup`       | `[a]`       | none     | `a a`    |
/// | `Cap`       | `[a]`       | `a a`    | none     |
/// | `PosCross`  | `[a, b]`    | `a b`    | `b a`    |
/// | `NegCross`  | `[a, b]`    | `a b`    | `b a`    |
/// | `VertexY`   | `[a, b, c]` | `c`      | `a b`    |
/// | `VertexP`   | `[a, b, c]` | `a b`    | `c`      |
/// | `TripleW`   | `[a, b, c]` | none     | `a b c`  |
/// | `TripleM`   | `[a, b, c]` | `a b c`  | none     |
///
/// In a positive crossing the strand from bottom-left to top-right passes over.
#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[serde(rename_all = "snake_case")]
pub enum TileKind {
    Identity,
    Cup,
    Cap,
    PosCross,
    NegCross,
    VertexY,
    VertexP,
    TripleW,
    TripleM,
}

impl TileKind {
    /// Number of colors a tile of this kind carries.
    pub fn arity(self) -> usize {
        match self {
            TileKind::Identity | TileKind::Cup | TileKind::Cap => 1,
            TileKind::PosCross | TileKind::NegCross => 2,
            _ => 3,
        }
    }

    pub fn is_vertex(self) -> bool {
        matches!(self, TileKind::VertexY | TileKind::VertexP | TileKind::TripleW | TileKind::TripleM)
    }

    pub fn is_crossing(self) -> bool {
        matches!(self, TileKind::PosCross | TileKind::NegCross)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Tile {
    pub kind: TileKind,
    pub colors: Vec<HalfInt>,
}

impl Tile {
    pub fn new(kind: TileKind, colors: &[HalfInt]) -> Self {
        Tile { kind, colors: colors.to_vec() }
    }

    pub fn identity(a: HalfInt) -> Self {
        Tile::new(TileKind::Identity, &[a])
    }
    pub fn cup(a: HalfInt) -> Self {
        Tile::new(TileKind::Cup, &[a])
    }
    pub fn cap(a: HalfInt) -> Self {
        Tile::new(TileKind::Cap, &[a])
    }
    pub fn pos_cross(a: HalfInt, b: HalfInt) -> Self {
        Tile::new(TileKind::PosCross, &[a, b])
    }
    pub fn neg_cross(a: HalfInt, b: HalfInt) -> Self {
        Tile::new(TileKind::NegCross, &[a, b])
    }
    pub fn vertex_y(a: HalfInt, b: HalfInt, c: HalfInt) -> Self {
        Tile::new(TileKind::VertexY, &[a, b, c])
    }
    pub fn vertex_p(a: HalfInt, b: HalfInt, c: HalfInt) -> Self {
        Tile::new(TileKind::VertexP, &[a, b, c])
    }
    pub fn triple_w(a: HalfInt, b: HalfInt, c: HalfInt) -> Self {
        Tile::new(TileKind::TripleW, &[a, b, c])
    }
    pub fn triple_m(a: HalfInt, b: HalfInt, c: HalfInt) -> Self {
        Tile::new(TileKind::TripleM, &[a, b, c])
    }

    /// Colors of the bottom legs, left to right. Assumes the arity is right.
    pub fn bottom_colors(&self) -> Vec<HalfInt> {
        let c = &self.colors;
        match self.kind {
            TileKind::Identity => vec![c[0]],
            TileKind::Cup | TileKind::TripleW => vec![],
            TileKind::Cap => vec![c[0], c[0]],
            TileKind::PosCross | TileKind::NegCross => vec![c[0], c[1]],
            TileKind::VertexY => vec![c[2]],
            TileKind::VertexP => vec![c[0], c[1]],
            TileKind::TripleM => vec![c[0], c[1], c[2]],
        }
    }

    /// Colors of the top legs, left to right.
    pub fn top_colors(&self) -> Vec<HalfInt> {
        let c = &self.colors;
        match self.kind {
            TileKind::Identity => vec![c[0]],
            TileKind::Cap | TileKind::TripleM => vec![],
            TileKind::Cup => vec![c[0], c[0]],
            TileKind::PosCross | TileKind::NegCross => vec![c[1], c[0]],
            TileKind::VertexY => vec![c[0], c[1]],
            TileKind::VertexP => vec![c[2]],
            TileKind::TripleW => vec![c[0], c[1], c[2]],
        }
    }

    pub fn n_bottom(&self) -> usize {
        match self.kind {
            TileKind::Cup | TileKind::TripleW => 0,
            TileKind::Identity | TileKind::VertexY => 1,
            TileKind::Cap | TileKind::PosCross | TileKind::NegCross | TileKind::VertexP => 2,
            TileKind::TripleM => 3,
        }
    }

    pub fn n_top(&self) -> usize {
        match self.kind {
            TileKind::Cap | TileKind::TripleM => 0,
            TileKind::Identity | TileKind::VertexP => 1,
            TileKind::Cup | TileKind::PosCross | TileKind::NegCross | TileKind::VertexY => 2,
            TileKind::TripleW => 3,
        }
    }

    /// Pairs of leg indices (bottom legs first, then top) lying on one strand
    /// through the tile.
    pub fn through_pairs(&self) -> Vec<(usize, usize)> {
        match self.kind {
            TileKind::Identity => vec![(0, 1)],
            TileKind::Cup | TileKind::Cap => vec![(0, 1)],
            // bottom-left to top-right, bottom-right to top-left
            TileKind::PosCross | TileKind::NegCross => vec![(0, 3), (1, 2)],
            _ => vec![],
        }
    }
}

/// One horizontal layer of tiles, left to right.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq, Default)]
#[serde(transparent)]
pub struct Slice {
    pub tiles: Vec<Tile>,
}

impl Slice {
    pub fn new(tiles: Vec<Tile>) -> Self {
        Slice { tiles }
    }

    pub fn bottom_colors(&self) -> Vec<HalfInt> {
        self.tiles.iter().flat_map(|t| t.bottom_colors()).collect()
    }

    pub fn top_colors(&self) -> Vec<HalfInt> {
        self.tiles.iter().flat_map(|t| t.top_colors()).collect()
    }
}

/// A graph edge: color, Euler characteristic flag and framing offset.
///
/// `euler` is 1 if the edge touches a vertex and 0 for closed loops; `g` is
/// the framing of the edge minus the blackboard framing, in half twists / 2.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: u32,
    pub color: HalfInt,
    pub euler: u8,
    #[serde(default)]
    pub g: HalfInt,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq, Default)]
pub struct Boundary {
    #[serde(default)]
    pub bottom: Vec<HalfInt>,
    #[serde(default)]
    pub top: Vec<HalfInt>,
}

impl Boundary {
    pub fn is_empty(&self) -> bool {
        self.bottom.is_empty() && self.top.is_empty()
    }
}

/// A colored framed diagram cut into slices.
///
/// `wires[s][t]` lists the edge id of every leg of tile `t` in slice `s`,
/// bottom legs first, then top legs.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq, Default)]
pub struct SlicedDiagram {
    pub slices: Vec<Slice>,
    pub edges: Vec<Edge>,
    pub wires: Vec<Vec<Vec<u32>>>,
    #[serde(default)]
    pub boundary: Boundary,
}

impl SlicedDiagram {
    pub fn is_closed(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn edge(&self, id: u32) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn edge_mut(&mut self, id: u32) -> Option<&mut Edge> {
        self.edges.iter_mut().find(|e| e.id == id)
    }

    /// Set the framing offset of an edge.
    pub fn with_framing(mut self, id: u32, g: HalfInt) -> Self {
        self.edge_mut(id).expect("unknown edge").g = g;
        self
    }

    /// Builds a diagram from slices, deriving edges by joining legs that lie
    /// on one strand (through identities, cups, caps, crossings and slice
    /// interfaces). Edge ids follow first appearance bottom-up, left to right.
    /// All framings are 0.
    pub fn from_slices(slices: Vec<Slice>, boundary: Boundary) -> Self {
        // global leg numbering
        let mut leg_base: Vec<Vec<usize>> = Vec::new();
        let mut n = 0usize;
        for s in &slices {
            let mut row = Vec::new();
            for t in &s.tiles {
                row.push(n);
                n += t.n_bottom() + t.n_top();
            }
            leg_base.push(row);
        }
        let mut uf = UnionFind::new(n);
        for (si, s) in slices.iter().enumerate() {
            for (ti, t) in s.tiles.iter().enumerate() {
                let base = leg_base[si][ti];
                for (x, y) in t.through_pairs() {
                    uf.union(base + x, base + y);
                }
            }
            if si + 1 < slices.len() {
                let tops = top_legs(&slices[si], &leg_base[si]);
                let bottoms = bottom_legs(&slices[si + 1], &leg_base[si + 1]);
                for (a, b) in tops.iter().zip(bottoms.iter()) {
                    uf.union(*a, *b);
                }
            }
        }
        let mut class_id: Vec<Option<u32>> = vec![None; n];
        let mut edges: Vec<Edge> = Vec::new();
        let mut wires = Vec::new();
        let mut colors_of_leg = vec![HalfInt::ZERO; n];
        let mut touches_vertex = vec![false; n];
        for (si, s) in slices.iter().enumerate() {
            for (ti, t) in s.tiles.iter().enumerate() {
                let base = leg_base[si][ti];
                let cols: Vec<HalfInt> = t.bottom_colors().into_iter().chain(t.top_colors()).collect();
                for (j, c) in cols.iter().enumerate() {
                    colors_of_leg[base + j] = *c;
                    if t.kind.is_vertex() {
                        let r = uf.find(base + j);
                        touches_vertex[r] = true;
                    }
                }
            }
        }
        for (si, s) in slices.iter().enumerate() {
            let mut srow = Vec::new();
            for (ti, t) in s.tiles.iter().enumerate() {
                let base = leg_base[si][ti];
                let mut legs = Vec::new();
                for j in 0..t.n_bottom() + t.n_top() {
                    let r = uf.find(base + j);
                    let id = match class_id[r] {
                        Some(id) => id,
                        None => {
                            let id = edges.len() as u32;
                            class_id[r] = Some(id);
                            edges.push(Edge {
                                id,
                                color: colors_of_leg[base + j],
                                euler: u8::from(touches_vertex[r]),
                                g: HalfInt::ZERO,
                            });
                            id
                        }
                    };
                    legs.push(id);
                }
                srow.push(legs);
            }
            wires.push(srow);
        }
        SlicedDiagram { slices, edges, wires, boundary }
    }

    /// Closed diagram from slices.
    pub fn closed(slices: Vec<Slice>) -> Self {
        SlicedDiagram::from_slices(slices, Boundary::default())
    }

    /// Vertex triples `(a, b, c)` of every vertex tile, in slice order.
    pub fn vertex_triples(&self) -> Vec<(HalfInt, HalfInt, HalfInt)> {
        self.slices
            .iter()
            .flat_map(|s| s.tiles.iter())
            .filter(|t| t.kind.is_vertex())
            .map(|t| (t.colors[0], t.colors[1], t.colors[2]))
            .collect()
    }

    /// Stacks `other` on top of `self` (top boundary of `self` must match the
    /// bottom boundary of `other`). Edges are rebuilt; framings are reset.
    pub fn stack(&self, other: &SlicedDiagram) -> SlicedDiagram {
        let mut slices = self.slices.clone();
        slices.extend(other.slices.iter().cloned());
        SlicedDiagram::from_slices(
            slices,
            Boundary { bottom: self.boundary.bottom.clone(), top: other.boundary.top.clone() },
        )
    }
}

pub(crate) fn bottom_legs(s: &Slice, base: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for (t, b) in s.tiles.iter().zip(base) {
        out.extend((0..t.n_bottom()).map(|j| b + j));
    }
    out
}

pub(crate) fn top_legs(s: &Slice, base: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for (t, b) in s.tiles.iter().zip(base) {
        out.extend((0..t.n_top()).map(|j| b + t.n_bottom() + j));
    }
    out
}

/// Disjoint sets with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn add(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.size.push(1);
        self.parent.len() - 1
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}
