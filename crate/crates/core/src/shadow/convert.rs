//! Region, face and gleam extraction from a closed sliced diagram.
//!
//! Every interface between slices is cut by its wires into gaps; a sweep
//! joins gaps that belong to one region. Diagram edges are graph edges cut
//! at crossings. A region with `b` boundary components has Euler
//! characteristic `2 − b`, or `1 − b` for the unbounded one.

use super::presentation::{Crossing, Face, Region, ShadowError, ShadowPresentation, Vertex};
use crate::qarith::HalfInt;
use crate::sliced::{validate, SlicedDiagram, TileKind, UnionFind};
use std::collections::{BTreeMap, HashMap};

/// Gleam sign convention: a positive crossing tile adds `+½·POS_SIGN` to its
/// left and right sectors and `−½·POS_SIGN` above and below.
pub const POS_SIGN: i64 = 1;

struct Sweep {
    gaps: UnionFind,
    // gap ids per interface, left to right
    iface: Vec<Vec<usize>>,
}

fn sweep(d: &SlicedDiagram) -> Sweep {
    let mut gaps = UnionFind::new(1);
    let mut iface = vec![vec![0usize]];
    for s in &d.slices {
        let below = iface.last().unwrap().clone();
        let mut above = vec![gaps.add()];
        gaps.union(above[0], below[0]);
        let mut pos = 0;
        for t in &s.tiles {
            let (nb, nt) = (t.n_bottom(), t.n_top());
            let left = *above.last().unwrap();
            gaps.union(left, below[pos]);
            for _ in 1..nt {
                above.push(gaps.add());
            }
            if nt >= 1 {
                let right = gaps.add();
                above.push(right);
                gaps.union(right, below[pos + nb]);
            } else {
                gaps.union(left, below[pos + nb]);
            }
            pos += nb;
        }
        iface.push(above);
    }
    Sweep { gaps, iface }
}

/// The shadow of a closed diagram, with the unbounded region as outer
/// region (id 0). Other region ids follow first appearance in the sweep.
pub fn sliced_to_shadow(d: &SlicedDiagram) -> Result<ShadowPresentation, ShadowError> {
    if !d.is_closed() {
        return Err(ShadowError::NotClosed);
    }
    validate(d).map_err(|v| ShadowError::Diagram(v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")))?;
    let mut sw = sweep(d);

    // region ids
    let mut rid: HashMap<usize, u32> = HashMap::new();
    let outer_root = sw.gaps.find(0);
    rid.insert(outer_root, 0);
    for k in 0..sw.iface.len() {
        for j in 0..sw.iface[k].len() {
            let r = sw.gaps.find(sw.iface[k][j]);
            let n = rid.len() as u32;
            rid.entry(r).or_insert(n);
        }
    }
    let region_at = |sw: &mut Sweep, k: usize, j: usize| rid[&sw.gaps.find(sw.iface[k][j])];

    // legs: global numbering, with interface position
    struct Leg {
        iface: usize,
        pos: usize,
        color: HalfInt,
    }
    let mut legs: Vec<Leg> = Vec::new();
    let mut leg_base: Vec<Vec<usize>> = Vec::new();
    for (si, s) in d.slices.iter().enumerate() {
        let mut row = Vec::new();
        let (mut pb, mut pt) = (0, 0);
        for t in &s.tiles {
            row.push(legs.len());
            for c in t.bottom_colors() {
                legs.push(Leg { iface: si, pos: pb, color: c });
                pb += 1;
            }
            for c in t.top_colors() {
                legs.push(Leg { iface: si + 1, pos: pt, color: c });
                pt += 1;
            }
        }
        leg_base.push(row);
    }
    let mut arcs = UnionFind::new(legs.len());
    // leg at interface (k, pos) seen from below and from above
    let mut at: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (li, l) in legs.iter().enumerate() {
        at.entry((l.iface, l.pos)).or_default().push(li);
    }
    for v in at.values() {
        for w in v.windows(2) {
            arcs.union(w[0], w[1]);
        }
    }
    let mut nodes: Vec<(usize, usize)> = Vec::new(); // (slice, tile) of vertices and crossings
    let mut node_of_leg: Vec<Vec<usize>> = vec![Vec::new(); legs.len()];
    for (si, s) in d.slices.iter().enumerate() {
        for (ti, t) in s.tiles.iter().enumerate() {
            let base = leg_base[si][ti];
            if t.kind.is_vertex() || t.kind.is_crossing() {
                let n = nodes.len();
                nodes.push((si, ti));
                for j in 0..t.n_bottom() + t.n_top() {
                    node_of_leg[base + j].push(n);
                }
            } else {
                for (x, y) in t.through_pairs() {
                    arcs.union(base + x, base + y);
                }
            }
        }
    }

    // faces
    let mut face_of_root: BTreeMap<usize, u32> = BTreeMap::new();
    let mut faces: Vec<Face> = Vec::new();
    let mut face_nodes: Vec<Vec<usize>> = Vec::new();
    let mut face_of_leg = vec![0u32; legs.len()];
    for li in 0..legs.len() {
        let r = arcs.find(li);
        let id = match face_of_root.get(&r) {
            Some(id) => *id,
            None => {
                let id = faces.len() as u32;
                face_of_root.insert(r, id);
                let (k, p) = (legs[li].iface, legs[li].pos);
                let (a, b) = (region_at(&mut sw, k, p), region_at(&mut sw, k, p + 1));
                let regions = if a == b { vec![a] } else { vec![a.min(b), a.max(b)] };
                faces.push(Face { id, color: legs[li].color, euler: 0, regions });
                face_nodes.push(Vec::new());
                id
            }
        };
        face_of_leg[li] = id;
        face_nodes[id as usize].extend(node_of_leg[li].iter().copied());
    }
    for (f, ns) in faces.iter_mut().zip(face_nodes.iter_mut()) {
        ns.sort_unstable();
        ns.dedup();
        f.euler = u8::from(!ns.is_empty());
    }

    // vertices and crossings
    let mut vertices = Vec::new();
    let mut crossings = Vec::new();
    let mut gleam2: HashMap<u32, i64> = HashMap::new();
    for &(si, ti) in &nodes {
        let s = &d.slices[si];
        let t = &s.tiles[ti];
        let base = leg_base[si][ti];
        let bpos: usize = s.tiles[..ti].iter().map(|x| x.n_bottom()).sum();
        let tpos: usize = s.tiles[..ti].iter().map(|x| x.n_top()).sum();
        let below = |sw: &mut Sweep, j: usize| region_at(sw, si, bpos + j);
        let above = |sw: &mut Sweep, j: usize| region_at(sw, si + 1, tpos + j);
        let f = |j: usize| face_of_leg[base + j];
        match t.kind {
            TileKind::PosCross | TileKind::NegCross => {
                let (left, bottom, right) = (below(&mut sw, 0), below(&mut sw, 1), below(&mut sw, 2));
                let top = above(&mut sw, 1);
                let (colors, regions, sign) = if t.kind == TileKind::PosCross {
                    // strand 0 runs bottom right to top left
                    ([t.colors[1], t.colors[0]], [top, left, bottom, right], POS_SIGN)
                } else {
                    ([t.colors[0], t.colors[1]], [right, top, left, bottom], POS_SIGN)
                };
                for (k, r) in regions.iter().enumerate() {
                    *gleam2.entry(*r).or_insert(0) += if k % 2 == 1 { sign } else { -sign };
                }
                crossings.push(Crossing { colors, regions, sign });
            }
            TileKind::VertexY => {
                // legs: c below; a, b above
                let (l, r, mid) = (below(&mut sw, 0), below(&mut sw, 1), above(&mut sw, 1));
                vertices.push(Vertex { faces: [f(1), f(2), f(0)], regions: [r, l, mid] });
            }
            TileKind::VertexP => {
                // legs: a, b below; c above
                let (l, mid, r) = (below(&mut sw, 0), below(&mut sw, 1), below(&mut sw, 2));
                vertices.push(Vertex { faces: [f(0), f(1), f(2)], regions: [r, l, mid] });
            }
            TileKind::TripleW => {
                let (out, ab, bc) = (below(&mut sw, 0), above(&mut sw, 1), above(&mut sw, 2));
                vertices.push(Vertex { faces: [f(0), f(1), f(2)], regions: [bc, out, ab] });
            }
            TileKind::TripleM => {
                let (out, ab, bc) = (below(&mut sw, 0), below(&mut sw, 1), below(&mut sw, 2));
                vertices.push(Vertex { faces: [f(0), f(1), f(2)], regions: [bc, out, ab] });
            }
            _ => unreachable!("only vertices and crossings are nodes"),
        }
    }

    // Euler characteristics from boundary components
    let nreg = rid.len();
    let mut comps = UnionFind::new(faces.len());
    let mut by_node: HashMap<usize, Vec<u32>> = HashMap::new();
    for (fi, ns) in face_nodes.iter().enumerate() {
        for n in ns {
            by_node.entry(*n).or_default().push(fi as u32);
        }
    }
    let mut regions = Vec::new();
    for r in 0..nreg as u32 {
        let adj: Vec<u32> = faces.iter().filter(|f| f.regions.contains(&r)).map(|f| f.id).collect();
        for fs in by_node.values() {
            let touching: Vec<&u32> = fs.iter().filter(|f| adj.contains(f)).collect();
            for w in touching.windows(2) {
                comps.union(*w[0] as usize, *w[1] as usize);
            }
        }
        let mut roots: Vec<usize> = adj.iter().map(|f| comps.find(*f as usize)).collect();
        roots.sort_unstable();
        roots.dedup();
        let b = roots.len() as i64;
        let euler = if r == 0 { 1 - b } else { 2 - b };
        regions.push(Region { id: r, euler, gleam: HalfInt(gleam2.get(&r).copied().unwrap_or(0)) });
        comps = UnionFind::new(faces.len());
    }
    Ok(ShadowPresentation { regions, outer: 0, faces, vertices, crossings })
}
