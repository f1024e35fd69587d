//! Constructors for the diagrams used throughout the tests and examples.
//!
//! Every builder returns blackboard-framed diagrams (all `g = 0`) unless a
//! framing argument says otherwise. Colors are not checked here; run
//! [`validate`](super::validate) or evaluate to find inadmissible input.

use super::diagram::{Boundary, Slice, SlicedDiagram, Tile};
use crate::qarith::HalfInt;

fn ids(colors: &[HalfInt]) -> Vec<Tile> {
    colors.iter().map(|c| Tile::identity(*c)).collect()
}

/// A slice of identities with `tile` spliced in at wire position `pos`.
fn around(colors: &[HalfInt], pos: usize, tile: Tile) -> Slice {
    let nb = tile.n_bottom();
    let mut tiles = ids(&colors[..pos]);
    tiles.push(tile);
    tiles.extend(ids(&colors[pos + nb..]));
    Slice::new(tiles)
}

/// The `a`-colored unknot: a cup under a cap.
pub fn unknot(a: HalfInt) -> SlicedDiagram {
    SlicedDiagram::closed(vec![Slice::new(vec![Tile::cup(a)]), Slice::new(vec![Tile::cap(a)])])
}

/// Side-by-side unknots with colors and framings `(c_i, g_i)`. Edge `i` is
/// component `i`.
pub fn unlink(components: &[(HalfInt, HalfInt)]) -> SlicedDiagram {
    let cups = components.iter().map(|(c, _)| Tile::cup(*c)).collect();
    let caps = components.iter().map(|(c, _)| Tile::cap(*c)).collect();
    let mut d = SlicedDiagram::closed(vec![Slice::new(cups), Slice::new(caps)]);
    for (i, (_, g)) in components.iter().enumerate() {
        d = d.with_framing(i as u32, *g);
    }
    d
}

/// The planar θ-graph with edges `a, b, c`.
pub fn theta(a: HalfInt, b: HalfInt, c: HalfInt) -> SlicedDiagram {
    SlicedDiagram::closed(vec![
        Slice::new(vec![Tile::triple_w(a, b, c)]),
        Slice::new(vec![Tile::triple_m(a, b, c)]),
    ])
}

/// The planar tetrahedron whose vertex triples are `(a,b,c)`, `(a,e,f)`,
/// `(b,d,f)` and `(c,d,e)`.
pub fn tet(a: HalfInt, b: HalfInt, c: HalfInt, d: HalfInt, e: HalfInt, f: HalfInt) -> SlicedDiagram {
    SlicedDiagram::closed(vec![
        Slice::new(vec![Tile::triple_w(a, b, c)]),
        Slice::new(vec![Tile::vertex_y(e, f, a), Tile::identity(b), Tile::identity(c)]),
        Slice::new(vec![Tile::identity(e), Tile::vertex_p(f, b, d), Tile::identity(c)]),
        Slice::new(vec![Tile::triple_m(e, d, c)]),
    ])
}

/// The tetrahedron drawn with edges `a` and `d` crossing once (positively),
/// the remaining edges bounding the four sectors of the crossing: `b` below,
/// `f` left, `e` above, `c` right. Vertex triples `(b,a,c)`, `(f,d,b)`,
/// `(d,e,c)`, `(f,a,e)`.
pub fn crossed_tet(a: HalfInt, b: HalfInt, c: HalfInt, d: HalfInt, e: HalfInt, f: HalfInt) -> SlicedDiagram {
    SlicedDiagram::closed(vec![
        Slice::new(vec![Tile::triple_w(b, a, c)]),
        Slice::new(vec![Tile::vertex_y(f, d, b), Tile::identity(a), Tile::vertex_y(d, e, c)]),
        Slice::new(vec![Tile::identity(f), Tile::pos_cross(d, a), Tile::identity(d), Tile::identity(e)]),
        Slice::new(vec![Tile::identity(f), Tile::identity(a), Tile::cap(d), Tile::identity(e)]),
        Slice::new(vec![Tile::triple_m(f, a, e)]),
    ])
}

/// A single strand of color `a`, as a (1,1)-tangle.
pub fn strand(a: HalfInt) -> SlicedDiagram {
    SlicedDiagram::from_slices(vec![Slice::new(vec![Tile::identity(a)])], Boundary { bottom: vec![a], top: vec![a] })
}

/// One Y-vertex splitting `c` into `a, b`.
pub fn vertex_tangle(a: HalfInt, b: HalfInt, c: HalfInt) -> SlicedDiagram {
    SlicedDiagram::from_slices(
        vec![Slice::new(vec![Tile::vertex_y(a, b, c)])],
        Boundary { bottom: vec![c], top: vec![a, b] },
    )
}

/// One crossing between strands `a` (bottom left) and `b` (bottom right).
pub fn crossing_tangle(a: HalfInt, b: HalfInt, positive: bool) -> SlicedDiagram {
    let t = if positive { Tile::pos_cross(a, b) } else { Tile::neg_cross(a, b) };
    SlicedDiagram::from_slices(vec![Slice::new(vec![t])], Boundary { bottom: vec![a, b], top: vec![b, a] })
}

/// The θ-graph opened along its `a` edge: `a` splits into `b, c` and fuses
/// back.
pub fn theta_tangle(a: HalfInt, b: HalfInt, c: HalfInt) -> SlicedDiagram {
    SlicedDiagram::from_slices(
        vec![Slice::new(vec![Tile::vertex_y(b, c, a)]), Slice::new(vec![Tile::vertex_p(b, c, a)])],
        Boundary { bottom: vec![a], top: vec![a] },
    )
}

/// `n` half twists between strands `a` and `b`; positive crossings for
/// `n > 0`, negative for `n < 0`, two parallel strands for `n = 0`.
pub fn twist_chain(a: HalfInt, b: HalfInt, n: i64) -> SlicedDiagram {
    let mut slices = Vec::new();
    let (mut l, mut r) = (a, b);
    if n == 0 {
        slices.push(Slice::new(vec![Tile::identity(a), Tile::identity(b)]));
    }
    for _ in 0..n.abs() {
        slices.push(Slice::new(vec![if n > 0 { Tile::pos_cross(l, r) } else { Tile::neg_cross(l, r) }]));
        std::mem::swap(&mut l, &mut r);
    }
    SlicedDiagram::from_slices(slices, Boundary { bottom: vec![a, b], top: vec![l, r] })
}

/// Closes a (1,1)-tangle by a strand running up its left side.
pub fn closure(t: &SlicedDiagram) -> SlicedDiagram {
    assert!(
        t.boundary.bottom.len() == 1 && t.boundary.bottom == t.boundary.top,
        "closure needs a (1,1)-tangle with equal end colors"
    );
    let a = t.boundary.bottom[0];
    let mut slices = vec![Slice::new(vec![Tile::cup(a)])];
    for s in &t.slices {
        let mut tiles = vec![Tile::identity(a)];
        tiles.extend(s.tiles.iter().cloned());
        slices.push(Slice::new(tiles));
    }
    slices.push(Slice::new(vec![Tile::cap(a)]));
    SlicedDiagram::closed(slices)
}

/// Connected sum of the closures of two (1,1)-tangles along their end
/// color.
pub fn connected_sum(t1: &SlicedDiagram, t2: &SlicedDiagram) -> SlicedDiagram {
    closure(&t1.stack(t2))
}

/// Disjoint union, `d2` placed to the right of `d1`. Both must be closed.
/// Framings are carried over.
pub fn disjoint_union(d1: &SlicedDiagram, d2: &SlicedDiagram) -> SlicedDiagram {
    assert!(d1.is_closed() && d2.is_closed(), "disjoint union of closed diagrams only");
    let mut slices = d1.slices.clone();
    slices.extend(d2.slices.iter().cloned());
    let mut out = SlicedDiagram::closed(slices);
    // edge ids follow first appearance, so d1's come first
    let n1 = d1.edges.len() as u32;
    for e in &d1.edges {
        out = out.with_framing(e.id, e.g);
    }
    for e in &d2.edges {
        out = out.with_framing(n1 + e.id, e.g);
    }
    out
}

/// Closure of the 2-strand braid with `n` crossings (sign of `n` picks the
/// crossing type), strands colored `a` and `b`. `n = 2` is the Hopf link,
/// `n = 3` the trefoil (needs `a = b`).
pub fn braid_closure(a: HalfInt, b: HalfInt, n: i64) -> SlicedDiagram {
    let mut slices = vec![
        Slice::new(vec![Tile::cup(b)]),
        Slice::new(vec![Tile::identity(b), Tile::cup(a), Tile::identity(b)]),
    ];
    let (mut l, mut r) = (a, b);
    for _ in 0..n.abs() {
        let x = if n > 0 { Tile::pos_cross(l, r) } else { Tile::neg_cross(l, r) };
        slices.push(Slice::new(vec![Tile::identity(b), Tile::identity(a), x]));
        std::mem::swap(&mut l, &mut r);
    }
    slices.push(Slice::new(vec![Tile::identity(b), Tile::cap(a), Tile::identity(r)]));
    slices.push(Slice::new(vec![Tile::cap(b)]));
    SlicedDiagram::closed(slices)
}

/// A figure-eight curve (one positive self-crossing) inside a circle, with
/// `a` half twists between the circle and the left lobe and `b` between
/// the circle and the right lobe. All strands colored `n`.
///
/// With `a = b = 0` this is a two component unlink whose inner component
/// has blackboard framing 1.
pub fn twisted_link(n: HalfInt, a: i64, b: i64) -> SlicedDiagram {
    let w6 = [n; 6];
    let twist = |pos: usize, k: i64| -> Vec<Slice> {
        (0..k.abs())
            .map(|_| around(&w6, pos, if k > 0 { Tile::pos_cross(n, n) } else { Tile::neg_cross(n, n) }))
            .collect()
    };
    let mut slices = vec![
        Slice::new(vec![Tile::cup(n)]),
        Slice::new(vec![Tile::identity(n), Tile::cup(n), Tile::cup(n), Tile::identity(n)]),
    ];
    slices.extend(twist(0, a));
    slices.extend(twist(4, b));
    slices.push(around(&w6, 2, Tile::pos_cross(n, n)));
    slices.push(Slice::new(vec![Tile::identity(n), Tile::cap(n), Tile::cap(n), Tile::identity(n)]));
    slices.push(Slice::new(vec![Tile::cap(n)]));
    SlicedDiagram::closed(slices)
}

/// The planar pentagonal prism: a 2×1 domino of squares inside a square,
/// corners joined by spokes. All edges colored `n`. The two domino squares
/// are the only regions not touching the outer square.
pub fn prism(n: HalfInt) -> SlicedDiagram {
    let y = || Tile::vertex_y(n, n, n);
    let p = || Tile::vertex_p(n, n, n);
    let id = || Tile::identity(n);
    SlicedDiagram::closed(vec![
        Slice::new(vec![Tile::cup(n)]),
        Slice::new(vec![y(), y()]),
        Slice::new(vec![id(), y(), y(), id()]),
        Slice::new(vec![id(), id(), p(), id(), id()]),
        Slice::new(vec![id(), id(), y(), id(), id()]),
        Slice::new(vec![id(), p(), p(), id()]),
        Slice::new(vec![p(), p()]),
        Slice::new(vec![Tile::cap(n)]),
    ])
}

/// Colors on the interface above slice `k` (`k = 0` is the bottom boundary).
fn interface(d: &SlicedDiagram, k: usize) -> Vec<HalfInt> {
    if k == 0 {
        d.boundary.bottom.clone()
    } else {
        d.slices[k - 1].top_colors()
    }
}

fn splice(d: &SlicedDiagram, k: usize, extra: Vec<Slice>) -> SlicedDiagram {
    let mut slices = d.slices[..k].to_vec();
    slices.extend(extra);
    slices.extend(d.slices[k..].iter().cloned());
    SlicedDiagram::from_slices(slices, d.boundary.clone())
}

/// Inserts a cup/cap zig-zag on wire `pos` of the interface above slice
/// `k`. Framings are reset.
pub fn insert_zigzag(d: &SlicedDiagram, k: usize, pos: usize) -> SlicedDiagram {
    let cols = interface(d, k);
    let a = cols[pos];
    let mut first = ids(&cols[..=pos]);
    first.push(Tile::cup(a));
    first.extend(ids(&cols[pos + 1..]));
    let mut wide = cols[..=pos].to_vec();
    wide.extend([a, a]);
    wide.extend_from_slice(&cols[pos + 1..]);
    let second = around(&wide, pos, Tile::cap(a));
    splice(d, k, vec![Slice::new(first), second])
}

/// Inserts a positive crossing followed by a negative one on wires
/// `pos, pos+1` of the interface above slice `k`. Framings are reset.
pub fn insert_crossing_pair(d: &SlicedDiagram, k: usize, pos: usize) -> SlicedDiagram {
    let cols = interface(d, k);
    let (a, b) = (cols[pos], cols[pos + 1]);
    let mut swapped = cols.clone();
    swapped.swap(pos, pos + 1);
    splice(d, k, vec![around(&cols, pos, Tile::pos_cross(a, b)), around(&swapped, pos, Tile::neg_cross(b, a))])
}
