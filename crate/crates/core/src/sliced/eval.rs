//! The R-matrix / Clebsch-Gordan state-sum, contracted slice by slice.

use super::diagram::{SlicedDiagram, Tile, TileKind};
use super::validate::{validate, Violation};
use crate::qarith::{HalfInt, QIntFrac, QLaurent, QRatio};
use crate::repcore::{cap_scaled, cg_c_scaled, cup, framing_scalar, m_m_scaled, proj_p_scaled, rmat, rmat_inv, w_w};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("invalid diagram: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("boundary states: {0}")]
    BoundaryStates(String),
}

/// Fixed states on the bottom and top boundary wires.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BoundaryStates {
    pub bottom: Vec<HalfInt>,
    pub top: Vec<HalfInt>,
}

type Key = Vec<i16>;

/// `F(D, col) = ∏_e i^{4 g_e c_e} q^{2 g_e (c_e² + c_e)}`.
pub fn framing_factor(d: &SlicedDiagram) -> QLaurent {
    d.edges.iter().fold(QLaurent::one(), |acc, e| &acc * &framing_scalar(e.color, e.g))
}

/// `[2a]!` denominators carried by the scaled tile weights.
fn tile_denominator(t: &Tile, acc: &mut QIntFrac) {
    let c = &t.colors;
    match t.kind {
        TileKind::Cap => acc.mul_qfact_pow(c[0].0, -1),
        TileKind::VertexY => acc.mul_qfact_pow(c[2].0, -1),
        TileKind::VertexP => {
            acc.mul_qfact_pow(c[0].0, -1);
            acc.mul_qfact_pow(c[1].0, -1);
        }
        TileKind::TripleM => {
            for x in c {
                acc.mul_qfact_pow(x.0, -1);
            }
        }
        _ => {}
    }
}

fn h(x: i16) -> HalfInt {
    HalfInt(x as i64)
}

/// Nonzero `(top states, scaled weight)` pairs for given bottom states.
fn transitions(t: &Tile, bottom: &[i16]) -> Vec<(Vec<i16>, QLaurent)> {
    let c = &t.colors;
    let mut out = Vec::new();
    let mut push = |top: Vec<i16>, w: QLaurent| {
        if !w.is_zero() {
            out.push((top, w));
        }
    };
    match t.kind {
        TileKind::Identity => push(bottom.to_vec(), QLaurent::one()),
        TileKind::Cup => {
            for u in c[0].states() {
                push(vec![u.0 as i16, -u.0 as i16], cup(c[0], u, -u));
            }
        }
        TileKind::Cap => push(vec![], cap_scaled(c[0], h(bottom[0]), h(bottom[1]))),
        TileKind::PosCross => {
            let (u, v) = (h(bottom[0]), h(bottom[1]));
            // h = v - n on b, k = u + n on a
            for k in c[0].states().filter(|k| k.0 >= u.0) {
                let hh = v - (k - u);
                push(vec![hh.0 as i16, k.0 as i16], rmat(c[0], c[1], u, v, hh, k));
            }
        }
        TileKind::NegCross => {
            let (u, v) = (h(bottom[0]), h(bottom[1]));
            // h = v + n on b, k = u - n on a
            for k in c[0].states().filter(|k| k.0 <= u.0) {
                let hh = v + (u - k);
                push(vec![hh.0 as i16, k.0 as i16], rmat_inv(c[0], c[1], u, v, hh, k));
            }
        }
        TileKind::VertexY => {
            let tt = h(bottom[0]);
            for u in c[0].states() {
                let v = tt - u;
                push(vec![u.0 as i16, v.0 as i16], cg_c_scaled(c[0], c[1], c[2], u, v, tt));
            }
        }
        TileKind::VertexP => {
            let (u, v) = (h(bottom[0]), h(bottom[1]));
            let tt = u + v;
            push(vec![tt.0 as i16], proj_p_scaled(c[0], c[1], c[2], u, v, tt));
        }
        TileKind::TripleW => {
            for u in c[0].states() {
                for v in c[1].states() {
                    let tt = -(u + v);
                    push(vec![u.0 as i16, v.0 as i16, tt.0 as i16], w_w(c[0], c[1], c[2], u, v, tt));
                }
            }
        }
        TileKind::TripleM => {
            let (u, v, tt) = (h(bottom[0]), h(bottom[1]), h(bottom[2]));
            push(vec![], m_m_scaled(c[0], c[1], c[2], u, v, tt));
        }
    }
    out
}

/// Contracts every slice starting from the given bottom states; returns the
/// scaled numerators keyed by top states.
fn sweep(d: &SlicedDiagram, start: Key) -> HashMap<Key, QLaurent> {
    let mut cur: HashMap<Key, QLaurent> = HashMap::new();
    cur.insert(start, QLaurent::one());
    for s in &d.slices {
        let mut pos = 0usize;
        for t in &s.tiles {
            let (nb, nt) = (t.n_bottom(), t.n_top());
            if t.kind == TileKind::Identity {
                pos += 1;
                continue;
            }
            let mut next: HashMap<Key, QLaurent> = HashMap::with_capacity(cur.len());
            for (key, val) in cur.drain() {
                for (top, w) in transitions(t, &key[pos..pos + nb]) {
                    let mut nk = Vec::with_capacity(key.len() + nt - nb);
                    nk.extend_from_slice(&key[..pos]);
                    nk.extend_from_slice(&top);
                    nk.extend_from_slice(&key[pos + nb..]);
                    let contrib = &val * &w;
                    match next.get_mut(&nk) {
                        Some(acc) => *acc = &*acc + &contrib,
                        None => {
                            next.insert(nk, contrib);
                        }
                    }
                }
            }
            next.retain(|_, v| !v.is_zero());
            cur = next;
            pos += nt;
        }
    }
    cur
}

fn denominators(d: &SlicedDiagram) -> QIntFrac {
    let mut acc = QIntFrac::one();
    for t in d.slices.iter().flat_map(|s| s.tiles.iter()) {
        tile_denominator(t, &mut acc);
    }
    acc
}

fn check_states(states: &[HalfInt], colors: &[HalfInt], which: &str) -> Result<(), EvalError> {
    if states.len() != colors.len() {
        return Err(EvalError::BoundaryStates(format!("{which}: {} states for {} wires", states.len(), colors.len())));
    }
    for (k, (s, c)) in states.iter().zip(colors).enumerate() {
        if !s.is_state_of(*c) {
            return Err(EvalError::BoundaryStates(format!("{which} wire {k}: {s} is not a state of color {c}")));
        }
    }
    Ok(())
}

/// The state-sum as a factored fraction, framing factor included.
pub fn evaluate_frac(d: &SlicedDiagram, boundary: Option<&BoundaryStates>) -> Result<QIntFrac, EvalError> {
    validate(d).map_err(EvalError::Invalid)?;
    let empty = BoundaryStates::default();
    let b = match boundary {
        Some(b) => b,
        None if d.is_closed() => &empty,
        None => return Err(EvalError::BoundaryStates("open diagram needs boundary states".into())),
    };
    check_states(&b.bottom, &d.boundary.bottom, "bottom")?;
    check_states(&b.top, &d.boundary.top, "top")?;
    let start: Key = b.bottom.iter().map(|s| s.0 as i16).collect();
    let end: Key = b.top.iter().map(|s| s.0 as i16).collect();
    let mut fin = sweep(d, start);
    let num = fin.remove(&end).unwrap_or_else(QLaurent::zero);
    let mut out = denominators(d);
    out.mul_laurent(&(&num * &framing_factor(d)));
    Ok(out)
}

/// `⟨D, col⟩` (or one matrix entry of an open diagram) as a reduced fraction.
pub fn evaluate(d: &SlicedDiagram, boundary: Option<&BoundaryStates>) -> Result<QRatio, EvalError> {
    Ok(evaluate_frac(d, boundary)?.to_ratio())
}

/// Every nonzero matrix entry of an open diagram, sorted by boundary states.
pub fn evaluate_entries(d: &SlicedDiagram) -> Result<Vec<(BoundaryStates, QIntFrac)>, EvalError> {
    validate(d).map_err(EvalError::Invalid)?;
    let den = denominators(d);
    let f = framing_factor(d);
    let mut out = Vec::new();
    for bottom in state_tuples(&d.boundary.bottom) {
        let start: Key = bottom.iter().map(|s| s.0 as i16).collect();
        let fin = sweep(d, start);
        let mut keys: Vec<&Key> = fin.keys().collect();
        keys.sort();
        for k in keys {
            let mut v = den.clone();
            v.mul_laurent(&(&fin[k] * &f));
            let top = k.iter().map(|x| HalfInt(*x as i64)).collect();
            out.push((BoundaryStates { bottom: bottom.clone(), top }, v));
        }
    }
    Ok(out)
}

/// All state tuples for a list of colors, lexicographic on doubled values.
pub fn state_tuples(colors: &[HalfInt]) -> Vec<Vec<HalfInt>> {
    let mut out: Vec<Vec<HalfInt>> = vec![vec![]];
    for c in colors {
        let mut next = Vec::new();
        for prefix in &out {
            for s in c.states() {
                let mut p = prefix.clone();
                p.push(s);
                next.push(p);
            }
        }
        out = next;
    }
    out
}
