//! The shadow state-sum in gleam form.

use super::presentation::{ShadowError, ShadowPresentation};
use super::symbols::{tet_sym, theta_pow, unknot_pow};
use crate::qarith::{admissible, HalfInt, QIntFrac, QLaurent, QRatio};
use crate::repcore::framing_scalar;
use std::collections::{BTreeMap, VecDeque};

/// Region id → state.
pub type ShadowState = BTreeMap<u32, HalfInt>;

/// Result of a shadow state-sum.
#[derive(Clone, Debug)]
pub struct ShadowSum {
    pub value: QIntFrac,
    pub states: usize,
    /// Why no state exists, when `states == 0`.
    pub obstruction: Option<String>,
}

/// `(region index, bounding face (color, placed neighbor))` in search order.
type Order = Vec<(usize, Option<(HalfInt, usize)>)>;

/// Regions in breadth-first order from the outer one; each non-outer region
/// comes with a face `(color, already placed neighbor)` bounding its range.
fn spanning_order(p: &ShadowPresentation) -> Result<Order, ShadowError> {
    let idx = p.index();
    let n = p.regions.len();
    let mut adj: Vec<Vec<(HalfInt, usize)>> = vec![Vec::new(); n];
    for f in &p.faces {
        if let [a, b] = f.regions[..] {
            let (a, b) = (idx[&a], idx[&b]);
            if a != b {
                adj[a].push((f.color, b));
                adj[b].push((f.color, a));
            }
        }
    }
    let start = idx[&p.outer];
    let mut seen = vec![false; n];
    let mut out = vec![(start, None)];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(r) = queue.pop_front() {
        for &(c, s) in &adj[r] {
            if !seen[s] {
                seen[s] = true;
                out.push((s, Some((c, r))));
                queue.push_back(s);
            }
        }
    }
    if let Some(k) = seen.iter().position(|s| !s) {
        return Err(ShadowError::Invalid(format!("region {} is not connected to the outer region", p.regions[k].id)));
    }
    Ok(out)
}

/// Faces to check once region at order position `k` is placed: those whose
/// regions are all placed by then.
fn checks_by_step(p: &ShadowPresentation, order: &Order) -> Vec<Vec<usize>> {
    let idx = p.index();
    let mut pos = vec![0usize; p.regions.len()];
    for (k, (r, _)) in order.iter().enumerate() {
        pos[*r] = k;
    }
    let mut out = vec![Vec::new(); order.len()];
    for (fi, f) in p.faces.iter().enumerate() {
        let last = f.regions.iter().map(|r| pos[idx[r]]).max().unwrap();
        out[last].push(fi);
    }
    out
}

fn face_ok(p: &ShadowPresentation, fi: usize, state: &[Option<HalfInt>], idx: &std::collections::HashMap<u32, usize>) -> bool {
    let f = &p.faces[fi];
    let s0 = state[idx[&f.regions[0]]].unwrap();
    let s1 = state[idx[f.regions.last().unwrap()]].unwrap();
    admissible(s0, f.color, s1)
}

/// All shadow states, in the deterministic order of the spanning search
/// (each region's candidates increasing).
pub fn shadow_states(p: &ShadowPresentation) -> Result<(Vec<ShadowState>, Option<String>), ShadowError> {
    p.check()?;
    let idx = p.index();
    let order = spanning_order(p)?;
    let checks = checks_by_step(p, &order);
    let mut state: Vec<Option<HalfInt>> = vec![None; p.regions.len()];
    let mut out = Vec::new();
    let mut deepest = (0usize, String::new());
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        p: &ShadowPresentation,
        idx: &std::collections::HashMap<u32, usize>,
        order: &Order,
        checks: &[Vec<usize>],
        state: &mut Vec<Option<HalfInt>>,
        out: &mut Vec<ShadowState>,
        deepest: &mut (usize, String),
    ) {
        if k == order.len() {
            out.push(p.regions.iter().zip(state.iter()).map(|(r, s)| (r.id, s.unwrap())).collect());
            return;
        }
        let (r, via) = order[k];
        let cands: Vec<HalfInt> = match via {
            None => vec![HalfInt::ZERO],
            Some((c, s)) => {
                let s = state[s].unwrap();
                let lo = (s.0 - c.0).abs();
                (0..).map(|j| HalfInt(lo + 2 * j)).take_while(|u| u.0 <= s.0 + c.0).collect()
            }
        };
        for u in cands {
            state[r] = Some(u);
            match checks[k].iter().find(|&&fi| !face_ok(p, fi, state, idx)) {
                None => rec(k + 1, p, idx, order, checks, state, out, deepest),
                Some(&fi) => {
                    if k >= deepest.0 {
                        let f = &p.faces[fi];
                        *deepest = (k, format!("face {} (color {}) admits no state on region {}", f.id, f.color, p.regions[r].id));
                    }
                }
            }
        }
        state[r] = None;
    }
    rec(0, p, &idx, &order, &checks, &mut state, &mut out, &mut deepest);
    let why = if out.is_empty() { Some(deepest.1) } else { None };
    Ok((out, why))
}

/// Weight of one state without the framing factor, factored. Zero when a
/// face triple is inadmissible.
pub fn state_weight_frac(p: &ShadowPresentation, s: &ShadowState) -> Result<QIntFrac, ShadowError> {
    p.check()?;
    let st = |r: u32| -> Result<HalfInt, ShadowError> {
        s.get(&r).copied().ok_or_else(|| ShadowError::State(format!("no state for region {r}")))
    };
    if st(p.outer)? != HalfInt::ZERO {
        return Err(ShadowError::State("the outer region must have state 0".into()));
    }
    for r in &p.regions {
        if st(r.id)?.0 < 0 {
            return Err(ShadowError::State(format!("negative state on region {}", r.id)));
        }
    }
    let mut w = QIntFrac::one();
    let mut num = QLaurent::one();
    for r in &p.regions {
        let u = st(r.id)?;
        w = w.mul(&unknot_pow(u, r.euler));
        num = &num * &framing_scalar(u, r.gleam);
    }
    let faces: std::collections::HashMap<u32, _> = p.faces.iter().map(|f| (f.id, f)).collect();
    for f in &p.faces {
        let u = st(f.regions[0])?;
        let v = st(*f.regions.last().unwrap())?;
        if !admissible(u, f.color, v) {
            return Ok(QIntFrac::zero());
        }
        w = w.mul(&theta_pow(u, f.color, v, -(f.euler as i64)).expect("admissible"));
    }
    for v in &p.vertices {
        let c = v.faces.map(|f| faces[&f].color);
        let r = v.regions.map(st);
        let [r0, r1, r2] = [r[0].clone()?, r[1].clone()?, r[2].clone()?];
        num = &num * &tet_sym(c[0], c[1], c[2], r0, r1, r2);
    }
    for c in &p.crossings {
        let r = c.regions.map(st);
        let [r0, r1, r2, r3] = [r[0].clone()?, r[1].clone()?, r[2].clone()?, r[3].clone()?];
        num = &num * &tet_sym(r0, r1, c.colors[0], r2, r3, c.colors[1]);
    }
    w.mul_laurent(&num);
    Ok(w)
}

/// Weight of a single shadow state (framing factor not included).
pub fn shadow_state_weight(p: &ShadowPresentation, s: &ShadowState) -> Result<QRatio, ShadowError> {
    Ok(state_weight_frac(p, s)?.to_ratio())
}

/// `F · Σ_s w(s)` as a factored fraction, with the state count.
pub fn shadow_sum(p: &ShadowPresentation, framing: &QLaurent) -> Result<ShadowSum, ShadowError> {
    let (states, obstruction) = shadow_states(p)?;
    let weights = states.iter().map(|s| state_weight_frac(p, s)).collect::<Result<Vec<_>, _>>()?;
    let mut value = QIntFrac::sum(weights.iter());
    value.mul_laurent(framing);
    Ok(ShadowSum { value, states: states.len(), obstruction })
}

/// The shadow state-sum `F · Σ_s w(s)` as a reduced fraction.
pub fn shadow_eval(p: &ShadowPresentation, framing: &QLaurent) -> Result<QRatio, ShadowError> {
    Ok(shadow_sum(p, framing)?.value.to_ratio())
}
