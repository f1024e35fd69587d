//! Integrality of matrix entries of open diagrams.

use super::corpus::CorpusEntry;
use super::identities::{IdentityReport, Instance};
use crate::qarith::{canonicalize_ratio, BracketValue, QIntFrac, QLaurent};
use crate::sliced::{evaluate_entries, EvalError, SlicedDiagram};
use std::collections::HashSet;

/// `∏_{e ∈ E'} [2c_e]! / ∏_v [a+b−c]! [b+c−a]! [c+a−b]!` times the boundary
/// phase `i^{Σ top colors − Σ bottom colors}`, where `E'` holds the edges
/// not reaching the top boundary.
pub fn boundary_factor(d: &SlicedDiagram) -> QIntFrac {
    let legs = |slice: Option<&Vec<Vec<u32>>>, top: bool| -> HashSet<u32> {
        let Some(row) = slice else { return HashSet::new() };
        let tiles = if top { &d.slices[d.slices.len() - 1].tiles } else { &d.slices[0].tiles };
        row.iter()
            .zip(tiles)
            .flat_map(|(w, t)| if top { w[t.n_bottom()..].to_vec() } else { w[..t.n_bottom()].to_vec() })
            .collect()
    };
    let at_top = legs(d.wires.last(), true);
    let at_bottom = legs(d.wires.first(), false);
    let mut f = QIntFrac::one();
    for e in &d.edges {
        if !at_top.contains(&e.id) && (e.euler == 1 || at_bottom.contains(&e.id)) {
            f.mul_qfact_pow(e.color.0, 1);
        }
    }
    for (a, b, c) in d.vertex_triples() {
        for k in [a.0 + b.0 - c.0, b.0 + c.0 - a.0, c.0 + a.0 - b.0] {
            f.mul_qfact_pow(k / 2, -1);
        }
    }
    let top: i64 = d.boundary.top.iter().map(|c| c.0).sum();
    let bottom: i64 = d.boundary.bottom.iter().map(|c| c.0).sum();
    f.mul_unit((top - bottom) / 2, 0);
    f
}

/// Membership in `ℤ[q^{±1/2}]`: real phase and half-integral powers of `q`.
fn in_half_ring(v: &BracketValue) -> bool {
    v.is_zero() || (v.phase_m == 0 && v.quarter_shift_n % 2 == 0)
}

/// Checks every renormalized entry of every diagram. Entries are labeled
/// `name [bottom states] -> [top states]`. When a diagram fails, the
/// smallest unit `i^m q^{n/4}` repairing all its entries is named in the
/// report, if one exists.
pub fn verify_boundary_integrality(corpus: &[CorpusEntry]) -> Result<IdentityReport, EvalError> {
    let mut instances = Vec::new();
    let mut notes = Vec::new();
    let mut max = 0;
    for entry in corpus {
        let (name, d) = (&entry.name, &entry.diagram);
        max = max.max(d.edges.iter().map(|e| e.color.0).max().unwrap_or(0));
        let f = boundary_factor(d);
        let entries: Vec<_> = evaluate_entries(d)?.into_iter().map(|(s, v)| (s, v.mul(&f).to_ratio())).collect();
        let mut all = true;
        for (s, v) in &entries {
            let canon = canonicalize_ratio(v);
            let pass = canon.as_ref().is_ok_and(in_half_ring);
            all &= pass;
            instances.push(Instance {
                args: s.bottom.iter().chain(&s.top).map(|x| x.0).collect(),
                label: format!(
                    "{name} {:?} -> {:?}",
                    s.bottom.iter().map(|x| x.0).collect::<Vec<_>>(),
                    s.top.iter().map(|x| x.0).collect::<Vec<_>>()
                ),
                lhs: v.render(),
                rhs: match &canon {
                    Ok(b) => format!("{b}"),
                    Err(e) => e.to_string(),
                },
                pass,
            });
        }
        if !all {
            let found = (0..16).map(|k| (k % 4, k / 4)).find(|&(m, n)| {
                entries.iter().all(|(_, v)| {
                    canonicalize_ratio(&v.mul_laurent(&QLaurent::unit(m, n))).as_ref().is_ok_and(in_half_ring)
                })
            });
            notes.push(match found {
                Some((m, n)) => format!("{name}: entries land in Z[q^(±1/2)] after multiplying by i^{m} q^({n}/4)"),
                None => format!("{name}: no unit i^m q^(n/4) repairs every entry"),
            });
        }
    }
    Ok(IdentityReport { name: "boundary integrality".into(), max, instances, notes })
}
