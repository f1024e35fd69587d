//! Corpus-wide integrality, divisibility and engine agreement.

use super::corpus::CorpusEntry;
use super::identities::{par_map, IdentityReport, Instance};
use super::renorm::{check_divisibility, check_integrality, renormalize, GraphCombinatorics};
use crate::qarith::{HalfInt, QRatio};
use crate::shadow::{shadow_eval, sliced_to_shadow};
use crate::sliced::{evaluate, framing_factor};

fn renormalized(e: &CorpusEntry) -> Result<QRatio, String> {
    let raw = evaluate(&e.diagram, None).map_err(|x| x.to_string())?;
    Ok(renormalize(&raw, &GraphCombinatorics::of(&e.diagram)))
}

fn max_color(corpus: &[CorpusEntry]) -> i64 {
    corpus.iter().flat_map(|e| e.diagram.edges.iter().map(|x| x.color.0)).max().unwrap_or(0)
}

fn report(name: &str, corpus: &[CorpusEntry], instances: Vec<Instance>) -> IdentityReport {
    IdentityReport { name: name.into(), max: max_color(corpus), instances, notes: Vec::new() }
}

/// Every renormalized value canonicalizes; blackboard-framed ones have
/// `m = 0` and even `n`. The right side of each instance is `m=…, n=…`.
pub fn verify_integrality(corpus: &[CorpusEntry]) -> IdentityReport {
    let instances = par_map(corpus.iter().collect(), |e| {
        let (lhs, rhs, pass) = match renormalized(e) {
            Err(msg) => (msg, "error".into(), false),
            Ok(v) => match check_integrality(&v) {
                Ok(b) => {
                    let ok = !e.blackboard() || b.is_zero() || (b.phase_m == 0 && b.quarter_shift_n % 2 == 0);
                    (b.to_string(), format!("m={}, n={}", b.phase_m, b.quarter_shift_n), ok)
                }
                Err(err) => (v.render(), err.to_string(), false),
            },
        };
        Instance { args: Vec::new(), label: e.name.clone(), lhs, rhs, pass }
    });
    report("integrality", corpus, instances)
}

/// The canonical body is divisible by `[2c+1]` for every edge color `c`.
pub fn verify_divisibility(corpus: &[CorpusEntry]) -> IdentityReport {
    let instances = par_map(corpus.iter().collect(), |e| {
        let mut colors: Vec<HalfInt> = e.diagram.edges.iter().map(|x| x.color).collect();
        colors.sort();
        colors.dedup();
        let (lhs, rhs, pass) = match renormalized(e).and_then(|v| check_integrality(&v).map_err(|x| x.to_string())) {
            Err(msg) => (msg, "error".into(), false),
            Ok(b) => {
                let ok = check_divisibility(&b, &colors);
                let bad: Vec<String> = colors.iter().zip(&ok).filter(|(_, d)| !**d).map(|(c, _)| format!("[{}]", c.0 + 1)).collect();
                let rhs = if bad.is_empty() { "divisible".into() } else { format!("not divisible by {}", bad.join(", ")) };
                (b.to_string(), rhs, bad.is_empty())
            }
        };
        Instance { args: colors.iter().map(|c| c.0).collect(), label: e.name.clone(), lhs, rhs, pass }
    });
    report("divisibility", corpus, instances)
}

/// The renormalized sliced evaluation equals the shadow state-sum of the
/// converted diagram.
pub fn verify_engine_equivalence(corpus: &[CorpusEntry]) -> IdentityReport {
    let instances = par_map(corpus.iter().collect(), |e| {
        let lhs = renormalized(e);
        let rhs = sliced_to_shadow(&e.diagram)
            .and_then(|p| shadow_eval(&p, &framing_factor(&e.diagram)))
            .map_err(|x| x.to_string());
        let pass = matches!((&lhs, &rhs), (Ok(l), Ok(r)) if l == r);
        let show = |v: Result<QRatio, String>| v.map(|x| x.render()).unwrap_or_else(|m| m);
        Instance { args: Vec::new(), label: e.name.clone(), lhs: show(lhs), rhs: show(rhs), pass }
    });
    report("engine equivalence", corpus, instances)
}
