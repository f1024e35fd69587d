//! One line per acceptance criterion; exits nonzero if any fails.

use qspin::qarith::{admissible, canonicalize_ratio, divides, qfact, qint, qmultinom, HalfInt, QLaurent, QRatio};
use qspin::repcore::half_twist_sides;
use qspin::shadow::{shadow_eval, shadow_state_weight, sliced_to_shadow, ShadowPresentation, ShadowState};
use qspin::sliced::{builders, evaluate, framing_factor, SlicedDiagram};
use qspin::verify::{self, renormalize, tet_colorings, GraphCombinatorics, IdentityReport};
use std::time::Instant;

fn h(d: i64) -> HalfInt {
    HalfInt::from_doubled(d)
}

fn r(p: QLaurent) -> QRatio {
    QRatio::from_laurent(p)
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn raw(d: &SlicedDiagram) -> QRatio {
    evaluate(d, None).unwrap()
}

fn renormalized(d: &SlicedDiagram) -> QRatio {
    renormalize(&raw(d), &GraphCombinatorics::of(d))
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

// (−1)^{2a}[2a+1] i^{4ga} q^{2g(a²+a)}, doubled: i^{GA} x^{G(A²+2A)}
fn framed_unknot(a: i64, g: i64) -> QRatio {
    r(qint(a + 1).scale(&sign(a).into()).mul_unit(g * a, g * (a * a + 2 * a)))
}

// (−1)^{a+b+c} [a+b+c+1]! [a+b−c]! [b+c−a]! [c+a−b]! / ([2a]! [2b]! [2c]!), spins
fn raw_theta(t: [i64; 3]) -> QRatio {
    let [a, b, c] = t;
    let s = (a + b + c) / 2;
    let num = &(&(&qfact(s + 1) * &qfact(s - c)) * &qfact(s - a)) * &qfact(s - b);
    let den = &(&qfact(a) * &qfact(b)) * &qfact(c);
    QRatio::new(num.scale(&sign(s).into()), den)
}

// (−1)^{a+b+c} [a+b+c+1]! / ([a+b−c]! [b+c−a]! [c+a−b]!)
fn renorm_theta(t: [i64; 3]) -> QLaurent {
    let [a, b, c] = t;
    let s = (a + b + c) / 2;
    let den = &(&qfact(s - c) * &qfact(s - a)) * &qfact(s - b);
    qfact(s + 1).div_exact(&den).unwrap().scale(&sign(s).into())
}

// Σ_z (−1)^z [z+1]! / (∏ [z−T_i]! ∏ [Q_j−z]!)
fn renorm_tet(c: [i64; 6]) -> QLaurent {
    let [a, b, cc, d, e, f] = c;
    let t = [a + b + cc, a + e + f, d + b + f, d + e + cc].map(|x| x / 2);
    let q = [a + b + d + e, a + cc + d + f, b + cc + e + f].map(|x| x / 2);
    let mut sum = QLaurent::zero();
    for z in *t.iter().max().unwrap()..=*q.iter().min().unwrap() {
        let den = t.iter().map(|ti| qfact(z - ti)).chain(q.iter().map(|qj| qfact(qj - z))).fold(QLaurent::one(), |acc, x| &acc * &x);
        sum = &sum + &qfact(z + 1).div_exact(&den).unwrap().scale(&sign(z).into());
    }
    sum
}

struct Line {
    ok: bool,
    detail: String,
}

fn line(ok: bool, detail: impl Into<String>) -> Line {
    Line { ok, detail: detail.into() }
}

fn from_reports(reports: &[IdentityReport]) -> Line {
    let ok = reports.iter().all(|x| x.passed());
    let parts: Vec<String> = reports
        .iter()
        .map(|x| format!("{} {}/{}", x.name, x.instances.len() - x.failures().count(), x.instances.len()))
        .collect();
    line(ok, parts.join(", "))
}

fn closed_forms() -> Line {
    let mut bad = Vec::new();
    let mut n = 0;
    for a in 0..=6 {
        for g in -2..=2 {
            n += 1;
            if raw(&builders::unlink(&[(h(a), h(g))])) != framed_unknot(a, g) {
                bad.push(format!("unknot({a}, g={g})"));
            }
        }
    }
    for t in triples(6) {
        n += 1;
        if raw(&builders::theta(h(t[0]), h(t[1]), h(t[2]))) != raw_theta(t) {
            bad.push(format!("theta{t:?}"));
        }
    }
    line(bad.is_empty(), format!("{n} diagrams, mismatches: {bad:?}"))
}

fn renormalized_symbols() -> Line {
    let mut bad = Vec::new();
    let mut n = 0;
    for t in triples(4) {
        n += 1;
        if renormalized(&builders::theta(h(t[0]), h(t[1]), h(t[2]))) != r(renorm_theta(t)) {
            bad.push(format!("theta{t:?}"));
        }
    }
    for c in tet_colorings(4) {
        n += 1;
        let [a, b, cc, d, e, f] = c.map(h);
        if renormalized(&builders::tet(a, b, cc, d, e, f)) != r(renorm_tet(c)) {
            bad.push(format!("tet{c:?}"));
        }
    }
    line(bad.is_empty(), format!("{n} colorings, mismatches: {bad:?}"))
}

fn corpus_families(corpus: &[verify::CorpusEntry]) -> Vec<&'static str> {
    ["theta(", "tet[", "crossed_tet[", "prism(", " # ", "twisted_link("]
        .into_iter()
        .filter(|f| !corpus.iter().any(|e| e.name.contains(f)))
        .collect()
}

fn integrality() -> Line {
    let corpus = verify::graph_corpus(3);
    let missing = corpus_families(&corpus);
    let mut l = from_reports(&[verify::verify_integrality(&corpus)]);
    l.ok &= missing.is_empty();
    l.detail += &format!(", missing families: {missing:?}");
    l
}

fn divisibility() -> Line {
    let corpus = verify::graph_corpus(3);
    let mut l = from_reports(&[verify::verify_divisibility(&corpus)]);
    let mut bad = Vec::new();
    for a in -2..=2 {
        for b in -2..=2 {
            let v = canonicalize_ratio(&raw(&builders::twisted_link(h(2), a, b))).unwrap();
            if !divides(&qint(3), &v) {
                bad.push((a, b));
            }
        }
    }
    l.ok &= bad.is_empty();
    l.detail += &format!(", twisted links with n=1 not divisible by [3]: {bad:?}");
    l
}

fn engine_equivalence() -> Line {
    let mut corpus = verify::graph_corpus(3);
    corpus.extend(verify::braid_corpus(3));
    let crossed = corpus
        .iter()
        .filter(|e| e.diagram.slices.iter().flat_map(|s| &s.tiles).any(|t| t.kind.is_crossing()))
        .count();
    let mut l = from_reports(&[verify::verify_engine_equivalence(&corpus)]);
    l.ok &= crossed >= 2;
    l.detail += &format!(", {crossed} entries with crossings");
    l
}

fn flat_state(p: &ShadowPresentation, c: i64) -> ShadowState {
    p.regions.iter().map(|x| (x.id, if x.id == p.outer { h(0) } else { h(c) })).collect()
}

fn single_weights() -> Line {
    let one = QLaurent::one();
    let five_minus_one = r(&qint(5) - &one);
    let link = builders::twisted_link(h(2), 0, 0);
    let p = sliced_to_shadow(&link).unwrap();
    let w1 = shadow_state_weight(&p, &flat_state(&p, 2)).unwrap();
    let e1 = &(&r(qint(3)) * &five_minus_one) / &r(&qint(2) * &qint(4));
    let s1 = shadow_eval(&p, &framing_factor(&link)).unwrap();
    let prism = builders::prism(h(2));
    let pp = sliced_to_shadow(&prism).unwrap();
    let w2 = shadow_state_weight(&pp, &flat_state(&pp, 2)).unwrap();
    let e2 = -(&(&r(&qint(3) * &qint(3)) * &five_minus_one.pow(6)) / &r(qfact(4)));
    let s2 = shadow_eval(&pp, &framing_factor(&prism)).unwrap();
    let ok = w1 == e1
        && w2 == e2
        && canonicalize_ratio(&w1).is_err()
        && canonicalize_ratio(&w2).is_err()
        && canonicalize_ratio(&s1).is_ok()
        && canonicalize_ratio(&s2).is_ok();
    line(ok, format!("link weight {}, prism weight {}", w1.render(), w2.render()))
}

fn identity_suites() -> Line {
    let mut reports = vec![verify::verify_orthogonality(4), verify::verify_racah(4), verify::verify_biedenharn_elliot(4)];
    reports.extend(verify::verify_normalizations(4));
    reports.push(verify::verify_r_vs_6j(3));
    from_reports(&reports)
}

fn partitions(n: i64, largest: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in (1..=largest.min(n)).rev() {
        for mut rest in partitions(n - k, k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

fn q_combinatorics() -> Line {
    let mut n = 0;
    let mut bad = Vec::new();
    for total in 0..=10 {
        for p in partitions(total, total) {
            n += 1;
            let m = qmultinom(&p);
            let nonneg = m.terms().iter().all(|(_, c)| c.is_gaussian_integer() && c.im_num().is_zero() && !num_traits::Signed::is_negative(&c.re()));
            let prod = p.iter().fold(m.clone(), |acc, &k| &acc * &qfact(k));
            if !nonneg || prod != qfact(total) {
                bad.push(p);
            }
        }
    }
    line(bad.is_empty(), format!("{n} partitions, failures: {bad:?}"))
}

fn half_twist() -> Line {
    let all = triples(3);
    let bad: Vec<[i64; 3]> = all
        .iter()
        .copied()
        .filter(|t| {
            let (l, rr) = half_twist_sides(h(t[0]), h(t[1]), h(t[2]));
            l != rr
        })
        .collect();
    line(bad.is_empty(), format!("{} triples, failures: {bad:?}", all.len()))
}

type Criterion = (&'static str, fn() -> Line);

fn main() {
    let criteria: [Criterion; 9] = [
        ("closed forms", closed_forms),
        ("renormalized symbols", renormalized_symbols),
        ("integrality", integrality),
        ("divisibility", divisibility),
        ("engine equivalence", engine_equivalence),
        ("non-integral single weights", single_weights),
        ("identity suites", identity_suites),
        ("q-combinatorics", q_combinatorics),
        ("half-twist lemma", half_twist),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let l = f();
        if !l.ok {
            failed += 1;
        }
        println!(
            "criterion {} ({name}): {} [{:.2}s] {}",
            k + 1,
            if l.ok { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64(),
            l.detail
        );
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
