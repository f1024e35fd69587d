use qspin::qarith::{canonicalize_ratio, HalfInt};
use qspin::sliced::{builders, evaluate_entries};
use qspin::verify::*;

fn h(d: i64) -> HalfInt {
    HalfInt::from_doubled(d)
}

#[test]
fn small_suites_pass() {
    for r in [verify_fusion(3), verify_whitehead(3), verify_orthogonality(2), verify_racah(2), verify_biedenharn_elliot(2)] {
        assert!(r.passed(), "{r}");
        assert!(!r.instances.is_empty(), "{}", r.name);
    }
    for r in verify_normalizations(3) {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn boundary_suite_passes() {
    let r = verify_boundary_integrality(&open_corpus(2)).unwrap();
    assert!(r.passed(), "{r}");
    assert!(r.notes.is_empty());
}

#[test]
fn y_vertex_entries_become_integral() {
    let y = builders::vertex_tangle(h(1), h(1), h(2));
    let f = boundary_factor(&y);
    for (_, v) in evaluate_entries(&y).unwrap() {
        assert!(canonicalize_ratio(&v.mul(&f).to_ratio()).is_ok());
    }
}

#[test]
fn reports_sorted_and_stable() {
    let a = verify_racah(2);
    let b = verify_racah(2);
    assert_eq!(a.to_string(), b.to_string());
    let args: Vec<_> = a.instances.iter().map(|i| i.args.clone()).collect();
    let mut sorted = args.clone();
    sorted.sort();
    assert_eq!(args, sorted);
}

#[test]
fn theta_raw_is_the_bracket() {
    for [a, b, c] in [[0, 2, 2], [1, 1, 2], [2, 2, 2], [3, 3, 2], [2, 4, 2]] {
        let raw = qspin::sliced::evaluate(&builders::theta(h(a), h(b), h(c)), None).unwrap();
        assert_eq!(theta_raw(h(a), h(b), h(c)).to_ratio(), raw, "({a},{b},{c})");
    }
}

#[test]
fn integrality_table_has_every_entry() {
    let corpus = graph_corpus(1);
    let r = verify_integrality(&corpus);
    assert!(r.passed(), "{r}");
    assert_eq!(r.instances.len(), corpus.len());
    let fr = corpus.iter().find(|e| e.name == "unknot(1, g=1)").unwrap();
    let v = canonicalize_ratio(&qspin::sliced::evaluate(&fr.diagram, None).unwrap()).unwrap();
    assert_eq!((v.phase_m, v.quarter_shift_n), (1, 3));
}
