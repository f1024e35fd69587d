use proptest::prelude::*;
use qspin::qarith::{admissible, canonicalize_ratio, HalfInt, QLaurent, QRatio};
use qspin::shadow::{theta_sym, unknot_sym};
use qspin::sliced::{builders, evaluate, SlicedDiagram};
use qspin::verify::{check_divisibility, tet_colorings, renormalize, GraphCombinatorics};

fn h(d: i64) -> HalfInt {
    HalfInt::from_doubled(d)
}

fn raw(d: &SlicedDiagram) -> QRatio {
    evaluate(d, None).unwrap()
}

fn renormalized(d: &SlicedDiagram) -> QRatio {
    renormalize(&raw(d), &GraphCombinatorics::of(d))
}

fn r(p: QLaurent) -> QRatio {
    QRatio::from_laurent(p)
}

fn triple() -> impl Strategy<Value = (i64, i64, i64)> {
    (0i64..=3, 0i64..=3, 0i64..=3).prop_filter("admissible", |&(a, b, c)| admissible(h(a), h(b), h(c)))
}

fn admissible_tet(max: i64) -> impl Strategy<Value = [i64; 6]> {
    prop::sample::select(tet_colorings(max))
}

#[test]
fn erasing_a_zero_edge() {
    for a in 0..=4 {
        assert_eq!(renormalized(&builders::theta(h(a), h(a), h(0))), r(unknot_sym(h(a))), "a={a}");
    }
}

#[test]
fn empty_diagram_is_one() {
    assert_eq!(raw(&SlicedDiagram::closed(vec![])), QRatio::one());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn zero_edge_in_tetrahedron((a, b, c) in triple()) {
        let t = builders::tet(h(a), h(b), h(c), h(0), h(c), h(b));
        prop_assert_eq!(renormalized(&t), renormalized(&builders::theta(h(a), h(b), h(c))));
    }

    #[test]
    fn connected_sum_divides_by_unknot((a, b, c) in triple(), (d, e) in (0i64..=3, 0i64..=3)) {
        prop_assume!(a > 0 || (d == e));
        prop_assume!(admissible(h(a), h(d), h(e)));
        let g = builders::connected_sum(&builders::theta_tangle(h(a), h(b), h(c)), &builders::theta_tangle(h(a), h(d), h(e)));
        let expect = &(&r(theta_sym(h(a), h(b), h(c))) * &r(theta_sym(h(a), h(d), h(e)))) / &r(unknot_sym(h(a)));
        prop_assert_eq!(renormalized(&g), expect);
    }

    #[test]
    fn disjoint_union_multiplies((a, b, c) in triple(), k in 0i64..=3, g in -2i64..=2) {
        let t = builders::theta(h(a), h(b), h(c));
        let u = builders::unlink(&[(h(k), h(g))]);
        prop_assert_eq!(raw(&builders::disjoint_union(&t, &u)), &raw(&t) * &raw(&u));
    }

    #[test]
    fn zigzag_and_crossing_pair_invisible(c in admissible_tet(2), k in 1usize..6, pos in 0usize..4) {
        let [a, b, cc, d, e, f] = c.map(h);
        let base = builders::crossed_tet(a, b, cc, d, e, f);
        let k = k.min(base.slices.len() - 1);
        let width = base.slices[k - 1].top_colors().len();
        prop_assume!(width >= 2);
        let pos = pos % (width - 1);
        let v = raw(&base);
        prop_assert_eq!(raw(&builders::insert_crossing_pair(&base, k, pos)), v.clone());
        prop_assert_eq!(raw(&builders::insert_zigzag(&base, k, pos)), v);
    }

    #[test]
    fn renormalized_tetrahedra_integral(c in admissible_tet(3), crossed in any::<bool>()) {
        let [a, b, cc, d, e, f] = c.map(h);
        let g = if crossed { builders::crossed_tet(a, b, cc, d, e, f) } else { builders::tet(a, b, cc, d, e, f) };
        let v = canonicalize_ratio(&renormalized(&g)).unwrap();
        prop_assert_eq!(v.phase_m, 0);
        prop_assert!(v.quarter_shift_n % 2 == 0);
        prop_assert!(check_divisibility(&v, &c.map(h)).iter().all(|ok| *ok));
    }
}
