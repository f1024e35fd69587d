use qspin::qarith::{qfact, qint, HalfInt, QLaurent, QRatio};
use qspin::sliced::{builders, evaluate, evaluate_entries, state_tuples, validate, BoundaryStates, SlicedDiagram};

fn h(d: i64) -> HalfInt {
    HalfInt::from_doubled(d)
}

fn sign(d: i64) -> i64 {
    if d.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

// (−1)^{2a}[2a+1] i^{4ga} q^{2g(a²+a)}, in doubled units: i^{G·A} x^{G(A²+2A)}
fn framed_unknot(a2: i64, g2: i64) -> QLaurent {
    qint(a2 + 1).scale(&sign(a2).into()).mul_unit(g2 * a2, g2 * (a2 * a2 + 2 * a2))
}

fn raw_theta(a2: i64, b2: i64, c2: i64) -> QRatio {
    let s = (a2 + b2 + c2) / 2;
    let num = &(&(&qfact(s + 1) * &qfact(s - c2)) * &qfact(s - b2)) * &qfact(s - a2);
    let den = &(&qfact(a2) * &qfact(b2)) * &qfact(c2);
    QRatio::new(num.scale(&sign(s).into()), den)
}

fn eval(d: &SlicedDiagram) -> QRatio {
    evaluate(d, None).unwrap()
}

#[test]
fn unknot_and_framing() {
    for a in 0..=6 {
        for g in -2..=2 {
            let d = builders::unlink(&[(h(a), h(g))]);
            assert_eq!(eval(&d), QRatio::from_laurent(framed_unknot(a, g)), "a={a} g={g}");
        }
    }
}

#[test]
fn unlinks_multiply() {
    let comps = [(h(1), h(1)), (h(2), h(-2)), (h(3), h(0))];
    let expect = comps.iter().fold(QLaurent::one(), |acc, (c, g)| &acc * &framed_unknot(c.doubled(), g.doubled()));
    assert_eq!(eval(&builders::unlink(&comps)), QRatio::from_laurent(expect));
}

#[test]
fn theta_raw() {
    for a in 0..=4 {
        for b in 0..=4 {
            for c in 0..=4 {
                if !qspin::qarith::admissible(h(a), h(b), h(c)) {
                    continue;
                }
                assert_eq!(eval(&builders::theta(h(a), h(b), h(c))), raw_theta(a, b, c), "({a},{b},{c})");
            }
        }
    }
}

#[test]
fn zigzag_and_reidemeister_two() {
    let base = builders::tet(h(2), h(2), h(2), h(2), h(2), h(2));
    let v = eval(&base);
    for k in 1..base.slices.len() {
        let n = base.slices[k - 1].top_colors().len();
        for p in 0..n {
            assert_eq!(eval(&builders::insert_zigzag(&base, k, p)), v, "zigzag at {k},{p}");
            if p + 1 < n {
                assert_eq!(eval(&builders::insert_crossing_pair(&base, k, p)), v, "crossings at {k},{p}");
            }
        }
    }
}

#[test]
fn kinked_unknot_has_framing_one() {
    // inner figure-eight curve alone
    for n in 1..=3 {
        let d = builders::braid_closure(h(n), h(n), 1);
        assert!(validate(&d).is_ok());
        assert_eq!(eval(&d), QRatio::from_laurent(framed_unknot(n, 2)), "n={n}");
    }
}

#[test]
fn schur_scalar_on_theta_tangle() {
    for (a, b, c) in [(2, 1, 1), (2, 2, 2), (3, 2, 1)] {
        let t = builders::theta_tangle(h(a), h(b), h(c));
        let entries = evaluate_entries(&t).unwrap();
        let mut seen = None;
        for (bs, v) in entries {
            assert_eq!(bs.bottom, bs.top);
            let r = v.to_ratio();
            match &seen {
                None => seen = Some(r),
                Some(s) => assert_eq!(&r, s),
            }
        }
        let lambda = seen.unwrap();
        // the closure multiplies the scalar by the unknot
        let closed = eval(&builders::closure(&t));
        assert_eq!(closed, lambda.mul_laurent(&framed_unknot(a, 0)));
    }
}

#[test]
fn boundary_states_checked() {
    let t = builders::strand(h(2));
    assert!(evaluate(&t, None).is_err());
    let bad = BoundaryStates { bottom: vec![h(1)], top: vec![h(1)] };
    assert!(evaluate(&t, Some(&bad)).is_err());
    for s in state_tuples(&[h(2)]) {
        let b = BoundaryStates { bottom: s.clone(), top: s };
        assert!(evaluate(&t, Some(&b)).unwrap().is_one());
    }
}
