use proptest::prelude::*;
use qspin::qarith::{canonicalize_ratio, qfact, qint, HalfInt, QLaurent, QRatio};
use qspin::shadow::*;
use qspin::sliced::{builders, evaluate, framing_factor, SlicedDiagram};
use qspin::verify::{renormalize, GraphCombinatorics};

fn h(d: i64) -> HalfInt {
    HalfInt::from_doubled(d)
}

fn r(p: QLaurent) -> QRatio {
    QRatio::from_laurent(p)
}

fn renormalized(d: &SlicedDiagram) -> QRatio {
    renormalize(&evaluate(d, None).unwrap(), &GraphCombinatorics::of(d))
}

fn via_shadow(d: &SlicedDiagram) -> QRatio {
    shadow_eval(&sliced_to_shadow(d).unwrap(), &framing_factor(d)).unwrap()
}

/// The state giving every region except the outer one the same color.
fn flat_state(p: &ShadowPresentation, c: HalfInt) -> ShadowState {
    p.regions.iter().map(|reg| (reg.id, if reg.id == p.outer { h(0) } else { c })).collect()
}

#[test]
fn symbol_values() {
    assert_eq!(unknot_sym(h(2)), QLaurent::from_q_coeffs(-2, &[1, 0, 1, 0, 1]));
    assert_eq!(unknot_sym(h(1)), -qint(2));
    let theta = -(&qint(4) * &qfact(3));
    assert_eq!(theta_sym(h(2), h(2), h(2)), theta);
    let tet = &(&qint(5) * &qfact(4)) - &(&qint(4) * &qfact(3));
    assert_eq!(tet_sym(h(2), h(2), h(2), h(2), h(2), h(2)), tet);
    assert!(theta_sym(h(1), h(1), h(1)).is_zero());
    assert!(tet_sym(h(1), h(1), h(1), h(1), h(1), h(1)).is_zero());
}

#[test]
fn theta_and_tet_with_a_zero_edge() {
    for a in 0..=4 {
        for b in 0..=4 {
            assert_eq!(theta_sym(h(a), h(b), h(0)), if a == b { unknot_sym(h(a)) } else { QLaurent::zero() });
            for c in 0..=4 {
                assert_eq!(tet_sym(h(a), h(b), h(c), h(0), h(c), h(b)), theta_sym(h(a), h(b), h(c)), "({a},{b},{c})");
            }
        }
    }
}

#[test]
fn crossed_tet_matches_sliced_engine() {
    for c in qspin::verify::tet_colorings(3) {
        let [a, b, cc, d, e, f] = c.map(h);
        let v = renormalized(&builders::crossed_tet(a, b, cc, d, e, f));
        assert_eq!(v, r(crossed_tet_sym(a, b, cc, d, e, f, 1)), "{c:?}");
    }
}

#[test]
fn unknot_shadow() {
    let p = sliced_to_shadow(&builders::unknot(h(2))).unwrap();
    assert_eq!(p.regions.len(), 2);
    let outer = p.region(p.outer).unwrap();
    assert_eq!(outer.euler, 0);
    let inner = p.regions.iter().find(|x| x.id != p.outer).unwrap();
    assert_eq!(inner.euler, 1);
    assert!(p.regions.iter().all(|x| x.gleam == h(0)));
    assert_eq!(p.faces.len(), 1);
    assert_eq!(p.faces[0].euler, 0);
    assert_eq!(p.faces[0].regions.len(), 2);
    assert!(p.crossings.is_empty() && p.vertices.is_empty());
    for c in 0..=6 {
        let d = builders::unknot(h(c));
        assert_eq!(via_shadow(&d), r(unknot_sym(h(c))));
    }
}

#[test]
fn theta_shadow() {
    let p = sliced_to_shadow(&builders::theta(h(2), h(2), h(2))).unwrap();
    assert_eq!(p.regions.len(), 3);
    assert_eq!(p.faces.len(), 3);
    assert!(p.faces.iter().all(|f| f.euler == 1));
    assert_eq!(p.vertices.len(), 2);
    assert!(p.regions.iter().all(|x| x.gleam == h(0)));
}

#[test]
fn crossed_tet_gleams() {
    let p = sliced_to_shadow(&builders::crossed_tet(h(2), h(2), h(2), h(2), h(2), h(2))).unwrap();
    assert_eq!(p.crossings.len(), 1);
    let x = &p.crossings[0];
    let gleam = |id: u32| p.region(id).unwrap().gleam;
    // +½ on the second and fourth sectors, −½ on the first and third
    assert_eq!(gleam(x.regions[1]), h(x.sign));
    assert_eq!(gleam(x.regions[3]), h(x.sign));
    assert_eq!(gleam(x.regions[0]), h(-x.sign));
    assert_eq!(gleam(x.regions[2]), h(-x.sign));
    assert_eq!(p.regions.iter().map(|x| x.gleam.0).sum::<i64>(), 0);
}

#[test]
fn non_closed_diagram_rejected() {
    assert!(sliced_to_shadow(&builders::strand(h(1))).is_err());
}

#[test]
fn inadmissible_state_weighs_zero() {
    let p = sliced_to_shadow(&builders::theta(h(2), h(2), h(2))).unwrap();
    let s = flat_state(&p, h(1));
    assert!(shadow_state_weight(&p, &s).unwrap().is_zero());
}

// i^{(a+1)U+(b+1)V−2N(a+b+1)} x^{(a+1)(U²+2U)+(b+1)(V²+2V)−2(a+b+1)(N²+2N)} U(u)U(v) tet(n,n,u,n,n,v)/(θ(n,n,u)θ(n,n,v)), doubled
fn twisted_link_formula(n: i64, a: i64, b: i64) -> QRatio {
    let sq = |x: i64| x * x + 2 * x;
    let mut sum = QRatio::zero();
    for u in (0..=2 * n).step_by(2) {
        for v in (0..=2 * n).step_by(2) {
            let th = &r(theta_sym(h(n), h(n), h(u))) * &r(theta_sym(h(n), h(n), h(v)));
            if th.is_zero() {
                continue;
            }
            let m = (a + 1) * u + (b + 1) * v - 2 * n * (a + b + 1);
            let e = (a + 1) * sq(u) + (b + 1) * sq(v) - 2 * (a + b + 1) * sq(n);
            let num = &(&unknot_sym(h(u)) * &unknot_sym(h(v))) * &tet_sym(h(n), h(n), h(u), h(n), h(n), h(v));
            sum = &sum + &(&r(num.mul_unit(m, e)) / &th);
        }
    }
    sum
}

#[test]
fn twisted_link_sums() {
    for n in 0..=2 {
        for a in -2..=2 {
            for b in -2..=2 {
                let d = builders::twisted_link(h(n), a, b);
                let v = via_shadow(&d);
                assert_eq!(v, evaluate(&d, None).unwrap(), "n={n} a={a} b={b}");
                assert!(canonicalize_ratio(&v).is_ok());
            }
        }
    }
    for n in 0..=2 {
        for a in 0..=2 {
            for b in 0..=2 {
                assert_eq!(via_shadow(&builders::twisted_link(h(n), a, b)), twisted_link_formula(n, a, b), "n={n} a={a} b={b}");
            }
        }
    }
}

#[test]
fn unlink_rewritten() {
    // (−1)^{2n}[2n+1]² q^{2(n²+n)}
    for n in 0..=3 {
        let expect = r((&unknot_sym(h(n)) * &unknot_sym(h(n))).mul_unit(0, 2 * (n * n + 2 * n)).mul_unit(2 * n, 0));
        assert_eq!(via_shadow(&builders::twisted_link(h(n), 0, 0)), expect, "n={n}");
    }
}

#[test]
fn unlink_single_weight_not_laurent() {
    let d = builders::twisted_link(h(2), 0, 0);
    let p = sliced_to_shadow(&d).unwrap();
    let w = shadow_state_weight(&p, &flat_state(&p, h(2))).unwrap();
    let expect = &r(&qint(3) * &(&qint(5) - &QLaurent::one())) / &r(&qint(2) * &qint(4));
    assert_eq!(w, expect);
    assert!(canonicalize_ratio(&w).is_err());
    assert!(canonicalize_ratio(&via_shadow(&d)).is_ok());
}

// Σ_{u,v} U(u)U(v) tet(n,n,n,u,n,n)² tet(n,n,n,v,n,n)² tet(n,n,n,u,n,v)² / (θ(n,n,u)³ θ(n,n,v)³ θ(u,n,v))
fn prism_formula(n: i64) -> QRatio {
    let mut sum = QRatio::zero();
    for u in (0..=2 * n).step_by(2) {
        for v in (0..=2 * n).step_by(2) {
            if (u - v).abs() > n || n > u + v {
                continue;
            }
            let t = |x: [i64; 6]| r(tet_sym(h(x[0]), h(x[1]), h(x[2]), h(x[3]), h(x[4]), h(x[5])).pow(2));
            let th = |a: i64, b: i64, c: i64, k: i32| r(theta_sym(h(a), h(b), h(c)).pow(k as u32));
            let num = &(&(&r(&unknot_sym(h(u)) * &unknot_sym(h(v))) * &t([n, n, n, u, n, n])) * &t([n, n, n, v, n, n]))
                * &t([n, n, n, u, n, v]);
            let den = &(&th(n, n, u, 3) * &th(n, n, v, 3)) * &th(u, n, v, 1);
            sum = &sum + &(&num / &den);
        }
    }
    sum
}

#[test]
fn planar_prism() {
    for n in [0, 2, 4] {
        let d = builders::prism(h(n));
        let v = via_shadow(&d);
        assert_eq!(v, renormalized(&d), "n={n}");
        assert_eq!(v, prism_formula(n), "n={n}");
        assert!(canonicalize_ratio(&v).is_ok());
    }
}

#[test]
fn prism_single_weight_not_laurent() {
    let p = sliced_to_shadow(&builders::prism(h(2))).unwrap();
    let w = shadow_state_weight(&p, &flat_state(&p, h(2))).unwrap();
    let five_minus_one = r(&qint(5) - &QLaurent::one());
    let expect = -(&(&r(&qint(3) * &qint(3)) * &five_minus_one.pow(6)) / &r(qfact(4)));
    assert_eq!(w, expect);
    assert!(canonicalize_ratio(&w).is_err());
}

#[test]
fn json_round_trip() {
    for d in [builders::theta(h(1), h(1), h(2)), builders::crossed_tet(h(2), h(2), h(2), h(2), h(2), h(2))] {
        let p = sliced_to_shadow(&d).unwrap();
        assert_eq!(ShadowPresentation::from_json(&p.to_json(), "mem").unwrap(), p);
    }
    let err = ShadowPresentation::from_json("{\"regions\": [}", "bad.json").unwrap_err().to_string();
    assert!(err.contains("bad.json") && err.contains("line 1"), "{err}");
}

// vertices joined by each of a, b, c, d, e, f
const EDGE_ENDS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (2, 3), (1, 3), (1, 2)];

fn permute(c: [i64; 6], perm: [usize; 4]) -> [i64; 6] {
    let mut out = [0; 6];
    for (k, &(x, y)) in EDGE_ENDS.iter().enumerate() {
        let (px, py) = (perm[x].min(perm[y]), perm[x].max(perm[y]));
        let j = EDGE_ENDS.iter().position(|&(s, t)| (s.min(t), s.max(t)) == (px, py)).unwrap();
        out[j] = c[k];
    }
    out
}

fn perms4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|k| p.contains(&k)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn tet_of(c: [i64; 6]) -> QLaurent {
    tet_sym(h(c[0]), h(c[1]), h(c[2]), h(c[3]), h(c[4]), h(c[5]))
}

#[test]
fn edge_ends_match_triples() {
    let c = [1, 2, 3, 4, 5, 6].map(h);
    let triples = tet_triples(c);
    for (v, t) in triples.iter().enumerate() {
        let mut at: Vec<i64> = EDGE_ENDS.iter().enumerate().filter(|(_, e)| e.0 == v || e.1 == v).map(|(k, _)| k as i64 + 1).collect();
        let mut want: Vec<i64> = t.iter().map(|x| x.0).collect();
        at.sort();
        want.sort();
        assert_eq!(at, want);
    }
}

proptest! {
    #[test]
    fn tet_symmetric(c in prop::array::uniform6(0i64..=3), k in 0usize..24) {
        let p = perms4()[k];
        prop_assert_eq!(tet_of(c), tet_of(permute(c, p)));
    }

    #[test]
    fn gleams_cancel(n in 1i64..=2, a in -2i64..=2, b in -2i64..=2) {
        let p = sliced_to_shadow(&builders::twisted_link(h(n), a, b)).unwrap();
        prop_assert_eq!(p.regions.iter().map(|x| x.gleam.0).sum::<i64>(), 0);
        let mut from_crossings = std::collections::HashMap::<u32, i64>::new();
        for x in &p.crossings {
            prop_assert_eq!(x.sign.abs(), 1);
            for (k, reg) in x.regions.iter().enumerate() {
                *from_crossings.entry(*reg).or_default() += if k % 2 == 1 { x.sign } else { -x.sign };
            }
        }
        for reg in &p.regions {
            prop_assert_eq!(reg.gleam.0, from_crossings.get(&reg.id).copied().unwrap_or(0));
        }
    }

    #[test]
    fn braid_closures_agree(a in 0i64..=2, n in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3])) {
        let b = if n % 2 == 0 { 2 - a } else { a };
        let d = builders::braid_closure(h(a), h(b), n);
        prop_assert_eq!(via_shadow(&d), evaluate(&d, None).unwrap());
    }
}
