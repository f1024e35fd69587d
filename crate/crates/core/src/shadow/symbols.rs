//! Closed forms of the renormalized unknot, θ, tetrahedron and crossed
//! tetrahedron. All are Laurent polynomials; inadmissible colorings give 0.

use crate::qarith::{admissible, qint, qmultinom, HalfInt, QIntFrac, QLaurent};
use crate::repcore::Memo;
use std::sync::OnceLock;

fn parity_sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `(−1)^{2a} [2a+1]`.
pub fn unknot_sym(a: HalfInt) -> QLaurent {
    if a.0 < 0 {
        return QLaurent::zero();
    }
    qint(a.0 + 1).scale(&parity_sign(a.0).into())
}

/// `(−1)^{a+b+c} [a+b+c+1] · [a+b+c]! / ([a+b−c]! [b+c−a]! [c+a−b]!)`.
pub fn theta_sym(a: HalfInt, b: HalfInt, c: HalfInt) -> QLaurent {
    if !admissible(a, b, c) {
        return QLaurent::zero();
    }
    let s = (a.0 + b.0 + c.0) / 2;
    let parts = [s - c.0, s - a.0, s - b.0];
    (&qint(s + 1) * &qmultinom(&parts)).scale(&parity_sign(s).into())
}

/// The four vertex triples of the tetrahedron `tet(a,b,c,d,e,f)`.
pub fn tet_triples(c: [HalfInt; 6]) -> [[HalfInt; 3]; 4] {
    let [a, b, cc, d, e, f] = c;
    [[a, b, cc], [a, e, f], [d, b, f], [d, e, cc]]
}

fn tet_memo() -> &'static Memo<[i64; 6], QLaurent> {
    static M: OnceLock<Memo<[i64; 6], QLaurent>> = OnceLock::new();
    M.get_or_init(Memo::new)
}

/// The symmetric 6j-symbol: `Σ_z (−1)^z [z+1] [z; z−T_1,…,z−T_4, Q_1−z,…,Q_3−z]`
/// with `T_i` the triple sums and `Q_j` the sums over opposite edge pairs.
pub fn tet_sym(a: HalfInt, b: HalfInt, c: HalfInt, d: HalfInt, e: HalfInt, f: HalfInt) -> QLaurent {
    let cols = [a, b, c, d, e, f];
    if tet_triples(cols).iter().any(|t| !admissible(t[0], t[1], t[2])) {
        return QLaurent::zero();
    }
    tet_memo().get_or_compute(cols.map(|x| x.0), || tet_raw(cols.map(|x| x.0)))
}

fn tet_raw(c: [i64; 6]) -> QLaurent {
    let [a, b, cc, d, e, f] = c;
    let t = [a + b + cc, a + e + f, d + b + f, d + e + cc].map(|x| x / 2);
    let q = [a + b + d + e, a + cc + d + f, b + cc + e + f].map(|x| x / 2);
    let lo = *t.iter().max().unwrap();
    let hi = *q.iter().min().unwrap();
    let mut sum = QLaurent::zero();
    for z in lo..=hi {
        let parts = [z - t[0], z - t[1], z - t[2], z - t[3], q[0] - z, q[1] - z, q[2] - z];
        let term = (&qint(z + 1) * &qmultinom(&parts)).scale(&parity_sign(z).into());
        sum = &sum + &term;
    }
    sum
}

/// The crossed tetrahedron: strands `a`, `d` cross, `b, c, e, f` color the
/// four sectors (`c, f` opposite, `b, e` opposite). Equals
/// `i^{2s(f+c−e−b)} q^{s(f²+f+c²+c−b²−b−e²−e)} tet(e,f,a,b,c,d)` with
/// `s = sign`; `sign = +1` is the drawing in which the strand entering
/// between the `f` and `b` sectors passes over.
pub fn crossed_tet_sym(a: HalfInt, b: HalfInt, c: HalfInt, d: HalfInt, e: HalfInt, f: HalfInt, sign: i64) -> QLaurent {
    assert!(sign == 1 || sign == -1, "crossing sign must be ±1");
    let t = tet_sym(e, f, a, b, c, d);
    if t.is_zero() {
        return t;
    }
    let m = sign * (f.0 + c.0 - e.0 - b.0);
    let sq = |u: i64| u * u + 2 * u;
    let x = sign * (sq(f.0) + sq(c.0) - sq(b.0) - sq(e.0));
    t.mul_unit(m, x)
}

/// `unknot(a)^k` as a factored fraction.
pub fn unknot_pow(a: HalfInt, k: i64) -> QIntFrac {
    let mut out = QIntFrac::one();
    if k == 0 {
        return out;
    }
    if parity_sign(a.0 * k) < 0 {
        out = out.neg();
    }
    out.mul_qint_pow(a.0 + 1, k);
    out
}

/// `θ(a,b,c)^k` as a factored fraction; `None` when `θ` vanishes and `k < 0`.
pub fn theta_pow(a: HalfInt, b: HalfInt, c: HalfInt, k: i64) -> Option<QIntFrac> {
    if k == 0 {
        return Some(QIntFrac::one());
    }
    if !admissible(a, b, c) {
        return if k > 0 { Some(QIntFrac::zero()) } else { None };
    }
    let s = (a.0 + b.0 + c.0) / 2;
    let mut out = QIntFrac::one();
    if parity_sign(s * k) < 0 {
        out = out.neg();
    }
    out.mul_qfact_pow(s + 1, k);
    for p in [s - a.0, s - b.0, s - c.0] {
        out.mul_qfact_pow(p, -k);
    }
    Some(out)
}
