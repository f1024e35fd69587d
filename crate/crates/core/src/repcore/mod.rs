//! Matrix coefficients of the elementary `U_q(sl2)` operators in the basis `g^a_u`.
//!
//! Arguments are colors and states as [`HalfInt`]. Each operator with a
//! quantum-factorial denominator also has a `_scaled` form that multiplies
//! it by a product of `[2·color]!` depending on colors only; those are
//! Laurent polynomials and are what the state-sum evaluator contracts.
//!
//! Every coefficient is 0 on inadmissible triples, invalid states or when
//! weights are not conserved, so callers may sum over rectangular ranges.

mod memo;

pub use memo::{cache_capacity, Memo};

use crate::qarith::{admissible, qbinom, qfact, HalfInt, QLaurent, QRatio};
use std::sync::OnceLock;

fn valid(u: HalfInt, a: HalfInt) -> bool {
    u.is_state_of(a)
}

/// `[2a]!` for a color `a`.
pub fn fact2(a: HalfInt) -> QLaurent {
    qfact(a.doubled())
}

type Key6 = (i64, i64, i64, i64, i64, i64);

fn cg_memo() -> &'static Memo<Key6, QLaurent> {
    static M: OnceLock<Memo<Key6, QLaurent>> = OnceLock::new();
    M.get_or_init(Memo::new)
}

fn r_memo() -> &'static Memo<Key6, QLaurent> {
    static M: OnceLock<Memo<Key6, QLaurent>> = OnceLock::new();
    M.get_or_init(Memo::new)
}

/// `C^{a,b,c}_{u,v,t} · [2c]!`.
pub fn cg_c_scaled(a: HalfInt, b: HalfInt, c: HalfInt, u: HalfInt, v: HalfInt, t: HalfInt) -> QLaurent {
    let (a2, b2, c2, u2, v2, t2) = (a.0, b.0, c.0, u.0, v.0, t.0);
    if !admissible(a, b, c) || !valid(u, a) || !valid(v, b) || !valid(t, c) || u2 + v2 != t2 {
        return QLaurent::zero();
    }
    cg_memo().get_or_compute((a2, b2, c2, u2, v2, t2), || cg_scaled_raw(a2, b2, c2, u2, v2, t2))
}

fn cg_scaled_raw(a2: i64, b2: i64, c2: i64, u2: i64, v2: i64, t2: i64) -> QLaurent {
    let ab_c = (a2 + b2 - c2) / 2;
    let bc_a = (b2 + c2 - a2) / 2;
    let ca_b = (c2 + a2 - b2) / 2;
    let i_pow = (c2 - a2 - b2) / 2;
    let sign = (b2 - v2) / 2 - (c2 - t2) / 2;
    // exponent of x = q^(1/4): 4 · ((b-v)(b+v+1) - (a-u)(a+u+1)) / 2
    let x_exp = ((b2 - v2) * (b2 + v2 + 2) - (a2 - u2) * (a2 + u2 + 2)) / 2;
    let ct = (c2 - t2) / 2;
    let au = (a2 + u2) / 2;
    let bv = (b2 + v2) / 2;
    // z + w = c - t; out-of-range binomials vanish
    let mut sum = QLaurent::zero();
    for z in 0..=ct {
        let w = ct - z;
        let f1 = qbinom(au + z, ca_b);
        if f1.is_zero() {
            continue;
        }
        let f2 = qbinom(bv + w, bc_a);
        if f2.is_zero() {
            continue;
        }
        let term = &(&f1 * &f2) * &qbinom(ct, z);
        sum = &sum + &term.mul_unit(2 * z, (z - w) * (c2 + t2 + 2));
    }
    let pref = &(&qfact(ab_c) * &qfact(bc_a)) * &qfact(ca_b);
    (&pref * &sum).mul_unit(i_pow + 2 * sign, x_exp)
}

/// Clebsch-Gordan coefficient `C^{a,b,c}_{u,v,t}` of `Y^{a,b}_c : V^c → V^a ⊗ V^b`.
pub fn cg_c(a: HalfInt, b: HalfInt, c: HalfInt, u: HalfInt, v: HalfInt, t: HalfInt) -> QRatio {
    QRatio::new(cg_c_scaled(a, b, c, u, v, t), fact2(c))
}

/// `P^{a,b,c}_{u,v,t} · [2a]! [2b]!`.
pub fn proj_p_scaled(a: HalfInt, b: HalfInt, c: HalfInt, u: HalfInt, v: HalfInt, t: HalfInt) -> QLaurent {
    cg_c_scaled(a, c, b, -u, t, v).mul_unit(u.0, 2 * u.0)
}

/// Coefficient `P^{a,b,c}_{u,v,t}` of `P^c_{a,b} : V^a ⊗ V^b → V^c`.
pub fn proj_p(a: HalfInt, b: HalfInt, c: HalfInt, u: HalfInt, v: HalfInt, t: HalfInt) -> QRatio {
    QRatio::new(proj_p_scaled(a, b, c, u, v, t), &fact2(a) * &fact2(b))
}

/// `W^{a,b,c}_{u,v,t}`, already a Laurent polynomial.
pub fn w_w(a: HalfInt, b: HalfInt, c: HalfInt, u: HalfInt, v: HalfInt, t: HalfInt) -> QLaurent {
    cg_c_scaled(a, b, c, u, v, -t).mul_unit(-t.0, -2 * t.0)
}

/// `M^{a,b,c}_{u,v,t} · [2a]! [2b]! [2c]!`.
pub fn m_m_scaled(a: HalfInt, b: HalfInt, c: HalfInt, u: HalfInt, v: HalfInt, t: HalfInt) -> QLaurent {
    proj_p_scaled(a, b, c, u, v, -t).mul_unit(-t.0, -2 * t.0)
}

/// `M^{a,b,c}_{u,v,t}` of `M_{a,b,c} : V^a ⊗ V^b ⊗ V^c → V^0`.
pub fn m_m(a: HalfInt, b: HalfInt, c: HalfInt, u: HalfInt, v: HalfInt, t: HalfInt) -> QRatio {
    QRatio::new(m_m_scaled(a, b, c, u, v, t), &(&fact2(a) * &fact2(b)) * &fact2(c))
}

/// Cup coefficient `[2a]! i^{2u} q^u δ_{u,-v}`.
pub fn cup(a: HalfInt, u: HalfInt, v: HalfInt) -> QLaurent {
    if !valid(u, a) || !valid(v, a) || u.0 != -v.0 {
        return QLaurent::zero();
    }
    fact2(a).mul_unit(u.0, 2 * u.0)
}

/// `cap · [2a]!`, i.e. `i^{2u} q^u δ_{u,-v}`.
pub fn cap_scaled(a: HalfInt, u: HalfInt, v: HalfInt) -> QLaurent {
    if !valid(u, a) || !valid(v, a) || u.0 != -v.0 {
        return QLaurent::zero();
    }
    QLaurent::unit(u.0, 2 * u.0)
}

/// Cap coefficient `i^{2u} q^u δ_{u,-v} / [2a]!`.
pub fn cap(a: HalfInt, u: HalfInt, v: HalfInt) -> QRatio {
    QRatio::new(cap_scaled(a, u, v), fact2(a))
}

/// `{}^a_b R^{h,k}_{u,v}`: coefficient of `g^b_h ⊗ g^a_k` in `R(g^a_u ⊗ g^b_v)`.
///
/// Only the term `n = k - u = v - h ≥ 0` contributes.
pub fn rmat(a: HalfInt, b: HalfInt, u: HalfInt, v: HalfInt, h: HalfInt, k: HalfInt) -> QLaurent {
    if !valid(u, a) || !valid(v, b) || !valid(h, b) || !valid(k, a) {
        return QLaurent::zero();
    }
    if k.0 - u.0 != v.0 - h.0 || k.0 < u.0 {
        return QLaurent::zero();
    }
    r_memo().get_or_compute((a.0, b.0, u.0, v.0, h.0, k.0), || {
        let (u2, v2) = (u.0, v.0);
        let n = (k.0 - u.0) / 2;
        let bin = &qbinom((a.0 - u2) / 2, n) * &qbinom((a.0 + u2) / 2 + n, n);
        if bin.is_zero() {
            return QLaurent::zero();
        }
        let diff = &QLaurent::q_pow(1) - &QLaurent::q_pow(-1);
        let coeff = &(&qfact(n) * &diff.pow(n as u32)) * &bin;
        coeff.shift(2 * u2 * v2 - 2 * n * (u2 - v2) - 2 * n * (n + 1))
    })
}

/// Coefficient of `g^b_h ⊗ g^a_k` in `R^{-1}(g^a_u ⊗ g^b_v)`, where `R^{-1}` is
/// the inverse of `{}^b_a R`; this is the negative-crossing weight, equal to
/// `rmat(b, a, v, u, k, h)` with `q ↦ q^{-1}`.
pub fn rmat_inv(a: HalfInt, b: HalfInt, u: HalfInt, v: HalfInt, h: HalfInt, k: HalfInt) -> QLaurent {
    rmat(b, a, v, u, k, h).invert_variable()
}

/// Scalar of the half twist `H_a^{±1} = i^{±2a} q^{±(a²+a)}`.
pub fn half_twist(a: HalfInt, sign: i64) -> QLaurent {
    assert!(sign == 1 || sign == -1, "half-twist sign must be ±1");
    let a2 = a.0;
    QLaurent::unit(sign * a2, sign * (a2 * a2 + 2 * a2))
}

/// Framing correction of one edge: `i^{4gc} q^{2g(c²+c)}` for color `c`, offset `g`.
pub fn framing_scalar(c: HalfInt, g: HalfInt) -> QLaurent {
    let (c2, g2) = (c.0, g.0);
    QLaurent::unit(g2 * c2, g2 * (c2 * c2 + 2 * c2))
}

/// `Y^{a,b}_c` as a matrix: rows `(u, v)` lexicographic on doubled values
/// (`u` state of `a`, `v` state of `b`), columns `t` increasing; entries
/// scaled by `[2c]!`.
pub fn y_matrix_scaled(a: HalfInt, b: HalfInt, c: HalfInt) -> Vec<Vec<QLaurent>> {
    let mut rows = Vec::new();
    for u in a.states() {
        for v in b.states() {
            rows.push(c.states().map(|t| cg_c_scaled(a, b, c, u, v, t)).collect());
        }
    }
    rows
}

/// `{}^a_b R ∘ Y^{a,b}_c` and `(H_b^{-1} ⊗ H_a^{-1}) ∘ Y^{b,a}_c ∘ H_c`, both
/// scaled by `[2c]!`, rows `(h, k)` lexicographic (`h` state of `b`,
/// `k` state of `a`), columns `t`.
pub fn half_twist_sides(a: HalfInt, b: HalfInt, c: HalfInt) -> (Vec<Vec<QLaurent>>, Vec<Vec<QLaurent>>) {
    let phase = &(&half_twist(b, -1) * &half_twist(a, -1)) * &half_twist(c, 1);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for h in b.states() {
        for k in a.states() {
            let mut lrow = Vec::new();
            let mut rrow = Vec::new();
            for t in c.states() {
                let mut acc = QLaurent::zero();
                for u in a.states() {
                    let v = t - u;
                    let r = rmat(a, b, u, v, h, k);
                    if r.is_zero() {
                        continue;
                    }
                    acc = &acc + &(&r * &cg_c_scaled(a, b, c, u, v, t));
                }
                lrow.push(acc);
                rrow.push(&phase * &cg_c_scaled(b, a, c, h, k, t));
            }
            lhs.push(lrow);
            rhs.push(rrow);
        }
    }
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::qint;

    fn h(d: i64) -> HalfInt {
        HalfInt(d)
    }

    #[test]
    fn cg_example() {
        // C^{1,1,1}_{0,1,1} = -i q^-1
        let c = cg_c(h(2), h(2), h(2), h(0), h(2), h(2));
        assert_eq!(c, QRatio::from_laurent(QLaurent::unit(-1, -4)));
        assert!(cg_c(h(2), h(2), h(2), h(0), h(0), h(2)).is_zero());
    }

    #[test]
    fn r_and_twist_examples() {
        assert_eq!(rmat(h(1), h(1), h(1), h(1), h(1), h(1)), QLaurent::x_pow(2));
        assert_eq!(half_twist(h(1), 1), QLaurent::unit(1, 3));
        assert!(half_twist(h(0), -1).is_one());
        assert!((&half_twist(h(2), 1) * &half_twist(h(2), -1)).is_one());
        assert_eq!(framing_scalar(h(1), h(1)), QLaurent::unit(1, 3));
    }

    #[test]
    fn unknot_by_cup_cap() {
        for a2 in 0..5 {
            let a = h(a2);
            let mut acc = QRatio::zero();
            for u in a.states() {
                acc = &acc + &cap(a, u, -u).mul_laurent(&cup(a, u, -u));
            }
            let sign = if a2 % 2 == 0 { 1 } else { -1 };
            assert_eq!(acc, QRatio::from_laurent(qint(a2 + 1).scale(&sign.into())));
        }
    }
}
