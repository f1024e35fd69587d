//! Exhaustive checks of recoupling identities between closed-form symbols.
//!
//! Colors are doubled throughout. Sums run over every admissible value of
//! the summation color; a term vanishes as soon as one of its triples is
//! inadmissible.

use crate::qarith::{admissible, HalfInt, QIntFrac, QLaurent, QRatio};
use crate::repcore::{cg_c, proj_p, rmat};
use crate::shadow::{tet_sym, theta_pow, unknot_pow};
use serde::Serialize;
use std::fmt;

/// One checked tuple.
#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    /// Doubled colors (and states, for matrix identities) in the identity's
    /// argument order.
    pub args: Vec<i64>,
    /// Human-readable name of the instance; empty when `args` says it all.
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub name: String,
    /// Largest doubled color checked.
    pub max: i64,
    pub instances: Vec<Instance>,
    /// Findings beyond per-instance verdicts.
    pub notes: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.pass)
    }

    fn from_checks(name: &str, max: i64, checks: Vec<(Vec<i64>, QIntFrac, QIntFrac)>) -> Self {
        let instances = par_map(checks, |(args, l, r)| {
            let pass = QIntFrac::sum([&l, &r.neg()]).is_zero();
            let lhs = l.to_ratio().render();
            let rhs = if pass { lhs.clone() } else { r.to_ratio().render() };
            Instance { args, label: String::new(), lhs, rhs, pass }
        });
        IdentityReport { name: name.into(), max, instances, notes: Vec::new() }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bad = self.failures().count();
        let verdict = if bad == 0 { "PASS" } else { "FAIL" };
        writeln!(f, "{} (max {}): {verdict}, {} instances, {bad} failed", self.name, self.max, self.instances.len())?;
        for i in self.failures() {
            let id = if i.label.is_empty() { format!("{:?}", i.args) } else { i.label.clone() };
            writeln!(f, "  {id}: {} != {}", i.lhs, i.rhs)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Order-preserving map over the available cores.
pub(crate) fn par_map<T: Send, U: Send>(items: Vec<T>, f: impl Fn(T) -> U + Sync) -> Vec<U> {
    let n = std::thread::available_parallelism().map_or(1, |n| n.get()).min(items.len().max(1));
    if n <= 1 {
        return items.into_iter().map(f).collect();
    }
    let mut chunks: Vec<Vec<T>> = (0..n).map(|_| Vec::new()).collect();
    let len = items.len();
    let per = len.div_ceil(n);
    for (k, it) in items.into_iter().enumerate() {
        chunks[k / per].push(it);
    }
    let f = &f;
    std::thread::scope(|s| {
        let handles: Vec<_> = chunks.into_iter().map(|c| s.spawn(move || c.into_iter().map(f).collect::<Vec<U>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn h(x: i64) -> HalfInt {
    HalfInt(x)
}

fn adm(a: i64, b: i64, c: i64) -> bool {
    admissible(h(a), h(b), h(c))
}

/// All tuples of `n` doubled colors in `0..=max`, lexicographic.
fn tuples(n: usize, max: i64) -> impl Iterator<Item = Vec<i64>> {
    let total = (max + 1).pow(n as u32);
    (0..total).map(move |mut k| {
        let mut v = vec![0; n];
        for slot in v.iter_mut().rev() {
            *slot = k % (max + 1);
            k /= max + 1;
        }
        v
    })
}

fn unknot(u: i64) -> QIntFrac {
    unknot_pow(h(u), 1)
}

fn tet(c: [i64; 6]) -> QIntFrac {
    QIntFrac::from_laurent(tet_sym(h(c[0]), h(c[1]), h(c[2]), h(c[3]), h(c[4]), h(c[5])))
}

fn theta(a: i64, b: i64, c: i64) -> QIntFrac {
    theta_pow(h(a), h(b), h(c), 1).expect("positive power")
}

/// `1/θ(a,b,c)`, `None` when inadmissible.
fn inv_theta(a: i64, b: i64, c: i64) -> Option<QIntFrac> {
    theta_pow(h(a), h(b), h(c), -1)
}

/// `i^m q^{e/4}`.
fn unit(m: i64, e: i64) -> QIntFrac {
    QIntFrac::from_laurent(QLaurent::unit(m, e))
}

/// Exponent of `q^{c²+c}` in quarter powers, `c` doubled.
fn twist(c: i64) -> i64 {
    c * c + 2 * c
}

fn product(fs: &[QIntFrac]) -> QIntFrac {
    fs.iter().fold(QIntFrac::one(), |acc, f| acc.mul(f))
}

/// `Σ_u term(u)` over doubled `u` in `0..=hi`, skipping `None`.
fn sum_over(hi: i64, term: impl Fn(i64) -> Option<QIntFrac>) -> QIntFrac {
    let terms: Vec<QIntFrac> = (0..=hi).filter_map(term).collect();
    QIntFrac::sum(terms.iter())
}

/// `δ_{b,0} U(a) U(c) = Σ_u U(u) tet(a,a,b,c,c,u) / θ(a,c,u)`.
pub fn verify_normalization_zero(max: i64) -> IdentityReport {
    let checks = tuples(3, max)
        .filter(|v| adm(v[0], v[0], v[1]) && adm(v[2], v[2], v[1]))
        .map(|v| {
            let (a, b, c) = (v[0], v[1], v[2]);
            let lhs = if b == 0 { unknot(a).mul(&unknot(c)) } else { QIntFrac::zero() };
            let rhs = sum_over(a + c, |u| {
                Some(product(&[unknot(u), tet([a, a, b, c, c, u]), inv_theta(a, c, u)?]))
            });
            (v, lhs, rhs)
        })
        .collect();
    IdentityReport::from_checks("normalization (erasing an edge)", max, checks)
}

/// `θ(a,b,c) i^{4b} q^{2(b²+b)} = Σ_u i^{2(u+a−2c)} q^{u²+u+a²+a−2(c²+c)} U(u) tet(a,b,c,u,b,c) / θ(b,c,u)`.
pub fn verify_normalization_kink(max: i64) -> IdentityReport {
    let checks = tuples(3, max)
        .filter(|v| adm(v[0], v[1], v[2]))
        .map(|v| {
            let (a, b, c) = (v[0], v[1], v[2]);
            let lhs = theta(a, b, c).mul(&unit(2 * b, 2 * twist(b)));
            let rhs = sum_over(b + c, |u| {
                let ph = unit(u + a - 2 * c, twist(u) + twist(a) - 2 * twist(c));
                Some(product(&[ph, unknot(u), tet([a, b, c, u, b, c]), inv_theta(b, c, u)?]))
            });
            (v, lhs, rhs)
        })
        .collect();
    IdentityReport::from_checks("normalization (undoing a kink)", max, checks)
}

/// Both normalizations.
pub fn verify_normalizations(max: i64) -> Vec<IdentityReport> {
    vec![verify_normalization_zero(max), verify_normalization_kink(max)]
}

/// `δ_{b,d} θ(a,b,c) θ(e,f,b) / U(b) = Σ_u i^{2(d−b)} q^{d²+d−b²−b} U(u) tet(a,b,c,f,u,e) tet(a,c,d,f,e,u) / (θ(a,e,u) θ(c,f,u))`.
pub fn verify_orthogonality(max: i64) -> IdentityReport {
    let checks = tuples(6, max)
        .filter(|v| {
            let [a, b, c, d, e, f] = [v[0], v[1], v[2], v[3], v[4], v[5]];
            adm(a, b, c) && adm(e, f, b) && adm(a, c, d) && adm(f, e, d)
        })
        .map(|v| {
            let [a, b, c, d, e, f] = [v[0], v[1], v[2], v[3], v[4], v[5]];
            let lhs = if b == d {
                product(&[theta(a, b, c), theta(e, f, b), unknot_pow(h(b), -1)])
            } else {
                QIntFrac::zero()
            };
            let ph = unit(d - b, twist(d) - twist(b));
            let rhs = sum_over(2 * max, |u| {
                Some(product(&[
                    ph.clone(),
                    unknot(u),
                    tet([a, b, c, f, u, e]),
                    tet([a, c, d, f, e, u]),
                    inv_theta(a, e, u)?,
                    inv_theta(c, f, u)?,
                ]))
            });
            (v, lhs, rhs)
        })
        .collect();
    IdentityReport::from_checks("orthogonality", max, checks)
}

/// `i^{2(a+b−c)} q^{a²+a+b²+b−c²−c} tet(a,b,c,d,e,f) =
/// Σ_u i^{2(u+f−e−d)} q^{u²+u+f²+f−d²−d−e²−e} U(u) tet(a,e,f,b,d,u) tet(a,c,b,e,u,d) / (θ(a,d,u) θ(b,e,u))`.
pub fn verify_racah(max: i64) -> IdentityReport {
    let checks = tuples(6, max)
        .filter(|v| {
            let [a, b, c, d, e, f] = [v[0], v[1], v[2], v[3], v[4], v[5]];
            adm(a, b, c) && adm(a, e, f) && adm(d, b, f) && adm(d, e, c)
        })
        .map(|v| {
            let [a, b, c, d, e, f] = [v[0], v[1], v[2], v[3], v[4], v[5]];
            let lhs = unit(a + b - c, twist(a) + twist(b) - twist(c)).mul(&tet([a, b, c, d, e, f]));
            let rhs = sum_over(2 * max, |u| {
                Some(product(&[
                    unit(u + f - e - d, twist(u) + twist(f) - twist(d) - twist(e)),
                    unknot(u),
                    tet([a, e, f, b, d, u]),
                    tet([a, c, b, e, u, d]),
                    inv_theta(a, d, u)?,
                    inv_theta(b, e, u)?,
                ]))
            });
            (v, lhs, rhs)
        })
        .collect();
    IdentityReport::from_checks("racah", max, checks)
}

/// `tet(a,b,c,d,e,f) tet(g,h,e,c,d,i) / θ(c,e,d) =
/// Σ_u U(u) tet(a,e,f,g,u,h) tet(d,b,f,u,g,i) tet(a,b,c,i,h,u) / (θ(a,h,u) θ(b,i,u) θ(f,g,u))`.
pub fn verify_biedenharn_elliot(max: i64) -> IdentityReport {
    let checks = tuples(9, max)
        .filter(|v| {
            let [a, b, c, d, e, f, g, hh, i] = [v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]];
            adm(a, b, c) && adm(a, e, f) && adm(d, b, f) && adm(d, e, c) && adm(g, hh, e) && adm(g, d, i) && adm(c, hh, i)
        })
        .map(|v| {
            let [a, b, c, d, e, f, g, hh, i] = [v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]];
            let lhs = product(&[tet([a, b, c, d, e, f]), tet([g, hh, e, c, d, i]), inv_theta(c, e, d).expect("admissible")]);
            let rhs = sum_over(2 * max, |u| {
                Some(product(&[
                    unknot(u),
                    tet([a, e, f, g, u, hh]),
                    tet([d, b, f, u, g, i]),
                    tet([a, b, c, i, hh, u]),
                    inv_theta(a, hh, u)?,
                    inv_theta(b, i, u)?,
                    inv_theta(f, g, u)?,
                ]))
            });
            (v, lhs, rhs)
        })
        .collect();
    IdentityReport::from_checks("biedenharn-elliot", max, checks)
}

/// Fusion of two parallel strands `a`, `b`, closed into two unknots:
/// `U(a) U(b) = Σ_i U(i)/θ(a,b,i) · θ(a,b,i)`, and closed into a θ-graph with
/// third edge `e`: `θ(a,b,e) = Σ_i U(i)/θ(a,b,i) · δ_{i,e} θ(a,b,e)² / U(e)`.
pub fn verify_fusion(max: i64) -> IdentityReport {
    let mut checks = Vec::new();
    for v in tuples(2, max) {
        let (a, b) = (v[0], v[1]);
        let lhs = unknot(a).mul(&unknot(b));
        let rhs = sum_over(a + b, |i| Some(product(&[unknot(i), inv_theta(a, b, i)?, theta(a, b, i)])));
        checks.push((vec![a, b, -1], lhs, rhs));
        for e in 0..=a + b {
            if !adm(a, b, e) {
                continue;
            }
            let rhs = sum_over(a + b, |i| {
                (i == e).then(|| {
                    product(&[unknot(i), inv_theta(a, b, i).unwrap(), theta(a, b, e), theta(a, b, e), unknot_pow(h(e), -1)])
                })
            });
            checks.push((vec![a, b, e], theta(a, b, e), rhs));
        }
    }
    IdentityReport::from_checks("fusion", max, checks)
}

/// Whitehead move on the H-graph with legs `a, b, c, d` in cyclic order
/// and middle edge `j` (vertices `(a,d,j)`, `(c,b,j)`), which becomes the
/// graph with middle edge `i` and vertices `(a,b,i)`, `(c,d,i)`. Closing the
/// legs by vertices `(a,d,e)` and `(b,c,e)` turns the left side into two
/// bubbles and the right side into a tetrahedron:
/// `δ_{j,e} θ(a,d,j) θ(b,c,j) / U(j) = Σ_i U(i) tet(a,b,i,c,d,j) tet(a,b,i,c,d,e) / (θ(a,b,i) θ(c,d,i))`.
pub fn verify_whitehead(max: i64) -> IdentityReport {
    let checks = tuples(6, max)
        .filter(|v| {
            let [a, b, c, d, j, e] = [v[0], v[1], v[2], v[3], v[4], v[5]];
            adm(a, d, j) && adm(c, b, j) && adm(a, d, e) && adm(b, c, e)
        })
        .map(|v| {
            let [a, b, c, d, j, e] = [v[0], v[1], v[2], v[3], v[4], v[5]];
            let lhs = if j == e {
                product(&[theta(a, d, j), theta(b, c, j), unknot_pow(h(j), -1)])
            } else {
                QIntFrac::zero()
            };
            let rhs = sum_over(2 * max, |i| {
                Some(product(&[
                    unknot(i),
                    tet([a, b, i, c, d, j]),
                    tet([a, b, i, c, d, e]),
                    inv_theta(a, b, i)?,
                    inv_theta(c, d, i)?,
                ]))
            });
            (v, lhs, rhs)
        })
        .collect();
    IdentityReport::from_checks("whitehead", max, checks)
}

/// The un-renormalized θ: `θ_sym · ([a+b−c]! [b+c−a]! [c+a−b]!)² / ([2a]! [2b]! [2c]!)`.
pub fn theta_raw(a: HalfInt, b: HalfInt, c: HalfInt) -> QIntFrac {
    let Some(mut t) = theta_pow(a, b, c, 1) else { return QIntFrac::zero() };
    if t.is_zero() {
        return t;
    }
    for x in [a, b, c] {
        t.mul_qfact_pow(x.0, -1);
    }
    for k in [a.0 + b.0 - c.0, b.0 + c.0 - a.0, c.0 + a.0 - b.0] {
        t.mul_qfact_pow(k / 2, 2);
    }
    t
}

/// `{}^a_b R^{t,w}_{u,v} = Σ_c C^{b,a,c}_{t,w,u+v} i^{2(c−a−b)} q^{c²+c−a²−a−b²−b} U(c)/θ(a,b,c) P^{a,b,c}_{u,v,u+v}`,
/// with `θ` the un-renormalized bracket of the θ-graph.
pub fn verify_r_vs_6j(max: i64) -> IdentityReport {
    let mut items = Vec::new();
    for v in tuples(2, max) {
        let (a, b) = (h(v[0]), h(v[1]));
        for u in a.states() {
            for vv in b.states() {
                for t in b.states() {
                    for w in a.states() {
                        items.push((a, b, u, vv, t, w));
                    }
                }
            }
        }
    }
    let checks = par_map(items, |(a, b, u, v, t, w)| {
        let lhs = QRatio::from_laurent(rmat(a, b, u, v, t, w));
        let mut rhs = QRatio::zero();
        let mut c = (a.0 - b.0).abs();
        while c <= a.0 + b.0 {
            let ch = h(c);
            if (u + v).is_state_of(ch) {
                let pre = QLaurent::unit(c - a.0 - b.0, twist(c) - twist(a.0) - twist(b.0));
                let coef = unknot(c).mul(&QIntFrac::from_laurent(pre)).to_ratio();
                let term = &(&(&cg_c(b, a, ch, t, w, u + v) * &proj_p(a, b, ch, u, v, u + v)) * &coef) / &theta_raw(a, b, ch).to_ratio();
                rhs = &rhs + &term;
            }
            c += 2;
        }
        (vec![a.0, b.0, u.0, v.0, t.0, w.0], lhs, rhs)
    });
    let instances = checks
        .into_iter()
        .map(|(args, l, r)| {
            let pass = l == r;
            Instance { args, label: String::new(), lhs: l.render(), rhs: r.render(), pass }
        })
        .collect();
    IdentityReport { name: "r-vs-6j".into(), max, instances, notes: Vec::new() }
}
