//! Laurent polynomials in `x = q^(1/4)` with Gaussian-rational coefficients.

use super::gauss::GaussRat;
use super::int::Int;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse Laurent polynomial; terms sorted by increasing exponent of `x`,
/// no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QLaurent {
    terms: Vec<(i64, GaussRat)>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        QLaurent::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        QLaurent::monomial(0, c)
    }

    pub fn from_int(v: i64) -> Self {
        QLaurent::constant(GaussRat::from_int(v))
    }

    /// `c · x^e`.
    pub fn monomial(e: i64, c: GaussRat) -> Self {
        if c.is_zero() {
            QLaurent::zero()
        } else {
            QLaurent { terms: vec![(e, c)] }
        }
    }

    /// `x^e`.
    pub fn x_pow(e: i64) -> Self {
        QLaurent::monomial(e, GaussRat::one())
    }

    /// `q^k`, i.e. `x^(4k)`.
    pub fn q_pow(k: i64) -> Self {
        QLaurent::x_pow(4 * k)
    }

    /// `i^m · x^e`, the unit monomials that every phase factor reduces to.
    pub fn unit(m: i64, e: i64) -> Self {
        QLaurent::monomial(e, GaussRat::i_pow(m))
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, GaussRat)>>(it: I) -> Self {
        let mut v: Vec<(i64, GaussRat)> = it.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i64, GaussRat)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1.add_assign_ref(&c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        QLaurent { terms: out }
    }

    /// Integer coefficients on powers of `q`: `coeffs[j]` multiplies `q^(low + j)`.
    pub fn from_q_coeffs(low: i64, coeffs: &[i64]) -> Self {
        QLaurent::from_terms(
            coeffs.iter().enumerate().map(|(j, &c)| (4 * (low + j as i64), GaussRat::from_int(c))),
        )
    }

    pub fn terms(&self) -> &[(i64, GaussRat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Lowest exponent of `x`, `None` for zero.
    pub fn low(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    /// Highest exponent of `x`, `None` for zero.
    pub fn high(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn leading(&self) -> Option<&GaussRat> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn coeff(&self, e: i64) -> GaussRat {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => GaussRat::zero(),
        }
    }

    /// Single term `c · x^e`, if that is what this is.
    pub fn as_monomial(&self) -> Option<(i64, &GaussRat)> {
        if self.terms.len() == 1 {
            Some((self.terms[0].0, &self.terms[0].1))
        } else {
            None
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        QLaurent { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return QLaurent::zero();
        }
        QLaurent { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    /// Multiply by `i^m · x^e`; cheap, no coefficient arithmetic.
    pub fn mul_unit(&self, m: i64, e: i64) -> Self {
        QLaurent { terms: self.terms.iter().map(|(k, c)| (k + e, c.mul_i_pow(m))).collect() }
    }

    /// Substitute `x ↦ x^{-1}`, which is `q ↦ q^{-1}`.
    pub fn invert_variable(&self) -> Self {
        QLaurent { terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Substitute `x ↦ x^k` for `k > 0`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k > 0);
        QLaurent { terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect() }
    }

    /// gcd of all exponent differences from the lowest one (0 for monomials and zero).
    pub fn stride(&self) -> i64 {
        let low = match self.low() {
            Some(l) => l,
            None => return 0,
        };
        self.terms.iter().fold(0i64, |g, (e, _)| gcd_i64(g, e - low))
    }

    /// Divide every exponent by `k`; caller guarantees divisibility.
    pub fn compress(&self, k: i64) -> Self {
        QLaurent { terms: self.terms.iter().map(|(e, c)| (e / k, c.clone())).collect() }
    }

    /// Value at `x = 1` (hence `q = 1`).
    pub fn eval_at_one(&self) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (_, c) in &self.terms {
            acc.add_assign_ref(c);
        }
        acc
    }

    /// Conjugates coefficients (the variable is left alone).
    pub fn conj_coeffs(&self) -> Self {
        QLaurent { terms: self.terms.iter().map(|(e, c)| (*e, c.conj())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = QLaurent::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// True when all coefficients lie in `ℤ[i]`.
    pub fn has_gaussian_integer_coeffs(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_gaussian_integer())
    }

    /// Polynomial division with remainder, treating both as polynomials in
    /// `x` after shifting each to lowest exponent 0.
    ///
    /// Returns `(quot, rem)` with `self = quot·d + rem` and the span of `rem`
    /// shorter than that of `d`. Exponents are in the original frame.
    pub fn div_rem(&self, d: &QLaurent) -> (QLaurent, QLaurent) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return (QLaurent::zero(), QLaurent::zero());
        }
        let dlow = d.low().unwrap();
        let dhigh = d.high().unwrap();
        let lead_inv = d.leading().unwrap().inv();
        let slow = self.low().unwrap();
        // dense remainder buffer over [slow, shigh]
        let shigh = self.high().unwrap();
        let mut buf: Vec<GaussRat> = vec![GaussRat::zero(); (shigh - slow + 1) as usize];
        for (e, c) in &self.terms {
            buf[(e - slow) as usize] = c.clone();
        }
        let dspan = dhigh - dlow;
        let mut quot = Vec::new();
        let mut top = shigh;
        while top - slow >= dspan {
            let idx = (top - slow) as usize;
            if !buf[idx].is_zero() {
                let f = &buf[idx] * &lead_inv;
                let qe = top - dhigh;
                for (e, c) in &d.terms {
                    let j = (e + qe - slow) as usize;
                    let prod = &f * c;
                    buf[j] = &buf[j] - &prod;
                }
                quot.push((qe, f));
            }
            top -= 1;
        }
        quot.reverse();
        let rem = buf
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (slow + j as i64, c))
            .collect();
        (QLaurent { terms: quot }, QLaurent { terms: rem })
    }

    /// Exact Laurent division: `Some(q)` with `q·d = self` when it exists.
    pub fn div_exact(&self, d: &QLaurent) -> Option<QLaurent> {
        if let Some((e, c)) = d.as_monomial() {
            let ci = c.inv();
            return Some(QLaurent {
                terms: self.terms.iter().map(|(k, v)| (k - e, v * &ci)).collect(),
            });
        }
        if self.is_zero() {
            return Some(QLaurent::zero());
        }
        if self.high().unwrap() - self.low().unwrap() < d.high().unwrap() - d.low().unwrap() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Renders the polynomial in `q` with reduced fractional exponents.
    pub fn render(&self) -> String {
        render_terms(self.terms.iter().rev().map(|(e, c)| (QExp::from_x(*e), c)))
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A power of `q` given as a reduced fraction of the `x` exponent.
#[derive(Clone, Copy, Debug)]
pub(crate) struct QExp {
    num: i64,
    den: i64,
}

impl QExp {
    pub(crate) fn from_x(e: i64) -> Self {
        let g = gcd_i64(e, 4).max(1);
        QExp { num: e / g, den: 4 / g }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.num == 0
    }
}

impl fmt::Display for QExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (1, 1) => write!(f, "q"),
            (n, 1) => write!(f, "q^{n}"),
            (n, d) => write!(f, "q^({n}/{d})"),
        }
    }
}

/// Sum rendering shared with the canonical bracket format: terms given in
/// decreasing exponent order, `q^2 + 1 + q^-2`, `-2*q - i*q^-1`.
pub(crate) fn render_terms<'a, I: Iterator<Item = (QExp, &'a GaussRat)>>(it: I) -> String {
    let mut out = String::new();
    for (k, (e, c)) in it.enumerate() {
        let real = c.im_num().is_zero();
        let neg = real && c.re_num().is_negative();
        let mag = if neg { -c } else { c.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if e.is_zero() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&e.to_string());
        } else {
            out.push_str(&format!("{mag}*{e}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn merge(a: &QLaurent, b: &QLaurent, negate_b: bool) -> QLaurent {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() || j < b.terms.len() {
        let take_a = j >= b.terms.len() || (i < a.terms.len() && a.terms[i].0 < b.terms[j].0);
        let take_b = i >= a.terms.len() || (j < b.terms.len() && b.terms[j].0 < a.terms[i].0);
        if take_a {
            out.push(a.terms[i].clone());
            i += 1;
        } else if take_b {
            let c = if negate_b { -&b.terms[j].1 } else { b.terms[j].1.clone() };
            out.push((b.terms[j].0, c));
            j += 1;
        } else {
            let c = if negate_b { &a.terms[i].1 - &b.terms[j].1 } else { &a.terms[i].1 + &b.terms[j].1 };
            if !c.is_zero() {
                out.push((a.terms[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    QLaurent { terms: out }
}

impl<'a> Add<&'a QLaurent> for &'a QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        merge(self, rhs, false)
    }
}

impl<'a> Sub<&'a QLaurent> for &'a QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        merge(self, rhs, true)
    }
}

impl Add for QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: QLaurent) -> QLaurent {
        &self + &rhs
    }
}

impl Sub for QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: QLaurent) -> QLaurent {
        &self - &rhs
    }
}

impl Mul for QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: QLaurent) -> QLaurent {
        &self * &rhs
    }
}

impl<'a> Mul<&'a QLaurent> for &'a QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        if self.is_zero() || rhs.is_zero() {
            return QLaurent::zero();
        }
        if let Some((e, c)) = rhs.as_monomial() {
            return QLaurent { terms: self.terms.iter().map(|(k, v)| (k + e, v * c)).collect() };
        }
        if let Some((e, c)) = self.as_monomial() {
            return QLaurent { terms: rhs.terms.iter().map(|(k, v)| (k + e, c * v)).collect() };
        }
        let (a, b) = (self, rhs);
        let low = a.low().unwrap() + b.low().unwrap();
        let high = a.high().unwrap() + b.high().unwrap();
        let span = (high - low + 1) as usize;
        // Real integer coefficients dominate; keep a separate fast lane.
        if a.terms.iter().chain(b.terms.iter()).all(|(_, c)| c.is_gaussian_integer() && c.im_num().is_zero()) {
            let mut buf: Vec<Int> = vec![Int::zero(); span];
            for (ea, ca) in &a.terms {
                for (eb, cb) in &b.terms {
                    let j = (ea + eb - low) as usize;
                    buf[j] += &(ca.re_num() * cb.re_num());
                }
            }
            let terms = buf
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (low + j as i64, GaussRat::from_parts(c, Int::zero())))
                .collect();
            return QLaurent { terms };
        }
        let mut buf: Vec<GaussRat> = vec![GaussRat::zero(); span];
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let j = (ea + eb - low) as usize;
                let p = ca * cb;
                buf[j].add_assign_ref(&p);
            }
        }
        let terms = buf
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (low + j as i64, c))
            .collect();
        QLaurent { terms }
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        -&self
    }
}

impl From<i64> for QLaurent {
    fn from(v: i64) -> Self {
        QLaurent::from_int(v)
    }
}
