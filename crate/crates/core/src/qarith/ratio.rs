//! Reduced fractions of Laurent polynomials.

use super::gauss::GaussRat;
use super::laurent::QLaurent;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("zero denominator")]
pub struct ZeroDenominator;

/// `num / den` with `gcd(num, den) = 1`, `den` monic with lowest exponent 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRatio {
    num: QLaurent,
    den: QLaurent,
}

/// Monic gcd of two polynomials in `x` (both shifted to lowest exponent 0).
///
/// Exponents are first compressed by their common stride, since gcd commutes
/// with `x ↦ x^s`; most inputs here live in `q` or `q^(1/2)`.
pub fn poly_gcd(a: &QLaurent, b: &QLaurent) -> QLaurent {
    if a.is_zero() {
        return monic_at_zero(b);
    }
    if b.is_zero() {
        return monic_at_zero(a);
    }
    let a = a.shift(-a.low().unwrap());
    let b = b.shift(-b.low().unwrap());
    let s = gcd_i64(a.stride(), b.stride());
    if s == 0 {
        // both constants
        return QLaurent::one();
    }
    let (mut r0, mut r1) = (monic_at_zero(&a.compress(s)), monic_at_zero(&b.compress(s)));
    if r0.high() < r1.high() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_zero() {
        // remainders of polynomials anchored at 0 stay anchored at 0
        let (_, r) = r0.div_rem(&r1);
        r0 = r1;
        r1 = if r.is_zero() { r } else { monic_at_zero(&r) };
    }
    monic_at_zero(&r0).substitute_power(s)
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

/// Shift to lowest exponent 0 and scale to leading coefficient 1.
fn monic_at_zero(p: &QLaurent) -> QLaurent {
    if p.is_zero() {
        return QLaurent::zero();
    }
    let inv = p.leading().unwrap().inv();
    p.shift(-p.low().unwrap()).scale(&inv)
}

impl QRatio {
    pub fn zero() -> Self {
        QRatio { num: QLaurent::zero(), den: QLaurent::one() }
    }

    pub fn one() -> Self {
        QRatio { num: QLaurent::one(), den: QLaurent::one() }
    }

    pub fn from_int(v: i64) -> Self {
        QRatio::from_laurent(QLaurent::from_int(v))
    }

    pub fn from_laurent(p: QLaurent) -> Self {
        QRatio { num: p, den: QLaurent::one() }
    }

    /// Reduced fraction; fails on a zero denominator.
    pub fn try_new(num: QLaurent, den: QLaurent) -> Result<Self, ZeroDenominator> {
        if den.is_zero() {
            return Err(ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(QRatio::zero());
        }
        if let Some(q) = num.div_exact(&den) {
            return Ok(QRatio::from_laurent(q));
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.high() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
        };
        let inv = den.leading().unwrap().inv();
        let low = den.low().unwrap();
        Ok(QRatio { num: num.shift(-low).scale(&inv), den: den.shift(-low).scale(&inv) })
    }

    /// Reduced fraction; panics on a zero denominator.
    pub fn new(num: QLaurent, den: QLaurent) -> Self {
        QRatio::try_new(num, den).expect("zero denominator")
    }

    pub fn num(&self) -> &QLaurent {
        &self.num
    }

    pub fn den(&self) -> &QLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this is, if the denominator is 1.
    pub fn as_laurent(&self) -> Option<&QLaurent> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        QRatio::new(self.den.clone(), self.num.clone())
    }

    pub fn mul_laurent(&self, p: &QLaurent) -> Self {
        QRatio::new(&self.num * p, self.den.clone())
    }

    pub fn div_laurent(&self, p: &QLaurent) -> Self {
        QRatio::new(self.num.clone(), &self.den * p)
    }

    /// Multiply by `i^m · x^e` without renormalizing.
    pub fn mul_unit(&self, m: i64, e: i64) -> Self {
        QRatio { num: self.num.mul_unit(m, e), den: self.den.clone() }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return QRatio::zero();
        }
        QRatio { num: self.num.scale(c), den: self.den.clone() }
    }

    /// `q ↦ q^{-1}`.
    pub fn invert_variable(&self) -> Self {
        QRatio::new(self.num.invert_variable(), self.den.invert_variable())
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let k = n.unsigned_abs() as u32;
        QRatio::new(base.num.pow(k), base.den.pow(k))
    }

    /// Equality by cross-multiplication; valid for unreduced operands too.
    pub fn cross_eq(an: &QLaurent, ad: &QLaurent, bn: &QLaurent, bd: &QLaurent) -> bool {
        (an * bd) == (bn * ad)
    }

    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render()
        } else {
            format!("({}) / ({})", self.num.render(), self.den.render())
        }
    }
}

impl fmt::Display for QRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<QLaurent> for QRatio {
    fn from(p: QLaurent) -> Self {
        QRatio::from_laurent(p)
    }
}

impl<'a> Mul<&'a QRatio> for &'a QRatio {
    type Output = QRatio;
    fn mul(self, rhs: &QRatio) -> QRatio {
        if self.den.is_one() && rhs.den.is_one() {
            return QRatio::from_laurent(&self.num * &rhs.num);
        }
        QRatio::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a QRatio> for &'a QRatio {
    type Output = QRatio;
    fn div(self, rhs: &QRatio) -> QRatio {
        assert!(!rhs.is_zero(), "division by zero");
        QRatio::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl<'a> Add<&'a QRatio> for &'a QRatio {
    type Output = QRatio;
    fn add(self, rhs: &QRatio) -> QRatio {
        if self.den == rhs.den {
            return QRatio::new(&self.num + &rhs.num, self.den.clone());
        }
        QRatio::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a QRatio> for &'a QRatio {
    type Output = QRatio;
    fn sub(self, rhs: &QRatio) -> QRatio {
        self + &(-rhs)
    }
}

impl Neg for &QRatio {
    type Output = QRatio;
    fn neg(self) -> QRatio {
        QRatio { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QRatio {
    type Output = QRatio;
    fn neg(self) -> QRatio {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::qcomb::{qfact, qint};

    #[test]
    fn reduce_examples() {
        let r = QRatio::new(qint(4), qint(2));
        assert_eq!(r.as_laurent().unwrap(), &QLaurent::from_q_coeffs(-2, &[1, 0, 0, 0, 1]));
        let z = QRatio::new(QLaurent::zero(), qint(3));
        assert!(z.is_zero() && z.den().is_one());
        assert!(QRatio::try_new(qint(1), QLaurent::zero()).is_err());
    }

    #[test]
    fn common_factor_cancels() {
        // [3][4] / ([3][5]) = [4]/[5]
        let a = QRatio::new(&qint(3) * &qint(4), &qint(3) * &qint(5));
        let b = QRatio::new(qint(4), qint(5));
        assert_eq!(a, b);
        assert_eq!(b.den().low(), Some(0));
        assert!(b.den().leading().unwrap().is_one());
    }

    #[test]
    fn theta_is_not_laurent() {
        let t = QRatio::new(-qfact(4), qfact(2).pow(3));
        assert!(t.as_laurent().is_none());
        assert_eq!(&t * &t.inv(), QRatio::one());
    }
}
