//! Fractions whose denominator is a product of quantum integers.
//!
//! Tile denominators, θ-symbols and unknot powers are all products of `[k]`,
//! so state-sums can keep exact exponent vectors and postpone every
//! polynomial gcd to one final reduction.

use super::laurent::QLaurent;
use super::qcomb::qint;
use super::ratio::QRatio;

/// `num · ∏_k [k]^{exps[k]}`; negative exponents are denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QIntFrac {
    num: QLaurent,
    exps: Vec<i64>,
}

impl QIntFrac {
    pub fn zero() -> Self {
        QIntFrac { num: QLaurent::zero(), exps: Vec::new() }
    }

    pub fn one() -> Self {
        QIntFrac::from_laurent(QLaurent::one())
    }

    pub fn from_laurent(p: QLaurent) -> Self {
        QIntFrac { num: p, exps: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &QLaurent {
        &self.num
    }

    /// Exponent of `[k]`.
    pub fn exponent(&self, k: usize) -> i64 {
        self.exps.get(k).copied().unwrap_or(0)
    }

    /// Multiply by `[k]^e`, `k ≥ 1`.
    pub fn mul_qint_pow(&mut self, k: i64, e: i64) {
        assert!(k >= 1, "only [k] with k ≥ 1 may be tracked");
        if k == 1 || e == 0 {
            return;
        }
        let k = k as usize;
        if self.exps.len() <= k {
            self.exps.resize(k + 1, 0);
        }
        self.exps[k] += e;
    }

    /// Multiply by `([n]!)^e`.
    pub fn mul_qfact_pow(&mut self, n: i64, e: i64) {
        for k in 2..=n {
            self.mul_qint_pow(k, e);
        }
    }

    pub fn mul_laurent(&mut self, p: &QLaurent) {
        self.num = &self.num * p;
    }

    pub fn mul_unit(&mut self, m: i64, e: i64) {
        self.num = self.num.mul_unit(m, e);
    }

    pub fn mul(&self, other: &QIntFrac) -> QIntFrac {
        let mut out = QIntFrac { num: &self.num * &other.num, exps: self.exps.clone() };
        for (k, e) in other.exps.iter().enumerate() {
            if *e != 0 {
                out.mul_qint_pow(k as i64, *e);
            }
        }
        out
    }

    pub fn neg(&self) -> QIntFrac {
        QIntFrac { num: -&self.num, exps: self.exps.clone() }
    }

    /// Multiplicative inverse as a fraction; panics on zero.
    pub fn inv(&self) -> QRatio {
        self.to_ratio().inv()
    }

    /// Sum over a common denominator: each term is lifted to the largest
    /// denominator exponent of every `[k]` before adding numerators.
    pub fn sum<'a, I: IntoIterator<Item = &'a QIntFrac>>(terms: I) -> QIntFrac {
        let terms: Vec<&QIntFrac> = terms.into_iter().filter(|t| !t.is_zero()).collect();
        if terms.is_empty() {
            return QIntFrac::zero();
        }
        let len = terms.iter().map(|t| t.exps.len()).max().unwrap_or(0);
        // common exponent: the minimum over terms, per k
        let mut base = vec![0i64; len];
        for (k, slot) in base.iter_mut().enumerate() {
            *slot = terms.iter().map(|t| t.exponent(k)).min().unwrap();
        }
        let mut num = QLaurent::zero();
        for t in &terms {
            let mut p = t.num.clone();
            for (k, b) in base.iter().enumerate() {
                let extra = t.exponent(k) - b;
                if extra > 0 {
                    p = &p * &qint(k as i64).pow(extra as u32);
                }
            }
            num = &num + &p;
        }
        QIntFrac { num, exps: base }
    }

    /// The reduced fraction.
    pub fn to_ratio(&self) -> QRatio {
        if self.num.is_zero() {
            return QRatio::zero();
        }
        let mut num = self.num.clone();
        let mut den = QLaurent::one();
        for (k, e) in self.exps.iter().enumerate() {
            if *e > 0 {
                num = &num * &qint(k as i64).pow(*e as u32);
            }
        }
        for (k, e) in self.exps.iter().enumerate() {
            if *e < 0 {
                let f = qint(k as i64);
                for _ in 0..(-e) {
                    match num.div_exact(&f) {
                        Some(q) => num = q,
                        None => den = &den * &f,
                    }
                }
            }
        }
        QRatio::new(num, den)
    }
}

impl From<QLaurent> for QIntFrac {
    fn from(p: QLaurent) -> Self {
        QIntFrac::from_laurent(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::qcomb::qfact;

    #[test]
    fn theta_fraction() {
        let mut f = QIntFrac::from_laurent(-qfact(4));
        f.mul_qfact_pow(2, -3);
        assert_eq!(f.to_ratio(), QRatio::new(-qfact(4), qfact(2).pow(3)));
    }

    #[test]
    fn sums_share_denominators() {
        let mut a = QIntFrac::one();
        a.mul_qint_pow(3, -1);
        let mut b = QIntFrac::one();
        b.mul_qint_pow(2, -1);
        let s = QIntFrac::sum([&a, &b]);
        let expect = &QRatio::new(QLaurent::one(), qint(3)) + &QRatio::new(QLaurent::one(), qint(2));
        assert_eq!(s.to_ratio(), expect);
    }
}
