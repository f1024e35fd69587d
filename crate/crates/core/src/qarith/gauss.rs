//! Gaussian rationals `re + im·i` with `re, im ∈ ℚ`.

use super::int::Int;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Gaussian rational stored over a common positive denominator.
///
/// `(re + im·i) / den` with `gcd(re, im, den) = 1` and `den > 0`, so equal
/// values are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRat {
    re: Int,
    im: Int,
    den: Int,
}

impl GaussRat {
    pub fn zero() -> Self {
        GaussRat { re: Int::zero(), im: Int::zero(), den: Int::one() }
    }

    pub fn one() -> Self {
        GaussRat::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        GaussRat { re: Int::from(v), im: Int::zero(), den: Int::one() }
    }

    pub fn from_parts(re: Int, im: Int) -> Self {
        GaussRat { re, im, den: Int::one() }
    }

    /// `(re + im·i) / den`, normalized.
    pub fn new(re: Int, im: Int, den: Int) -> Self {
        assert!(!den.is_zero(), "zero denominator in Gaussian rational");
        let mut g = GaussRat { re, im, den };
        g.normalize();
        g
    }

    pub fn from_rationals(re: &BigRational, im: &BigRational) -> Self {
        let den = re.denom() * im.denom();
        let r = re.numer() * im.denom();
        let i = im.numer() * re.denom();
        GaussRat::new(Int::from(r), Int::from(i), Int::from(den))
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussRat::from_int(1),
            1 => GaussRat::from_parts(Int::zero(), Int::one()),
            2 => GaussRat::from_int(-1),
            _ => GaussRat::from_parts(Int::zero(), Int::from(-1)),
        }
    }

    fn normalize(&mut self) {
        if self.re.is_zero() && self.im.is_zero() {
            self.den = Int::one();
            return;
        }
        if self.den.is_negative() {
            self.re = -&self.re;
            self.im = -&self.im;
            self.den = -&self.den;
        }
        if self.den.is_one() {
            return;
        }
        let g = self.re.gcd(&self.im).gcd(&self.den);
        if !g.is_one() {
            self.re = self.re.div_exact(&g);
            self.im = self.im.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero() && self.den.is_one()
    }

    /// True when both parts are integers.
    pub fn is_gaussian_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn re(&self) -> BigRational {
        BigRational::new(self.re.to_big(), self.den.to_big())
    }

    pub fn im(&self) -> BigRational {
        BigRational::new(self.im.to_big(), self.den.to_big())
    }

    pub fn re_num(&self) -> &Int {
        &self.re
    }

    pub fn im_num(&self) -> &Int {
        &self.im
    }

    pub fn den(&self) -> &Int {
        &self.den
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -&self.im, den: self.den.clone() }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        // 1/((a+bi)/d) = d(a-bi)/(a²+b²)
        let norm = &(&self.re * &self.re) + &(&self.im * &self.im);
        GaussRat::new(&self.den * &self.re, -&(&self.den * &self.im), norm)
    }

    pub fn mul_int(&self, k: &Int) -> Self {
        GaussRat::new(&self.re * k, &self.im * k, self.den.clone())
    }

    /// Multiply by `i^k`.
    pub fn mul_i_pow(&self, k: i64) -> Self {
        let (re, im) = match k.rem_euclid(4) {
            0 => (self.re.clone(), self.im.clone()),
            1 => (-&self.im, self.re.clone()),
            2 => (-&self.re, -&self.im),
            _ => (self.im.clone(), -&self.re),
        };
        GaussRat { re, im, den: self.den.clone() }
    }

    pub fn add_assign_ref(&mut self, rhs: &GaussRat) {
        if self.den.is_one() && rhs.den.is_one() {
            self.re += &rhs.re;
            self.im += &rhs.im;
            return;
        }
        *self = &*self + rhs;
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        if self.den == rhs.den {
            return GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im, self.den.clone());
        }
        let re = &(&self.re * &rhs.den) + &(&rhs.re * &self.den);
        let im = &(&self.im * &rhs.den) + &(&rhs.im * &self.den);
        GaussRat::new(re, im, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        if self.den.is_one() && rhs.den.is_one() {
            return GaussRat { re, im, den: Int::one() };
        }
        GaussRat::new(re, im, &self.den * &rhs.den)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -&self.re, im: -&self.im, den: self.den.clone() }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

impl From<i64> for GaussRat {
    fn from(v: i64) -> Self {
        GaussRat::from_int(v)
    }
}

impl From<BigInt> for GaussRat {
    fn from(v: BigInt) -> Self {
        GaussRat::from_parts(Int::from(v), Int::zero())
    }
}

fn fmt_rat(f: &mut fmt::Formatter<'_>, num: &Int, den: &Int) -> fmt::Result {
    if den.is_one() {
        write!(f, "{num}")
    } else {
        let g = num.gcd(den);
        write!(f, "{}/{}", num.div_exact(&g), den.div_exact(&g))
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt_rat(f, &self.re, &self.den),
            (true, false) => {
                if self.im.is_one() && self.den.is_one() {
                    write!(f, "i")
                } else if self.im == Int::from(-1) && self.den.is_one() {
                    write!(f, "-i")
                } else {
                    fmt_rat(f, &self.im, &self.den)?;
                    write!(f, "i")
                }
            }
            (false, false) => {
                write!(f, "(")?;
                fmt_rat(f, &self.re, &self.den)?;
                if self.im.is_negative() {
                    write!(f, "-")?;
                    fmt_rat(f, &self.im.abs(), &self.den)?;
                } else {
                    write!(f, "+")?;
                    fmt_rat(f, &self.im, &self.den)?;
                }
                write!(f, "i)")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_is_structural() {
        let a = GaussRat::new(Int::from(2), Int::from(4), Int::from(-6));
        let b = GaussRat::new(Int::from(-1), Int::from(-2), Int::from(3));
        assert_eq!(a, b);
        assert_eq!(a.re(), BigRational::new((-1).into(), 3.into()));
    }

    #[test]
    fn inverse_and_units() {
        let z = GaussRat::new(Int::from(3), Int::from(-4), Int::from(5));
        assert!((&z * &z.inv()).is_one());
        let i = GaussRat::i_pow(1);
        assert_eq!(&i * &i, GaussRat::from_int(-1));
        assert_eq!(GaussRat::i_pow(-1), GaussRat::i_pow(3));
        assert_eq!(z.mul_i_pow(1), &z * &i);
    }
}
