//! Half-integers stored doubled.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// `a ∈ ½ℤ` stored as `2a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_doubled(d: i64) -> Self {
        HalfInt(d)
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value; panics on a genuine half.
    pub fn to_int(self) -> i64 {
        assert!(self.is_integer(), "{self} is not an integer");
        self.0 / 2
    }

    /// Whether `self` is a legal state of color `color`.
    pub fn is_state_of(self, color: HalfInt) -> bool {
        color.0 >= 0 && self.0.abs() <= color.0 && (self.0 - color.0) % 2 == 0
    }

    /// States of a color in increasing order: `-a, -a+1, …, a`.
    pub fn states(self) -> impl Iterator<Item = HalfInt> {
        let a = self.0;
        (0..=a.max(-1)).map(move |k| HalfInt(-a + 2 * k)).take_while(move |_| a >= 0)
    }
}

/// Admissibility of a color triple: nonnegative, integral sum, triangle inequalities.
pub fn admissible(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    let (a, b, c) = (a.0, b.0, c.0);
    a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 && a + b >= c && b + c >= a && c + a >= b
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}
