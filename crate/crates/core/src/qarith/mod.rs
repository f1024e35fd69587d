//! Exact arithmetic in `ℚ(i)[x, x^-1]` with `x = q^(1/4)`, its fraction
//! field, quantum combinatorics and the integral normal form.

mod bracket;
mod factored;
mod gauss;
mod halfint;
mod int;
mod laurent;
mod qcomb;
mod ratio;

pub use bracket::{canonicalize, canonicalize_ratio, divides, int_body, BracketValue, NotIntegral};
pub use factored::QIntFrac;
pub use gauss::GaussRat;
pub use halfint::{admissible, HalfInt};
pub use int::Int;
pub use laurent::QLaurent;
pub use qcomb::{qbinom, qfact, qint, qmultinom, qmultinom_or_zero};
pub use ratio::{poly_gcd, QRatio, ZeroDenominator};
