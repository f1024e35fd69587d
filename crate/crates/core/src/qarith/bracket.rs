//! The integral normal form `i^m · q^(n/4) · P(q)` with `P ∈ ℤ[q, q^-1]`.

use super::gauss::GaussRat;
use super::int::Int;
use super::laurent::{render_terms, QExp, QLaurent};
use super::ratio::QRatio;
use num_bigint::BigInt;
use std::fmt;
use thiserror::Error;

/// Canonical integral value.
///
/// `phase_m ∈ {0, 1}` (a factor `-1` is absorbed into the body),
/// `quarter_shift_n ∈ {0, 1, 2, 3}` is the common residue of all `x`
/// exponents, and `body` holds integer coefficients on powers of `q`.
/// Zero is `(0, 0, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BracketValue {
    pub phase_m: i64,
    pub quarter_shift_n: i64,
    /// Stored in `x`, every exponent a multiple of 4.
    body: QLaurent,
}

/// Why a value has no integral normal form.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NotIntegral {
    #[error("not a Laurent polynomial: denominator {den}")]
    Denominator { den: String },
    #[error("coefficient {coeff} at q^({exp}/4) is not a Gaussian integer")]
    Fractional { exp: i64, coeff: String },
    #[error("coefficient {coeff} at q^({exp}/4) has a phase different from the leading term")]
    MixedPhase { exp: i64, coeff: String },
    #[error("exponent q^({exp}/4) is not congruent mod 4 to the others")]
    MixedShift { exp: i64 },
}

impl BracketValue {
    pub fn zero() -> Self {
        BracketValue { phase_m: 0, quarter_shift_n: 0, body: QLaurent::zero() }
    }

    /// From parts; the body is given as integer coefficients on `q^k`.
    pub fn from_parts(phase_m: i64, quarter_shift_n: i64, body_q: &[(i64, BigInt)]) -> Self {
        let body = QLaurent::from_terms(body_q.iter().map(|(k, c)| (4 * k, GaussRat::from(c.clone()))));
        BracketValue { phase_m, quarter_shift_n, body }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// The body as `(power of q, integer coefficient)`, increasing powers.
    pub fn body_q_coeffs(&self) -> Vec<(i64, BigInt)> {
        self.body.terms().iter().map(|(e, c)| (e / 4, c.re_num().to_big())).collect()
    }

    /// The body as a Laurent polynomial (exponents in `x`).
    pub fn body(&self) -> &QLaurent {
        &self.body
    }

    /// `i^m · x^n · P(x^4)`.
    pub fn reconstruct(&self) -> QLaurent {
        self.body.mul_unit(self.phase_m, self.quarter_shift_n)
    }

    /// Canonical text form, e.g. `i * q^(3/4) * (q^2 - 1)`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

/// Finds the integral normal form of `v`, or says why there is none.
pub fn canonicalize(v: &QLaurent) -> Result<BracketValue, NotIntegral> {
    let terms = v.terms();
    if terms.is_empty() {
        return Ok(BracketValue::zero());
    }
    let n = terms[0].0.rem_euclid(4);
    // phase from the first term: real → 0, imaginary → 1
    let m = if terms[0].1.im_num().is_zero() { 0 } else { 1 };
    let mut body = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        if !c.is_gaussian_integer() {
            return Err(NotIntegral::Fractional { exp: *e, coeff: c.to_string() });
        }
        if e.rem_euclid(4) != n {
            return Err(NotIntegral::MixedShift { exp: *e });
        }
        // divide by i^m
        let r = c.mul_i_pow(-m);
        if !r.im_num().is_zero() {
            return Err(NotIntegral::MixedPhase { exp: *e, coeff: c.to_string() });
        }
        body.push((e - n, r));
    }
    Ok(BracketValue { phase_m: m, quarter_shift_n: n, body: QLaurent::from_terms(body) })
}

/// Integral normal form of a fraction; the denominator must reduce to 1.
pub fn canonicalize_ratio(v: &QRatio) -> Result<BracketValue, NotIntegral> {
    match v.as_laurent() {
        Some(p) => canonicalize(p),
        None => Err(NotIntegral::Denominator { den: v.den().render() }),
    }
}

/// True iff `d` divides the body of `v` in `ℤ[q, q^-1]`.
pub fn divides(d: &QLaurent, v: &BracketValue) -> bool {
    if v.is_zero() {
        return true;
    }
    match v.body.div_exact(d) {
        Some(q) => q.terms().iter().all(|(_, c)| c.is_gaussian_integer() && c.im_num().is_zero()),
        None => false,
    }
}

impl fmt::Display for BracketValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.body.is_zero() {
            return write!(f, "0");
        }
        let mut prefix: Vec<String> = Vec::new();
        if self.phase_m == 1 {
            prefix.push("i".into());
        }
        if self.quarter_shift_n != 0 {
            prefix.push(QExp::from_x(self.quarter_shift_n).to_string());
        }
        let body = render_terms(self.body.terms().iter().rev().map(|(e, c)| (QExp::from_x(*e), c)));
        if prefix.is_empty() {
            return f.write_str(&body);
        }
        if self.body.is_one() {
            return f.write_str(&prefix.join(" * "));
        }
        if self.body == -QLaurent::one() {
            return write!(f, "-{}", prefix.join(" * "));
        }
        if self.body.terms().len() == 1 {
            write!(f, "{} * {}", prefix.join(" * "), body)
        } else {
            write!(f, "{} * ({})", prefix.join(" * "), body)
        }
    }
}

impl From<&BracketValue> for QLaurent {
    fn from(b: &BracketValue) -> QLaurent {
        b.reconstruct()
    }
}

/// Integer body from small `(power of q, coefficient)` pairs.
pub fn int_body(coeffs: &[(i64, i64)]) -> Vec<(i64, BigInt)> {
    coeffs.iter().map(|(k, c)| (*k, Int::from(*c).to_big())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::qcomb::{qfact, qint};

    #[test]
    fn canonical_examples() {
        let b = canonicalize(&qint(2)).unwrap();
        assert_eq!((b.phase_m, b.quarter_shift_n), (0, 0));
        assert_eq!(b.to_string(), "q + q^-1");

        let v = QLaurent::from_q_coeffs(0, &[-1, 0, 1]).mul_unit(1, 3);
        let b = canonicalize(&v).unwrap();
        assert_eq!((b.phase_m, b.quarter_shift_n), (1, 3));
        assert_eq!(b.body_q_coeffs(), int_body(&[(0, -1), (2, 1)]));
        assert_eq!(b.to_string(), "i * q^(3/4) * (q^2 - 1)");
        assert_eq!(b.reconstruct(), v);

        assert_eq!(canonicalize(&QLaurent::zero()).unwrap(), BracketValue::zero());
    }

    #[test]
    fn theta_raw_is_not_integral() {
        let t = QRatio::new(-qfact(4), qfact(2).pow(3));
        assert!(matches!(canonicalize_ratio(&t), Err(NotIntegral::Denominator { .. })));
        let half = QLaurent::constant(GaussRat::new(Int::from(1), Int::zero(), Int::from(2)));
        assert!(matches!(canonicalize(&half), Err(NotIntegral::Fractional { .. })));
    }

    #[test]
    fn divisibility() {
        let unknot1 = canonicalize(&qint(3)).unwrap();
        assert!(divides(&qint(3), &unknot1));
        assert!(divides(&qint(2), &canonicalize(&(&qint(2) * &qint(3))).unwrap()));
        assert!(!divides(&qint(2), &canonicalize(&qint(3)).unwrap()));
    }
}
