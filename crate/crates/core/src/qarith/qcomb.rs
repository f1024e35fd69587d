//! Quantum integers, factorials, binomials and multinomials.
//!
//! All results are Laurent polynomials in `q` (exponents of `x` divisible by 4).

use super::gauss::GaussRat;
use super::laurent::QLaurent;
use std::sync::OnceLock;

/// Rows of the q-binomial table kept resident.
const TABLE_ROWS: usize = 40;

/// `[n] = (q^n - q^-n)/(q - q^-1)`; `[-n] = -[n]`.
pub fn qint(n: i64) -> QLaurent {
    if n < 0 {
        return -qint(-n);
    }
    // q^(n-1), q^(n-3), …, q^-(n-1)
    QLaurent::from_terms((0..n).map(|j| (4 * (n - 1 - 2 * j), GaussRat::one())))
}

fn fact_table() -> &'static Vec<QLaurent> {
    static T: OnceLock<Vec<QLaurent>> = OnceLock::new();
    T.get_or_init(|| {
        let mut v = vec![QLaurent::one()];
        for n in 1..TABLE_ROWS as i64 {
            let next = v.last().unwrap() * &qint(n);
            v.push(next);
        }
        v
    })
}

/// `[n]! = [1][2]…[n]`, `[0]! = 1`.
pub fn qfact(n: i64) -> QLaurent {
    assert!(n >= 0, "quantum factorial of negative integer {n}");
    let t = fact_table();
    if (n as usize) < t.len() {
        return t[n as usize].clone();
    }
    let mut acc = t.last().unwrap().clone();
    for j in t.len() as i64..=n {
        acc = &acc * &qint(j);
    }
    acc
}

fn binom_table() -> &'static Vec<Vec<QLaurent>> {
    static T: OnceLock<Vec<Vec<QLaurent>>> = OnceLock::new();
    T.get_or_init(|| {
        // balanced Pascal rule: [n k] = q^-k [n-1 k] + q^(n-k) [n-1 k-1]
        let mut rows: Vec<Vec<QLaurent>> = vec![vec![QLaurent::one()]];
        for n in 1..TABLE_ROWS {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let mut acc = QLaurent::zero();
                if k < n {
                    acc = &acc + &prev[k].shift(-4 * k as i64);
                }
                if k > 0 {
                    acc = &acc + &prev[k - 1].shift(4 * (n - k) as i64);
                }
                row.push(acc);
            }
            rows.push(row);
        }
        rows
    })
}

/// `[n]!/([k]![n-k]!)`, and 0 whenever `k < 0`, `n < 0` or `k > n`.
pub fn qbinom(n: i64, k: i64) -> QLaurent {
    if n < 0 || k < 0 || k > n {
        return QLaurent::zero();
    }
    let t = binom_table();
    if (n as usize) < t.len() {
        return t[n as usize][k as usize].clone();
    }
    let den = &qfact(k) * &qfact(n - k);
    qfact(n).div_exact(&den).expect("q-binomial is a Laurent polynomial")
}

/// `[Σ parts]! / ∏ [part]!`, built as a product of binomials.
pub fn qmultinom(parts: &[i64]) -> QLaurent {
    assert!(parts.iter().all(|&p| p >= 0), "negative part in q-multinomial");
    let mut acc = QLaurent::one();
    let mut total = 0;
    for &p in parts {
        total += p;
        acc = &acc * &qbinom(total, p);
    }
    acc
}

/// `qmultinom` returning 0 when any part is negative.
pub fn qmultinom_or_zero(parts: &[i64]) -> QLaurent {
    if parts.iter().any(|&p| p < 0) {
        QLaurent::zero()
    } else {
        qmultinom(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert!(qint(0).is_zero());
        assert!(qint(1).is_one());
        assert_eq!(qint(2), QLaurent::from_q_coeffs(-1, &[1, 0, 1]));
        assert_eq!(qint(-3), -qint(3));
        assert!(qfact(0).is_one());
        assert_eq!(qfact(3), QLaurent::from_q_coeffs(-3, &[1, 0, 2, 0, 2, 0, 1]));
        assert_eq!(qbinom(4, 2), QLaurent::from_q_coeffs(-4, &[1, 0, 1, 0, 2, 0, 1, 0, 1]));
        assert!(qbinom(3, 4).is_zero());
        assert!(qbinom(-1, 0).is_zero());
    }

    #[test]
    fn table_agrees_with_division_past_its_end() {
        let n = TABLE_ROWS as i64 + 1;
        let direct = qfact(n).div_exact(&(&qfact(3) * &qfact(n - 3))).unwrap();
        assert_eq!(qbinom(n, 3), direct);
    }
}
