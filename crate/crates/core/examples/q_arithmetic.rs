//! Quantum integers, factorials and multinomials, exact fractions and the
//! canonical `i^m q^(n/4) P(q)` form.

use qspin::qarith::{canonicalize, canonicalize_ratio, qbinom, qfact, qint, qmultinom, QLaurent, QRatio};

fn main() {
    for n in 1..=5 {
        println!("[{n}] = {}", qint(n));
    }
    println!("[4]! = {}", qfact(4));
    println!("[5 choose 2] = {}", qbinom(5, 2));
    println!("[2,1,1] multinomial = {}", qmultinom(&[2, 1, 1]));

    // [3]/[2] has no Laurent form; [4]/[2] does
    let a = &QRatio::from_laurent(qint(3)) / &QRatio::from_laurent(qint(2));
    let b = &QRatio::from_laurent(qint(4)) / &QRatio::from_laurent(qint(2));
    println!("[3]/[2] = {a}  -> {:?}", canonicalize_ratio(&a).map(|v| v.to_string()));
    println!("[4]/[2] = {b}  -> {}", canonicalize_ratio(&b).unwrap());

    // a unit times a polynomial in q
    let v = qint(3).mul_unit(1, 3);
    let c = canonicalize(&v).unwrap();
    println!("i q^(3/4) [3] = {c}   (m = {}, n = {})", c.phase_m, c.quarter_shift_n);
    assert_eq!(c.reconstruct(), v);
    assert_eq!(QLaurent::q_pow(2), QLaurent::x_pow(8));
}
