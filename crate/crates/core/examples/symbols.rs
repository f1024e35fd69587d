//! Renormalized unknot, theta, tetrahedron and crossed tetrahedron symbols.

use qspin::qarith::HalfInt;
use qspin::shadow::{crossed_tet_sym, tet_sym, theta_sym, unknot_sym};

fn main() {
    let h = HalfInt::from_doubled;
    println!("unknot(1)        = {}", unknot_sym(h(2)));
    println!("theta(1,1,1)     = {}", theta_sym(h(2), h(2), h(2)));
    println!("theta(1/2,1/2,1) = {}", theta_sym(h(1), h(1), h(2)));
    println!("tet(1,...,1)     = {}", tet_sym(h(2), h(2), h(2), h(2), h(2), h(2)));
    for s in [1, -1] {
        println!("crossed tet(1,...,1), sign {s:+} = {}", crossed_tet_sym(h(2), h(2), h(2), h(2), h(2), h(2), s));
    }
    println!("theta(1/2,1/2,1/2) = {}  (inadmissible)", theta_sym(h(1), h(1), h(1)));
}
