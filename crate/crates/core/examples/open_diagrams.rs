//! Matrix entries of open diagrams and the boundary integrality check.

use qspin::qarith::HalfInt;
use qspin::sliced::{builders, evaluate_entries};
use qspin::verify::{boundary_factor, open_corpus, verify_boundary_integrality};

fn main() {
    let h = HalfInt::from_doubled;
    let y = builders::vertex_tangle(h(1), h(1), h(2));
    println!("Y-vertex (1/2, 1/2 <- 1), boundary factor {}", boundary_factor(&y).to_ratio());
    for (s, v) in evaluate_entries(&y).unwrap() {
        let fmt = |xs: &[HalfInt]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        println!("  bottom [{}] top [{}]: {}", fmt(&s.bottom), fmt(&s.top), v.to_ratio());
    }
    print!("{}", verify_boundary_integrality(&open_corpus(2)).unwrap());
}
