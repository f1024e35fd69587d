//! Unnormalized colored Jones polynomials of 2-bridge closures: unknot with
//! a kink, Hopf link, trefoil, in the first few colors.

use qspin::qarith::{canonicalize_ratio, HalfInt};
use qspin::sliced::{builders, evaluate};

fn main() {
    let h = HalfInt::from_doubled;
    for (name, n) in [("Hopf link", 2), ("trefoil", 3), ("mirror trefoil", -3)] {
        println!("{name}");
        for c in 1..=3 {
            let v = evaluate(&builders::braid_closure(h(c), h(c), n), None).unwrap();
            println!("  spin {}: {}", h(c), canonicalize_ratio(&v).unwrap());
        }
    }
}
