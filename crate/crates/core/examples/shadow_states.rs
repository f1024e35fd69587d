//! Shadow presentation of a twisted link, its states, and single state
//! weights that are not Laurent polynomials although their sum is.

use qspin::qarith::{canonicalize_ratio, HalfInt};
use qspin::shadow::{shadow_eval, shadow_state_weight, shadow_states, sliced_to_shadow};
use qspin::sliced::{builders, evaluate, framing_factor};

fn main() {
    let h = HalfInt::from_doubled;
    let d = builders::twisted_link(h(2), 0, 0);
    let p = sliced_to_shadow(&d).unwrap();
    println!("regions (id, euler, doubled gleam):");
    for r in &p.regions {
        println!("  {} {} {}", r.id, r.euler, r.gleam.doubled());
    }
    let (states, _) = shadow_states(&p).unwrap();
    for s in &states {
        let w = shadow_state_weight(&p, s).unwrap();
        let cols: Vec<String> = s.values().map(|c| c.doubled().to_string()).collect();
        let tag = if canonicalize_ratio(&w).is_ok() { "" } else { "  (not Laurent)" };
        println!("state [{}]: {}{tag}", cols.join(","), w);
    }
    let total = shadow_eval(&p, &framing_factor(&d)).unwrap();
    println!("sum with framing: {}", canonicalize_ratio(&total).unwrap());
    println!("sliced engine:    {}", canonicalize_ratio(&evaluate(&d, None).unwrap()).unwrap());
}
