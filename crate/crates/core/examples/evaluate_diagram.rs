//! Evaluates a diagram file, or a few built-in diagrams when no file is
//! given, raw and renormalized.
//!
//! cargo run --example evaluate_diagram -- crates/core/data/crossed_tet.json

use qspin::qarith::{canonicalize_ratio, HalfInt};
use qspin::sliced::{builders, evaluate, load, SlicedDiagram};
use qspin::verify::{renormalize, GraphCombinatorics};

fn show(name: &str, d: &SlicedDiagram) {
    let raw = evaluate(d, None).expect("valid closed diagram");
    let ren = renormalize(&raw, &GraphCombinatorics::of(d));
    println!("{name}");
    println!("  raw:          {raw}");
    match canonicalize_ratio(&ren) {
        Ok(v) => println!("  renormalized: {v}"),
        Err(e) => println!("  renormalized: {ren} ({e})"),
    }
}

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let d = load(std::path::Path::new(&path)).unwrap_or_else(|e| {
            eprintln!("{e}");
            std::process::exit(2);
        });
        show(&path, &d);
        return;
    }
    let h = HalfInt::from_doubled;
    show("unknot, spin 1", &builders::unknot(h(2)));
    show("unknot, spin 1, framing +1", &builders::unlink(&[(h(2), h(2))]));
    show("theta(1/2, 1/2, 1)", &builders::theta(h(1), h(1), h(2)));
    show("tetrahedron, all spin 1", &builders::tet(h(2), h(2), h(2), h(2), h(2), h(2)));
    show("crossed tetrahedron, all spin 1", &builders::crossed_tet(h(2), h(2), h(2), h(2), h(2), h(2)));
    show("prism, all spin 1", &builders::prism(h(2)));
}
