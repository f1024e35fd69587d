//! Prints the JSON documents for a few standard diagrams, reads each one
//! back and checks the round trip.
//!
//! cargo run --example file_formats -- unknot|theta|crossed_tet|shadow

use qspin::qarith::HalfInt;
use qspin::shadow::{sliced_to_shadow, ShadowPresentation};
use qspin::sliced::{builders, from_json, to_json};

fn main() {
    let which = std::env::args().nth(1).unwrap_or_else(|| "theta".into());
    let h = HalfInt::from_doubled;
    let d = match which.as_str() {
        "unknot" => builders::unknot(h(2)),
        "theta" | "shadow" => builders::theta(h(2), h(2), h(2)),
        "crossed_tet" => builders::crossed_tet(h(2), h(2), h(2), h(2), h(2), h(2)),
        other => {
            eprintln!("unknown diagram {other}");
            std::process::exit(2);
        }
    };
    if which == "shadow" {
        let p = sliced_to_shadow(&d).unwrap();
        let text = p.to_json();
        assert_eq!(ShadowPresentation::from_json(&text, "<memory>").unwrap(), p);
        println!("{text}");
    } else {
        let text = to_json(&d);
        assert_eq!(from_json(&text, "<memory>").unwrap(), d);
        println!("{text}");
    }
}
