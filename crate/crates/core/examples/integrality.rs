//! Integrality, divisibility and engine agreement over the graph corpus.

use qspin::verify;

fn main() {
    let max: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let mut corpus = verify::graph_corpus(max);
    for r in [verify::verify_integrality(&corpus), verify::verify_divisibility(&corpus)] {
        print!("{r}");
    }
    corpus.extend(verify::braid_corpus(max));
    print!("{}", verify::verify_engine_equivalence(&corpus));
}
